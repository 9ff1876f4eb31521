#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxtoric {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IVec = std::vector<Integer>;
using QVec = std::vector<Rational>;

// Floor division; cpp_int's operator/ truncates toward zero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer vec_gcd(const IVec& v) {
  Integer g = 0;
  for (const Integer& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

inline bool is_zero_vec(const IVec& v) {
  for (const Integer& x : v)
    if (x != 0) return false;
  return true;
}

// Divides out the content; the zero vector is returned unchanged.
inline IVec make_primitive(IVec v) {
  Integer g = vec_gcd(v);
  if (g > 1)
    for (Integer& x : v) x /= g;
  return v;
}

inline bool is_primitive(const IVec& v) { return vec_gcd(v) == 1; }

inline Integer dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const IVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

inline IVec vec_add(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec vec_sub(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec vec_neg(IVec v) {
  for (Integer& x : v) x = -x;
  return v;
}

inline IVec vec_scale(const Integer& c, IVec v) {
  for (Integer& x : v) x *= c;
  return v;
}

inline std::string to_string(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace coxtoric
