#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "grading.hpp"
#include "hilbert.hpp"
#include "monomial_ideal.hpp"

namespace coxtoric {

// Blowup of projective space P^n along a codimension-2 linear subspace, and
// the ambient models attached to a very general degree-d hypersurface.
struct BlowupModel {
  int n = 3;
  int d = 3;
};

inline void check_model(const BlowupModel& m) {
  if (m.n < 3) throw std::invalid_argument("model requires n >= 3");
  if (m.d < 3) throw std::invalid_argument("model requires d >= 3");
}

inline constexpr std::uint64_t kDefaultCoeffSeed = 20240601;

// Grading of the blowup Z of P^n along a codimension-2 linear subspace:
// n + 2 variables whose last one cuts the exceptional divisor; irrelevant
// ideal (x1, x2) cap (x3, ..., x_{n+2}).
inline GradingData blowup_grading(const BlowupModel& m) {
  check_model(m);
  const std::size_t r = static_cast<std::size_t>(m.n) + 2;
  IntegerMatrix q(2, r);
  q(0, 0) = 1;
  q(1, 0) = -1;
  q(0, 1) = 1;
  q(1, 1) = -1;
  for (std::size_t j = 2; j < r - 1; ++j) q(0, j) = 1;
  q(1, r - 1) = 1;

  std::vector<int> p1, p2;
  p1.push_back(0);
  p1.push_back(1);
  for (std::size_t j = 2; j < r; ++j) p2.push_back(static_cast<int>(j));
  return GradingData{q, intersect_primes({p1, p2}, r)};
}

// Grading of the auxiliary variety Z1 attached to degree-d hypersurfaces:
// n + 3 variables x0, ..., x_{n+2} with degrees
// (d-2, 1), (1, -1), (1, -1), (1, 0), ..., (1, 0), (0, 1)
// and irrelevant ideal (x0, x3, ..., x_{n+2}) cap (x1, ..., x_{n+1}).
inline GradingData z1_grading(const BlowupModel& m) {
  check_model(m);
  const std::size_t r = static_cast<std::size_t>(m.n) + 3;
  IntegerMatrix q(2, r);
  q(0, 0) = m.d - 2;
  q(1, 0) = 1;
  q(0, 1) = 1;
  q(1, 1) = -1;
  q(0, 2) = 1;
  q(1, 2) = -1;
  for (std::size_t j = 3; j < r - 1; ++j) q(0, j) = 1;
  q(1, r - 1) = 1;

  std::vector<int> p1, p2;
  p1.push_back(0);
  for (std::size_t j = 3; j < r; ++j) p1.push_back(static_cast<int>(j));
  for (std::size_t j = 1; j < r - 1; ++j) p2.push_back(static_cast<int>(j));
  return GradingData{q, intersect_primes({p1, p2}, r)};
}

namespace detail {

// Small nonzero rational, deterministic in the engine state.
inline Rational random_coeff(std::mt19937_64& eng) {
  const long long num = 1 + static_cast<long long>(eng() % 9);
  const long long den = 1 + static_cast<long long>(eng() % 3);
  const bool neg = (eng() % 2) == 1;
  Rational q(num, den);
  return neg ? -q : q;
}

}  // namespace detail

// Cox ring presentation for the n = 3 case: six variables x0, ..., x5 with
// the z1 grading and two relations x0*x1 - f, x0*x2 - g where f, g are very
// general of degree (d-1, 0) in x1, ..., x5.
inline CompleteIntersectionSpec cox3_spec(int d, std::uint64_t seed = kDefaultCoeffSeed) {
  BlowupModel m{3, d};
  check_model(m);
  GradingData g = z1_grading(m);
  GradedPolyRingSpec ring;
  for (std::size_t j = 0; j < g.num_vars(); ++j) ring.var_degrees.push_back(g.var_degree(j));

  const IVec rel_deg = {Integer(d - 1), Integer(0)};
  GradedPolyRingSpec sub;
  for (std::size_t j = 1; j < g.num_vars(); ++j) sub.var_degrees.push_back(g.var_degree(j));
  std::vector<std::vector<int>> support;
  for (const std::vector<int>& e : enumerate_monomials(sub, rel_deg)) {
    std::vector<int> padded(1, 0);
    padded.insert(padded.end(), e.begin(), e.end());
    support.push_back(std::move(padded));
  }

  std::mt19937_64 eng(seed);
  SparsePolynomial rel1, rel2;
  std::vector<int> x0x1(g.num_vars(), 0), x0x2(g.num_vars(), 0);
  x0x1[0] = x0x1[1] = 1;
  x0x2[0] = x0x2[2] = 1;
  rel1.add_term(x0x1, 1);
  for (const auto& e : support) rel1.add_term(e, -detail::random_coeff(eng));
  rel2.add_term(x0x2, 1);
  for (const auto& e : support) rel2.add_term(e, -detail::random_coeff(eng));

  return CompleteIntersectionSpec{std::move(ring), {rel_deg, rel_deg}, {rel1, rel2}};
}

// Same presentation for n >= 4: relations x0*x2 - f and x0*x1 + g with f, g
// very general of degree (d-1, 0) in x1, ..., x_{n+2}. For n = 3 this
// coincides with cox3_spec up to coefficients.
inline CompleteIntersectionSpec cox4_spec(const BlowupModel& m,
                                          std::uint64_t seed = kDefaultCoeffSeed) {
  check_model(m);
  if (m.n < 4) return cox3_spec(m.d, seed);
  GradingData g = z1_grading(m);
  GradedPolyRingSpec ring;
  for (std::size_t j = 0; j < g.num_vars(); ++j) ring.var_degrees.push_back(g.var_degree(j));

  const IVec rel_deg = {Integer(m.d - 1), Integer(0)};
  GradedPolyRingSpec sub;
  for (std::size_t j = 1; j < g.num_vars(); ++j) sub.var_degrees.push_back(g.var_degree(j));
  std::vector<std::vector<int>> support;
  for (const std::vector<int>& e : enumerate_monomials(sub, rel_deg)) {
    std::vector<int> padded(1, 0);
    padded.insert(padded.end(), e.begin(), e.end());
    support.push_back(std::move(padded));
  }

  std::mt19937_64 eng(seed);
  SparsePolynomial rel1, rel2;
  std::vector<int> x0x2(g.num_vars(), 0), x0x1(g.num_vars(), 0);
  x0x2[0] = x0x2[2] = 1;
  x0x1[0] = x0x1[1] = 1;
  rel1.add_term(x0x2, 1);
  for (const auto& e : support) rel1.add_term(e, -detail::random_coeff(eng));
  rel2.add_term(x0x1, 1);
  for (const auto& e : support) rel2.add_term(e, detail::random_coeff(eng));

  return CompleteIntersectionSpec{std::move(ring), {rel_deg, rel_deg}, {rel1, rel2}};
}

// Divisor class D = aH + bL on a very general degree-d surface X in P^3
// containing a line L; H is the hyperplane class.
struct DivisorClassX {
  long long a = 0;
  long long b = 0;
};

struct PairingX {
  long long with_l = 0;          // D . L
  long long with_h_minus_l = 0;  // D . (H - L)
};

inline PairingX intersection_numbers(int d, DivisorClassX dd) {
  return PairingX{dd.a + (2 - d) * dd.b, dd.a + dd.b};
}

inline bool is_nef_on_x(int d, DivisorClassX dd) {
  PairingX p = intersection_numbers(d, dd);
  return p.with_l >= 0 && p.with_h_minus_l >= 0;
}

inline bool is_ample_on_x(int d, DivisorClassX dd) {
  PairingX p = intersection_numbers(d, dd);
  return p.with_l > 0 && p.with_h_minus_l > 0;
}

inline bool is_effective_on_x(DivisorClassX dd) { return dd.a >= 0 && dd.a + dd.b >= 0; }

// D = aH + bL is non-special (h^1 of the associated sheaf vanishes) once
// D.L > 0 and D.(H - L) > d - 4.
inline bool nonspecial(int d, DivisorClassX dd) {
  PairingX p = intersection_numbers(d, dd);
  return p.with_l > 0 && p.with_h_minus_l > d - 4;
}

}  // namespace coxtoric
