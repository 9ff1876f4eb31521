#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "integer_matrix.hpp"
#include "numeric.hpp"

namespace coxtoric {

namespace detail {

// Primitive, nonzero, lex-sorted, deduplicated ray list.
inline std::vector<IVec> canonical_rays(std::vector<IVec> vs, std::size_t dim) {
  std::vector<IVec> out;
  out.reserve(vs.size());
  for (IVec& v : vs) {
    if (v.size() != dim) throw std::invalid_argument("ray has wrong dimension");
    if (is_zero_vec(v)) continue;
    out.push_back(make_primitive(std::move(v)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Generators of {x : <row, x> >= 0 for every row}. By cone duality the same
// routine converts a V-representation to an H-representation.
inline std::vector<IVec> hrep_to_vrep(const std::vector<IVec>& raw, std::size_t dim) {
  const std::vector<IVec> ineqs = canonical_rays(raw, dim);
  if (dim == 0) return {};

  IntegerMatrix a = IntegerMatrix::from_rows(ineqs, dim);
  // Lineality space: right kernel of the inequality matrix.
  IntegerMatrix lin = integer_kernel(transpose(a));

  std::vector<IVec> aug = ineqs;
  for (std::size_t i = 0; i < lin.rows(); ++i) {
    aug.push_back(lin.row(i));
    aug.push_back(vec_neg(lin.row(i)));
  }

  std::vector<IVec> found;
  auto satisfies_all = [&](const IVec& v) {
    for (const IVec& u : aug)
      if (dot(u, v) < 0) return false;
    return true;
  };

  // Extreme rays of the pointed part lie on dim-1 independent active constraints.
  const std::size_t k = dim - 1;
  if (aug.size() >= k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<IVec> sub;
      sub.reserve(k);
      for (std::size_t i : idx) sub.push_back(aug[i]);
      IntegerMatrix ker = integer_kernel(transpose(IntegerMatrix::from_rows(sub, dim)));
      if (ker.rows() == 1) {
        IVec v = ker.row(0);
        if (satisfies_all(v)) found.push_back(v);
        IVec w = vec_neg(v);
        if (satisfies_all(w)) found.push_back(std::move(w));
      }
      // next k-combination of aug indices
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == aug.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  for (std::size_t i = 0; i < lin.rows(); ++i) {
    found.push_back(lin.row(i));
    found.push_back(vec_neg(lin.row(i)));
  }
  return canonical_rays(std::move(found), dim);
}

}  // namespace detail

// A rational polyhedral cone, held by generators, by inequalities, or both.
// Whichever representation is missing is derived on demand.
class RationalCone {
 public:
  static RationalCone from_generators(std::size_t dim, std::vector<IVec> gens) {
    RationalCone c(dim);
    c.gens_ = detail::canonical_rays(std::move(gens), dim);
    return c;
  }

  static RationalCone from_inequalities(std::size_t dim, std::vector<IVec> ineqs) {
    RationalCone c(dim);
    c.ineqs_ = detail::canonical_rays(std::move(ineqs), dim);
    return c;
  }

  std::size_t ambient_dim() const { return dim_; }

  std::vector<IVec> generators() const {
    if (gens_) return *gens_;
    return detail::hrep_to_vrep(*ineqs_, dim_);
  }

  std::vector<IVec> inequalities() const {
    if (ineqs_) return *ineqs_;
    return detail::hrep_to_vrep(*gens_, dim_);
  }

  bool has_generators() const { return gens_.has_value(); }
  bool has_inequalities() const { return ineqs_.has_value(); }

  // Same cone with both representations materialized.
  RationalCone completed() const {
    RationalCone c(dim_);
    c.gens_ = generators();
    c.ineqs_ = inequalities();
    return c;
  }

  friend RationalCone dual_cone(const RationalCone& c);

 private:
  explicit RationalCone(std::size_t dim) : dim_(dim) {}
  std::size_t dim_ = 0;
  std::optional<std::vector<IVec>> gens_;
  std::optional<std::vector<IVec>> ineqs_;
};

// {u : <u, x> >= 0 for all x in c}; representations swap roles.
inline RationalCone dual_cone(const RationalCone& c) {
  RationalCone d(c.dim_);
  d.gens_ = c.ineqs_;
  d.ineqs_ = c.gens_;
  if (!d.gens_ && !d.ineqs_) throw std::logic_error("dual_cone: empty cone object");
  return d;
}

inline bool cone_contains(const RationalCone& c, const QVec& x) {
  for (const IVec& u : c.inequalities())
    if (dot(u, x) < 0) return false;
  return true;
}

inline bool cone_contains(const RationalCone& c, const IVec& x) {
  for (const IVec& u : c.inequalities())
    if (dot(u, x) < 0) return false;
  return true;
}

inline RationalCone intersect_cones(const RationalCone& a, const RationalCone& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect_cones: ambient dimension mismatch");
  std::vector<IVec> ineqs = a.inequalities();
  for (IVec& u : b.inequalities()) ineqs.push_back(std::move(u));
  RationalCone h = RationalCone::from_inequalities(a.ambient_dim(), std::move(ineqs));
  return h.completed();
}

// a subseteq b
inline bool cone_subset(const RationalCone& a, const RationalCone& b) {
  const std::vector<IVec> ineqs = b.inequalities();
  for (const IVec& g : a.generators())
    for (const IVec& u : ineqs)
      if (dot(u, g) < 0) return false;
  return true;
}

inline bool cone_equal(const RationalCone& a, const RationalCone& b) {
  return cone_subset(a, b) && cone_subset(b, a);
}

inline bool is_pointed(const RationalCone& c) {
  const std::vector<IVec> ineqs = c.inequalities();
  if (ineqs.empty()) return c.ambient_dim() == 0;
  return rational_rank(IntegerMatrix::from_rows(ineqs, c.ambient_dim())) ==
         c.ambient_dim();
}

inline bool is_full_dimensional(const RationalCone& c) {
  const std::vector<IVec> gens = c.generators();
  if (gens.empty()) return c.ambient_dim() == 0;
  return rational_rank(IntegerMatrix::from_rows(gens, c.ambient_dim())) ==
         c.ambient_dim();
}

// Topological interior; false whenever the cone is not full dimensional.
inline bool in_interior(const RationalCone& c, const IVec& w) {
  for (const IVec& u : c.inequalities())
    if (dot(u, w) <= 0) return false;
  return true;
}

inline RationalCone zero_cone(std::size_t dim) {
  return RationalCone::from_generators(dim, {});
}

}  // namespace coxtoric
