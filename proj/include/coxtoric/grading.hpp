#pragma once

#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cone.hpp"
#include "fan.hpp"
#include "integer_matrix.hpp"
#include "monomial_ideal.hpp"

namespace coxtoric {

using DivisorClass = IVec;

// Cox ring combinatorics of a toric variety with free class group: the degree
// matrix (column i is deg x_i) together with the irrelevant ideal.
struct GradingData {
  IntegerMatrix degree_matrix;
  SquarefreeMonomialIdeal irrelevant;

  std::size_t num_vars() const { return degree_matrix.cols(); }
  std::size_t class_rank() const { return degree_matrix.rows(); }
  DivisorClass var_degree(std::size_t i) const { return degree_matrix.col(i); }
};

// Degree matrix as the saturated left kernel of the ray matrix (Gale duality),
// in Hermite normal form. Throws when the class group has torsion.
inline GradingData grading_from_fan(const Fan& f) {
  if (f.rays.empty()) throw std::invalid_argument("grading_from_fan: fan has no rays");
  IntegerMatrix rays = IntegerMatrix::from_rows(f.rays, f.dim);
  std::vector<Integer> inv = smith_normal_form(rays).invariants;
  for (const Integer& d : inv)
    if (d > 1) {
      std::ostringstream os;
      os << "class group has torsion; Smith invariants of the ray matrix:";
      for (const Integer& x : inv) os << " " << x;
      throw std::domain_error(os.str());
    }
  return GradingData{integer_kernel(rays), irrelevant_ideal(f)};
}

// Inverse of grading_from_fan: rays from the right kernel of the degree
// matrix, maximal cones as complements of the irrelevant generators.
inline Fan fan_from_bunch(const GradingData& g) {
  const std::size_t r = g.num_vars();
  const std::size_t k = g.class_rank();
  if (g.irrelevant.num_vars() != r)
    throw std::invalid_argument("fan_from_bunch: ideal variable count mismatch");
  if (g.irrelevant.is_zero() || g.irrelevant.is_unit())
    throw std::invalid_argument("fan_from_bunch: ideal must be proper and nonzero");

  std::vector<Integer> inv = smith_normal_form(g.degree_matrix).invariants;
  std::size_t rank = 0;
  for (const Integer& d : inv) {
    if (d > 1)
      throw std::domain_error("fan_from_bunch: degree matrix row lattice is not saturated");
    if (d == 1) ++rank;
  }
  if (rank != k)
    throw std::domain_error("fan_from_bunch: degree matrix rows are dependent");
  if (r <= k) throw std::domain_error("fan_from_bunch: no room for rays");
  const std::size_t n = r - k;

  // Columns of the kernel basis are the rays.
  IntegerMatrix ker = integer_kernel(transpose(g.degree_matrix));
  Fan f;
  f.dim = n;
  for (std::size_t i = 0; i < r; ++i) {
    IVec ray(n);
    for (std::size_t j = 0; j < n; ++j) ray[j] = ker(j, i);
    if (!is_primitive(ray))
      throw std::domain_error("fan_from_bunch: kernel column " + std::to_string(i + 1) +
                              " is not primitive");
    f.rays.push_back(std::move(ray));
  }
  for (const auto& gen : g.irrelevant.generators()) {
    std::set<int> in(gen.begin(), gen.end());
    std::vector<int> cone;
    for (std::size_t i = 0; i < r; ++i)
      if (!in.count(static_cast<int>(i))) cone.push_back(static_cast<int>(i));
    f.max_cones.push_back(std::move(cone));
  }

  FanValidation v = validate_fan(f);
  if (!v.valid) {
    std::string msg = "fan_from_bunch: reconstructed fan is invalid:";
    for (const std::string& s : v.problems) msg += " " + s + ";";
    throw std::domain_error(msg);
  }
  return f;
}

// Moving cone: intersection over i of the cone spanned by all degrees but the
// i-th.
inline RationalCone mov_cone(const GradingData& g) {
  const std::size_t r = g.num_vars();
  const std::size_t k = g.class_rank();
  if (r == 0) throw std::invalid_argument("mov_cone: no variables");
  RationalCone result = zero_cone(k);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<IVec> gens;
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) gens.push_back(g.var_degree(j));
    RationalCone omit = RationalCone::from_generators(k, std::move(gens));
    result = (i == 0) ? omit.completed() : intersect_cones(result, omit);
  }
  return result;
}

inline bool consistent(const GradingData& g, const Fan& f) {
  if (g.num_vars() != f.rays.size()) return false;
  if (!(irrelevant_ideal(f) == g.irrelevant)) return false;
  GradingData from_fan = grading_from_fan(f);
  return hermite_normal_form(g.degree_matrix).h == from_fan.degree_matrix;
}

// Nef cone: intersection over the maximal cones sigma of the cone spanned by
// the degrees of the variables outside sigma.
inline RationalCone nef_cone(const GradingData& g, const Fan& f) {
  if (!consistent(g, f))
    throw std::invalid_argument("nef_cone: fan and grading data are inconsistent");
  const std::size_t k = g.class_rank();
  RationalCone result = zero_cone(k);
  bool first = true;
  for (const auto& idx : f.max_cones) {
    std::set<int> in(idx.begin(), idx.end());
    std::vector<IVec> gens;
    for (std::size_t j = 0; j < g.num_vars(); ++j)
      if (!in.count(static_cast<int>(j))) gens.push_back(g.var_degree(j));
    RationalCone omit = RationalCone::from_generators(k, std::move(gens));
    result = first ? omit.completed() : intersect_cones(result, omit);
    first = false;
  }
  return result;
}

// Ample means interior to the nef cone.
inline bool is_ample(const GradingData& g, const Fan& f, const DivisorClass& w) {
  return in_interior(nef_cone(g, f), w);
}

struct LefschetzCheck {
  std::size_t codim = 0;
  bool passes = false;
};

// Codimension of the irrelevant locus; hypersurface Cox rings lift along the
// embedding once this is at least 3.
inline LefschetzCheck lefschetz_codim_check(const GradingData& g) {
  std::size_t c = vanishing_codim(g.irrelevant);
  return LefschetzCheck{c, c >= 3};
}

inline DivisorClass class_degree(const GradingData& g, const std::vector<int>& exponents) {
  if (exponents.size() != g.num_vars())
    throw std::invalid_argument("class_degree: exponent length mismatch");
  DivisorClass w(g.class_rank());
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] == 0) continue;
    for (std::size_t i = 0; i < g.class_rank(); ++i)
      w[i] += Integer(exponents[j]) * g.degree_matrix(i, j);
  }
  return w;
}

// Degree of the anticanonical class: sum of all variable degrees.
inline DivisorClass anticanonical_class(const GradingData& g) {
  return class_degree(g, std::vector<int>(g.num_vars(), 1));
}

}  // namespace coxtoric
