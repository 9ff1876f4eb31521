#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "integer_matrix.hpp"
#include "numeric.hpp"

namespace coxtoric {

// A polynomial ring with a multigrading: one degree vector per variable.
struct GradedPolyRingSpec {
  std::vector<IVec> var_degrees;

  std::size_t num_vars() const { return var_degrees.size(); }
  std::size_t grading_rank() const {
    return var_degrees.empty() ? 0 : var_degrees.front().size();
  }
};

// Polynomial with exact rational coefficients, exponent vectors as keys.
struct SparsePolynomial {
  std::map<std::vector<int>, Rational> terms;

  void add_term(std::vector<int> exps, Rational coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms.emplace(std::move(exps), coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
  }
};

// Graded ring modulo a (conjectural) regular sequence. Relation polynomials
// are optional; the Koszul count needs only their degrees.
struct CompleteIntersectionSpec {
  GradedPolyRingSpec ring;
  std::vector<IVec> rel_degrees;
  std::vector<SparsePolynomial> relations;
};

// An integer functional that is >= 1 on every variable degree. Pointedness
// certificate for the grading; search is exhaustive over max-norm <= 10.
inline IVec positive_functional(const GradedPolyRingSpec& s) {
  if (s.var_degrees.empty())
    throw std::invalid_argument("positive_functional: no variables");
  const std::size_t k = s.grading_rank();
  for (const IVec& d : s.var_degrees)
    if (d.size() != k)
      throw std::invalid_argument("positive_functional: ragged degree vectors");

  std::vector<long long> u(k, -10);
  while (true) {
    bool ok = true;
    IVec cand(k);
    for (std::size_t i = 0; i < k; ++i) cand[i] = u[i];
    for (const IVec& d : s.var_degrees)
      if (dot(cand, d) < 1) {
        ok = false;
        break;
      }
    if (ok) return cand;
    std::size_t i = 0;
    while (i < k && u[i] == 10) {
      u[i] = -10;
      ++i;
    }
    if (i == k)
      throw std::domain_error(
          "positive_functional: no certificate with entries in [-10, 10]; "
          "grading is not pointed or too skew");
    ++u[i];
  }
}

namespace detail {

template <typename Visit>
inline void monomial_dfs(const std::vector<IVec>& degs, const std::vector<Integer>& weights,
                         std::size_t i, IVec& remaining, Integer budget,
                         std::vector<int>& exps, Visit&& visit) {
  if (budget < 0) return;
  if (i == degs.size()) {
    if (is_zero_vec(remaining)) visit(exps);
    return;
  }
  const IVec& d = degs[i];
  Integer max_e = budget / weights[i];
  for (Integer e = 0; e <= max_e; ++e) {
    exps[i] = static_cast<int>(e.convert_to<long long>());
    monomial_dfs(degs, weights, i + 1, remaining, budget - e * weights[i], exps,
                 visit);
    if (e < max_e)
      for (std::size_t j = 0; j < remaining.size(); ++j) remaining[j] -= d[j];
  }
  // undo the accumulated subtractions
  for (Integer e = max_e; e > 0; --e)
    for (std::size_t j = 0; j < remaining.size(); ++j) remaining[j] += d[j];
  exps[i] = 0;
}

}  // namespace detail

// All exponent vectors of the given degree, in lexicographic order. Finite
// because an explicit positive functional bounds every exponent.
inline std::vector<std::vector<int>> enumerate_monomials(const GradedPolyRingSpec& s,
                                                         const IVec& w) {
  const IVec u = positive_functional(s);
  if (w.size() != s.grading_rank())
    throw std::invalid_argument("enumerate_monomials: degree length mismatch");
  std::vector<Integer> weights;
  weights.reserve(s.num_vars());
  for (const IVec& d : s.var_degrees) weights.push_back(dot(u, d));
  std::vector<std::vector<int>> out;
  IVec remaining = w;
  std::vector<int> exps(s.num_vars(), 0);
  detail::monomial_dfs(s.var_degrees, weights, 0, remaining, dot(u, w), exps,
                       [&](const std::vector<int>& e) { out.push_back(e); });
  return out;
}

inline std::size_t count_monomials(const GradedPolyRingSpec& s, const IVec& w) {
  const IVec u = positive_functional(s);
  if (w.size() != s.grading_rank())
    throw std::invalid_argument("count_monomials: degree length mismatch");
  std::vector<Integer> weights;
  weights.reserve(s.num_vars());
  for (const IVec& d : s.var_degrees) weights.push_back(dot(u, d));
  std::size_t n = 0;
  IVec remaining = w;
  std::vector<int> exps(s.num_vars(), 0);
  detail::monomial_dfs(s.var_degrees, weights, 0, remaining, dot(u, w), exps,
                       [&](const std::vector<int>&) { ++n; });
  return n;
}

// Graded dimension of the quotient by a regular sequence, by Koszul
// inclusion-exclusion over subsets of the relation degrees.
inline long long ci_dimension(const CompleteIntersectionSpec& c, const IVec& w) {
  const std::size_t m = c.rel_degrees.size();
  if (m > 20) throw std::invalid_argument("ci_dimension: too many relations");
  long long total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    IVec shifted = w;
    int bits = 0;
    for (std::size_t s = 0; s < m; ++s)
      if (mask >> s & 1) {
        ++bits;
        shifted = vec_sub(shifted, c.rel_degrees[s]);
      }
    long long term = static_cast<long long>(count_monomials(c.ring, shifted));
    total += (bits % 2 == 0) ? term : -term;
  }
  return total;
}

struct HomogeneityReport {
  bool homogeneous = true;
  std::size_t relation = 0;      // 0-based index of the offending relation
  std::vector<int> term;         // offending exponent vector
};

inline HomogeneityReport homogeneity_check(const CompleteIntersectionSpec& c) {
  for (std::size_t s = 0; s < c.relations.size(); ++s) {
    for (const auto& [exps, coeff] : c.relations[s].terms) {
      if (exps.size() != c.ring.num_vars())
        throw std::invalid_argument("homogeneity_check: exponent length mismatch");
      IVec deg(c.ring.grading_rank());
      for (std::size_t j = 0; j < exps.size(); ++j)
        for (std::size_t i = 0; i < deg.size(); ++i)
          deg[i] += Integer(exps[j]) * c.ring.var_degrees[j][i];
      if (deg != c.rel_degrees.at(s)) return HomogeneityReport{false, s, exps};
    }
  }
  return HomogeneityReport{};
}

// Independent count: dimension of (monomials of degree w) modulo the span of
// all monomial multiples of the explicit relations, by exact rank.
inline long long quotient_dim_oracle(const CompleteIntersectionSpec& c, const IVec& w) {
  if (!c.relations.empty() && c.relations.size() != c.rel_degrees.size())
    throw std::invalid_argument("quotient_dim_oracle: relation count mismatch");
  if (!homogeneity_check(c).homogeneous)
    throw std::invalid_argument("quotient_dim_oracle: relations are not homogeneous");

  const std::vector<std::vector<int>> basis = enumerate_monomials(c.ring, w);
  if (c.relations.empty()) return static_cast<long long>(basis.size());
  if (basis.empty()) return 0;

  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  std::vector<IVec> rows;
  for (std::size_t s = 0; s < c.relations.size(); ++s) {
    if (c.relations[s].terms.empty()) continue;
    const IVec shifted = vec_sub(w, c.rel_degrees[s]);
    for (const std::vector<int>& m : enumerate_monomials(c.ring, shifted)) {
      QVec row(basis.size());
      for (const auto& [exps, coeff] : c.relations[s].terms) {
        std::vector<int> target(m.size());
        for (std::size_t j = 0; j < m.size(); ++j) target[j] = m[j] + exps[j];
        auto it = index.find(target);
        if (it == index.end())
          throw std::logic_error("quotient_dim_oracle: product escaped the degree slice");
        row[it->second] += coeff;
      }
      Integer lcm = 1;
      for (const Rational& q : row)
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q));
      IVec irow(basis.size());
      for (std::size_t j = 0; j < row.size(); ++j)
        irow[j] = boost::multiprecision::numerator(row[j]) *
                  (lcm / boost::multiprecision::denominator(row[j]));
      rows.push_back(std::move(irow));
    }
  }
  if (rows.empty()) return static_cast<long long>(basis.size());
  std::size_t rank = rational_rank(IntegerMatrix::from_rows(rows, basis.size()));
  return static_cast<long long>(basis.size()) - static_cast<long long>(rank);
}

}  // namespace coxtoric
