#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace coxtoric {

namespace detail {

inline bool index_set_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Keeps the inclusion-minimal sets.
inline std::vector<std::vector<int>> antichain_reduce(std::vector<std::vector<int>> sets) {
  std::sort(sets.begin(), sets.end(), index_set_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& kept : out) {
      if (std::includes(s.begin(), s.end(), kept.begin(), kept.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace detail

// A squarefree monomial ideal, stored as the supports of its minimal
// generators. Variable indices are 0-based; formatting is 1-based.
class SquarefreeMonomialIdeal {
 public:
  SquarefreeMonomialIdeal(std::size_t num_vars, std::vector<std::vector<int>> gens)
      : num_vars_(num_vars) {
    for (auto& g : gens) {
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
      for (int v : g)
        if (v < 0 || static_cast<std::size_t>(v) >= num_vars_)
          throw std::invalid_argument("generator index out of range");
    }
    generators_ = detail::antichain_reduce(std::move(gens));
  }

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<std::vector<int>>& generators() const { return generators_; }

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return !generators_.empty() && generators_.front().empty(); }

  bool operator==(const SquarefreeMonomialIdeal&) const = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<std::vector<int>> generators_;
};

namespace detail {

inline std::uint64_t to_mask(const std::vector<int>& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= std::uint64_t{1} << v;
  return m;
}

struct TransversalSearch {
  std::vector<std::uint64_t> gens;
  std::set<std::uint64_t> found;

  void run(std::uint64_t chosen) {
    // Prune: any extension of a superset of a known transversal is non-minimal.
    for (std::uint64_t s : found)
      if ((s & chosen) == s) return;
    std::uint64_t miss = 0;
    for (std::uint64_t g : gens)
      if ((g & chosen) == 0) {
        miss = g;
        break;
      }
    if (miss == 0) {
      if (is_minimal(chosen)) found.insert(chosen);
      return;
    }
    for (std::uint64_t m = miss; m; m &= m - 1) {
      std::uint64_t bit = m & (~m + 1);
      run(chosen | bit);
    }
  }

  bool is_minimal(std::uint64_t t) const {
    for (std::uint64_t m = t; m; m &= m - 1) {
      std::uint64_t bit = m & (~m + 1);
      bool has_private = false;
      for (std::uint64_t g : gens)
        if ((g & t) == bit) {
          has_private = true;
          break;
        }
      if (!has_private) return false;
    }
    return true;
  }
};

}  // namespace detail

// All minimal primes, i.e. all minimal transversals of the generator
// hypergraph, each as a sorted list of variable indices.
inline std::vector<std::vector<int>> minimal_primes(const SquarefreeMonomialIdeal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("minimal_primes: unit ideal");
  if (ideal.num_vars() > 64)
    throw std::invalid_argument("minimal_primes: more than 64 variables unsupported");
  if (ideal.is_zero()) return {{}};

  detail::TransversalSearch search;
  for (const auto& g : ideal.generators()) search.gens.push_back(detail::to_mask(g));
  search.run(0);

  std::vector<std::vector<int>> out;
  for (std::uint64_t t : search.found) {
    std::vector<int> s;
    for (int v = 0; v < 64; ++v)
      if (t >> v & 1) s.push_back(v);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), detail::index_set_less);
  return out;
}

// Codimension of the vanishing locus: the smallest minimal-prime size.
inline std::size_t vanishing_codim(const SquarefreeMonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("vanishing_codim: undefined for zero and unit ideals");
  std::size_t best = ideal.num_vars() + 1;
  for (const auto& p : minimal_primes(ideal)) best = std::min(best, p.size());
  return best;
}

// Intersection of coordinate primes (x_i : i in p) as a squarefree ideal:
// generators are the minimal transversal products, one variable per prime.
inline SquarefreeMonomialIdeal intersect_primes(const std::vector<std::vector<int>>& primes,
                                                std::size_t num_vars) {
  std::vector<std::vector<int>> gens = {{}};
  for (const auto& p : primes) {
    if (p.empty()) throw std::invalid_argument("intersect_primes: empty prime");
    std::vector<std::vector<int>> next;
    for (const auto& g : gens)
      for (int v : p) {
        std::vector<int> e = g;
        if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        std::sort(e.begin(), e.end());
        next.push_back(std::move(e));
      }
    gens = detail::antichain_reduce(std::move(next));
  }
  return SquarefreeMonomialIdeal(num_vars, std::move(gens));
}

}  // namespace coxtoric
