#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cone.hpp"
#include "integer_matrix.hpp"
#include "numeric.hpp"

namespace coxtoric {

// Half space <normal, x> >= -offset.
struct Facet {
  IVec normal;
  Integer offset = 0;
  bool operator==(const Facet&) const = default;
};

inline bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

class LatticePolytope {
 public:
  static LatticePolytope from_vertices(std::size_t dim, std::vector<IVec> verts) {
    LatticePolytope p(dim);
    for (const IVec& v : verts)
      if (v.size() != dim) throw std::invalid_argument("vertex has wrong dimension");
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    p.vertices_ = std::move(verts);
    return p;
  }

  static LatticePolytope from_facets(std::size_t dim, std::vector<Facet> facets) {
    LatticePolytope p(dim);
    for (const Facet& f : facets)
      if (f.normal.size() != dim) throw std::invalid_argument("facet has wrong dimension");
    std::sort(facets.begin(), facets.end(), facet_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    p.facets_ = std::move(facets);
    return p;
  }

  std::size_t ambient_dim() const { return dim_; }
  bool has_vertices() const { return vertices_.has_value(); }
  bool has_facets() const { return facets_.has_value(); }

  const std::vector<IVec>& vertices() const {
    if (!vertices_) throw std::logic_error("polytope vertices not computed");
    return *vertices_;
  }

  const std::vector<Facet>& facets() const {
    if (!facets_) throw std::logic_error("polytope facets not computed");
    return *facets_;
  }

  void set_vertices(std::vector<IVec> v) { vertices_ = std::move(v); }
  void set_facets(std::vector<Facet> f) { facets_ = std::move(f); }

 private:
  explicit LatticePolytope(std::size_t dim) : dim_(dim) {}
  std::size_t dim_ = 0;
  std::optional<std::vector<IVec>> vertices_;
  std::optional<std::vector<Facet>> facets_;
};

namespace detail {

// All vertices of {x : <n_i, x> >= -b_i}, exactly, as rational points.
// Throws when the recession cone is nontrivial.
inline std::vector<QVec> enumerate_vertices_rational(const std::vector<Facet>& facets,
                                                     std::size_t dim) {
  if (dim == 0) return {QVec{}};
  std::vector<IVec> normals;
  normals.reserve(facets.size());
  for (const Facet& f : facets) {
    if (is_zero_vec(f.normal))
      throw std::invalid_argument("facet with zero normal");
    normals.push_back(f.normal);
  }
  if (!hrep_to_vrep(normals, dim).empty())
    throw std::domain_error("polyhedron has a nontrivial recession cone (unbounded)");

  std::vector<QVec> verts;
  auto feasible = [&](const QVec& x) {
    for (const Facet& f : facets)
      if (dot(f.normal, x) < -Rational(f.offset)) return false;
    return true;
  };

  const std::size_t m = facets.size();
  if (m < dim) return verts;
  std::vector<std::size_t> idx(dim);
  for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
  while (true) {
    IntegerMatrix a(dim, dim);
    IVec b(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) a(i, j) = facets[idx[i]].normal[j];
      b[i] = -facets[idx[i]].offset;
    }
    if (auto x = solve_square(a, b); x && feasible(*x)) verts.push_back(std::move(*x));

    std::size_t i = dim;
    while (i > 0 && idx[i - 1] == m - dim + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < dim; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

inline std::optional<IVec> integral_point(const QVec& q) {
  IVec v(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (boost::multiprecision::denominator(q[i]) != 1) return std::nullopt;
    v[i] = boost::multiprecision::numerator(q[i]);
  }
  return v;
}

inline std::size_t affine_rank(const std::vector<IVec>& pts, std::size_t dim) {
  if (pts.empty()) return 0;
  std::vector<IVec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
  if (diffs.empty()) return 0;
  return rational_rank(IntegerMatrix::from_rows(diffs, dim));
}

// Facets of the convex hull of full-dimensional pts, via the homogenization
// cone spanned by (p, 1).
inline std::vector<Facet> facets_of_points(const std::vector<IVec>& pts, std::size_t dim) {
  if (affine_rank(pts, dim) != dim)
    throw std::domain_error("polytope is not full dimensional");
  std::vector<IVec> lifted;
  lifted.reserve(pts.size());
  for (const IVec& p : pts) {
    IVec q = p;
    q.push_back(1);
    lifted.push_back(std::move(q));
  }
  std::vector<Facet> out;
  for (const IVec& row : hrep_to_vrep(lifted, dim + 1)) {
    IVec normal(row.begin(), row.end() - 1);
    if (is_zero_vec(normal)) continue;
    out.push_back(Facet{std::move(normal), row.back()});
  }
  std::sort(out.begin(), out.end(), facet_less);
  return out;
}

}  // namespace detail

inline LatticePolytope vertices_from_facets(const LatticePolytope& p) {
  std::vector<QVec> raw = detail::enumerate_vertices_rational(p.facets(), p.ambient_dim());
  std::vector<IVec> verts;
  verts.reserve(raw.size());
  for (const QVec& q : raw) {
    auto v = detail::integral_point(q);
    if (!v) {
      std::string s = "(";
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) s += ", ";
        s += q[i].str();
      }
      throw std::domain_error("vertex " + s + ") is not a lattice point");
    }
    verts.push_back(std::move(*v));
  }
  LatticePolytope out = LatticePolytope::from_vertices(p.ambient_dim(), std::move(verts));
  out.set_facets(p.facets());
  return out;
}

inline LatticePolytope facets_from_vertices(const LatticePolytope& p) {
  LatticePolytope out = LatticePolytope::from_vertices(p.ambient_dim(), p.vertices());
  out.set_facets(detail::facets_of_points(p.vertices(), p.ambient_dim()));
  return out;
}

// Rational vertex set of {y : <v, y> >= -1 for all vertices v of p}.
// Throws when the origin is not an interior point of p.
inline std::vector<QVec> polar_vertices(const LatticePolytope& p) {
  const std::vector<IVec>& verts =
      p.has_vertices() ? p.vertices() : vertices_from_facets(p).vertices();
  std::vector<Facet> polar_facets;
  polar_facets.reserve(verts.size());
  for (const IVec& v : verts) {
    if (is_zero_vec(v))
      throw std::domain_error("origin is not an interior point of the polytope");
    polar_facets.push_back(Facet{v, 1});
  }
  try {
    return detail::enumerate_vertices_rational(polar_facets, p.ambient_dim());
  } catch (const std::domain_error&) {
    throw std::domain_error("origin is not an interior point of the polytope");
  }
}

inline bool is_reflexive(const LatticePolytope& p) {
  for (const QVec& q : polar_vertices(p))
    if (!detail::integral_point(q)) return false;
  return true;
}

inline LatticePolytope polar_dual(const LatticePolytope& p) {
  const std::vector<IVec>& verts =
      p.has_vertices() ? p.vertices() : vertices_from_facets(p).vertices();
  std::vector<IVec> dual_verts;
  for (const QVec& q : polar_vertices(p)) {
    auto v = detail::integral_point(q);
    if (!v) throw std::domain_error("polar dual is not a lattice polytope");
    dual_verts.push_back(std::move(*v));
  }
  LatticePolytope out = LatticePolytope::from_vertices(p.ambient_dim(), std::move(dual_verts));
  std::vector<Facet> facets;
  facets.reserve(verts.size());
  for (const IVec& v : verts) facets.push_back(Facet{v, 1});
  std::sort(facets.begin(), facets.end(), facet_less);
  out.set_facets(std::move(facets));
  return out;
}

namespace detail {

inline Integer nvol_recursive(const std::vector<IVec>& verts, std::size_t k) {
  if (k == 1) {
    Integer lo = verts.front()[0], hi = verts.front()[0];
    for (const IVec& v : verts) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    return hi - lo;
  }
  const std::vector<Facet> facets = facets_of_points(verts, k);
  const IVec& apex = verts.front();
  Integer total = 0;
  for (const Facet& f : facets) {
    Integer h = dot(f.normal, apex) + f.offset;
    if (h == 0) continue;
    std::vector<IVec> tight;
    for (const IVec& v : verts)
      if (dot(f.normal, v) + f.offset == 0) tight.push_back(v);

    // Lattice-preserving coordinates on the facet hyperplane: a basis of the
    // saturated kernel of the normal, solved exactly row by row.
    IntegerMatrix normal_col(k, 1);
    for (std::size_t i = 0; i < k; ++i) normal_col(i, 0) = f.normal[i];
    IntegerMatrix basis = integer_kernel(normal_col);
    const IVec& origin = tight.front();
    std::vector<IVec> mapped;
    mapped.reserve(tight.size());
    for (const IVec& v : tight) {
      auto x = solve_in_row_lattice(basis, vec_sub(v, origin));
      if (!x) throw std::logic_error("facet point outside hyperplane lattice");
      mapped.push_back(std::move(*x));
    }
    total += boost::multiprecision::abs(h) * nvol_recursive(mapped, k - 1);
  }
  return total;
}

}  // namespace detail

// Lattice-normalized volume: n! times the Euclidean volume for full
// dimensional polytopes; the unit simplex has normalized volume 1.
inline Integer normalized_volume(const LatticePolytope& p) {
  const std::vector<IVec>& verts =
      p.has_vertices() ? p.vertices() : vertices_from_facets(p).vertices();
  const std::size_t d = p.ambient_dim();
  if (d == 0) return 1;
  if (detail::affine_rank(verts, d) != d)
    throw std::domain_error("normalized_volume requires a full dimensional polytope");
  return detail::nvol_recursive(verts, d);
}

}  // namespace coxtoric
