#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cone.hpp"
#include "monomial_ideal.hpp"
#include "polytope.hpp"

namespace coxtoric {

// A fan given by its rays and its maximal cones. Ray indices in max_cones are
// 0-based; diagnostics and the file format number rays from 1.
struct Fan {
  std::size_t dim = 0;
  std::vector<IVec> rays;
  std::vector<std::vector<int>> max_cones;
};

struct FanValidation {
  bool valid = true;
  std::vector<std::string> problems;
};

inline RationalCone cone_of(const Fan& f, const std::vector<int>& idx) {
  std::vector<IVec> gens;
  gens.reserve(idx.size());
  for (int i : idx) gens.push_back(f.rays.at(static_cast<std::size_t>(i)));
  return RationalCone::from_generators(f.dim, std::move(gens));
}

namespace detail {

// sub is a face of sup iff sub equals the smallest face of sup containing it:
// the intersection of sup with the kernels of all supporting functionals of
// sup that vanish on sub.
inline bool is_face_of(const RationalCone& sub, const RationalCone& sup) {
  const std::vector<IVec> sub_gens = sub.generators();
  std::vector<IVec> cut = sup.inequalities();
  for (const IVec& u : sup.inequalities()) {
    bool vanishes = true;
    for (const IVec& g : sub_gens)
      if (dot(u, g) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes) cut.push_back(vec_neg(u));
  }
  RationalCone face = RationalCone::from_inequalities(sup.ambient_dim(), std::move(cut));
  return cone_equal(face, sub);
}

}  // namespace detail

inline FanValidation validate_fan(const Fan& f) {
  FanValidation out;
  auto fail = [&](const std::string& msg) {
    out.valid = false;
    out.problems.push_back(msg);
  };

  if (f.dim == 0) fail("ambient dimension must be positive");
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    const IVec& r = f.rays[i];
    std::ostringstream tag;
    tag << "ray " << i + 1;
    if (r.size() != f.dim) {
      fail(tag.str() + " has wrong dimension");
      continue;
    }
    if (is_zero_vec(r)) {
      fail(tag.str() + " is zero");
      continue;
    }
    if (!is_primitive(r)) fail(tag.str() + " not primitive");
  }
  {
    std::map<IVec, std::size_t> seen;
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
      auto [it, fresh] = seen.emplace(f.rays[i], i);
      if (!fresh) {
        std::ostringstream os;
        os << "ray " << i + 1 << " duplicates ray " << it->second + 1;
        fail(os.str());
      }
    }
  }
  if (!out.valid) return out;

  if (f.max_cones.empty()) fail("fan has no maximal cones");
  std::vector<bool> used(f.rays.size(), false);
  std::vector<std::vector<int>> cones;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    std::vector<int> idx = f.max_cones[c];
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::ostringstream tag;
    tag << "cone " << c + 1;
    if (idx.empty()) {
      fail(tag.str() + " is empty");
      continue;
    }
    bool in_range = true;
    for (int i : idx)
      if (i < 0 || static_cast<std::size_t>(i) >= f.rays.size()) {
        fail(tag.str() + " references a ray index out of range");
        in_range = false;
        break;
      }
    if (!in_range) continue;
    for (int i : idx) used[static_cast<std::size_t>(i)] = true;
    cones.push_back(std::move(idx));
  }
  for (std::size_t i = 0; i < f.rays.size(); ++i)
    if (!used[i]) {
      std::ostringstream os;
      os << "ray " << i + 1 << " not used by any cone";
      fail(os.str());
    }
  if (!out.valid) return out;

  std::vector<RationalCone> geo;
  geo.reserve(cones.size());
  for (const auto& idx : cones) geo.push_back(cone_of(f, idx).completed());

  for (std::size_t c = 0; c < geo.size(); ++c)
    if (!is_pointed(geo[c])) {
      std::ostringstream os;
      os << "cone " << c + 1 << " is not strongly convex";
      fail(os.str());
    }
  if (!out.valid) return out;

  for (std::size_t a = 0; a < geo.size(); ++a)
    for (std::size_t b = a + 1; b < geo.size(); ++b) {
      std::ostringstream pair;
      pair << "cones " << a + 1 << " and " << b + 1;
      if (cone_subset(geo[a], geo[b]) || cone_subset(geo[b], geo[a])) {
        fail(pair.str() + ": one maximal cone is contained in the other");
        continue;
      }
      RationalCone inter = intersect_cones(geo[a], geo[b]);
      if (!detail::is_face_of(inter, geo[a]) || !detail::is_face_of(inter, geo[b]))
        fail(pair.str() + " intersect in a non-face");
    }
  return out;
}

// Every maximal cone simplicial and unimodular (its rays extend to a basis).
inline bool is_smooth(const Fan& f) {
  for (const auto& idx : f.max_cones) {
    std::vector<IVec> gens;
    for (int i : idx) gens.push_back(f.rays.at(static_cast<std::size_t>(i)));
    IntegerMatrix m = IntegerMatrix::from_rows(gens, f.dim);
    if (rational_rank(m) != gens.size()) return false;
    for (const Integer& d : smith_normal_form(m).invariants)
      if (d != 1) return false;
  }
  return true;
}

// Support covers the whole space. Only decided for pure full dimensional
// simplicial fans: facet pairing plus connectivity of the dual graph.
inline bool is_complete(const Fan& f) {
  std::map<std::vector<int>, std::vector<std::size_t>> facet_owners;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    std::vector<int> idx = f.max_cones[c];
    std::sort(idx.begin(), idx.end());
    if (idx.size() != f.dim)
      throw std::invalid_argument("is_complete requires a pure full dimensional simplicial fan");
    std::vector<IVec> gens;
    for (int i : idx) gens.push_back(f.rays.at(static_cast<std::size_t>(i)));
    if (rational_rank(IntegerMatrix::from_rows(gens, f.dim)) != f.dim)
      throw std::invalid_argument("is_complete requires a pure full dimensional simplicial fan");
    for (std::size_t drop = 0; drop < idx.size(); ++drop) {
      std::vector<int> facet;
      for (std::size_t i = 0; i < idx.size(); ++i)
        if (i != drop) facet.push_back(idx[i]);
      facet_owners[facet].push_back(c);
    }
  }
  for (const auto& [facet, owners] : facet_owners)
    if (owners.size() != 2) return false;

  std::vector<bool> seen(f.max_cones.size(), false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  std::size_t reached = 1;
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (const auto& [facet, owners] : facet_owners) {
    adj[owners[0]].push_back(owners[1]);
    adj[owners[1]].push_back(owners[0]);
  }
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    for (std::size_t n : adj[c])
      if (!seen[n]) {
        seen[n] = true;
        ++reached;
        stack.push_back(n);
      }
  }
  return reached == f.max_cones.size();
}

// {m : <m, ray> >= -1 for every ray}, with both representations. Throws when
// the fan is not complete enough for this set to be bounded.
inline LatticePolytope anticanonical_polytope(const Fan& f) {
  std::vector<Facet> facets;
  facets.reserve(f.rays.size());
  for (const IVec& r : f.rays) facets.push_back(Facet{r, 1});
  return vertices_from_facets(LatticePolytope::from_facets(f.dim, std::move(facets)));
}

// Fano test: the anticanonical polytope is reflexive and the vertex set of
// its polar dual is exactly the ray set.
inline bool is_fano(const Fan& f) {
  try {
    LatticePolytope p = anticanonical_polytope(f);
    std::vector<IVec> polar;
    for (const QVec& q : polar_vertices(p)) {
      auto v = detail::integral_point(q);
      if (!v) return false;
      polar.push_back(std::move(*v));
    }
    std::sort(polar.begin(), polar.end());
    std::vector<IVec> rays = f.rays;
    std::sort(rays.begin(), rays.end());
    return polar == rays;
  } catch (const std::domain_error&) {
    return false;
  }
}

// Degree of the anticanonical class: the normalized volume of the
// anticanonical polytope.
inline Integer anticanonical_degree(const Fan& f) {
  return normalized_volume(anticanonical_polytope(f));
}

// Face fan of the anticanonical polytope: rays are its vertices, maximal
// cones are spanned by its facets.
inline Fan dual_variety(const Fan& f) {
  LatticePolytope p = anticanonical_polytope(f);
  for (const QVec& q : polar_vertices(p))
    if (!detail::integral_point(q))
      throw std::domain_error("anticanonical polytope is not reflexive");

  const std::vector<IVec>& verts = p.vertices();
  for (const IVec& v : verts)
    if (!is_primitive(v))
      throw std::domain_error("anticanonical polytope has a non-primitive vertex");

  LatticePolytope withf = facets_from_vertices(p);
  std::set<std::vector<int>> cones;
  for (const Facet& facet : withf.facets()) {
    std::vector<int> tight;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (dot(facet.normal, verts[i]) + facet.offset == 0)
        tight.push_back(static_cast<int>(i));
    cones.insert(std::move(tight));
  }

  Fan g{f.dim, verts, {cones.begin(), cones.end()}};
  FanValidation v = validate_fan(g);
  if (!v.valid) {
    std::string msg = "dual fan failed validation:";
    for (const std::string& s : v.problems) msg += " " + s + ";";
    throw std::logic_error(msg);
  }
  return g;
}

// One generator per maximal cone: the product of the variables whose rays the
// cone omits. The unit ideal signals an affine piece.
inline SquarefreeMonomialIdeal irrelevant_ideal(const Fan& f) {
  std::vector<std::vector<int>> gens;
  gens.reserve(f.max_cones.size());
  for (const auto& idx : f.max_cones) {
    std::set<int> in(idx.begin(), idx.end());
    std::vector<int> comp;
    for (std::size_t i = 0; i < f.rays.size(); ++i)
      if (!in.count(static_cast<int>(i))) comp.push_back(static_cast<int>(i));
    gens.push_back(std::move(comp));
  }
  return SquarefreeMonomialIdeal(f.rays.size(), std::move(gens));
}

// Rays sorted lex with cone indices remapped; for order-insensitive equality.
inline Fan canonical_form(const Fan& f) {
  std::vector<std::size_t> order(f.rays.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return f.rays[a] < f.rays[b]; });
  std::vector<std::size_t> inv(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) inv[order[i]] = i;

  Fan g;
  g.dim = f.dim;
  for (std::size_t i : order) g.rays.push_back(f.rays[i]);
  for (const auto& idx : f.max_cones) {
    std::vector<int> c;
    for (int i : idx) c.push_back(static_cast<int>(inv[static_cast<std::size_t>(i)]));
    std::sort(c.begin(), c.end());
    g.max_cones.push_back(std::move(c));
  }
  std::sort(g.max_cones.begin(), g.max_cones.end());
  return g;
}

}  // namespace coxtoric
