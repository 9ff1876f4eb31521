#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <coxtoric/cone.hpp>

#include "test_util.hpp"

using namespace coxtoric;
using testutil::vec;

namespace {

RationalCone gen_cone(std::vector<IVec> gens, std::size_t dim) {
  return RationalCone::from_generators(dim, std::move(gens));
}

IVec random_point(std::mt19937_64& eng, std::size_t dim, long long bound) {
  IVec p(dim);
  for (auto& x : p) x = Integer(eng() % (2 * bound + 1)) - bound;
  return p;
}

}  // namespace

TEST_CASE("the first quadrant is self dual") {
  RationalCone quad = gen_cone({vec({1, 0}), vec({0, 1})}, 2);
  CHECK(cone_equal(dual_cone(quad), quad));
  CHECK(is_pointed(quad));
  CHECK(is_full_dimensional(quad));
}

TEST_CASE("dual generators of a pointed plane cone") {
  RationalCone c = gen_cone({vec({1, 0}), vec({1, 2})}, 2);
  RationalCone expected = gen_cone({vec({0, 1}), vec({2, -1})}, 2);
  CHECK(cone_equal(dual_cone(c), expected));
}

TEST_CASE("halfspace cones keep their lineality") {
  RationalCone half = RationalCone::from_inequalities(2, {vec({1, 0})});
  CHECK(cone_contains(half, vec({0, 5})));
  CHECK(cone_contains(half, vec({0, -5})));
  CHECK(cone_contains(half, vec({3, -7})));
  CHECK(!cone_contains(half, vec({-1, 0})));
  CHECK(!is_pointed(half));
  CHECK(is_full_dimensional(half));
  CHECK(cone_equal(half, gen_cone({vec({1, 0}), vec({0, 1}), vec({0, -1})}, 2)));
}

TEST_CASE("the zero cone is pointed and not full dimensional") {
  RationalCone z = zero_cone(3);
  CHECK(is_pointed(z));
  CHECK(!is_full_dimensional(z));
  CHECK(cone_contains(z, vec({0, 0, 0})));
  CHECK(!cone_contains(z, vec({1, 0, 0})));
  CHECK(!in_interior(z, vec({0, 0, 0})));
}

TEST_CASE("generator canonicalization ignores order scaling and repeats") {
  RationalCone a = gen_cone({vec({0, 3}), vec({2, 0}), vec({1, 0})}, 2);
  RationalCone b = gen_cone({vec({1, 0}), vec({0, 1})}, 2);
  CHECK(cone_equal(a, b));
  CHECK(a.generators() == b.generators());

  // Redundant interior generators are kept verbatim; equality still holds.
  RationalCone padded = gen_cone({vec({0, 1}), vec({1, 0}), vec({1, 1})}, 2);
  CHECK(cone_equal(padded, b));
  CHECK(padded.generators().size() == 3);
}

TEST_CASE("cone intersection matches pointwise membership") {
  RationalCone a = gen_cone({vec({1, 0}), vec({-1, 1})}, 2);
  RationalCone b = gen_cone({vec({-1, 1}), vec({1, 1})}, 2);
  RationalCone inter = intersect_cones(a, b);
  // b sits inside a, so the intersection is b itself
  CHECK(cone_equal(inter, b));
  CHECK(cone_subset(b, a));
  CHECK(!cone_subset(a, b));

  std::mt19937_64 eng(8101);
  for (int trial = 0; trial < 200; ++trial) {
    IVec p = random_point(eng, 2, 6);
    bool both = cone_contains(a, p) && cone_contains(b, p);
    CHECK(cone_contains(inter, p) == both);
  }
}

TEST_CASE("interior membership requires strict inequalities") {
  RationalCone quad = gen_cone({vec({1, 0}), vec({0, 1})}, 2);
  CHECK(in_interior(quad, vec({1, 1})));
  CHECK(!in_interior(quad, vec({1, 0})));
  CHECK(!in_interior(quad, vec({0, 0})));

  // a ray in the plane has empty interior
  RationalCone ray = gen_cone({vec({1, 1})}, 2);
  CHECK(!in_interior(ray, vec({1, 1})));
  CHECK(cone_contains(ray, vec({2, 2})));
  CHECK(!cone_contains(ray, vec({2, 1})));
}

TEST_CASE("double dual is the identity on random cones") {
  std::mt19937_64 eng(8102);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t dim = 2 + eng() % 3;
    std::size_t ngens = 1 + eng() % (dim + 2);
    std::vector<IVec> gens;
    for (std::size_t i = 0; i < ngens; ++i) {
      IVec g = random_point(eng, dim, 4);
      if (!is_zero_vec(g)) gens.push_back(g);
    }
    if (gens.empty()) {
      IVec e(dim, 0);
      e[0] = 1;
      gens.push_back(e);
    }
    RationalCone c = gen_cone(gens, dim);
    INFO("trial " << trial << " dim " << dim);
    CHECK(cone_equal(dual_cone(dual_cone(c)), c));

    // duality pairing: y is in the dual iff it pairs nonnegatively with the
    // generators
    RationalCone d = dual_cone(c);
    for (int k = 0; k < 20; ++k) {
      IVec y = random_point(eng, dim, 3);
      bool pairs = true;
      for (const IVec& g : gens)
        if (dot(g, y) < 0) pairs = false;
      CHECK(cone_contains(d, y) == pairs);
    }
  }
}

TEST_CASE("subset and equality agree with membership of generators") {
  std::mt19937_64 eng(8103);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t dim = 2 + eng() % 2;
    std::vector<IVec> ga, gb;
    std::size_t na = 1 + eng() % 3, nb = 1 + eng() % 3;
    for (std::size_t i = 0; i < na; ++i) ga.push_back(random_point(eng, dim, 3));
    for (std::size_t i = 0; i < nb; ++i) gb.push_back(random_point(eng, dim, 3));
    auto nonzero = [](std::vector<IVec>& v, std::size_t d) {
      std::erase_if(v, [](const IVec& x) { return is_zero_vec(x); });
      if (v.empty()) {
        IVec e(d, 0);
        e[0] = 1;
        v.push_back(e);
      }
    };
    nonzero(ga, dim);
    nonzero(gb, dim);
    RationalCone a = gen_cone(ga, dim), b = gen_cone(gb, dim);
    bool gens_inside = true;
    for (const IVec& g : ga)
      if (!cone_contains(b, g)) gens_inside = false;
    CHECK(cone_subset(a, b) == gens_inside);
  }
}
