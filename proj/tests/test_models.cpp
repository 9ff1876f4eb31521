#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <coxtoric/fixtures.hpp>
#include <coxtoric/models.hpp>

#include "test_util.hpp"

using namespace coxtoric;
using testutil::vec;

TEST_CASE("model parameters are validated") {
  CHECK_THROWS_AS(blowup_grading(BlowupModel{2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(z1_grading(BlowupModel{3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cox3_spec(2), std::invalid_argument);
}

TEST_CASE("blowup grading columns and irrelevant ideal") {
  for (int n : {3, 4, 5}) {
    GradingData g = blowup_grading(BlowupModel{n, 3});
    INFO("n = " << n);
    const std::size_t r = static_cast<std::size_t>(n) + 2;
    REQUIRE(g.num_vars() == r);
    CHECK(g.var_degree(0) == vec({1, -1}));
    CHECK(g.var_degree(1) == vec({1, -1}));
    for (std::size_t j = 2; j + 1 < r; ++j) CHECK(g.var_degree(j) == vec({1, 0}));
    CHECK(g.var_degree(r - 1) == vec({0, 1}));

    std::vector<int> rest;
    for (std::size_t j = 2; j < r; ++j) rest.push_back(static_cast<int>(j));
    std::vector<std::vector<int>> primes = {{0, 1}, rest};
    CHECK(minimal_primes(g.irrelevant) == primes);
    LefschetzCheck lef = lefschetz_codim_check(g);
    CHECK(lef.codim == 2);
    CHECK(!lef.passes);
  }
}

TEST_CASE("auxiliary model grading columns and irrelevant ideal") {
  for (int n : {3, 4, 5})
    for (int d : {3, 4, 5}) {
      GradingData g = z1_grading(BlowupModel{n, d});
      INFO("n = " << n << " d = " << d);
      const std::size_t r = static_cast<std::size_t>(n) + 3;
      REQUIRE(g.num_vars() == r);
      CHECK(g.var_degree(0) == vec({d - 2, 1}));
      CHECK(g.var_degree(1) == vec({1, -1}));
      CHECK(g.var_degree(2) == vec({1, -1}));
      for (std::size_t j = 3; j + 1 < r; ++j) CHECK(g.var_degree(j) == vec({1, 0}));
      CHECK(g.var_degree(r - 1) == vec({0, 1}));

      std::vector<int> p1 = {0}, p2;
      for (std::size_t j = 3; j < r; ++j) p1.push_back(static_cast<int>(j));
      for (std::size_t j = 1; j + 1 < r; ++j) p2.push_back(static_cast<int>(j));
      std::vector<std::vector<int>> primes = {p1, p2};
      std::sort(primes.begin(), primes.end());
      CHECK(minimal_primes(g.irrelevant) == primes);
      LefschetzCheck lef = lefschetz_codim_check(g);
      CHECK(lef.codim == static_cast<std::size_t>(n) + 1);
      CHECK(lef.passes);
    }
}

TEST_CASE("blowup fan is the star subdivision of projective space") {
  Fan f = fixtures::blowup_fan(3);
  CHECK(f.dim == 3);
  CHECK(f.rays.size() == 5);
  CHECK(f.max_cones.size() == 6);
  CHECK(validate_fan(f).valid);
  CHECK(is_smooth(f));
  CHECK(is_complete(f));
  CHECK(is_fano(f));
  CHECK(anticanonical_degree(f) == 54);
}

TEST_CASE("intersection pairing on the hypersurface") {
  // degree 5 surface containing a line
  CHECK(intersection_numbers(5, {1, 0}).with_l == 1);
  CHECK(intersection_numbers(5, {1, 0}).with_h_minus_l == 1);
  CHECK(intersection_numbers(5, {0, 1}).with_l == -3);
  CHECK(intersection_numbers(5, {0, 1}).with_h_minus_l == 1);

  // the hyperplane class is ample, the line is not nef
  CHECK(is_ample_on_x(5, {1, 0}));
  CHECK(is_nef_on_x(5, {1, 0}));
  CHECK(!is_nef_on_x(5, {0, 1}));

  // H - L is nef but not ample
  CHECK(is_nef_on_x(5, {1, -1}));
  CHECK(!is_ample_on_x(5, {1, -1}));

  CHECK(is_effective_on_x({1, -1}));
  CHECK(is_effective_on_x({0, 1}));
  CHECK(!is_effective_on_x({-1, 2}));
}

TEST_CASE("non-speciality threshold depends on the degree") {
  CHECK(nonspecial(5, {3, 0}));
  CHECK(!nonspecial(5, {1, -1}));
  // for d = 3 the second pairing only needs to be nonnegative
  CHECK(nonspecial(3, {1, 0}));
  CHECK(!nonspecial(3, {0, 0}));
  // d = 4: both pairings strictly positive
  CHECK(nonspecial(4, {2, -1}));
  CHECK(!nonspecial(4, {1, -1}));
}

TEST_CASE("cox specs for n = 3 and n >= 4 share the shape") {
  CompleteIntersectionSpec c3 = cox3_spec(4);
  CompleteIntersectionSpec c4 = cox4_spec(BlowupModel{3, 4});
  CHECK(c3.ring.var_degrees == c4.ring.var_degrees);
  CHECK(c3.rel_degrees == c4.rel_degrees);

  CompleteIntersectionSpec big = cox4_spec(BlowupModel{5, 3});
  CHECK(big.ring.num_vars() == 8);
  CHECK(big.rel_degrees == std::vector<IVec>{vec({2, 0}), vec({2, 0})});
  CHECK(homogeneity_check(big).homogeneous);
}
