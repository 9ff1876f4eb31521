#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fan.hpp"
#include "grading.hpp"
#include "models.hpp"

namespace coxtoric {
namespace fixtures {

inline Fan p2_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  return f;
}

inline Fan p4_fan() {
  Fan f;
  f.dim = 4;
  f.rays = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}};
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<int> c;
    for (int i = 0; i < 5; ++i)
      if (i != skip) c.push_back(i);
    f.max_cones.push_back(std::move(c));
  }
  return f;
}

inline Fan p1xp1_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  f.max_cones = {{0, 2}, {1, 2}, {1, 3}, {0, 3}};
  return f;
}

inline Fan hirzebruch_f2_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, 2}, {0, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return f;
}

inline Fan weighted_p112_fan() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, -2}};
  f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  return f;
}

// Grading matrix and irrelevant ideal of the five smooth Fano fourfolds with
// free rank <= 2 class group used throughout; index is the database number.
inline GradingData fano_table_grading(int index) {
  auto rank2 = [](std::vector<long long> row2) {
    IntegerMatrix q(2, 6);
    const long long row1[6] = {0, 0, 1, 1, 0, 1};
    for (std::size_t j = 0; j < 6; ++j) {
      q(0, j) = row1[j];
      q(1, j) = row2[j];
    }
    return GradingData{q, intersect_primes({{0, 1, 4}, {2, 3, 5}}, 6)};
  };
  switch (index) {
    case 44:
      return rank2({1, 1, 2, 0, 1, 2});
    case 70:
      return rank2({1, 1, 0, 0, 1, 1});
    case 141:
      return rank2({1, 1, 1, 0, 1, 1});
    case 146:
      return rank2({1, 1, 0, 0, 1, 0});
    case 147: {
      IntegerMatrix q(1, 5);
      for (std::size_t j = 0; j < 5; ++j) q(0, j) = 1;
      return GradingData{q, intersect_primes({{0, 1, 2, 3, 4}}, 5)};
    }
    default:
      throw std::invalid_argument("unknown Fano table index " + std::to_string(index));
  }
}

inline const std::vector<int>& fano_table_indices() {
  static const std::vector<int> idx = {44, 70, 141, 146, 147};
  return idx;
}

// The fourfold with deg(f) outside the nef cone: grading and irrelevant ideal
// of the ambient Z with Mov(Z) = <w1, w3> and Nef(Z) = <w1, w4>.
inline GradingData nonnef_grading() {
  IntegerMatrix q(2, 6);
  const long long row1[6] = {1, 1, -1, 1, -1, 0};
  const long long row2[6] = {0, 0, 1, 1, 1, 1};
  for (std::size_t j = 0; j < 6; ++j) {
    q(0, j) = row1[j];
    q(1, j) = row2[j];
  }
  return GradingData{q, intersect_primes({{0, 1}, {2, 3, 4, 5}}, 6)};
}

inline Fan fano_fan(int index) { return fan_from_bunch(fano_table_grading(index)); }
inline Fan nonnef_fan() { return fan_from_bunch(nonnef_grading()); }
inline Fan blowup_fan(int n) { return fan_from_bunch(blowup_grading(BlowupModel{n, 3})); }
inline Fan z1_fan(int n, int d) { return fan_from_bunch(z1_grading(BlowupModel{n, d})); }

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v = {"p2",      "p4",      "p1xp1",  "f2",
                                  "fano44",  "fano70",  "fano141", "fano146",
                                  "fano147", "nonnef"};
    for (int n = 3; n <= 5; ++n) v.push_back("blowup_n" + std::to_string(n));
    for (int n = 3; n <= 5; ++n)
      for (int d = 3; d <= 5; ++d)
        v.push_back("z1_n" + std::to_string(n) + "_d" + std::to_string(d));
    return v;
  }();
  return names;
}

inline Fan fixture_fan(const std::string& name) {
  if (name == "p2") return p2_fan();
  if (name == "p4") return p4_fan();
  if (name == "p1xp1") return p1xp1_fan();
  if (name == "f2") return hirzebruch_f2_fan();
  if (name == "fano44") return fano_fan(44);
  if (name == "fano70") return fano_fan(70);
  if (name == "fano141") return fano_fan(141);
  if (name == "fano146") return fano_fan(146);
  if (name == "fano147") return fano_fan(147);
  if (name == "nonnef") return nonnef_fan();
  for (int n = 3; n <= 5; ++n)
    if (name == "blowup_n" + std::to_string(n)) return blowup_fan(n);
  for (int n = 3; n <= 5; ++n)
    for (int d = 3; d <= 5; ++d)
      if (name == "z1_n" + std::to_string(n) + "_d" + std::to_string(d))
        return z1_fan(n, d);
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace fixtures
}  // namespace coxtoric
