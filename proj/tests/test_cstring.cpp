#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "poly/mix.hpp"
#include "poly/toroidal.hpp"

using namespace poly;

TEST_CASE("string relations diagnostics") {
  auto g = build_torus_group(TorusParams{2, 0});
  CHECK(g.check_string_relations().ok());

  // (rho0, rho0 rho1) fails: second entry has order 4.
  StringCGroup bad({g.generators()[0], mul(g.generators()[0], g.generators()[1])});
  CHECK_FALSE(bad.check_string_relations().ok());

  StringCGroup rank1({g.generators()[0]});
  CHECK(rank1.check_string_relations().ok());
}

TEST_CASE("schlafli symbols") {
  CHECK(build_torus_group(TorusParams{2, 2}).schlafli() ==
        std::vector<std::uint64_t>{4, 4});
  auto tower = build_flat_tower({5, 5});
  CHECK(tower.group.schlafli() == std::vector<std::uint64_t>{4, 4, 4});
  auto g = build_torus_group(TorusParams{2, 0});
  StringCGroup sq({g.generators()[0], g.generators()[1]});
  CHECK(sq.schlafli() == std::vector<std::uint64_t>{4});
}

TEST_CASE("intersection property") {
  CHECK(torus_group_for_exponent(7).check_intersection_property());

  auto g = build_torus_group(TorusParams{2, 0});
  StringCGroup dup({g.generators()[0], g.generators()[0]});
  CHECK_FALSE(dup.check_intersection_property());
}

TEST_CASE("intersection property on towers") {
  for (std::vector<int> ns :
       {std::vector<int>{5, 5}, {5, 6}, {6, 5}, {7, 5}, {5, 5, 5}, {5, 6, 5}}) {
    auto t = build_flat_tower(ns);
    CHECK(t.group.check_intersection_property());
  }
}

TEST_CASE("intersection property agrees with all-elements oracle") {
  for (int n : {5, 6, 7}) {
    auto g = torus_group_for_exponent(n);
    std::size_t d = g.rank();
    bool oracle = true;
    for (std::uint64_t k = 0; k < (1u << d); ++k) {
      for (std::uint64_t j = 0; j < (1u << d); ++j) {
        const auto& a = g.parabolic_group(k).elements();
        std::unordered_set<Permutation, PermHash> bset;
        for (const auto& e : g.parabolic_group(j).elements()) bset.insert(e);
        std::size_t common = 0;
        for (const auto& e : a) common += bset.count(e);
        if (common != g.parabolic_group(k & j).order()) oracle = false;
      }
    }
    CHECK(g.check_intersection_property() == oracle);
    CHECK(oracle);
  }
}

TEST_CASE("parabolic subgroups") {
  auto g = build_torus_group(TorusParams{2, 0});
  CHECK(g.parabolic({0, 1, 2}).order() == g.order());
  CHECK(g.parabolic({1, 2}).order() == 8);  // vertex figure, square group
  auto tower = build_flat_tower({5, 5});
  auto facet = tower.group.parabolic_range(0, 2);
  CHECK(facet.order() == 32);
  CHECK(generator_matching_isomorphic(
      facet.generators(), torus_group_for_exponent(5).generators()));
}

TEST_CASE("vertex parabolic index equals vertex count") {
  // For {4,4}_(s,0) the map has s^2 vertices.
  auto g = build_torus_group(TorusParams{4, 0});
  CHECK(g.order() / g.parabolic_range(1, 2).order() == 16);
}

TEST_CASE("2-power orders throughout") {
  for (int n = 5; n <= 8; ++n) {
    std::uint64_t o = torus_group_for_exponent(n).order();
    while (o % 2 == 0) o /= 2;
    CHECK(o == 1);
  }
}
