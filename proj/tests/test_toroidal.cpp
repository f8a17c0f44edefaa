#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poly/toroidal.hpp"

using namespace poly;

TEST_CASE("params_for_exponent") {
  CHECK(params_for_exponent(5).s == 2);
  CHECK(params_for_exponent(5).t == 0);
  CHECK(params_for_exponent(6).s == 2);
  CHECK(params_for_exponent(6).t == 2);
  CHECK(params_for_exponent(9).s == 8);
  CHECK(params_for_exponent(9).t == 0);
  CHECK_THROWS_AS(params_for_exponent(4), precondition_error);
  for (int n = 5; n <= 10; ++n)
    CHECK(params_for_exponent(n).group_order() == (std::uint64_t(1) << n));
}

TEST_CASE("invalid params rejected") {
  CHECK_THROWS_AS(build_torus_group(TorusParams{1, 0}), precondition_error);
  CHECK_THROWS_AS(build_torus_group(TorusParams{3, 2}), precondition_error);
}

TEST_CASE("group orders") {
  CHECK(build_torus_group(TorusParams{2, 0}).order() == 32);
  CHECK(build_torus_group(TorusParams{2, 2}).order() == 64);
  CHECK(build_torus_group(TorusParams{3, 0}).order() == 72);
  CHECK(build_torus_group(TorusParams{4, 0}).order() == 128);
}

TEST_CASE("schlafli type is {4,4}") {
  auto g = build_torus_group(TorusParams{2, 0});
  CHECK(g.check_string_relations().ok());
  CHECK(g.schlafli() == std::vector<std::uint64_t>{4, 4});
  auto h = build_torus_group(TorusParams{2, 2});
  CHECK(h.schlafli() == std::vector<std::uint64_t>{4, 4});
}

TEST_CASE("translation word order") {
  // rho0 rho1 rho2 rho1 is a unit translation: order s when t=0, 2s when s=t.
  for (int n = 5; n <= 8; ++n) {
    auto p = params_for_exponent(n);
    auto g = build_torus_group(p);
    const auto& r = g.generators();
    auto t = mul(mul(mul(r[0], r[1]), r[2]), r[1]);
    std::uint64_t want = p.t == 0 ? std::uint64_t(p.s) : std::uint64_t(2 * p.s);
    CHECK(element_order(t) == want);
  }
}

TEST_CASE("affine model element count matches permutation order") {
  for (int n = 5; n <= 8; ++n) {
    auto p = params_for_exponent(n);
    auto g = build_torus_group(p);
    CHECK(g.order() == p.group_order());
    CHECK(g.degree() == p.group_order());  // regular action
  }
}

TEST_CASE("self-duality via polarity") {
  for (int n = 5; n <= 8; ++n)
    CHECK(polarity_exists(torus_group_for_exponent(n)));
}

TEST_CASE("affine arithmetic round trips") {
  TorusParams p{2, 2};
  AffineIsometry a{3, 1, 0}, b{6, 2, 1};
  auto ab = affine_compose(a, b, p);
  auto inv = affine_inverse(ab, p);
  CHECK(affine_compose(ab, inv, p) == (AffineIsometry{0, 0, 0}));
  // Reduction identifies (x,y) with (x+s, y+s).
  AffineIsometry c{0, 3, 2}, d{0, 3 + 2, 2 + 2};
  CHECK(affine_reduce(c, p) == affine_reduce(d, p));
}
