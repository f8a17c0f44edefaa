#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poly/fap.hpp"
#include "poly/mix.hpp"
#include "poly/toroidal.hpp"

using namespace poly;

TEST_CASE("k_mix of two toroidal maps") {
  auto a = torus_group_for_exponent(5);
  auto b5 = torus_group_for_exponent(5);
  auto m = k_mix(a, b5, 0);
  CHECK(m.rank() == 4);
  CHECK(m.order() == 128);

  auto b6 = torus_group_for_exponent(6);
  CHECK(k_mix(a, b6, 0).order() == 256);
}

TEST_CASE("k_mix of a tower with a torus at k=1") {
  auto t = build_flat_tower({5, 5});
  auto m = k_mix(t.group, torus_group_for_exponent(5), 1);
  CHECK(m.rank() == 5);
  CHECK(m.order() == 512);
}

TEST_CASE("k_mix reports failed hypotheses") {
  auto a = torus_group_for_exponent(5);
  CHECK_THROWS_AS(k_mix(a, a, 2), mix_error);  // k > c-2
  auto t = build_flat_tower({5, 5});
  CHECK_THROWS_AS(k_mix(t.group, a, 0), mix_error);  // k < c-d
  // Shared window mismatch: the vertex figure of the (5,5)-tower is not the
  // order-64 facet of the (6,5)-tower.
  std::string msg;
  try {
    k_mix(t.group, build_flat_tower({6, 5}).group, 0);
  } catch (const mix_error& e) {
    msg = e.what();
  }
  CHECK(msg.find("isomorphic") != std::string::npos);
}

TEST_CASE("mix faces and co-faces match the inputs") {
  auto p1 = torus_group_for_exponent(5);
  auto p2 = torus_group_for_exponent(6);
  auto m = k_mix(p1, p2, 0);
  // c-faces generator-match P1, co-k-faces generator-match P2.
  auto facet = m.parabolic_range(0, 2);
  CHECK(generator_matching_isomorphic(facet.generators(), p1.generators()));
  auto vfig = m.parabolic_range(1, 3);
  CHECK(generator_matching_isomorphic(vfig.generators(), p2.generators()));
  CHECK(has_fap_cofaces(m, 0));
  CHECK(has_fap_faces(m, 3));
}

TEST_CASE("tower orders") {
  CHECK(build_flat_tower({5, 5}).group.order() == 128);
  CHECK(build_flat_tower({5, 5, 5}).group.order() == 512);
  CHECK(build_flat_tower({5, 6, 7}).group.order() == 4096);
}

TEST_CASE("tower sections carry the prescribed toroidal types") {
  auto t = build_flat_tower({5, 6, 5});
  for (std::size_t j = 0; j < t.ns.size(); ++j) {
    auto section = t.group.parabolic_range(j, j + 2);
    CHECK(generator_matching_isomorphic(
        section.generators(),
        torus_group_for_exponent(t.ns[j]).generators()));
  }
}

TEST_CASE("commutator relators hold in towers") {
  for (std::vector<int> ns : {std::vector<int>{5, 5}, {5, 6, 5}, {5, 5, 5, 5}}) {
    auto t = build_flat_tower(ns);
    const auto& r = t.group.generators();
    for (std::size_t i = 0; i + 3 < t.rank(); ++i) {
      auto u = mul(mul(mul(r[i], r[i + 1]), r[i]), r[i + 1]);
      auto v = mul(mul(mul(r[i + 2], r[i + 3]), r[i + 2]), r[i + 3]);
      CHECK(mul(u, v) == mul(v, u));
    }
  }
}

TEST_CASE("general section of a mix is itself a mix (one instance)") {
  // d=5 tower: section F_4/F_0 (parabolic indices 1..3) of the (5,5,5)-tower
  // equals the 1-mix of the co-0-face of the (5,5)-tower with {4,4}^(5)'s
  // 3-face, i.e. the corresponding rank-3-window mix.
  auto t = build_flat_tower({5, 5, 5});
  auto section = t.group.parabolic_range(1, 4);
  auto t2 = build_flat_tower({5, 5});
  auto q1 = t2.group.parabolic_range(1, 3);  // co-0-face of the rank-4 tower
  auto q2 = torus_group_for_exponent(5);
  auto expected = k_mix(q1, q2, 0);
  CHECK(generator_matching_isomorphic(section.generators(),
                                      expected.generators()));
}

TEST_CASE("exhaustive small-parameter order formula") {
  for (int a = 5; a <= 7; ++a)
    for (int b = 5; b <= 7; ++b) {
      auto t = build_flat_tower({a, b});
      CHECK(t.group.order() == (std::uint64_t(1) << (a + b - 3)));
    }
}
