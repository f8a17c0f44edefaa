#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poly/fap.hpp"
#include "poly/mix.hpp"
#include "poly/toroidal.hpp"

using namespace poly;

TEST_CASE("normal closures N_k^+/N_k^-") {
  auto g5 = torus_group_for_exponent(5);
  CHECK(n_plus(g5, 0).order() == g5.order());
  CHECK(n_plus(g5, 2).order() == 4);   // N(alpha2), order 2^{n-3}
  auto g6 = torus_group_for_exponent(6);
  CHECK(n_minus(g6, 0).order() == 8);  // N(alpha0), order 2^{n-3}
  CHECK_THROWS_AS(n_plus(g5, 3), precondition_error);
}

TEST_CASE("toroidal maps have FAP for facets and vertex-figures") {
  for (int n = 5; n <= 8; ++n) {
    auto g = torus_group_for_exponent(n);
    CHECK(has_fap_faces(g, 0));  // trivially
    CHECK(has_fap_faces(g, 2));
    CHECK(has_fap_cofaces(g, 0));
    CHECK(has_fap_cofaces(g, 2));  // trivially
    CHECK(n_minus(g, 0).order() == (std::uint64_t(1) << (n - 3)));
    CHECK(n_plus(g, 2).order() == (std::uint64_t(1) << (n - 3)));
  }
}

TEST_CASE("semidirect order identity when FAP holds") {
  auto t = build_flat_tower({5, 5});
  CHECK(has_fap_faces(t.group, 3));  // facets
  std::uint64_t prod = n_plus(t.group, 3).order() *
                       t.group.parabolic_range(0, 2).order();
  CHECK(prod == t.group.order());
  CHECK(has_fap_cofaces(t.group, 0));
  CHECK(n_minus(t.group, 0).order() *
            t.group.parabolic_range(1, 3).order() ==
        t.group.order());
}

TEST_CASE("hereditary FAP") {
  auto t44 = build_flat_tower({5, 5});
  CHECK(check_fap_hereditary(t44.group, 0, 0) == TriState::yes);  // edge-figures
  auto t565 = build_flat_tower({5, 6, 5});
  CHECK(check_fap_hereditary(t565.group, 0, 0) == TriState::yes);
  auto t6 = build_flat_tower({5, 5, 5, 5});
  CHECK(check_fap_hereditary(t6.group, 1, 0) == TriState::yes);
  // Out-of-range hypotheses report not_applicable.
  auto g = torus_group_for_exponent(5);
  CHECK(check_fap_hereditary(g, 0, 0) == TriState::not_applicable);
}

TEST_CASE("N_{0..d-3} = N_{0..d-4} * N-hat_{d-3} on towers") {
  for (std::vector<int> ns : {std::vector<int>{5, 5}, {5, 6}, {5, 5, 5}}) {
    auto t = build_flat_tower(ns);
    std::size_t d = t.rank();
    auto lhs = n_minus(t.group, d - 3);
    auto prev = n_minus(t.group, d - 4);
    auto window = t.group.parabolic_range(d - 3, d - 1);
    auto nhat = normal_closure(window.group(), {window.generators()[0]});
    // lhs contains both factors, and the factor orders multiply to |lhs|.
    for (const auto& g : prev.generators()) CHECK(lhs.contains(g));
    for (const auto& g : nhat.generators()) CHECK(lhs.contains(g));
    CHECK(intersection(prev, nhat).order() == 1);
    CHECK(prev.order() * nhat.order() == lhs.order());
  }
}

TEST_CASE("non-commuting witness inside every tower") {
  for (std::vector<int> ns : {std::vector<int>{5, 5}, {6, 5}, {5, 5, 5}}) {
    auto t = build_flat_tower(ns);
    const auto& r = t.group.generators();
    auto a = mul(mul(r[1], r[0]), r[1]);
    auto b = mul(mul(r[2], r[1]), r[2]);
    CHECK(mul(a, b) != mul(b, a));
  }
}

TEST_CASE("iterated factor orders") {
  auto t = build_flat_tower({5, 5});
  CHECK(iterated_factors(t) == std::vector<std::uint64_t>{4, 4, 8});
  auto t56 = build_flat_tower({5, 6});
  CHECK(iterated_factors(t56) == std::vector<std::uint64_t>{4, 8, 8});
  FlatTower t7{{7}, torus_group_for_exponent(7)};
  CHECK(iterated_factors(t7) == std::vector<std::uint64_t>{16, 8});
  // Product of the factors is the group order.
  for (std::vector<int> ns : {std::vector<int>{5, 6, 5}, {6, 6}}) {
    auto tw = build_flat_tower(ns);
    std::uint64_t prod = 1;
    for (std::uint64_t f : iterated_factors(tw)) prod *= f;
    CHECK(prod == tw.group.order());
    auto f = iterated_factors(tw);
    for (std::size_t j = 0; j + 1 < f.size(); ++j)
      CHECK(f[j] == (std::uint64_t(1) << (ns[j] - 3)));
  }
}
