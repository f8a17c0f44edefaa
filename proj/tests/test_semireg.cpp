#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "poly/fap.hpp"
#include "poly/semireg.hpp"
#include "poly/toroidal.hpp"

using namespace poly;

namespace {

// Sub-poset of all faces strictly above the given vertex.
FacePoset covertex_section(const FacePoset& p, FaceId v) {
  std::size_t d = p.rank;
  std::vector<std::vector<char>> above(d);
  for (std::size_t r = 0; r < d; ++r) above[r].assign(p.counts[r], 0);
  above[0][v] = 1;
  for (std::size_t r = 0; r + 1 < d; ++r)
    for (FaceId a = 0; a < p.counts[r]; ++a)
      if (above[r][a])
        for (FaceId b : p.up[r][a]) above[r + 1][b] = 1;

  FacePoset s;
  s.rank = d - 1;
  std::vector<std::vector<FaceId>> newid(d);
  for (std::size_t r = 1; r < d; ++r) {
    newid[r].assign(p.counts[r], 0);
    std::size_t c = 0;
    for (FaceId a = 0; a < p.counts[r]; ++a)
      if (above[r][a]) newid[r][a] = static_cast<FaceId>(c++);
    s.counts.push_back(c);
  }
  s.up.resize(d - 2);
  for (std::size_t r = 1; r + 1 < d; ++r) {
    s.up[r - 1].resize(s.counts[r - 1]);
    for (FaceId a = 0; a < p.counts[r]; ++a)
      if (above[r][a])
        for (FaceId b : p.up[r][a])
          if (above[r + 1][b]) s.up[r - 1][newid[r][a]].push_back(newid[r + 1][b]);
  }
  return s;
}

FacePoset square_poset() {
  auto g = build_torus_group(TorusParams{2, 0});
  StringCGroup sq({g.generators()[0], g.generators()[1]});
  return build_poset(sq);
}

}  // namespace

TEST_CASE("semiregular group orders") {
  CHECK(build_semiregular({}, 5, 6).group.order() == 256);
  CHECK(build_semiregular({}, 5, 5).group.order() == 128);
  CHECK(build_semiregular({5}, 5, 6).group.order() == 1024);
}

TEST_CASE("order formula for all small parameters") {
  for (int n = 5; n <= 7; ++n)
    for (int m = 5; m <= 7; ++m) {
      auto t4 = build_semiregular({}, n, m);
      CHECK(t4.group.order() ==
            (std::uint64_t(1) << (n + m - 3)));
      for (int k = 5; k <= 7; ++k) {
        auto t5 = build_semiregular({k}, n, m);
        CHECK(t5.group.order() ==
              (std::uint64_t(1) << (k + n + m - 6)));
      }
    }
}

TEST_CASE("factorization through the facet group") {
  for (auto [ns, n, m] :
       {std::tuple<std::vector<int>, int, int>{{}, 5, 6},
        {{}, 6, 6},
        {{5}, 5, 6}}) {
    auto t = build_semiregular(ns, n, m);
    std::size_t d = t.rank();
    std::vector<int> pns(ns), qns(ns);
    pns.push_back(n);
    qns.push_back(m);
    auto p = build_flat_tower(pns);
    auto q = build_flat_tower(qns);
    auto np = n_plus(p.group, d - 2);
    auto nq = n_plus(q.group, d - 2);
    CHECK(np.order() == (std::uint64_t(1) << (n - 3)));
    CHECK(nq.order() == (std::uint64_t(1) << (m - 3)));
    std::uint64_t korder = p.group.parabolic_range(0, d - 3).order();
    CHECK(np.order() * nq.order() * korder == t.group.order());
  }
}

TEST_CASE("tail-triangle invariants") {
  auto t = build_semiregular({}, 5, 6);
  for (const auto& g : t.tail) CHECK(g.is_involution());
  CHECK(t.apex_p.is_involution());
  CHECK(t.apex_q.is_involution());
  CHECK(mul(t.apex_p, t.apex_q) == mul(t.apex_q, t.apex_p));
  // The tail with either apex is a string C-group: one of the two towers.
  std::vector<Permutation> facp(t.tail), facq(t.tail);
  facp.push_back(t.apex_p);
  facq.push_back(t.apex_q);
  CHECK(StringCGroup(facp).check_string_relations().ok());
  CHECK(StringCGroup(facq).check_string_relations().ok());
  CHECK(FiniteGroup(facp).order() == 32);
  CHECK(FiniteGroup(facq).order() == 64);
}

TEST_CASE("doubling automorphism") {
  CHECK(doubling_automorphism_exists(build_semiregular({}, 5, 5)));
  CHECK_FALSE(doubling_automorphism_exists(build_semiregular({}, 5, 6)));
  CHECK(doubling_automorphism_exists(build_semiregular({}, 6, 6)));
  CHECK(doubling_automorphism_exists(build_semiregular({5}, 5, 5)));
}

TEST_CASE("full automorphism group") {
  auto t55 = build_semiregular({}, 5, 5);
  CHECK(t55.group.order() == 128);
  CHECK(full_automorphism_group(t55).order() == 256);
  auto t56 = build_semiregular({}, 5, 6);
  CHECK(full_automorphism_group(t56).order() == t56.group.order());
}

TEST_CASE("semiregular poset, d=4, last=(5,6)") {
  auto t = build_semiregular({}, 5, 6);
  auto s = build_semireg_poset(t);
  CHECK(s.rank == 4);
  CHECK(s.counts[0] == 8);

  auto pp = build_poset(torus_group_for_exponent(5));
  auto qp = build_poset(torus_group_for_exponent(6));
  auto kp = square_poset();
  CHECK(s.counts[3] == pp.counts[2] + qp.counts[2]);
  CHECK(semireg_f0_formula(pp, qp, kp) == s.counts[0]);

  // The copies of P are cosets of the full Gamma(P), so their number is
  // |T|/|Gamma(P)|, which equals the facet count of the other factor.
  std::size_t np = 0, nq = 0;
  for (const auto& lab : s.labels[3]) (lab == "P" ? np : nq) += 1;
  CHECK(np == qp.counts[2]);
  CHECK(nq == pp.counts[2]);
  CHECK(check_flag_connected(s));
}

TEST_CASE("co-vertex sections of the (5,5) instance") {
  auto t = build_semiregular({}, 5, 5);
  auto s = build_semireg_poset(t);
  auto target = build_poset(build_torus_group(TorusParams{2, 2}));
  for (FaceId v = 0; v < s.counts[0]; ++v)
    CHECK(poset_isomorphic(covertex_section(s, v), target));
}

TEST_CASE("f0 formula degenerate case") {
  auto sq = square_poset();
  CHECK(semireg_f0_formula(sq, sq, sq) == sq.counts[0]);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_semiregular({}, 4, 5), precondition_error);
  CHECK_THROWS_AS(build_semiregular({4}, 5, 5), precondition_error);
  Limits tight = default_limits();
  tight.max_elements = 64;
  CHECK_THROWS_AS(build_semiregular({}, 5, 6, tight), cap_error);
}
