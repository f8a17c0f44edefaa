#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "poly/geometry.hpp"
#include "poly/mix.hpp"
#include "poly/toroidal.hpp"

using namespace poly;

namespace {

StringCGroup cube_group() {
  // Vertex v = x + 2y + 4z of the unit cube; base flag at 000, the x-edge,
  // the z=0 face.
  auto bitperm = [](auto f) {
    std::vector<Point> img(8);
    for (Point v = 0; v < 8; ++v) img[v] = f(v);
    return Permutation(std::move(img));
  };
  auto r0 = bitperm([](Point v) { return v ^ 1; });
  auto r1 = bitperm([](Point v) {
    return Point((v & 4) | ((v & 1) << 1) | ((v >> 1) & 1));
  });
  auto r2 = bitperm([](Point v) {
    return Point((v & 1) | ((v & 2) << 1) | ((v >> 1) & 2));
  });
  return StringCGroup({r0, r1, r2});
}

FacePoset square_poset() {
  auto g = build_torus_group(TorusParams{2, 0});
  StringCGroup sq({g.generators()[0], g.generators()[1]});
  return build_poset(sq);
}

FacePoset two_squares() {
  // Disjoint union of two squares: vertices 0..7, edges 0..7.
  FacePoset p;
  p.rank = 2;
  p.counts = {8, 8};
  p.up.resize(1);
  p.up[0].resize(8);
  for (FaceId c = 0; c < 2; ++c)
    for (FaceId i = 0; i < 4; ++i) {
      FaceId v = 4 * c + i, w = 4 * c + (i + 1) % 4, e = 4 * c + i;
      p.up[0][v].push_back(e);
      p.up[0][w].push_back(e);
    }
  for (auto& lst : p.up[0]) std::sort(lst.begin(), lst.end());
  return p;
}

}  // namespace

TEST_CASE("coset poset of toroidal maps") {
  auto p = build_poset(build_torus_group(TorusParams{2, 0}));
  CHECK(f_vector(p) == std::vector<std::size_t>{4, 8, 4});
  CHECK(enumerate_flags(p).size() == 32);

  auto sq = square_poset();
  CHECK(f_vector(sq) == std::vector<std::size_t>{4, 4});
  CHECK(enumerate_flags(sq).size() == 8);

  auto t = build_flat_tower({5, 5});
  auto tp = build_poset(t.group);
  CHECK(enumerate_flags(tp).size() == 128);
  CHECK(f_vector(tp)[0] == 4);
  CHECK(t.group.order() / t.group.parabolic_range(1, 3).order() == 4);
}

TEST_CASE("poset cap") {
  Limits tight = default_limits();
  tight.max_poset_order = 16;
  auto g = build_torus_group(TorusParams{2, 0}, tight);
  CHECK_THROWS_AS(build_poset(g), cap_error);
}

TEST_CASE("diamond condition") {
  CHECK(check_diamond(build_poset(build_torus_group(TorusParams{2, 2}))));
  CHECK(check_diamond(square_poset()));
  CHECK(check_diamond(build_poset(build_flat_tower({5, 5}).group)));

  // Delete the last 1-face of the square: two vertices lose an edge.
  auto mutated = square_poset();
  mutated.counts[1] -= 1;
  for (auto& lst : mutated.up[0])
    lst.erase(std::remove(lst.begin(), lst.end(), FaceId(3)), lst.end());
  CHECK_FALSE(check_diamond(mutated));
}

TEST_CASE("flag connectivity") {
  CHECK(check_flag_connected(build_poset(build_torus_group(TorusParams{2, 2}))));
  CHECK(check_flag_connected(build_poset(build_flat_tower({5, 5}).group)));
  CHECK_FALSE(check_flag_connected(two_squares()));

  FacePoset single;
  single.rank = 1;
  single.counts = {1};
  CHECK(check_flag_connected(single));
}

TEST_CASE("flatness") {
  auto t44 = build_poset(build_flat_tower({5, 5}).group);
  CHECK(check_flat(t44, 0, 3));
  auto t444 = build_poset(build_flat_tower({5, 5, 5}).group);
  CHECK(check_flat(t444, 1, 4));

  auto small = build_poset(build_torus_group(TorusParams{2, 0}));
  CHECK(check_flat(small, 0, 2));
  auto big = build_poset(build_torus_group(TorusParams{4, 0}));
  CHECK_FALSE(check_flat(big, 0, 2));
  CHECK_THROWS_AS(check_flat(small, 2, 1), precondition_error);
}

TEST_CASE("flags move freely under the group") {
  auto g = build_torus_group(TorusParams{2, 2});
  auto p = build_poset(g);
  auto flags = enumerate_flags(p);
  CHECK(flags.size() == g.order());
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Flag& f = flags[rng() % flags.size()];
    // Random nonempty word in the generators.
    std::size_t len = 1 + rng() % 6;
    std::vector<std::size_t> word(len);
    for (auto& w : word) w = rng() % 3;
    bool trivial = true;
    Flag img = f;
    for (std::size_t w : word) {
      for (std::size_t r = 0; r < 3; ++r) img[r] = p.gen_action[w][r](img[r]);
    }
    Permutation total = Permutation::identity(g.degree());
    for (std::size_t w : word) total = mul(total, g.generators()[w]);
    trivial = total.is_identity();
    if (trivial)
      CHECK(img == f);
    else
      CHECK(img != f);
  }
}

TEST_CASE("medial of the cube is the cuboctahedron") {
  auto cube = cube_group();
  CHECK(cube.order() == 48);
  CHECK(cube.schlafli() == std::vector<std::uint64_t>{4, 3});
  auto kp = build_poset(cube);
  CHECK(f_vector(kp) == std::vector<std::size_t>{8, 12, 6});
  auto m = medial(kp, cube);
  CHECK(f_vector(m.poset) == std::vector<std::size_t>{12, 24, 14});
  CHECK_FALSE(m.self_dual);
  CHECK(m.group.order() == 48);
  CHECK(check_diamond(m.poset));
  CHECK(check_flag_connected(m.poset));
}

TEST_CASE("medial of a self-dual torus map") {
  auto k = build_torus_group(TorusParams{2, 0});
  auto kp = build_poset(k);
  auto m = medial(kp, k);
  CHECK(m.self_dual);
  CHECK(m.group.order() == 64);
  CHECK(f_vector(m.poset) == std::vector<std::size_t>{8, 16, 8});
  auto target = build_poset(build_torus_group(TorusParams{2, 2}));
  CHECK(poset_isomorphic(m.poset, target));
}

TEST_CASE("medial of the larger torus map") {
  auto k = build_torus_group(TorusParams{4, 0});
  auto m = medial(build_poset(k), k);
  CHECK(f_vector(m.poset) == std::vector<std::size_t>{32, 64, 32});
  CHECK(m.self_dual);
  CHECK(m.group.order() == 256);
}

TEST_CASE("medial counts match the base counts") {
  for (TorusParams tp : {TorusParams{2, 0}, TorusParams{2, 2}}) {
    auto k = build_torus_group(tp);
    auto kp = build_poset(k);
    auto m = medial(kp, k);
    CHECK(m.poset.counts[0] == kp.counts[1]);
    CHECK(m.poset.counts[2] == kp.counts[2] + kp.counts[0]);
  }
}

TEST_CASE("medial rejects wrong rank") {
  CHECK_THROWS_AS(medial(square_poset(), cube_group()), precondition_error);
}

TEST_CASE("poset isomorphism") {
  auto a = build_poset(build_torus_group(TorusParams{2, 2}));
  auto b = build_poset(build_torus_group(TorusParams{2, 2}));
  CHECK(poset_isomorphic(a, b));
  auto c = build_poset(build_torus_group(TorusParams{2, 0}));
  CHECK_FALSE(poset_isomorphic(a, c));
  CHECK(poset_isomorphic(square_poset(), square_poset()));
}

TEST_CASE("exports are well formed") {
  auto p = square_poset();
  auto js = poset_json(p);
  CHECK(js.find("\"f_vector\"") != std::string::npos);
  auto dot = poset_dot_hasse(p);
  CHECK(dot.find("digraph hasse") != std::string::npos);
  CHECK(dot.find("f0_0 -> f1_") != std::string::npos);
  auto fg = poset_dot_flags(p);
  CHECK(fg.find("graph flags") != std::string::npos);
  CHECK(fg.find("label=\"0\"") != std::string::npos);
}
