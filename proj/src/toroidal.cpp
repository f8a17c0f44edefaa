#include "poly/toroidal.hpp"

#include <algorithm>
#include <unordered_map>

namespace poly {

void TorusParams::validate() const {
  bool ok = (t == 0 && s >= 2) || (s == t && s >= 2);
  if (!ok) throw precondition_error("invalid torus parameters (s,t)");
}

std::uint64_t TorusParams::lattice_index() const {
  return std::uint64_t(s * s + t * t);
}

std::uint64_t TorusParams::group_order() const { return 8 * lattice_index(); }

const std::array<std::array<std::int8_t, 4>, 8>& point_matrices() {
  // Signed permutation matrices: {I, r, r^2, r^3} rotations and the four
  // reflections, in a fixed order. Row-major (a b; c d).
  static const std::array<std::array<std::int8_t, 4>, 8> mats = {{
      {{1, 0, 0, 1}},    // identity
      {{0, -1, 1, 0}},   // rot 90
      {{-1, 0, 0, -1}},  // rot 180
      {{0, 1, -1, 0}},   // rot 270
      {{-1, 0, 0, 1}},   // reflect x -> -x
      {{1, 0, 0, -1}},   // reflect y -> -y
      {{0, 1, 1, 0}},    // swap
      {{0, -1, -1, 0}},  // anti-swap
  }};
  return mats;
}

namespace {

std::uint8_t mat_mul(std::uint8_t i, std::uint8_t j) {
  // (M_j * M_i) as an index; small enough to search every time via a table.
  static const auto table = [] {
    std::array<std::array<std::uint8_t, 8>, 8> t{};
    const auto& m = point_matrices();
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        std::array<std::int8_t, 4> p = {
            static_cast<std::int8_t>(m[b][0] * m[a][0] + m[b][1] * m[a][2]),
            static_cast<std::int8_t>(m[b][0] * m[a][1] + m[b][1] * m[a][3]),
            static_cast<std::int8_t>(m[b][2] * m[a][0] + m[b][3] * m[a][2]),
            static_cast<std::int8_t>(m[b][2] * m[a][1] + m[b][3] * m[a][3])};
        auto it = std::find(m.begin(), m.end(), p);
        t[a][b] = static_cast<std::uint8_t>(it - m.begin());
      }
    return t;
  }();
  return table[i][j];
}

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

AffineIsometry affine_reduce(AffineIsometry a, const TorusParams& p) {
  if (p.t == 0) {
    a.vx = pos_mod(a.vx, p.s);
    a.vy = pos_mod(a.vy, p.s);
  } else {
    // Lambda(s,s) contains 2s*Z^2; fundamental domain [0,2s) x [0,s).
    a.vx = pos_mod(a.vx, 2 * p.s);
    a.vy = pos_mod(a.vy, 2 * p.s);
    if (a.vy >= p.s) {
      a.vx = pos_mod(a.vx - p.s, 2 * p.s);
      a.vy -= p.s;
    }
  }
  return a;
}

AffineIsometry affine_compose(const AffineIsometry& a, const AffineIsometry& b,
                              const TorusParams& p) {
  const auto& mb = point_matrices()[b.mat];
  AffineIsometry r;
  r.mat = mat_mul(a.mat, b.mat);
  r.vx = mb[0] * a.vx + mb[1] * a.vy + b.vx;
  r.vy = mb[2] * a.vx + mb[3] * a.vy + b.vy;
  return affine_reduce(r, p);
}

AffineIsometry affine_inverse(const AffineIsometry& a, const TorusParams& p) {
  // Point parts have order <= 4; invert by cubing the matrix and solving the
  // translation: (M,v)^-1 = (M^-1, -M^-1 v).
  std::uint8_t inv = 0;
  for (std::uint8_t i = 0; i < 8; ++i)
    if (mat_mul(a.mat, i) == 0) {
      inv = i;
      break;
    }
  const auto& mi = point_matrices()[inv];
  AffineIsometry r;
  r.mat = inv;
  r.vx = -(mi[0] * a.vx + mi[1] * a.vy);
  r.vy = -(mi[2] * a.vx + mi[3] * a.vy);
  return affine_reduce(r, p);
}

TorusParams params_for_exponent(int n) {
  if (n < 5) throw precondition_error("params_for_exponent: n must be >= 5");
  if (n % 2 == 1) {
    int e = (n - 3) / 2;
    return TorusParams{std::int64_t(1) << e, 0};
  }
  int e = (n - 4) / 2;
  return TorusParams{std::int64_t(1) << e, std::int64_t(1) << e};
}

namespace {

std::size_t coset_index(const AffineIsometry& a, const TorusParams& p) {
  if (p.t == 0) return std::size_t(a.vx + p.s * a.vy);
  return std::size_t(a.vx + 2 * p.s * a.vy);
}

std::size_t element_index(const AffineIsometry& a, const TorusParams& p) {
  return std::size_t(a.mat) * p.lattice_index() + coset_index(a, p);
}

}  // namespace

StringCGroup build_torus_group(const TorusParams& p, Limits limits) {
  p.validate();
  std::uint64_t n = p.group_order();
  if (n > limits.max_elements) throw cap_error("max_elements", limits.max_elements);
  if (n > limits.max_degree) throw cap_error("max_degree", limits.max_degree);

  // All 8(s^2+t^2) pairs (point part, reduced translation).
  std::vector<AffineIsometry> elems(n);
  std::uint64_t idx_count = p.lattice_index();
  for (std::uint8_t m = 0; m < 8; ++m) {
    for (std::uint64_t c = 0; c < idx_count; ++c) {
      AffineIsometry a;
      a.mat = m;
      if (p.t == 0) {
        a.vx = std::int64_t(c % std::uint64_t(p.s));
        a.vy = std::int64_t(c / std::uint64_t(p.s));
      } else {
        a.vx = std::int64_t(c % std::uint64_t(2 * p.s));
        a.vy = std::int64_t(c / std::uint64_t(2 * p.s));
      }
      elems[element_index(a, p)] = a;
    }
  }

  // rho0: (x,y) -> (1-x,y); rho1: swap; rho2: (x,y) -> (x,-y).
  AffineIsometry rho0{4, 1, 0}, rho1{6, 0, 0}, rho2{5, 0, 0};
  auto regular_perm = [&](const AffineIsometry& g) {
    std::vector<Point> img(n);
    for (std::uint64_t i = 0; i < n; ++i)
      img[i] = static_cast<Point>(element_index(affine_compose(elems[i], g, p), p));
    return Permutation(std::move(img));
  };

  return StringCGroup({regular_perm(rho0), regular_perm(rho1), regular_perm(rho2)},
                      limits);
}

StringCGroup torus_group_for_exponent(int n, Limits limits) {
  return build_torus_group(params_for_exponent(n), limits);
}

bool polarity_exists(const StringCGroup& g) {
  std::vector<Permutation> reversed(g.generators().rbegin(),
                                    g.generators().rend());
  return generator_matching_isomorphic(g.generators(), reversed,
                                       g.group().limits());
}

}  // namespace poly
