#ifndef POLY_TOROIDAL_HPP
#define POLY_TOROIDAL_HPP

#include <array>
#include <cstdint>

#include "poly/cstring.hpp"

namespace poly {

/// Parameters (s,t) of the toroidal map {4,4}_(s,t): t = 0 with s >= 2, or
/// s = t >= 2. The automorphism group has order 8(s^2+t^2).
struct TorusParams {
  std::int64_t s = 2;
  std::int64_t t = 0;

  void validate() const;
  std::uint64_t group_order() const;
  std::uint64_t lattice_index() const;  // |Z^2 / Lambda(s,t)| = s^2 + t^2
};

/// Element of [4,4]_(s,t): signed-permutation point part (index into the
/// square's point group) and translation part reduced mod Lambda(s,t).
struct AffineIsometry {
  std::uint8_t mat = 0;  // index into point_matrices()
  std::int64_t vx = 0;
  std::int64_t vy = 0;

  bool operator==(const AffineIsometry&) const = default;
};

// The 8 signed-permutation 2x2 matrices, row-major.
const std::array<std::array<std::int8_t, 4>, 8>& point_matrices();

AffineIsometry affine_reduce(AffineIsometry a, const TorusParams& p);
// "a then b" in the global left-to-right convention.
AffineIsometry affine_compose(const AffineIsometry& a, const AffineIsometry& b,
                              const TorusParams& p);
AffineIsometry affine_inverse(const AffineIsometry& a, const TorusParams& p);

/// (2^e,0) for odd n = 2e+3, (2^e,2^e) for even n = 2e+4; group order 2^n.
TorusParams params_for_exponent(int n);

/// The group [4,4]_(s,t) in its regular action (degree = order), generated by
/// the reflections rho0: (x,y)->(1-x,y), rho1: (x,y)->(y,x),
/// rho2: (x,y)->(x,-y), reduced mod Lambda(s,t).
StringCGroup build_torus_group(const TorusParams& p,
                               Limits limits = default_limits());

StringCGroup torus_group_for_exponent(int n, Limits limits = default_limits());

/// True iff rho_i -> rho_{d-1-i} extends to a group automorphism.
bool polarity_exists(const StringCGroup& g);

}  // namespace poly

#endif
