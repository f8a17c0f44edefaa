#ifndef POLY_FPRES_HPP
#define POLY_FPRES_HPP

#include "poly/group.hpp"
#include "poly/toroidal.hpp"

namespace poly {

/// Finitely presented group on involutory generators: relators are words over
/// generator indices (no inverse symbols needed), and the involution relator
/// g g is present for every generator.
struct Presentation {
  std::size_t ngens = 0;
  std::vector<std::vector<std::uint32_t>> relators;

  std::string to_json() const;
  static Presentation from_json(const std::string& text);
};

enum class TcStrategy { hlt, felsch };

struct TcResult {
  bool complete = false;
  std::uint64_t index = 0;       // valid only when complete
  std::uint64_t cosets_used = 0;  // peak table size
};

/// Todd-Coxeter coset enumeration of the subgroup generated by the given
/// words. Overflow of max_cosets is reported in the result, never as an
/// index.
TcResult todd_coxeter(const Presentation& p,
                      const std::vector<std::vector<std::uint32_t>>& sub = {},
                      std::uint64_t max_cosets = default_limits().max_cosets,
                      TcStrategy strategy = TcStrategy::hlt);

/// Regular permutation representation from a completed enumeration of the
/// trivial subgroup.
FiniteGroup group_from_presentation(const Presentation& p,
                                    Limits limits = default_limits());

/// {4,4}_(s,t): string relators of {4,4} plus the translation relator
/// T1^s T2^t with T1 = r0 r1 r2 r1 and T2 = r1 r0 r1 r2.
Presentation presentation_44(const TorusParams& params);

/// Rank-(|ns|+2) tower presentation: string relators of {4,...,4}, one
/// toroidal relator per window, and optionally the commutator relators
/// [(r_i r_{i+1})^2, (r_{i+2} r_{i+3})^2].
Presentation flat_presentation(const std::vector<int>& ns,
                               bool with_commutators);

/// Rank-4 universal {{4,4}_(s1,t1), {4,4}_(s2,t2)}: string relators of
/// {4,4,4} plus one toroidal relator per window.
Presentation universal_44_presentation(const TorusParams& a,
                                       const TorusParams& b);

/// Relators of flat_presentation(ns, true) hold in the built tower, and the
/// enumerated order equals the tower order.
bool verify_presentation_theorem(const std::vector<int>& ns);

}  // namespace poly

#endif
