#ifndef POLY_SEMIREG_HPP
#define POLY_SEMIREG_HPP

#include "poly/geometry.hpp"
#include "poly/mix.hpp"

namespace poly {

/// Tail-triangle generator system inside the direct product of the groups of
/// two flat towers P and Q that share their facet K: a diagonal tail
/// t_0..t_{d-3} plus one apex from each factor. Rank of the associated
/// semiregular polytope is d = tail length + 2.
struct TailTriangleGroup {
  FiniteGroup group;
  std::vector<Permutation> tail;
  Permutation apex_p;
  Permutation apex_q;
  std::vector<int> ns;  // tail parameters (n_3,...,n_{d-2}), empty when d = 4
  int n_last = 0;       // n_{d-1}
  int m_last = 0;       // m_{d-1}

  std::size_t rank() const { return tail.size() + 2; }
  std::uint64_t expected_order() const;  // 2^{sum ns + n_last + m_last - 3(d-3)}
};

TailTriangleGroup build_semiregular(const std::vector<int>& ns, int n_last,
                                    int m_last,
                                    Limits limits = default_limits());

/// True iff swapping the two apexes (fixing the tail) extends to a group
/// automorphism; holds exactly when n_last = m_last.
bool doubling_automorphism_exists(const TailTriangleGroup& t);

/// The group extended by the coordinate-swap permutation when the doubling
/// automorphism exists, the group itself otherwise.
FiniteGroup full_automorphism_group(const TailTriangleGroup& t);

/// Rank-d face poset: rank i < d-2 omits t_i and keeps both apexes, rank d-2
/// is the tail subgroup, rank d-1 carries the two facet families "P" and "Q".
/// Verifies vertex-transitivity and the alternation of the families around
/// every (d-3)-face.
FacePoset build_semireg_poset(const TailTriangleGroup& t);

/// Predicted vertex count f0(P) f0(Q) / f0(K); throws if not integral.
std::uint64_t semireg_f0_formula(const FacePoset& p, const FacePoset& q,
                                 const FacePoset& k);

}  // namespace poly

#endif
