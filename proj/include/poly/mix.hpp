#ifndef POLY_MIX_HPP
#define POLY_MIX_HPP

#include "poly/cstring.hpp"

namespace poly {

class mix_error : public error {
 public:
  using error::error;
};

/// The (k+1)-mix of two string C-groups inside their direct product, with
/// generators overlapped on the shared window. Preconditions (index ranges,
/// section isomorphism, FAP on both sides) are checked and reported by name.
StringCGroup k_mix(const StringCGroup& p1, const StringCGroup& p2,
                   std::size_t k);

struct FlatTower {
  std::vector<int> ns;  // (n_3,...,n_d), so rank d = ns.size() + 2
  StringCGroup group;

  std::size_t rank() const { return ns.size() + 2; }
  std::uint64_t expected_order() const;  // 2^{sum n_j - 3(d-3)}
};

/// Iterated mix of toroidal maps {4,4}^(n_j): rank-d tower of type
/// {{4,4}^(n_3),...,{4,4}^(n_d)}.
FlatTower build_flat_tower(const std::vector<int>& ns,
                           Limits limits = default_limits());

/// Orders [|N_0|, |N^_1|, ..., |N^_{d-3}|, 8] of the iterated semidirect
/// decomposition; their product is the group order.
std::vector<std::uint64_t> iterated_factors(const FlatTower& t);

}  // namespace poly

#endif
