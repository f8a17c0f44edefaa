#ifndef POLY_FAP_HPP
#define POLY_FAP_HPP

#include "poly/cstring.hpp"

namespace poly {

/// Normal closure of {rho_k,...,rho_{d-1}} in the full group.
FiniteGroup n_plus(const StringCGroup& g, std::size_t k);
/// Normal closure of {rho_0,...,rho_k} in the full group.
FiniteGroup n_minus(const StringCGroup& g, std::size_t k);

/// FAP with respect to the k-faces: N_k^+ meets <rho_0..rho_{k-1}> trivially.
/// A true result additionally asserts the semidirect order identity.
bool has_fap_faces(const StringCGroup& g, std::size_t k);
/// Dual: N_k^- against <rho_{k+1}..rho_{d-1}>.
bool has_fap_cofaces(const StringCGroup& g, std::size_t k);

enum class TriState { no, yes, not_applicable };

/// Hereditary-FAP property test: when the lemma's hypotheses hold, checks the
/// conclusion (FAP w.r.t. co-(k+l+1)-faces). Unmet hypotheses report
/// not_applicable, never a bare failure.
TriState check_fap_hereditary(const StringCGroup& g, std::size_t k,
                              std::size_t l);

}  // namespace poly

#endif
