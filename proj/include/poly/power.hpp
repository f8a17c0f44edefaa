#ifndef POLY_POWER_HPP
#define POLY_POWER_HPP

#include "poly/cstring.hpp"

namespace poly {

/// The power polytope group 2^K = C_2^v x| Gamma(K), acting faithfully on the
/// disjoint union of {0,1}^v (v = vertex count of K) and the regular
/// representation of Gamma(K). The new first generator flips the base-vertex
/// coordinate; generator i+1 acts as the old generator i. Requires every
/// Schlafli entry of K to be a power of 2.
StringCGroup power_2k(const StringCGroup& k);

struct CentralInvolution {
  Permutation element;
  bool outside_facet;  // also avoids the facet parabolic
};

/// Central involutions outside the vertex-figure parabolic, by brute-force
/// commutation filtering.
std::vector<CentralInvolution> proper_central_involutions(
    const StringCGroup& g);

/// Predicted order 2^{n + (m+1)v/2} of 2^{K,G(2^m)}; requires a proper
/// central involution that also avoids the facet parabolic, and even v.
std::uint64_t predicted_order_2kg(const StringCGroup& k, int m);

/// Vertex count of K (index of the vertex-figure parabolic).
std::uint64_t vertex_count(const StringCGroup& k);

}  // namespace poly

#endif
