#ifndef POLY_GEOMETRY_HPP
#define POLY_GEOMETRY_HPP

#include <string>
#include <vector>

#include "poly/cstring.hpp"

namespace poly {

using FaceId = std::uint32_t;
using Flag = std::vector<FaceId>;  // one face per proper rank

/// Ranked face poset with Hasse adjacency between consecutive ranks. The
/// improper least and greatest faces are implicit; incidence between
/// non-consecutive ranks is the transitive closure of the Hasse relation.
struct FacePoset {
  std::size_t rank = 0;             // number of proper ranks
  std::vector<std::size_t> counts;  // faces per proper rank
  // up[r][a]: faces of rank r+1 incident with face a of rank r, sorted.
  std::vector<std::vector<std::vector<FaceId>>> up;
  // Optional per-rank face labels (facet families); empty vector = unlabeled.
  std::vector<std::vector<std::string>> labels;
  // Optional induced group action: gen_action[g][r] permutes the rank-r faces.
  std::vector<std::vector<Permutation>> gen_action;

  const std::vector<std::size_t>& f_vector() const { return counts; }
  std::vector<std::vector<std::vector<FaceId>>> down() const;
};

/// One coset family contributing faces at a rank.
struct RankFamily {
  std::vector<Permutation> subgroup_gens;  // empty = trivial subgroup
  std::string label;
};

/// Faces of rank r = right cosets of the rank-r subgroups, incidence by
/// nonempty coset intersection between consecutive ranks; the right regular
/// action of the generators is recorded in gen_action.
FacePoset build_coset_poset(const FiniteGroup& g,
                            const std::vector<std::vector<RankFamily>>& ranks);

/// Coset geometry of a verified string C-group: rank-i faces are cosets of
/// the parabolic omitting generator i.
FacePoset build_poset(const StringCGroup& g);

std::vector<std::size_t> f_vector(const FacePoset& p);

/// Every incident (j-1,j+1)-pair has exactly two intermediate j-faces.
bool check_diamond(const FacePoset& p);

/// Flag graph connected, and likewise within every section of rank >= 2.
bool check_flag_connected(const FacePoset& p);

/// Every k-face incident with every l-face (0 <= k < l <= rank-1).
bool check_flat(const FacePoset& p, std::size_t k, std::size_t l);

std::vector<Flag> enumerate_flags(const FacePoset& p,
                                  Limits limits = default_limits());

struct Medial {
  FacePoset poset;
  FiniteGroup group;
  bool self_dual = false;
};

/// Medial of a rank-3 poset: vertices = edges of K, edges = incident
/// (vertex, face) pairs of K, faces = face cycles plus vertex cycles. The
/// group is the action of gk on the medial faces, extended by the polarity
/// permutation when K is self-dual. k must come from build_poset(gk).
Medial medial(const FacePoset& k, const StringCGroup& gk);

/// Incidence-structure isomorphism (rank-preserving), by color refinement
/// with backtracking.
bool poset_isomorphic(const FacePoset& a, const FacePoset& b);

std::string poset_json(const FacePoset& p);
std::string poset_dot_hasse(const FacePoset& p);
std::string poset_dot_flags(const FacePoset& p);

}  // namespace poly

#endif
