#ifndef POLY_GROUP_HPP
#define POLY_GROUP_HPP

#include <memory>
#include <optional>
#include <vector>

#include "poly/perm.hpp"

namespace poly {

/// Base-and-strong-generating-set structure built by deterministic
/// Schreier-Sims. Supports incremental generator addition.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree);

  void extend(const Permutation& g);
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  std::size_t degree() const { return degree_; }

 private:
  struct Level {
    Point base = 0;
    // All strong generators fixing the bases of earlier levels (nested sets:
    // each level's list is a superset of the next level's).
    std::vector<Permutation> gens;
    std::vector<std::int32_t> where;       // point -> transversal slot, -1 if outside orbit
    std::vector<Permutation> transversal;  // slot k maps base -> orbit point
    std::vector<Point> orbit;
  };

  std::size_t degree_;
  std::vector<Level> levels_;

  void recompute_orbit(std::size_t i);
  // Returns (residue, level index reached).
  std::pair<Permutation, std::size_t> strip(Permutation g) const;
  // Installs g as a strong generator at levels lo..hi, creating the last
  // level if needed.
  void add_strong(std::size_t lo, std::size_t hi, const Permutation& g);
  // Re-establishes the Schreier condition at level i, assuming deeper levels
  // already satisfy it.
  void complete_level(std::size_t i);
};

/// Finite permutation group given by generators. Immutable value type with
/// shared lazily-built indices (stabilizer chain, element list). Indices are
/// built single-threaded; build them before sharing a group across threads.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<Permutation> gens,
                       Limits limits = default_limits());
  static FiniteGroup trivial(std::size_t degree,
                             Limits limits = default_limits());

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  const Limits& limits() const;

  std::uint64_t order() const;  // via stabilizer chain; cached
  bool contains(const Permutation& p) const;
  const std::vector<Permutation>& elements() const;  // closure enumeration; cached

  /// Independent oracle: order by naive closure enumeration (no chain).
  std::uint64_t order_by_closure() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  const StabilizerChain& chain() const;
};

FiniteGroup normal_closure(const FiniteGroup& g,
                           const std::vector<Permutation>& s);
FiniteGroup intersection(const FiniteGroup& a, const FiniteGroup& b);

/// True iff a[i] -> b[i] extends to an isomorphism of the generated groups
/// (graph-of-homomorphism criterion on the direct product).
bool generator_matching_isomorphic(const std::vector<Permutation>& a,
                                   const std::vector<Permutation>& b,
                                   Limits limits = default_limits());

struct DirectProduct {
  FiniteGroup group;
  std::size_t left_degree;
  std::size_t right_degree;

  Permutation embed_left(const Permutation& p) const;
  Permutation embed_right(const Permutation& p) const;
};

DirectProduct direct_product(const FiniteGroup& a, const FiniteGroup& b);

Permutation pad_left(const Permutation& p, std::size_t right_degree);
Permutation pad_right(std::size_t left_degree, const Permutation& p);

}  // namespace poly

#endif
