#ifndef POLY_CSTRING_HPP
#define POLY_CSTRING_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "poly/group.hpp"

namespace poly {

struct Diagnostics {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

/// A finite group together with an ordered tuple of involutory generators,
/// the candidate distinguished generators of a regular polytope. Axiom checks
/// are cached once they pass; the object is immutable.
class StringCGroup {
 public:
  explicit StringCGroup(std::vector<Permutation> gens,
                        Limits limits = default_limits());

  std::size_t rank() const;
  const std::vector<Permutation>& generators() const;
  const FiniteGroup& group() const;
  std::uint64_t order() const { return group().order(); }
  std::size_t degree() const { return group().degree(); }

  Diagnostics check_string_relations() const;
  std::vector<std::uint64_t> schlafli() const;
  bool check_intersection_property() const;

  /// Subgroup generated by the selected generator indices, with the selected
  /// tuple retained in order.
  StringCGroup parabolic(const std::vector<std::size_t>& subset) const;
  StringCGroup parabolic_range(std::size_t lo, std::size_t hi) const;  // [lo,hi]

  /// Cached subgroup for a generator-index bitmask.
  const FiniteGroup& parabolic_group(std::uint64_t mask) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

}  // namespace poly

#endif
