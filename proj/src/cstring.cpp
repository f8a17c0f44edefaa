#include "poly/cstring.hpp"

#include <optional>

namespace poly {

struct StringCGroup::Impl {
  std::vector<Permutation> gens;
  FiniteGroup group;
  Limits limits;
  std::map<std::uint64_t, FiniteGroup> parabolics;
  std::optional<Diagnostics> relations;
  std::optional<std::vector<std::uint64_t>> schlafli;
  std::optional<bool> intersection_ok;

  Impl(std::vector<Permutation> g, Limits l)
      : gens(g), group(std::move(g), l), limits(l) {}
};

StringCGroup::StringCGroup(std::vector<Permutation> gens, Limits limits)
    : impl_(std::make_shared<Impl>(std::move(gens), limits)) {}

std::size_t StringCGroup::rank() const { return impl_->gens.size(); }
const std::vector<Permutation>& StringCGroup::generators() const {
  return impl_->gens;
}
const FiniteGroup& StringCGroup::group() const { return impl_->group; }

Diagnostics StringCGroup::check_string_relations() const {
  if (impl_->relations) return *impl_->relations;
  Diagnostics d;
  const auto& g = impl_->gens;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_involution())
      d.issues.push_back("generator " + std::to_string(i) +
                         " is not an involution");
  }
  for (std::size_t i = 0; i + 2 <= g.size(); ++i) {
    for (std::size_t j = i + 2; j < g.size(); ++j) {
      if (!mul(g[i], g[j]).is_involution() && !mul(g[i], g[j]).is_identity())
        d.issues.push_back("far generators " + std::to_string(i) + "," +
                           std::to_string(j) + " do not commute");
    }
  }
  impl_->relations = d;
  return d;
}

std::vector<std::uint64_t> StringCGroup::schlafli() const {
  if (impl_->schlafli) return *impl_->schlafli;
  if (!check_string_relations().ok())
    throw precondition_error("schlafli: string relations fail");
  std::vector<std::uint64_t> p;
  for (std::size_t i = 1; i < impl_->gens.size(); ++i)
    p.push_back(element_order(mul(impl_->gens[i - 1], impl_->gens[i])));
  impl_->schlafli = p;
  return p;
}

const FiniteGroup& StringCGroup::parabolic_group(std::uint64_t mask) const {
  auto it = impl_->parabolics.find(mask);
  if (it != impl_->parabolics.end()) return it->second;
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < impl_->gens.size(); ++i)
    if (mask & (std::uint64_t(1) << i)) gens.push_back(impl_->gens[i]);
  FiniteGroup g = gens.empty()
                      ? FiniteGroup::trivial(impl_->group.degree(), impl_->limits)
                      : FiniteGroup(std::move(gens), impl_->limits);
  return impl_->parabolics.emplace(mask, std::move(g)).first->second;
}

bool StringCGroup::check_intersection_property() const {
  if (impl_->intersection_ok) return *impl_->intersection_ok;
  if (!check_string_relations().ok())
    throw precondition_error("intersection property: string relations fail");
  std::size_t d = rank();
  if (d > 7) throw cap_error("intersection_rank_bound", 7);
  std::uint64_t full = (std::uint64_t(1) << d) - 1;
  bool ok = true;
  for (std::uint64_t k = 0; k <= full && ok; ++k) {
    for (std::uint64_t j = 0; j < k && ok; ++j) {
      std::uint64_t meet = k & j;
      if (meet == k || meet == j) continue;  // nested: trivially equal
      const FiniteGroup& a = parabolic_group(k);
      const FiniteGroup& b = parabolic_group(j);
      std::uint64_t want = parabolic_group(meet).order();
      if (intersection(a, b).order() != want) ok = false;
    }
  }
  impl_->intersection_ok = ok;
  return ok;
}

StringCGroup StringCGroup::parabolic(
    const std::vector<std::size_t>& subset) const {
  std::vector<Permutation> gens;
  for (std::size_t i : subset) {
    if (i >= rank()) throw precondition_error("parabolic: index out of range");
    gens.push_back(impl_->gens[i]);
  }
  if (gens.empty()) gens.push_back(Permutation::identity(degree()));
  return StringCGroup(std::move(gens), impl_->limits);
}

StringCGroup StringCGroup::parabolic_range(std::size_t lo,
                                           std::size_t hi) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = lo; i <= hi && i < rank(); ++i) idx.push_back(i);
  return parabolic(idx);
}

}  // namespace poly
