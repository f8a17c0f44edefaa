#include "poly/power.hpp"

#include <deque>
#include <unordered_map>

namespace poly {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

bool power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// Vertex labels per group element (cosets of the parabolic omitting 0) and
// the permutation each generator induces on them.
struct VertexAction {
  std::vector<std::uint32_t> label;  // element index -> vertex id
  std::size_t count = 0;
  std::vector<std::vector<std::uint32_t>> on_vertex;  // per generator
};

VertexAction vertex_action(const StringCGroup& g) {
  const auto& elems = g.group().elements();
  std::unordered_map<Permutation, std::uint32_t, PermHash> idx;
  idx.reserve(elems.size());
  for (std::uint32_t i = 0; i < elems.size(); ++i) idx.emplace(elems[i], i);

  VertexAction va;
  va.label.assign(elems.size(), kUnset);
  for (std::uint32_t e = 0; e < elems.size(); ++e) {
    if (va.label[e] != kUnset) continue;
    std::uint32_t v = static_cast<std::uint32_t>(va.count++);
    std::deque<std::uint32_t> work{e};
    va.label[e] = v;
    while (!work.empty()) {
      std::uint32_t cur = work.front();
      work.pop_front();
      for (std::size_t i = 1; i < g.rank(); ++i) {
        std::uint32_t to = idx.at(mul(g.generators()[i], elems[cur]));
        if (va.label[to] == kUnset) {
          va.label[to] = v;
          work.push_back(to);
        }
      }
    }
  }
  for (const Permutation& gen : g.generators()) {
    std::vector<std::uint32_t> img(va.count);
    for (std::uint32_t e = 0; e < elems.size(); ++e)
      img[va.label[e]] = va.label[idx.at(mul(elems[e], gen))];
    va.on_vertex.push_back(std::move(img));
  }
  return va;
}

}  // namespace

std::uint64_t vertex_count(const StringCGroup& k) {
  if (k.rank() == 0) return 1;
  std::uint64_t mask = 0;
  for (std::size_t i = 1; i < k.rank(); ++i) mask |= std::uint64_t(1) << i;
  return k.order() / k.parabolic_group(mask).order();
}

StringCGroup power_2k(const StringCGroup& k) {
  for (std::uint64_t entry : k.schlafli())
    if (!power_of_two(entry))
      throw precondition_error("power_2k: Schlafli entry is not a power of 2");
  const Limits& lim = k.group().limits();
  const auto& elems = k.group().elements();
  VertexAction va = vertex_action(k);
  std::size_t v = va.count;
  if (v >= 32 || (std::uint64_t(1) << v) + elems.size() > lim.max_degree)
    throw cap_error("max_degree", lim.max_degree);
  std::size_t cube = std::size_t(1) << v;
  std::size_t deg = cube + elems.size();

  std::unordered_map<Permutation, std::uint32_t, PermHash> idx;
  for (std::uint32_t i = 0; i < elems.size(); ++i) idx.emplace(elems[i], i);
  std::uint32_t base_vertex = va.label[idx.at(Permutation::identity(
      k.degree()))];

  std::vector<Permutation> gens;
  {
    // New rho_0: flip the base-vertex coordinate, fix the flag part.
    std::vector<Point> img(deg);
    for (std::size_t x = 0; x < cube; ++x)
      img[x] = static_cast<Point>(x ^ (std::size_t(1) << base_vertex));
    for (std::size_t e = 0; e < elems.size(); ++e)
      img[cube + e] = static_cast<Point>(cube + e);
    gens.emplace_back(std::move(img));
  }
  for (std::size_t i = 0; i < k.rank(); ++i) {
    std::vector<Point> img(deg);
    const auto& onv = va.on_vertex[i];
    for (std::size_t x = 0; x < cube; ++x) {
      std::size_t y = 0;
      for (std::size_t b = 0; b < v; ++b)
        if (x & (std::size_t(1) << b)) y |= std::size_t(1) << onv[b];
      img[x] = static_cast<Point>(y);
    }
    for (std::uint32_t e = 0; e < elems.size(); ++e)
      img[cube + e] =
          static_cast<Point>(cube + idx.at(mul(elems[e], k.generators()[i])));
    gens.emplace_back(std::move(img));
  }
  StringCGroup result(std::move(gens), lim);
  std::uint64_t want = k.order() << v;
  if (result.order() != want)
    throw error("power_2k: order differs from 2^v |Gamma(K)|");
  return result;
}

std::vector<CentralInvolution> proper_central_involutions(
    const StringCGroup& g) {
  std::uint64_t vmask = 0, fmask = 0;
  for (std::size_t i = 1; i < g.rank(); ++i) vmask |= std::uint64_t(1) << i;
  for (std::size_t i = 0; i + 1 < g.rank(); ++i) fmask |= std::uint64_t(1) << i;
  const FiniteGroup& vertex_par = g.parabolic_group(vmask);
  const FiniteGroup& facet_par = g.parabolic_group(fmask);
  std::vector<CentralInvolution> out;
  for (const Permutation& e : g.group().elements()) {
    if (!e.is_involution() || e.is_identity()) continue;
    bool central = true;
    for (const Permutation& gen : g.generators())
      if (mul(e, gen) != mul(gen, e)) {
        central = false;
        break;
      }
    if (!central || vertex_par.contains(e)) continue;
    out.push_back(CentralInvolution{e, !facet_par.contains(e)});
  }
  return out;
}

std::uint64_t predicted_order_2kg(const StringCGroup& k, int m) {
  if (m < 3) throw precondition_error("predicted_order_2kg: need m >= 3");
  std::uint64_t v = vertex_count(k);
  if (v % 2 != 0)
    throw precondition_error("predicted_order_2kg: vertex count must be even");
  bool qualified = false;
  for (const CentralInvolution& c : proper_central_involutions(k))
    if (c.outside_facet) qualified = true;
  if (!qualified)
    throw precondition_error(
        "predicted_order_2kg: no proper central involution avoids the facet "
        "subgroup");
  if (!power_of_two(k.order()))
    throw precondition_error("predicted_order_2kg: group order is not a power of 2");
  std::uint64_t n = 0, order = k.order();
  while (order > 1) {
    order >>= 1;
    ++n;
  }
  return std::uint64_t(1) << (n + std::uint64_t(m + 1) * v / 2);
}

}  // namespace poly
