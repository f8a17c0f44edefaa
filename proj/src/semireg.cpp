#include "poly/semireg.hpp"

#include <deque>
#include <numeric>

#include "poly/fap.hpp"

namespace poly {

std::uint64_t TailTriangleGroup::expected_order() const {
  long long e = std::accumulate(ns.begin(), ns.end(), 0LL) + n_last + m_last -
                3 * (static_cast<long long>(rank()) - 3);
  return std::uint64_t(1) << e;
}

TailTriangleGroup build_semiregular(const std::vector<int>& ns, int n_last,
                                    int m_last, Limits limits) {
  for (int n : ns)
    if (n < 5) throw precondition_error("semiregular: parameters must be >= 5");
  if (n_last < 5 || m_last < 5)
    throw precondition_error("semiregular: parameters must be >= 5");
  std::size_t d = ns.size() + 4;
  long long e = std::accumulate(ns.begin(), ns.end(), 0LL) + n_last + m_last -
                3 * (static_cast<long long>(d) - 3);
  if (e >= 63 || (std::uint64_t(1) << e) > limits.max_elements)
    throw cap_error("max_elements", limits.max_elements);

  std::vector<int> pns(ns), qns(ns);
  pns.push_back(n_last);
  qns.push_back(m_last);
  FlatTower p = build_flat_tower(pns, limits);
  FlatTower q = build_flat_tower(qns, limits);
  if (!has_fap_faces(p.group, d - 2) || !has_fap_faces(q.group, d - 2))
    throw precondition_error("semiregular: factors lack FAP for their facets");

  auto dp = direct_product(p.group.group(), q.group.group());
  TailTriangleGroup t{FiniteGroup::trivial(1),
                      {},
                      Permutation::identity(1),
                      Permutation::identity(1),
                      ns,
                      n_last,
                      m_last};
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 1 <= d - 2; ++i) {
    t.tail.push_back(mul(dp.embed_left(p.group.generators()[i]),
                         dp.embed_right(q.group.generators()[i])));
    gens.push_back(t.tail.back());
  }
  t.apex_p = dp.embed_left(p.group.generators()[d - 2]);
  t.apex_q = dp.embed_right(q.group.generators()[d - 2]);
  gens.push_back(t.apex_p);
  gens.push_back(t.apex_q);
  t.group = FiniteGroup(std::move(gens), limits);
  if (t.group.order() != t.expected_order())
    throw error("semiregular: order formula violated");
  return t;
}

bool doubling_automorphism_exists(const TailTriangleGroup& t) {
  std::vector<Permutation> a(t.tail), b(t.tail);
  a.push_back(t.apex_p);
  a.push_back(t.apex_q);
  b.push_back(t.apex_q);
  b.push_back(t.apex_p);
  return generator_matching_isomorphic(a, b, t.group.limits());
}

FiniteGroup full_automorphism_group(const TailTriangleGroup& t) {
  if (!doubling_automorphism_exists(t)) return t.group;
  std::size_t deg = t.group.degree(), half = deg / 2;
  std::vector<Point> img(deg);
  for (std::size_t i = 0; i < half; ++i) {
    img[i] = static_cast<Point>(i + half);
    img[i + half] = static_cast<Point>(i);
  }
  std::vector<Permutation> gens = t.group.generators();
  gens.emplace_back(std::move(img));
  FiniteGroup full(std::move(gens), t.group.limits());
  if (full.order() != 2 * t.group.order())
    throw error("semiregular: swap does not normalize the group");
  return full;
}

FacePoset build_semireg_poset(const TailTriangleGroup& t) {
  std::size_t d = t.rank();
  std::vector<std::vector<RankFamily>> ranks(d);
  for (std::size_t i = 0; i + 2 < d; ++i) {
    RankFamily fam;
    for (std::size_t j = 0; j + 2 < d; ++j)
      if (j != i) fam.subgroup_gens.push_back(t.tail[j]);
    fam.subgroup_gens.push_back(t.apex_p);
    fam.subgroup_gens.push_back(t.apex_q);
    ranks[i].push_back(std::move(fam));
  }
  ranks[d - 2].push_back(RankFamily{t.tail, ""});
  std::vector<Permutation> pfam(t.tail), qfam(t.tail);
  pfam.push_back(t.apex_p);
  qfam.push_back(t.apex_q);
  ranks[d - 1].push_back(RankFamily{std::move(pfam), "P"});
  ranks[d - 1].push_back(RankFamily{std::move(qfam), "Q"});

  FacePoset poset = build_coset_poset(t.group, ranks);

  // Vertex-transitivity of the generator action.
  std::vector<char> seen(poset.counts[0], 0);
  std::deque<FaceId> work{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!work.empty()) {
    FaceId v = work.front();
    work.pop_front();
    for (const auto& act : poset.gen_action) {
      FaceId w = act[0](v);
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        work.push_back(w);
      }
    }
  }
  if (visited != poset.counts[0])
    throw error("semiregular poset: vertex action is not transitive");

  // Facet families alternate around every (d-3)-face: each (d-2)-face lies
  // in exactly one facet from each family.
  for (FaceId g = 0; g < poset.counts[d - 2]; ++g) {
    const auto& ups = poset.up[d - 2][g];
    if (ups.size() != 2 ||
        poset.labels[d - 1][ups[0]] == poset.labels[d - 1][ups[1]])
      throw error("semiregular poset: facet families do not alternate");
  }
  return poset;
}

std::uint64_t semireg_f0_formula(const FacePoset& p, const FacePoset& q,
                                 const FacePoset& k) {
  std::uint64_t num = std::uint64_t(p.counts[0]) * q.counts[0];
  if (k.counts[0] == 0 || num % k.counts[0] != 0)
    throw error("semireg_f0_formula: prediction is not integral");
  return num / k.counts[0];
}

}  // namespace poly
