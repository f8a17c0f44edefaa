#include "poly/mix.hpp"

#include <numeric>

#include "poly/fap.hpp"
#include "poly/toroidal.hpp"

namespace poly {

StringCGroup k_mix(const StringCGroup& p1, const StringCGroup& p2,
                   std::size_t k) {
  std::size_t c = p1.rank(), d = p2.rank();
  if (!(k + 2 <= c)) throw mix_error("k_mix: need k <= c-2");
  if (c > d + k) throw mix_error("k_mix: need k >= c-d");

  // Shared window: co-k-face of P1 vs (c-k-1)-face of P2.
  std::vector<Permutation> win1(p1.generators().begin() + std::ptrdiff_t(k) + 1,
                                p1.generators().end());
  std::vector<Permutation> win2(p2.generators().begin(),
                                p2.generators().begin() +
                                    std::ptrdiff_t(c - k - 1));
  if (!generator_matching_isomorphic(win1, win2, p1.group().limits()))
    throw mix_error("k_mix: shared sections are not isomorphic as marked groups");
  if (!has_fap_cofaces(p1, k))
    throw mix_error("k_mix: P1 lacks FAP w.r.t. its co-k-faces");
  if (!has_fap_faces(p2, c - k - 1))
    throw mix_error("k_mix: P2 lacks FAP w.r.t. its (c-k-1)-faces");

  auto dp = direct_product(p1.group(), p2.group());
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i <= k + d; ++i) {
    if (i <= k) {
      gens.push_back(dp.embed_left(p1.generators()[i]));
    } else if (i <= c - 1) {
      gens.push_back(mul(dp.embed_left(p1.generators()[i]),
                         dp.embed_right(p2.generators()[i - k - 1])));
    } else {
      gens.push_back(dp.embed_right(p2.generators()[i - k - 1]));
    }
  }
  StringCGroup result(std::move(gens), p1.group().limits());
  if (!result.check_string_relations().ok())
    throw mix_error("k_mix: result violates string relations");
  std::uint64_t want = n_minus(p1, k).order() * p2.order();
  if (result.order() != want)
    throw mix_error("k_mix: order differs from |N_k^-(P1)| * |P2|");
  return result;
}

std::uint64_t FlatTower::expected_order() const {
  long long e = std::accumulate(ns.begin(), ns.end(), 0LL) -
                3 * (static_cast<long long>(rank()) - 3);
  return std::uint64_t(1) << e;
}

FlatTower build_flat_tower(const std::vector<int>& ns, Limits limits) {
  if (ns.empty()) throw precondition_error("tower needs at least n_3");
  long long sum = 0;
  for (int n : ns) {
    if (n < 5) throw precondition_error("tower parameters must be >= 5");
    sum += n;
  }
  long long exp = sum - 3 * (static_cast<long long>(ns.size()) - 1);
  if (exp >= 63 || (std::uint64_t(1) << exp) > limits.max_elements)
    throw cap_error("max_elements", limits.max_elements);

  StringCGroup t = torus_group_for_exponent(ns[0], limits);
  for (std::size_t j = 1; j < ns.size(); ++j) {
    StringCGroup torus = torus_group_for_exponent(ns[j], limits);
    t = k_mix(t, torus, t.rank() - 3);
  }
  FlatTower tower{ns, std::move(t)};
  if (tower.group.order() != tower.expected_order())
    throw error("flat tower order formula violated");
  return tower;
}

std::vector<std::uint64_t> iterated_factors(const FlatTower& t) {
  const StringCGroup& g = t.group;
  std::size_t d = t.rank();
  std::vector<std::uint64_t> factors;
  for (std::size_t j = 0; j + 3 <= d; ++j) {
    StringCGroup window = g.parabolic_range(j, j + 2);
    factors.push_back(
        normal_closure(window.group(), {window.generators()[0]}).order());
  }
  factors.push_back(8);
  return factors;
}

}  // namespace poly
