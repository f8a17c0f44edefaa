#include "poly/fap.hpp"

namespace poly {

namespace {

std::uint64_t range_mask(std::size_t lo, std::size_t hi) {  // [lo,hi], empty if lo>hi
  std::uint64_t m = 0;
  for (std::size_t i = lo; i <= hi && hi != std::size_t(-1); ++i)
    m |= std::uint64_t(1) << i;
  return m;
}

}  // namespace

FiniteGroup n_plus(const StringCGroup& g, std::size_t k) {
  if (k >= g.rank()) throw precondition_error("n_plus: k out of range");
  std::vector<Permutation> s(g.generators().begin() + std::ptrdiff_t(k),
                             g.generators().end());
  return normal_closure(g.group(), s);
}

FiniteGroup n_minus(const StringCGroup& g, std::size_t k) {
  if (k >= g.rank()) throw precondition_error("n_minus: k out of range");
  std::vector<Permutation> s(g.generators().begin(),
                             g.generators().begin() + std::ptrdiff_t(k) + 1);
  return normal_closure(g.group(), s);
}

bool has_fap_faces(const StringCGroup& g, std::size_t k) {
  if (k >= g.rank()) throw precondition_error("has_fap_faces: k out of range");
  if (k == 0) return true;  // empty complement
  FiniteGroup n = n_plus(g, k);
  const FiniteGroup& par = g.parabolic_group(range_mask(0, k - 1));
  if (intersection(n, par).order() != 1) return false;
  if (n.order() * par.order() != g.order())
    throw error("FAP factorization order identity violated");
  return true;
}

bool has_fap_cofaces(const StringCGroup& g, std::size_t k) {
  if (k >= g.rank())
    throw precondition_error("has_fap_cofaces: k out of range");
  if (k + 1 == g.rank()) return true;
  FiniteGroup n = n_minus(g, k);
  const FiniteGroup& par = g.parabolic_group(range_mask(k + 1, g.rank() - 1));
  if (intersection(n, par).order() != 1) return false;
  if (n.order() * par.order() != g.order())
    throw error("FAP factorization order identity violated");
  return true;
}

TriState check_fap_hereditary(const StringCGroup& g, std::size_t k,
                              std::size_t l) {
  std::size_t d = g.rank();
  if (d < 4 || k > d - 3 || l > d - k - 4) return TriState::not_applicable;
  if (!has_fap_cofaces(g, k)) return TriState::not_applicable;
  StringCGroup coface = g.parabolic_range(k + 1, d - 1);
  if (!has_fap_cofaces(coface, l)) return TriState::not_applicable;
  return has_fap_cofaces(g, k + l + 1) ? TriState::yes : TriState::no;
}

}  // namespace poly
