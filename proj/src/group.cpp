#include "poly/group.hpp"

#include <cstdlib>
#include <deque>
#include <unordered_set>

namespace poly {

const Limits& default_limits() {
  static Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("POLYFORGE_MAX_ELEMENTS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) l.max_elements = v;
    }
    return l;
  }();
  return limits;
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

void StabilizerChain::recompute_orbit(std::size_t i) {
  Level& lv = levels_[i];
  lv.where.assign(degree_, -1);
  lv.transversal.clear();
  lv.orbit.clear();
  lv.orbit.push_back(lv.base);
  lv.transversal.push_back(Permutation::identity(degree_));
  lv.where[lv.base] = 0;
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    for (const Permutation& s : lv.gens) {
      Point q = s(lv.orbit[k]);
      if (lv.where[q] < 0) {
        lv.where[q] = static_cast<std::int32_t>(lv.transversal.size());
        lv.transversal.push_back(mul(lv.transversal[k], s));
        lv.orbit.push_back(q);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(
    Permutation g) const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    Point beta = g(lv.base);
    if (beta == lv.base) continue;
    if (lv.where[beta] < 0) return {std::move(g), i};
    g = mul(g, lv.transversal[lv.where[beta]].inverse());
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::add_strong(std::size_t lo, std::size_t hi,
                                 const Permutation& g) {
  if (hi == levels_.size()) {
    Level lv;
    Point moved = 0;
    for (Point x = 0; x < degree_; ++x)
      if (g(x) != x) {
        moved = x;
        break;
      }
    lv.base = moved;
    levels_.push_back(std::move(lv));
  }
  for (std::size_t j = lo; j <= hi; ++j) levels_[j].gens.push_back(g);
}

void StabilizerChain::complete_level(std::size_t i) {
  recompute_orbit(i);
  // Every Schreier generator of level i must sift through deeper levels.
  // Additions happen only at deeper levels, so level i's orbit and generator
  // list stay fixed during the scan; deeper additions may reallocate levels_,
  // so re-index on every access.
  for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
    for (std::size_t si = 0; si < levels_[i].gens.size(); ++si) {
      Permutation s = levels_[i].gens[si];
      Point q = s(levels_[i].orbit[k]);
      Permutation sg =
          mul(mul(levels_[i].transversal[k], s),
              levels_[i].transversal[levels_[i].where[q]].inverse());
      if (sg.is_identity()) continue;
      // Strip through levels i+1..end.
      Permutation r = std::move(sg);
      std::size_t lvl = i + 1;
      for (; lvl < levels_.size(); ++lvl) {
        const Level& dl = levels_[lvl];
        Point beta = r(dl.base);
        if (beta == dl.base) continue;
        if (dl.where[beta] < 0) break;
        r = mul(r, dl.transversal[dl.where[beta]].inverse());
      }
      if (r.is_identity()) continue;
      add_strong(i + 1, lvl, r);
      for (std::size_t j = lvl + 1; j-- > i + 1;) complete_level(j);
    }
  }
}

void StabilizerChain::extend(const Permutation& g) {
  if (g.degree() != degree_)
    throw precondition_error("stabilizer chain: degree mismatch");
  auto [residue, level] = strip(g);
  if (residue.is_identity()) return;
  add_strong(0, level, residue);
  for (std::size_t j = level + 1; j-- > 0;) complete_level(j);
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (const Level& lv : levels_) n *= lv.orbit.size();
  return n;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_)
    throw precondition_error("membership test: degree mismatch");
  auto [residue, level] = strip(g);
  (void)level;
  return residue.is_identity();
}

// ---------------------------------------------------------------------------
// FiniteGroup

struct FiniteGroup::Impl {
  std::vector<Permutation> gens;
  std::size_t degree;
  Limits limits;
  std::optional<StabilizerChain> chain;
  std::optional<std::uint64_t> order;
  std::shared_ptr<const std::vector<Permutation>> elements;
};

FiniteGroup::FiniteGroup(std::vector<Permutation> gens, Limits limits)
    : impl_(std::make_shared<Impl>()) {
  if (gens.empty()) throw precondition_error("group needs at least one generator");
  impl_->degree = gens.front().degree();
  if (impl_->degree > limits.max_degree)
    throw cap_error("max_degree", limits.max_degree);
  for (const Permutation& g : gens)
    if (g.degree() != impl_->degree)
      throw precondition_error("group generators have mixed degrees");
  impl_->gens = std::move(gens);
  impl_->limits = limits;
}

FiniteGroup FiniteGroup::trivial(std::size_t degree, Limits limits) {
  return FiniteGroup({Permutation::identity(degree)}, limits);
}

std::size_t FiniteGroup::degree() const { return impl_->degree; }
const std::vector<Permutation>& FiniteGroup::generators() const {
  return impl_->gens;
}
const Limits& FiniteGroup::limits() const { return impl_->limits; }

const StabilizerChain& FiniteGroup::chain() const {
  if (!impl_->chain) {
    StabilizerChain c(impl_->degree);
    for (const Permutation& g : impl_->gens) c.extend(g);
    impl_->chain = std::move(c);
  }
  return *impl_->chain;
}

std::uint64_t FiniteGroup::order() const {
  if (!impl_->order) impl_->order = chain().order();
  return *impl_->order;
}

bool FiniteGroup::contains(const Permutation& p) const {
  if (p.degree() != impl_->degree)
    throw precondition_error("contains: degree mismatch");
  return chain().contains(p);
}

namespace {

std::vector<Permutation> closure(const std::vector<Permutation>& gens,
                                 std::size_t degree, std::uint64_t cap) {
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> out;
  std::deque<std::size_t> work;
  auto push = [&](Permutation p) {
    if (seen.insert(p).second) {
      out.push_back(std::move(p));
      work.push_back(out.size() - 1);
      if (out.size() > cap) throw cap_error("max_elements", cap);
    }
  };
  push(Permutation::identity(degree));
  while (!work.empty()) {
    std::size_t k = work.front();
    work.pop_front();
    for (const Permutation& g : gens) push(mul(out[k], g));
  }
  return out;
}

}  // namespace

const std::vector<Permutation>& FiniteGroup::elements() const {
  if (!impl_->elements) {
    impl_->elements = std::make_shared<const std::vector<Permutation>>(
        closure(impl_->gens, impl_->degree, impl_->limits.max_elements));
  }
  return *impl_->elements;
}

std::uint64_t FiniteGroup::order_by_closure() const {
  return closure(impl_->gens, impl_->degree, impl_->limits.max_elements).size();
}

// ---------------------------------------------------------------------------
// Kernel operations

FiniteGroup normal_closure(const FiniteGroup& g,
                           const std::vector<Permutation>& s) {
  std::size_t degree = g.degree();
  for (const Permutation& x : s)
    if (!g.contains(x))
      throw precondition_error("normal_closure: element not in group");
  StabilizerChain chain(degree);
  std::vector<Permutation> ngens;
  std::deque<Permutation> work;
  auto add = [&](const Permutation& p) {
    if (!p.is_identity() && !chain.contains(p)) {
      chain.extend(p);
      ngens.push_back(p);
      work.push_back(p);
    }
  };
  for (const Permutation& x : s) add(x);
  while (!work.empty()) {
    Permutation n = std::move(work.front());
    work.pop_front();
    for (const Permutation& gen : g.generators()) {
      add(conjugate(gen, n));
      add(conjugate(gen.inverse(), n));
    }
  }
  if (ngens.empty()) return FiniteGroup::trivial(degree, g.limits());
  return FiniteGroup(std::move(ngens), g.limits());
}

FiniteGroup intersection(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.degree() != b.degree())
    throw precondition_error("intersection: degree mismatch");
  const FiniteGroup& small = a.order() <= b.order() ? a : b;
  const FiniteGroup& large = a.order() <= b.order() ? b : a;
  StabilizerChain chain(a.degree());
  std::vector<Permutation> gens;
  for (const Permutation& e : small.elements()) {
    if (e.is_identity() || chain.contains(e)) continue;
    if (large.contains(e)) {
      chain.extend(e);
      gens.push_back(e);
    }
  }
  if (gens.empty()) return FiniteGroup::trivial(a.degree(), a.limits());
  return FiniteGroup(std::move(gens), a.limits());
}

bool generator_matching_isomorphic(const std::vector<Permutation>& a,
                                   const std::vector<Permutation>& b,
                                   Limits limits) {
  if (a.size() != b.size())
    throw precondition_error("generator matching: tuple length mismatch");
  if (a.empty()) return true;
  FiniteGroup ga(a, limits), gb(b, limits);
  std::size_t da = ga.degree(), db = gb.degree();
  std::vector<Permutation> diag;
  diag.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    diag.push_back(mul(pad_left(a[i], db), pad_right(da, b[i])));
  FiniteGroup graph(std::move(diag), limits);
  std::uint64_t n = graph.order();
  return n == ga.order() && n == gb.order();
}

Permutation pad_left(const Permutation& p, std::size_t right_degree) {
  std::vector<Point> img(p.images());
  img.reserve(img.size() + right_degree);
  for (std::size_t i = 0; i < right_degree; ++i)
    img.push_back(static_cast<Point>(p.degree() + i));
  return Permutation(std::move(img));
}

Permutation pad_right(std::size_t left_degree, const Permutation& p) {
  std::vector<Point> img;
  img.reserve(left_degree + p.degree());
  for (std::size_t i = 0; i < left_degree; ++i)
    img.push_back(static_cast<Point>(i));
  for (Point x : p.images()) img.push_back(static_cast<Point>(left_degree + x));
  return Permutation(std::move(img));
}

Permutation DirectProduct::embed_left(const Permutation& p) const {
  return pad_left(p, right_degree);
}
Permutation DirectProduct::embed_right(const Permutation& p) const {
  return pad_right(left_degree, p);
}

DirectProduct direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators())
    gens.push_back(pad_left(g, b.degree()));
  for (const Permutation& g : b.generators())
    gens.push_back(pad_right(a.degree(), g));
  return DirectProduct{FiniteGroup(std::move(gens), a.limits()), a.degree(),
                       b.degree()};
}

}  // namespace poly
