#include "poly/fpres.hpp"

#include "poly/mix.hpp"

#include <deque>
#include <numeric>

#include <json.hpp>

namespace poly {

namespace {

constexpr std::int64_t kEmpty = -1;

// Coset table for involutory generators: one column per generator, entries
// kept symmetric (x^a = y implies y^a = x). Dead cosets are tracked by
// union-find and resolved lazily on read.
class CosetTable {
 public:
  CosetTable(std::size_t ngens, std::uint64_t max_cosets)
      : ngens_(ngens), max_cosets_(max_cosets) {
    new_coset();
  }

  std::int64_t rep(std::int64_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::int64_t get(std::int64_t x, std::uint32_t a) {
    std::int64_t y = table_[x * ngens_ + a];
    if (y == kEmpty) return kEmpty;
    y = rep(y);
    table_[x * ngens_ + a] = y;
    return y;
  }

  void set(std::int64_t x, std::uint32_t a, std::int64_t y) {
    table_[x * ngens_ + a] = y;
    table_[y * ngens_ + a] = x;
    if (record_deductions) {
      deductions_.emplace_back(x, a);
      if (y != x) deductions_.emplace_back(y, a);
    }
  }

  std::int64_t new_coset() {
    if (overflowed_ || parent_.size() >= max_cosets_) {
      overflowed_ = true;
      return kEmpty;
    }
    std::int64_t c = static_cast<std::int64_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + ngens_, kEmpty);
    return c;
  }

  void coincide(std::int64_t a, std::int64_t b) {
    std::deque<std::pair<std::int64_t, std::int64_t>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      x = rep(x);
      y = rep(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      parent_[y] = x;
      for (std::uint32_t g = 0; g < ngens_; ++g) {
        std::int64_t z = table_[y * ngens_ + g];
        if (z == kEmpty) continue;
        z = rep(z);
        std::int64_t w = get(x, g);
        if (w == kEmpty)
          set(x, g, z);
        else if (w != z)
          queue.emplace_back(w, z);
      }
    }
  }

  bool overflowed() const { return overflowed_; }
  std::size_t allocated() const { return parent_.size(); }
  std::size_t ngens() const { return ngens_; }
  bool live(std::int64_t x) { return rep(x) == x; }

  bool record_deductions = false;
  std::vector<std::pair<std::int64_t, std::uint32_t>> deductions_;

 private:
  std::size_t ngens_;
  std::uint64_t max_cosets_;
  bool overflowed_ = false;
  std::vector<std::int64_t> parent_;
  std::vector<std::int64_t> table_;
};

// Scan the relator at the coset; fill gaps (HLT) or only deduce (Felsch,
// fill = false). Returns false on table overflow.
bool scan(CosetTable& t, std::int64_t c, const std::vector<std::uint32_t>& w,
          bool fill) {
  std::int64_t f = c, b = c;
  std::size_t i = 0, j = w.size();
  while (true) {
    while (i < j) {
      std::int64_t next = t.get(f, w[i]);
      if (next == kEmpty) break;
      f = next;
      ++i;
    }
    if (i == j) {
      if (f != b) t.coincide(f, b);
      return true;
    }
    while (j > i) {
      std::int64_t prev = t.get(b, w[j - 1]);
      if (prev == kEmpty) break;
      b = prev;
      --j;
    }
    if (j == i) {
      t.coincide(f, b);
      return true;
    }
    if (j == i + 1) {
      t.set(f, w[i], b);
      return true;
    }
    if (!fill) return true;
    std::int64_t d = t.new_coset();
    if (d == kEmpty) return false;
    t.set(f, w[i], d);
    f = d;
    ++i;
  }
}

void validate(const Presentation& p) {
  std::vector<char> has_inv(p.ngens, 0);
  for (const auto& w : p.relators) {
    for (std::uint32_t g : w)
      if (g >= p.ngens)
        throw precondition_error("presentation: relator index out of range");
    if (w.size() == 2 && w[0] == w[1]) has_inv[w[0]] = 1;
  }
  for (char c : has_inv)
    if (!c)
      throw precondition_error(
          "presentation: missing involution relator for a generator");
}

}  // namespace

std::string Presentation::to_json() const {
  nlohmann::json j;
  j["ngens"] = ngens;
  j["relators"] = relators;
  return j.dump();
}

Presentation Presentation::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Presentation p;
  p.ngens = j.at("ngens").get<std::size_t>();
  p.relators =
      j.at("relators").get<std::vector<std::vector<std::uint32_t>>>();
  validate(p);
  return p;
}

TcResult todd_coxeter(const Presentation& p,
                      const std::vector<std::vector<std::uint32_t>>& sub,
                      std::uint64_t max_cosets, TcStrategy strategy) {
  if (max_cosets < 1) throw precondition_error("todd_coxeter: max_cosets < 1");
  validate(p);
  CosetTable t(p.ngens, max_cosets);
  t.record_deductions = (strategy == TcStrategy::felsch);
  for (const auto& w : sub)
    if (!scan(t, 0, w, true)) return {false, 0, t.allocated()};

  if (strategy == TcStrategy::hlt) {
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(t.allocated());
         ++c) {
      if (!t.live(c)) continue;
      for (const auto& w : p.relators) {
        if (!scan(t, c, w, true)) return {false, 0, t.allocated()};
        if (!t.live(c)) break;
      }
    }
  } else {
    // Felsch: propagate deductions through all relator instances, defining a
    // new table entry only when the deduction stack drains.
    while (true) {
      while (!t.deductions_.empty()) {
        auto [c, g] = t.deductions_.back();
        t.deductions_.pop_back();
        c = t.rep(c);
        for (const auto& w : p.relators)
          for (std::size_t pos = 0; pos < w.size(); ++pos) {
            if (w[pos] != g) continue;
            std::vector<std::uint32_t> rot(w.begin() + pos, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + pos);
            scan(t, c, rot, false);
            c = t.rep(c);
          }
      }
      std::int64_t hole_c = kEmpty;
      std::uint32_t hole_g = 0;
      for (std::int64_t c = 0;
           c < static_cast<std::int64_t>(t.allocated()) && hole_c == kEmpty;
           ++c) {
        if (!t.live(c)) continue;
        for (std::uint32_t g = 0; g < p.ngens; ++g)
          if (t.get(c, g) == kEmpty) {
            hole_c = c;
            hole_g = g;
            break;
          }
      }
      if (hole_c == kEmpty) break;
      std::int64_t d = t.new_coset();
      if (d == kEmpty) return {false, 0, t.allocated()};
      t.set(hole_c, hole_g, d);
    }
  }

  std::uint64_t live = 0;
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(t.allocated()); ++c)
    if (t.live(c)) {
      ++live;
      for (std::uint32_t g = 0; g < p.ngens; ++g)
        if (t.get(c, g) == kEmpty)
          throw error("todd_coxeter: incomplete table after enumeration");
    }
  return {true, live, t.allocated()};
}

FiniteGroup group_from_presentation(const Presentation& p, Limits limits) {
  validate(p);
  CosetTable t(p.ngens, limits.max_cosets);
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(t.allocated()); ++c) {
    if (!t.live(c)) continue;
    for (const auto& w : p.relators) {
      if (!scan(t, c, w, true))
        throw cap_error("max_cosets", limits.max_cosets);
      if (!t.live(c)) break;
    }
  }
  std::vector<std::int64_t> live;
  std::vector<std::int64_t> number(t.allocated(), kEmpty);
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(t.allocated()); ++c)
    if (t.live(c)) {
      number[c] = static_cast<std::int64_t>(live.size());
      live.push_back(c);
    }
  if (live.size() > limits.max_degree)
    throw cap_error("max_degree", limits.max_degree);
  std::vector<Permutation> gens;
  for (std::uint32_t g = 0; g < p.ngens; ++g) {
    std::vector<Point> img(live.size());
    for (std::size_t i = 0; i < live.size(); ++i)
      img[i] = static_cast<Point>(number[t.get(live[i], g)]);
    gens.emplace_back(std::move(img));
  }
  return FiniteGroup(std::move(gens), limits);
}

namespace {

std::vector<std::uint32_t> power_word(const std::vector<std::uint32_t>& w,
                                      std::int64_t k) {
  std::vector<std::uint32_t> out;
  for (std::int64_t i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

void string_relators(Presentation& p, const std::vector<int>& periods) {
  std::size_t d = p.ngens;
  for (std::uint32_t i = 0; i < d; ++i) p.relators.push_back({i, i});
  for (std::uint32_t i = 0; i + 1 < d; ++i)
    p.relators.push_back(power_word({i, i + 1}, periods[i]));
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = i + 2; j < d; ++j)
      p.relators.push_back({i, j, i, j});
}

// T1^s T2^t on the generator window (a, a+1, a+2).
std::vector<std::uint32_t> torus_relator(std::uint32_t a, std::int64_t s,
                                         std::int64_t t) {
  std::vector<std::uint32_t> t1{a, a + 1, a + 2, a + 1};
  std::vector<std::uint32_t> t2{a + 1, a, a + 1, a + 2};
  std::vector<std::uint32_t> w = power_word(t1, s);
  auto tail = power_word(t2, t);
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

}  // namespace

Presentation presentation_44(const TorusParams& params) {
  params.validate();
  Presentation p;
  p.ngens = 3;
  string_relators(p, {4, 4});
  p.relators.push_back(torus_relator(0, params.s, params.t));
  return p;
}

Presentation flat_presentation(const std::vector<int>& ns,
                               bool with_commutators) {
  if (ns.empty()) throw precondition_error("flat_presentation: empty type");
  for (int n : ns)
    if (n < 5)
      throw precondition_error("flat_presentation: parameters must be >= 5");
  std::size_t d = ns.size() + 2;
  Presentation p;
  p.ngens = d;
  string_relators(p, std::vector<int>(d - 1, 4));
  for (std::size_t j = 0; j < ns.size(); ++j) {
    TorusParams tp = params_for_exponent(ns[j]);
    p.relators.push_back(
        torus_relator(static_cast<std::uint32_t>(j), tp.s, tp.t));
  }
  if (with_commutators) {
    for (std::uint32_t i = 0; i + 3 < d; ++i) {
      std::vector<std::uint32_t> a{i, i + 1, i, i + 1};
      std::vector<std::uint32_t> b{i + 2, i + 3, i + 2, i + 3};
      std::vector<std::uint32_t> w(a);
      w.insert(w.end(), b.begin(), b.end());
      w.insert(w.end(), a.begin(), a.end());
      w.insert(w.end(), b.begin(), b.end());
      p.relators.push_back(std::move(w));
    }
  }
  return p;
}

Presentation universal_44_presentation(const TorusParams& a,
                                       const TorusParams& b) {
  a.validate();
  b.validate();
  Presentation p;
  p.ngens = 4;
  string_relators(p, {4, 4, 4});
  p.relators.push_back(torus_relator(0, a.s, a.t));
  p.relators.push_back(torus_relator(1, b.s, b.t));
  return p;
}

bool verify_presentation_theorem(const std::vector<int>& ns) {
  FlatTower tower = build_flat_tower(ns);
  Presentation p = flat_presentation(ns, true);
  const auto& gens = tower.group.generators();
  for (const auto& w : p.relators)
    if (!product_word(gens, w, tower.group.degree()).is_identity())
      return false;
  TcResult r = todd_coxeter(p);
  if (!r.complete) throw cap_error("max_cosets", default_limits().max_cosets);
  return r.index == tower.group.order();
}

}  // namespace poly
