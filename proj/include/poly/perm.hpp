#ifndef POLY_PERM_HPP
#define POLY_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "poly/config.hpp"

namespace poly {

using Point = std::uint32_t;

/// A permutation of {0,...,degree-1}, stored as its image table.
///
/// Composition convention (global for the whole project): compose(p,q)
/// applies p first, i.e. compose(p,q)(x) == q(p(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }

 private:
  std::vector<Point> img_;
};

/// Apply p, then q.
Permutation compose(const Permutation& p, const Permutation& q);

/// Group product in word order: mul(a,b) is "a then b".
inline Permutation mul(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

Permutation conjugate(const Permutation& g, const Permutation& n);  // g^-1 n g
Permutation product_word(const std::vector<Permutation>& gens,
                         const std::vector<std::uint32_t>& word,
                         std::size_t degree);
std::uint64_t element_order(const Permutation& p);

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace poly

#endif
