#include "poly/perm.hpp"

#include <algorithm>

namespace poly {

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point x : img_) {
    if (x >= img_.size() || seen[x])
      throw precondition_error("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Point> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    img[img_[i]] = static_cast<Point>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  if (is_identity()) return false;
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[img_[i]] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw precondition_error("compose: degree mismatch");
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = q(p(static_cast<Point>(i)));
  return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& g, const Permutation& n) {
  return mul(mul(g.inverse(), n), g);
}

Permutation product_word(const std::vector<Permutation>& gens,
                         const std::vector<std::uint32_t>& word,
                         std::size_t degree) {
  Permutation r = Permutation::identity(degree);
  for (std::uint32_t i : word) r = mul(r, gens.at(i));
  return r;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t n = 1;
  Permutation q = p;
  while (!q.is_identity()) {
    q = mul(q, p);
    ++n;
  }
  return n;
}

}  // namespace poly
