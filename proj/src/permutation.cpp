#include "eqfix/permutation.hpp"

#include "eqfix/errors.hpp"

namespace eqfix {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  int n = static_cast<int>(images_.size());
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n) throw InputError("permutation image out of range");
    if (seen[v]) throw InputError("permutation repeats an image");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

std::string Permutation::str() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ",";
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatchError("composing permutations of different degree");
  std::vector<int> im(p.degree());
  for (int i = 0; i < p.degree(); ++i) im[i] = p(q(i));
  return Permutation(std::move(im));
}

}  // namespace eqfix
