#ifndef EQFIX_PERMUTATION_HPP
#define EQFIX_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace eqfix {

// A permutation of {0, ..., n-1} in one-line notation: point i maps to
// images()[i]. Validated on construction.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  std::string str() const;

 private:
  std::vector<int> images_;
};

// (p * q)(x) = p(q(x)): apply q first.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

}  // namespace eqfix

#endif
