#pragma once

#include <string>
#include <vector>

#include "braidvar/errors.hpp"

namespace braidvar {

// Permutation of {1..n} in one-line notation. Products are taken in
// application order: u.then(v) maps x to v(u(x)), matching the left-to-right
// reading of braid words.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  static Permutation identity(int n) { return Permutation(n); }
  static Permutation longest(int n);  // w0: i -> n+1-i
  static Permutation transposition(int n, int i);  // s_i = (i, i+1)
  static Permutation from_one_line(const std::vector<int>& images);

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i - 1]; }  // 1-indexed
  const std::vector<int>& one_line() const { return img_; }

  Permutation then(const Permutation& v) const;  // x -> v(this(x))
  Permutation inverse() const;
  int length() const;  // inversion count
  bool is_identity() const;
  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  // Post-compose with s_i: result(x) = s_i(this(x)). Increases length iff the
  // value i appears to the left of i+1 in one-line notation.
  Permutation then_transposition(int i) const;
  bool then_transposition_increases_length(int i) const;

  std::vector<std::vector<int>> orbits() const;  // sorted blocks, 1-indexed
  std::vector<int> cycle_type() const;           // sorted descending

  std::string str() const;  // "3 2 1"

 private:
  std::vector<int> img_;  // img_[i-1] = image of i
};

}  // namespace braidvar
