#include "braidvar/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace braidvar {

Permutation::Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

Permutation Permutation::longest(int n) {
  Permutation w(n);
  for (int i = 1; i <= n; ++i) w.img_[i - 1] = n + 1 - i;
  return w;
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw InternalError("transposition index out of range");
  Permutation w(n);
  std::swap(w.img_[i - 1], w.img_[i]);
  return w;
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v]) throw ParseError("not a permutation");
    seen[v] = true;
  }
  Permutation w;
  w.img_ = images;
  return w;
}

Permutation Permutation::then(const Permutation& v) const {
  if (size() != v.size()) throw InternalError("permutation size mismatch");
  Permutation r;
  r.img_.resize(size());
  for (int i = 0; i < size(); ++i) r.img_[i] = v.img_[img_[i] - 1];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(size());
  for (int i = 0; i < size(); ++i) r.img_[img_[i] - 1] = i + 1;
  return r;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::then_transposition(int i) const {
  if (i < 1 || i >= size()) throw InternalError("transposition index out of range");
  Permutation r = *this;
  for (int& v : r.img_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return r;
}

bool Permutation::then_transposition_increases_length(int i) const {
  int pos_i = -1, pos_i1 = -1;
  for (int k = 0; k < size(); ++k) {
    if (img_[k] == i) pos_i = k;
    if (img_[k] == i + 1) pos_i1 = k;
  }
  return pos_i < pos_i1;
}

std::vector<std::vector<int>> Permutation::orbits() const {
  std::vector<bool> seen(size() + 1, false);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> orb;
    int x = s;
    while (!seen[x]) {
      seen[x] = true;
      orb.push_back(x);
      x = apply(x);
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  for (const auto& orb : orbits()) type.push_back(static_cast<int>(orb.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string Permutation::str() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += " ";
    s += std::to_string(img_[i]);
  }
  return s;
}

}  // namespace braidvar
