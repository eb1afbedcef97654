#include "braidvar/poly_matrix.hpp"

namespace braidvar {

PolyMatrix::PolyMatrix(Ctx ctx, int n) : ctx_(std::move(ctx)), n_(n) {
  data_.assign(size_t(n) * n, LaurentPoly(ctx_));
}

PolyMatrix PolyMatrix::identity(Ctx ctx, int n) {
  PolyMatrix m(ctx, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(ctx, Rat(1));
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (n_ != o.n_) throw InternalError("PolyMatrix dimension mismatch");
  PolyMatrix r(ctx_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    }
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  if (n_ != o.n_) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!(at(i, j) == o.at(i, j))) return false;
  return true;
}

bool PolyMatrix::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool PolyMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::row_permuted(const std::vector<int>& perm1) const {
  if (static_cast<int>(perm1.size()) != n_) throw InternalError("row_permuted size");
  PolyMatrix r(ctx_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(perm1[i] - 1, j);
  return r;
}

std::string PolyMatrix::str() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    s += "[";
    for (int j = 0; j < n_; ++j) {
      if (j) s += ", ";
      s += at(i, j).str();
    }
    s += "]\n";
  }
  return s;
}

}  // namespace braidvar
