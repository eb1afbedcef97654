#include "braidvar/rat_matrix.hpp"

#include <algorithm>

namespace braidvar {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw InternalError("RatMatrix dimension mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

bool RatMatrix::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < std::min(i, cols_); ++j)
      if (at(i, j) != 0) return false;
  return true;
}

Rat RatMatrix::leading_principal_minor(int k) const {
  if (k > rows_ || k > cols_) throw InternalError("minor size too large");
  RatMatrix a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a.at(i, j) = at(i, j);
  return a.determinant();
}

Rat RatMatrix::determinant() const {
  if (rows_ != cols_) throw InternalError("determinant of non-square matrix");
  RatMatrix a = *this;
  int n = rows_;
  Rat det(1);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      det = -det;
    }
    det *= a.at(k, k);
    Rat inv = Rat(1) / a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) * inv;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw InternalError("inverse of non-square matrix");
  int n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw DivisionByZero("inverse of singular matrix");
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rat pivinv = Rat(1) / a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) *= pivinv;
      inv.at(k, j) *= pivinv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat f = a.at(i, k);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

int RatMatrix::rank() const {
  RatMatrix a = *this;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) std::swap(a.at(r, j), a.at(p, j));
    Rat inv = Rat(1) / a.at(r, c);
    for (int i = r + 1; i < rows_; ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) * inv;
      for (int j = c; j < cols_; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<Rat> RatMatrix::solve(const std::vector<Rat>& b) const {
  if (rows_ != cols_ || static_cast<int>(b.size()) != rows_)
    throw InternalError("solve: dimension mismatch");
  RatMatrix a = *this;
  std::vector<Rat> x = b;
  int n = rows_;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw DivisionByZero("solve: singular matrix");
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      std::swap(x[k], x[p]);
    }
    Rat pivinv = Rat(1) / a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) * pivinv;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      x[i] -= f * x[k];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    Rat s = x[i];
    for (int j = i + 1; j < n; ++j) s -= a.at(i, j) * x[j];
    x[i] = s / a.at(i, i);
  }
  return x;
}

std::vector<Rat> RatMatrix::col(int j) const {
  std::vector<Rat> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void RatMatrix::set_col(int j, const std::vector<Rat>& v) {
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::string RatMatrix::str() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += to_string(at(i, j));
    }
    s += "]\n";
  }
  return s;
}

int joint_column_rank(const RatMatrix& a, int acols, const RatMatrix& b, int bcols) {
  if (a.rows() != b.rows()) throw InternalError("joint_column_rank: row mismatch");
  RatMatrix m(a.rows(), acols + bcols);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < acols; ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < bcols; ++j) m.at(i, acols + j) = b.at(i, j);
  }
  return m.rank();
}

}  // namespace braidvar
