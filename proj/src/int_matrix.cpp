#include "braidvar/int_matrix.hpp"

#include <algorithm>

namespace braidvar {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InternalError("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InternalError("IntMatrix dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw InternalError("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

int IntMatrix::rank() const { return smith_normal_form(*this).rank; }

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& k) {
  for (int j = 0; j < cols_; ++j) at(dst, j) += k * at(src, j);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& k) {
  for (int i = 0; i < rows_; ++i) at(i, dst) += k * at(i, src);
}

void IntMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntMatrix::negate_col(int c) {
  for (int i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

std::string IntMatrix::str() const {
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

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res;
  res.d = m;
  res.u = IntMatrix::identity(m.rows());
  res.v = IntMatrix::identity(m.cols());
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  int n = std::min(m.rows(), m.cols());

  auto abs_int = [](const Int& x) { return x < 0 ? Int(-x) : x; };

  for (int t = 0; t < n; ++t) {
    // find a nonzero pivot of minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    Int best(0);
    for (int i = t; i < d.rows(); ++i)
      for (int j = t; j < d.cols(); ++j)
        if (d.at(i, j) != 0) {
          Int a = abs_int(d.at(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;  // trailing block zero
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // clear column t
      for (int i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d.at(i, t) != 0) {
          // remainder smaller than pivot: swap up and restart
          d.swap_rows(t, i);
          u.swap_rows(t, i);
          dirty = true;
        }
      }
      // clear row t
      for (int j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d.at(t, j) != 0) {
          d.swap_cols(t, j);
          v.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // enforce divisibility of the trailing block by the pivot
      for (int i = t + 1; i < d.rows() && !dirty; ++i)
        for (int j = t + 1; j < d.cols() && !dirty; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row_multiple(t, i, Int(1));
            u.add_row_multiple(t, i, Int(1));
            dirty = true;
          }
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  res.rank = 0;
  for (int t = 0; t < n; ++t)
    if (d.at(t, t) != 0) {
      res.invariant_factors.push_back(d.at(t, t));
      ++res.rank;
    }
  return res;
}

}  // namespace braidvar
