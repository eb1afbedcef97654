#pragma once

#include <vector>

#include "braidvar/rational.hpp"

namespace braidvar {

// Dense arbitrary-precision integer matrix.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Int(0)) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transposed() const;
  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool is_diagonal() const;
  Int determinant() const;  // square only; Bareiss fraction-free elimination
  int rank() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void add_row_multiple(int dst, int src, const Int& k);  // row dst += k * row src
  void add_col_multiple(int dst, int src, const Int& k);
  void negate_row(int r);
  void negate_col(int c);

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Int> data_;
};

struct SmithResult {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix d;  // diagonal, u * m * v == d
  IntMatrix v;  // unimodular, cols x cols
  std::vector<Int> invariant_factors;  // nonzero d_i with d_i | d_{i+1}, then zeros trimmed
  int rank;                            // number of nonzero invariant factors
};

// U * M * V = D with U, V unimodular, D diagonal with d_1 | d_2 | ..., d_i >= 0.
SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace braidvar
