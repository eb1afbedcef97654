#pragma once

#include <vector>

#include "braidvar/rational.hpp"

namespace braidvar {

// Dense exact rational matrix; the numeric workhorse for braid matrices,
// flags, and membership tests.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Rat(0)) {}
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool is_upper_triangular() const;

  Rat determinant() const;
  Rat leading_principal_minor(int k) const;  // det of top-left k x k block
  RatMatrix inverse() const;                 // throws DivisionByZero if singular
  int rank() const;

  // Solve A x = b for invertible square A.
  std::vector<Rat> solve(const std::vector<Rat>& b) const;

  std::vector<Rat> col(int j) const;
  void set_col(int j, const std::vector<Rat>& v);

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

// Rank of the column span of the juxtaposition [A | B].
int joint_column_rank(const RatMatrix& a, int acols, const RatMatrix& b, int bcols);

}  // namespace braidvar
