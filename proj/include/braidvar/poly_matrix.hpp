#pragma once

#include "braidvar/laurent.hpp"

namespace braidvar {

// Square matrix over LaurentPoly with a shared variable context.
class PolyMatrix {
 public:
  PolyMatrix() : n_(0) {}
  PolyMatrix(Ctx ctx, int n);
  static PolyMatrix identity(Ctx ctx, int n);

  int dim() const { return n_; }
  const Ctx& ctx() const { return ctx_; }
  LaurentPoly& at(int r, int c) { return data_[size_t(r) * n_ + c]; }
  const LaurentPoly& at(int r, int c) const { return data_[size_t(r) * n_ + c]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const;
  bool is_upper_triangular() const;
  bool is_diagonal() const;

  // Row permutation: result row r = this row perm1(r), where perm1 is a
  // 1-indexed image vector.
  PolyMatrix row_permuted(const std::vector<int>& perm1) const;

  std::string str() const;

 private:
  Ctx ctx_;
  int n_;
  std::vector<LaurentPoly> data_;
};

}  // namespace braidvar
