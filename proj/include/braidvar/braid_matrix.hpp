#pragma once

#include "braidvar/braid_word.hpp"
#include "braidvar/int_matrix.hpp"
#include "braidvar/poly_matrix.hpp"
#include "braidvar/rat_matrix.hpp"

namespace braidvar {

// Exact rational point of the coordinate space of a braid word.
struct RatPoint {
  std::vector<Rat> coords;

  RatPoint() = default;
  explicit RatPoint(std::vector<Rat> c) : coords(std::move(c)) {}
  int size() const { return static_cast<int>(coords.size()); }
  const Rat& at(int pos) const { return coords[pos - 1]; }  // 1-indexed
  Rat& at(int pos) { return coords[pos - 1]; }
  bool operator==(const RatPoint& o) const { return coords == o.coords; }
  std::string str() const { return rat_list_to_string(coords); }
};

RatPoint parse_point(const std::string& text);

// --- braid blocks and matrices ----------------------------------------------

// Identity except the 2x2 block [[z, -1], [1, 0]] at rows/cols i, i+1.
RatMatrix braid_block(int i, const Rat& z, int n);
PolyMatrix braid_block(int i, const LaurentPoly& z, const Ctx& ctx, int n);

// Upper-triangular factor of the trivalent decomposition: identity except
// [[w, -1], [0, w^-1]] at rows/cols i, i+1.
RatMatrix upper_block(int i, const Rat& w, int n);
PolyMatrix upper_block(int i, const LaurentPoly& w, const Ctx& ctx, int n);

// Inverse of a braid block: identity except [[0, 1], [-1, z]].
RatMatrix braid_block_inverse(int i, const Rat& z, int n);
PolyMatrix braid_block_inverse(int i, const LaurentPoly& z, const Ctx& ctx, int n);

RatMatrix braid_matrix(const BraidWord& b, const RatPoint& p);
// Symbolic braid matrix over a fresh context z1..zl.
PolyMatrix braid_matrix_symbolic(const BraidWord& b, bool invertible_vars = false);
PolyMatrix braid_matrix_symbolic(const BraidWord& b, const Ctx& ctx,
                                 const std::vector<LaurentPoly>& args);

// Rows permuted by w: row r of the result is row w(r) of m. This realizes
// left multiplication by the matrix of w^{-1}.
RatMatrix row_permuted(const RatMatrix& m, const Permutation& w);

// --- membership --------------------------------------------------------------

bool in_braid_variety(const BraidWord& b, const RatPoint& p);
bool in_double_bs(const BraidWord& b, const RatPoint& p);

// --- torus action -------------------------------------------------------------

// Integer vector of length n with zero sum.
struct Weight {
  std::vector<int> entries;
  bool operator==(const Weight& o) const { return entries == o.entries; }
  Weight negated() const;
  std::string str() const;
};

// Weight of each coordinate, computed by the permutation formula and checked
// against the strand-tracing reading of the braid diagram.
std::vector<Weight> coordinate_weights(const BraidWord& b);

RatPoint torus_act(const std::vector<Rat>& t, const BraidWord& b, const RatPoint& p);

struct SubtorusWitness {
  StrandPartition partition;
  // Rank of the lattice spanned by the weights of nonzero coordinates:
  // n - block_count. Zero iff the partition is all singletons.
  int rank = 0;
  // Dimension of the stabilizer subtorus of T = (C*)^n / C*: block_count - 1.
  int stabilizer_dim = 0;
};

SubtorusWitness point_stabilizer(const BraidWord& b, const RatPoint& p);

// True iff the weights of the nonzero coordinates span the full weight
// lattice. Computed by an integer lattice (Smith form) computation and
// cross-checked against the union-find partition.
bool is_free_point(const BraidWord& b, const RatPoint& p);

}  // namespace braidvar
