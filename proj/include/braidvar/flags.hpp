#pragma once

#include "braidvar/braid_matrix.hpp"

namespace braidvar {

// A complete flag in Q^n, stored as the canonical column-reduced
// representative of its coset modulo upper-triangular column operations:
// pivots (lowest nonzero entries) are 1, lie in distinct rows, and each
// pivot row is zero in all later columns.
class Flag {
 public:
  Flag() = default;
  static Flag standard(int n);
  static Flag coordinate(const Permutation& w);  // columns e_{w(1)}, ..., e_{w(n)}
  static Flag of_matrix(const RatMatrix& a);     // canonicalizes; a must be invertible

  int dim() const { return m_.rows(); }
  const RatMatrix& matrix() const { return m_; }
  bool operator==(const Flag& o) const { return m_ == o.m_; }
  bool operator!=(const Flag& o) const { return !(*this == o); }

  // F^i = G^i as subspaces.
  bool subspace_equal(const Flag& o, int i) const;

 private:
  RatMatrix m_;
};

// 0 when the flags are equal; i when they differ exactly in the i-th
// subspace; NotAdjacent otherwise.
int relative_position(const Flag& f, const Flag& g);

struct FlagChain {
  BraidWord word;
  std::vector<Flag> flags;  // length |word| + 1, flags[0] standard
};

FlagChain point_to_chain(const BraidWord& b, const RatPoint& p);
RatPoint chain_to_point(const FlagChain& chain);

// Dual membership oracles through the chain model.
bool chain_in_braid_variety(const FlagChain& chain);
bool chain_in_double_bs(const FlagChain& chain);

// Shuffle product of flags over a partition of {1..n} into ordered index
// sets, governed by w: the q-th column extends the flag of the block
// containing w(q).
Flag shuffle(const Flag& f1, const std::vector<int>& i1, const Flag& f2,
             const std::vector<int>& i2, const Permutation& w);
Flag multi_shuffle(const std::vector<Flag>& fs, const std::vector<std::vector<int>>& blocks,
                   const Permutation& w);

// Combinatorics of a braid word relative to a strand partition: per-crossing
// block typing, interleaving permutations v'_j, and restricted sub-words.
struct BlockScan {
  StrandPartition partition;
  std::vector<BraidWord> sub_words;           // one per block
  std::vector<int> crossing_block;            // block index, or -1 for inter-block
  std::vector<int> crossing_sub_letter;       // letter in the sub-word (internal only)
  std::vector<std::vector<int>> sub_position; // sub_position[m][j] = crossings of block m among first j
  std::vector<Permutation> vprime;            // v'_j for j = 0..length
};

BlockScan scan_blocks(const BraidWord& b, const StrandPartition& partition);

// Point of BS(beta) whose flag chain is the shuffle of the sub-chains; the
// inverse direction recovers the sub-points. Both run through flags.
RatPoint stabilized_embed(const BraidWord& b, const StrandPartition& partition,
                          const std::vector<RatPoint>& subpoints);
std::vector<RatPoint> stabilized_project(const BraidWord& b, const StrandPartition& partition,
                                         const RatPoint& p);

}  // namespace braidvar
