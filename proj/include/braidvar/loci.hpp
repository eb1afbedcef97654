#pragma once

#include "braidvar/flags.hpp"

namespace braidvar {

// Component of a stabilizer locus, reported combinatorially.
struct StabilizerComponent {
  StrandPartition partition;
  std::vector<BraidWord> sub_words;     // strand restrictions, one per block
  int dimension = 0;                    // sum of |b_j| - l(delta(b_j))
  bool empty = false;                   // braid-variety case only
  std::vector<int> zero_positions;      // inter-block crossings (1-indexed)
  std::string str() const;
  std::string to_json() const;
};

// Stabilizer-locus components of BS(beta): one per 2-block partition of the
// closure components. Words missing generators decompose into parabolic
// bands first; partitions then split one band at a time.
std::vector<StabilizerComponent> stabilizer_components_bs(const BraidWord& b);

// T-stabilizer components of X(beta) for delta(beta) = w0: one candidate per
// 2-block partition of {1..n} into pi(beta) w0-stable parts, marked empty
// unless every restricted sub-braid has longest-element Demazure product.
std::vector<StabilizerComponent> t_stabilizer_components_braid(const BraidWord& b);

// Component of the coarsest common refinement of the given partitions.
StabilizerComponent component_intersections(const BraidWord& b,
                                            const std::vector<StrandPartition>& partitions,
                                            ClosureTwist twist);

struct DeepComponentInfo {
  std::string dynkin;  // "A3", "A0" for a torus factor, ...
  int frozen_count = 0;
  int dimension = 0;
  StrandPartition partition;            // from the Bott-Samelson realization
  std::vector<BraidWord> sub_words;     // likewise; may be absent
};

struct DeepLocusReport {
  bool empty = true;
  bool smooth = true;
  bool irreducible = true;
  bool equidimensional = true;
  std::vector<DeepComponentInfo> components;
  std::vector<std::string> intersections;  // "point" / "empty" / "sub-variety"
  std::string to_json() const;
};

// Deep locus of the two-strand variety of sigma^ell.
DeepLocusReport deep_locus_two_strand(int ell);

// Deep locus of X(a,b) = X(sigma1^a (sigma2 sigma1)^b). For b <= 3 the
// variety is of type A and the report follows the type-A rule; b > 3 follows
// the closed-form component structure, cross-checked against the
// Bott-Samelson component machinery when b >= 2.
DeepLocusReport deep_locus_xab(int a, int b);

// Finite simply-laced types at really full rank; component data refers to
// the braid-variety realizations of each type.
DeepLocusReport deep_locus_finite_type(const std::string& label, int n);

// gcd criterion for the maximal positroid stratum of Gr(k,n).
bool positroid_stabilizer_empty(int k, int n);

// k-Grassmannian permutation [n-k+1..n, 1..n-k].
Permutation grassmannian_permutation(int k, int n);

// Values f(1..n) of the 3-bounded affine permutation attached to X(a,b),
// with n = a + b + 1.
std::vector<long long> positroid_data_xab(int a, int b);

// Braid word traced by the juggling diagram of that affine permutation:
// crossings of the arcs (x, f(x)) ordered by column, with levels read from
// arc heights.
BraidWord positroid_juggling_braid(int a, int b);

// sigma1^a (sigma2 sigma1)^b and its Bott-Samelson companion
// sigma1^a (sigma2 sigma1)^{b-2} sigma2 (b >= 2).
BraidWord beta_ab(int a, int b);
BraidWord beta_bs_word(int a, int b);

}  // namespace braidvar
