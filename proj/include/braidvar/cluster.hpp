#pragma once

#include <map>
#include <optional>

#include "braidvar/braid_word.hpp"
#include "braidvar/int_matrix.hpp"
#include "braidvar/laurent.hpp"

namespace braidvar {

// Quiver with frozen vertices: no loops, no 2-cycles, no arrows between
// frozen vertices. Vertices are 0-indexed; color (1-indexed generator) is 0
// when absent.
struct IceQuiver {
  int vertices = 0;
  std::vector<bool> frozen;
  std::vector<int> color;
  std::map<std::pair<int, int>, int> arrows;  // (from, to) -> multiplicity > 0

  static IceQuiver empty(int vertices);
  void add_arrow(int from, int to, int mult = 1);  // cancels against opposite arrows
  int arrow_count(int from, int to) const;
  void validate() const;

  int mutable_count() const;
  IceQuiver mutated(int k) const;  // throws FrozenVertex when k is frozen
  IceQuiver principal_part() const;

  // Canonical labeling string of the (principal or full) quiver, invariant
  // under vertex relabeling that preserves the frozen flags.
  std::string canonical_string() const;
  std::string to_dot() const;
};

bool quivers_isomorphic(const IceQuiver& a, const IceQuiver& b);

// (n+m) x n integer matrix whose principal part is skew-symmetric.
struct ExtExchangeMatrix {
  IntMatrix m;       // (n+m) x n
  int n_mutable = 0;

  static ExtExchangeMatrix from_quiver(const IceQuiver& q);
  IceQuiver to_quiver(const std::vector<bool>& frozen_rows = {}) const;
  ExtExchangeMatrix mutated(int k) const;
  void validate() const;
  bool operator==(const ExtExchangeMatrix& o) const {
    return n_mutable == o.n_mutable && m == o.m;
  }
};

// Seed: extended cluster of exact Laurent expressions in the initial
// variables, plus the exchange matrix. Mutation checks the Laurent
// phenomenon eagerly via exact division.
struct Seed {
  std::vector<LaurentPoly> exprs;
  ExtExchangeMatrix matrix;

  static Seed initial(const ExtExchangeMatrix& m);
  Seed mutated(int k) const;
};

// Quiver of the Bott-Samelson seed, built by the inductive amalgamation
// procedure: one vertex per letter, colored by its generator, frozen iff
// rightmost of its color.
IceQuiver amalgamation_quiver(const BraidWord& b);

struct AutGroup {
  int torus_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

// Structure of ker(mult(B~^T)) in (C*)^{n+m} from the Smith form of B~^T.
AutGroup aut_group(const ExtExchangeMatrix& m);

struct RankFlags {
  bool full_rank = false;
  bool really_full_rank = false;
};

RankFlags rank_flags(const ExtExchangeMatrix& m);

// Breadth-first mutation search (up to isomorphism) for an orientation of a
// simply-laced Dynkin diagram; returns "A5", "D6", "E8", ... or nullopt when
// the depth limit or the node budget is exhausted first.
std::optional<std::string> finite_type_classify(const IceQuiver& q, int depth_limit = 12);

}  // namespace braidvar
