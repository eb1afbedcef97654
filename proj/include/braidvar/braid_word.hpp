#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidvar/permutation.hpp"

namespace braidvar {

// Positive braid word on n strands: letters are generator indices in [1, n-1].
// Word positions are 1-indexed throughout.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> l);

  int length() const { return static_cast<int>(letters.size()); }
  int letter(int pos) const { return letters[pos - 1]; }  // 1-indexed
  bool operator==(const BraidWord& o) const {
    return strands == o.strands && letters == o.letters;
  }
  bool operator<(const BraidWord& o) const {
    return std::tie(strands, letters) < std::tie(o.strands, o.letters);
  }
  std::string str() const;  // "1 1 2 1 2"
};

// Parse "1 1 2 1 2" or "1,1,2". If n is absent the strand count is inferred
// as max letter + 1.
BraidWord parse_braid_word(const std::string& text, std::optional<int> n = std::nullopt);

// Set partition of {1..n}; blocks sorted by minimum, elements ascending.
struct StrandPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  StrandPartition() = default;
  StrandPartition(int n_, std::vector<std::vector<int>> b);
  static StrandPartition singletons(int n);
  static StrandPartition from_block_of(int n, const std::vector<int>& block_id);

  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_of(int strand) const;  // index into blocks
  // True when every block of *this is contained in a block of coarser.
  bool refines(const StrandPartition& coarser) const;
  StrandPartition common_refinement(const StrandPartition& o) const;
  bool operator==(const StrandPartition& o) const { return n == o.n && blocks == o.blocks; }
  bool operator<(const StrandPartition& o) const { return blocks < o.blocks; }
  std::string str() const;  // "{1,4} {2,5} {3}"
};

// --- braid_core operations -------------------------------------------------

Permutation coxeter_projection(const BraidWord& b);
Permutation demazure_product(const BraidWord& b);

// Lexicographically smallest reduced word for w, lifted letterwise.
BraidWord minimal_lift(const Permutation& w);

// sigma_{i2}...sigma_{il} sigma_{n-i1}; throws EmptyWord on the empty word.
BraidWord cyclic_rotate(const BraidWord& b);

enum class MoveKind { Trivalent, Hexavalent, Commute };

struct MoveDescriptor {
  MoveKind kind;
  int pos;  // leftmost position of the affected subword, 1-indexed
  bool operator==(const MoveDescriptor& o) const { return kind == o.kind && pos == o.pos; }
};

std::string move_str(const MoveDescriptor& m);  // "T@3"
MoveDescriptor parse_move(const std::string& s);

// All single-arrow neighbors in the word graph: contractions sigma_i sigma_i
// -> sigma_i (one-way), commutations, and braid moves aba <-> bab.
std::vector<std::pair<MoveDescriptor, BraidWord>> braid_move_neighbors(const BraidWord& b);

// Word after applying one move (validates applicability).
BraidWord apply_word_move(const BraidWord& b, const MoveDescriptor& m);

// Positions whose deletion lowers the Demazure product.
std::set<int> essential_crossings(const BraidWord& b);

enum class ClosureTwist { None, W0 };

// Orbits of pi(beta) (twist None) or pi(beta) * w0 (twist W0).
StrandPartition closure_components(const BraidWord& b, ClosureTwist twist);

// Connected components of the graph on strands with one edge per special
// crossing (rightmost appearance of each generator).
int gamma_components(const BraidWord& b);

// --- strand bookkeeping shared by weights / stabilizers / loci --------------

// level_to_origin[k] (k = 0..length) maps levels to starting strands just
// before crossing k+1; entry 0 is the identity.
std::vector<Permutation> level_to_origin_prefix(const BraidWord& b);

struct CrossingStrands {
  int top_origin;     // origin of the strand at level i_k before crossing k
  int bottom_origin;  // origin of the strand at level i_k + 1
};
std::vector<CrossingStrands> crossing_origins(const BraidWord& b);

// Breadth-first search of the braid-move graph restricted to words of the
// same length (commutations and hexavalent moves only). Deterministic:
// neighbors are enumerated by position. Returns the move path to the first
// word satisfying `goal`, or nullopt when the component is exhausted.
std::optional<std::vector<MoveDescriptor>> braid_class_search(
    const BraidWord& start, const std::function<bool(const BraidWord&)>& goal,
    size_t max_nodes = 2000000);

}  // namespace braidvar
