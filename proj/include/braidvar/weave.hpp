#pragma once

#include <optional>

#include "braidvar/braid_matrix.hpp"

namespace braidvar {

using WeaveMove = MoveDescriptor;

// A Demazure weave stored as a replayable move program from `top` to
// `bottom`. For a complete weave the bottom is a reduced word for the
// Demazure product of the top.
struct Weave {
  BraidWord top;
  std::vector<WeaveMove> moves;
  BraidWord bottom;
  bool complete = false;

  int trivalent_count() const;
  // Words before each move and after the last: length moves.size() + 1.
  std::vector<BraidWord> word_layers() const;

  std::string serialize() const;  // one move per line: "T@k", "H@k", "C@k"
  static Weave deserialize(const BraidWord& top, const std::string& lines);
  std::string to_dot() const;
};

struct NumericMoveResult {
  BraidWord word;
  std::vector<Rat> values;
  std::optional<Rat> s;  // s-variable at a trivalent vertex
};

struct SymbolicMoveResult {
  BraidWord word;
  std::vector<LaurentPoly> values;
  std::optional<LaurentPoly> s;
};

// One move applied to a decorated word. Trivalent vertices consume the pair
// (z, w) at the move position, emit z - w^{-1}, and rewrite the variables to
// the right by sliding the upper-triangular factor through the remaining
// braid blocks; throws NotInChart when w = 0 in numeric mode.
NumericMoveResult apply_move(const BraidWord& word, const std::vector<Rat>& values,
                             const WeaveMove& move);
// Symbolic counterpart; trivalent vertices require the right arm to be an
// invertible monomial (single moves and matrix certificates; use numeric
// mode for full propagation with compound s-variables).
SymbolicMoveResult apply_move(const BraidWord& word, const std::vector<LaurentPoly>& values,
                              const WeaveMove& move);

struct PropagationTrace {
  std::vector<BraidWord> words;             // per layer
  std::vector<std::vector<Rat>> layers;     // values per layer
  std::vector<Rat> s_vars;                  // one per trivalent vertex, in order
};

struct SymbolicTrace {
  std::vector<BraidWord> words;
  std::vector<std::vector<LaurentPoly>> layers;
  std::vector<LaurentPoly> s_vars;
};

PropagationTrace propagate(const Weave& weave, const RatPoint& p);
// Symbolic propagation from fresh invertible variables z1..zl.
SymbolicTrace propagate_symbolic(const Weave& weave);

// Deterministic complete weave: repeatedly normalize with the shortest
// braid-move path to a word containing an adjacent equal pair, contract at
// the leftmost pair, and finish with a path to the lex-minimal reduced word.
Weave complete_weave(const BraidWord& b);

// True iff p lies in X(top) and propagation succeeds with every s-variable
// nonzero.
bool chart_contains(const Weave& weave, const RatPoint& p);

// Inverse of propagation on a complete weave: starting from the all-zero
// point of the reduced bottom word, insert (y + w^{-1}, w) at each trivalent
// vertex bottom-up and un-slide the upper-triangular factors.
RatPoint lift_through_weave(const Weave& weave, const std::vector<Rat>& chart_values);

}  // namespace braidvar
