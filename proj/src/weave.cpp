#include "braidvar/weave.hpp"

#include <algorithm>
#include <sstream>

namespace braidvar {

namespace {

struct NumericOps {
  using Scalar = Rat;
  using Matrix = RatMatrix;
  int n;
  Scalar zero() const { return Rat(0); }
  bool is_zero(const Scalar& x) const { return x == 0; }
  Scalar inv(const Scalar& x) const {
    if (x == 0) throw NotInChart("vanishing s-variable at a trivalent vertex");
    return Rat(1) / x;
  }
  Matrix upper(int i, const Scalar& w) const { return upper_block(i, w, n); }
  Matrix block(int i, const Scalar& z) const { return braid_block(i, z, n); }
  Matrix block_inv(int i, const Scalar& z) const { return braid_block_inverse(i, z, n); }
};

struct SymbolicOps {
  using Scalar = LaurentPoly;
  using Matrix = PolyMatrix;
  int n;
  Ctx ctx;
  Scalar zero() const { return LaurentPoly(ctx); }
  bool is_zero(const Scalar& x) const { return x.is_zero(); }
  Scalar inv(const Scalar& x) const {
    if (x.is_zero()) throw NotInChart("vanishing s-variable at a trivalent vertex");
    if (!x.is_monomial())
      throw Unsupported("symbolic trivalent vertex requires a monomial s-variable");
    return x.monomial_inverse();
  }
  Matrix upper(int i, const Scalar& w) const { return upper_block(i, w, ctx, n); }
  Matrix block(int i, const Scalar& z) const { return braid_block(i, z, ctx, n); }
  Matrix block_inv(int i, const Scalar& z) const { return braid_block_inverse(i, z, ctx, n); }
};

template <class Ops>
struct MoveOut {
  BraidWord word;
  std::vector<typename Ops::Scalar> values;
  std::optional<typename Ops::Scalar> s;
};

template <class Ops>
MoveOut<Ops> apply_move_impl(const Ops& ops, const BraidWord& word,
                             const std::vector<typename Ops::Scalar>& values,
                             const WeaveMove& move) {
  using Scalar = typename Ops::Scalar;
  if (static_cast<int>(values.size()) != word.length())
    throw Unsupported("layer arity must match word length");
  int p = move.pos - 1;
  MoveOut<Ops> out;
  switch (move.kind) {
    case MoveKind::Commute: {
      out.word = apply_word_move(word, move);
      out.values = values;
      std::swap(out.values[p], out.values[p + 1]);
      return out;
    }
    case MoveKind::Hexavalent: {
      out.word = apply_word_move(word, move);
      out.values = values;
      const Scalar z1 = values[p], z2 = values[p + 1], z3 = values[p + 2];
      out.values[p] = z3;
      out.values[p + 1] = z1 * z3 - z2;
      out.values[p + 2] = z1;
      return out;
    }
    case MoveKind::Trivalent: {
      out.word = apply_word_move(word, move);
      int i = word.letter(move.pos);
      Scalar s = values[p + 1];
      Scalar sinv = ops.inv(s);  // NotInChart when s vanishes
      out.values.assign(values.begin(), values.begin() + p);
      out.values.push_back(values[p] - sinv);
      typename Ops::Matrix u = ops.upper(i, s);
      for (int k = p + 2; k < word.length(); ++k) {
        int j = word.letters[k];
        // U B_j(z) = B_j(z') U' with z' = (U_jj z + U_{j,j+1}) / U_{j+1,j+1}
        Scalar zp = (u.at(j - 1, j - 1) * values[k] + u.at(j - 1, j)) *
                    ops.inv(u.at(j, j));
        u = ops.block_inv(j, zp) * u * ops.block(j, values[k]);
        if (!u.is_upper_triangular()) throw InternalError("sliding broke triangularity");
        out.values.push_back(zp);
      }
      out.s = s;
      return out;
    }
  }
  throw InternalError("unreachable");
}

bool has_adjacent_pair(const BraidWord& w) {
  for (int p = 0; p + 1 < w.length(); ++p)
    if (w.letters[p] == w.letters[p + 1]) return true;
  return false;
}

constexpr int kMaxBuilderLength = 24;

}  // namespace

NumericMoveResult apply_move(const BraidWord& word, const std::vector<Rat>& values,
                             const WeaveMove& move) {
  NumericOps ops{word.strands};
  auto r = apply_move_impl(ops, word, values, move);
  return {std::move(r.word), std::move(r.values), std::move(r.s)};
}

SymbolicMoveResult apply_move(const BraidWord& word, const std::vector<LaurentPoly>& values,
                              const WeaveMove& move) {
  if (values.empty()) throw Unsupported("symbolic move needs at least one value");
  SymbolicOps ops{word.strands, values.front().ctx()};
  auto r = apply_move_impl(ops, word, values, move);
  return {std::move(r.word), std::move(r.values), std::move(r.s)};
}

int Weave::trivalent_count() const {
  int c = 0;
  for (const auto& m : moves)
    if (m.kind == MoveKind::Trivalent) ++c;
  return c;
}

std::vector<BraidWord> Weave::word_layers() const {
  std::vector<BraidWord> out = {top};
  for (const auto& m : moves) out.push_back(apply_word_move(out.back(), m));
  return out;
}

std::string Weave::serialize() const {
  std::string s;
  for (const auto& m : moves) s += move_str(m) + "\n";
  return s;
}

Weave Weave::deserialize(const BraidWord& top, const std::string& lines) {
  Weave w;
  w.top = top;
  std::istringstream in(lines);
  std::string line;
  BraidWord cur = top;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto m = parse_move(line);
    cur = apply_word_move(cur, m);
    w.moves.push_back(m);
  }
  w.bottom = cur;
  auto delta = demazure_product(top);
  w.complete = (w.bottom.length() == delta.length()) && (coxeter_projection(w.bottom) == delta);
  return w;
}

std::string Weave::to_dot() const {
  static const char* palette[] = {"blue", "red", "teal", "orange", "purple", "brown"};
  auto layers = word_layers();
  std::string s = "digraph weave {\n  rankdir=TB;\n  node [shape=point];\n";
  for (size_t l = 0; l < layers.size(); ++l)
    for (int p = 1; p <= layers[l].length(); ++p)
      s += "  n" + std::to_string(l) + "_" + std::to_string(p) + " [group=g" +
           std::to_string(p) + "];\n";
  for (size_t l = 0; l + 1 < layers.size(); ++l) {
    const auto& m = moves[l];
    int len = layers[l].length();
    auto edge = [&](int from, int to) {
      int color = layers[l].letter(from) - 1;
      s += "  n" + std::to_string(l) + "_" + std::to_string(from) + " -> n" +
           std::to_string(l + 1) + "_" + std::to_string(to) + " [color=" +
           palette[color % 6] + "];\n";
    };
    for (int p = 1; p <= len; ++p) {
      if (m.kind == MoveKind::Trivalent) {
        if (p < m.pos) edge(p, p);
        else if (p == m.pos || p == m.pos + 1) edge(p, m.pos);
        else edge(p, p - 1);
      } else if (m.kind == MoveKind::Commute) {
        if (p == m.pos) edge(p, p + 1);
        else if (p == m.pos + 1) edge(p, p - 1);
        else edge(p, p);
      } else {
        if (p == m.pos) edge(p, p + 2);
        else if (p == m.pos + 2) edge(p, p - 2);
        else edge(p, p);
      }
    }
  }
  s += "}\n";
  return s;
}

PropagationTrace propagate(const Weave& weave, const RatPoint& p) {
  if (p.size() != weave.top.length()) throw Unsupported("input arity must match top word");
  PropagationTrace trace;
  trace.words.push_back(weave.top);
  trace.layers.push_back(p.coords);
  BraidWord word = weave.top;
  std::vector<Rat> values = p.coords;
  for (const auto& m : weave.moves) {
    auto r = apply_move(word, values, m);
    word = r.word;
    values = r.values;
    if (r.s) trace.s_vars.push_back(*r.s);
    trace.words.push_back(word);
    trace.layers.push_back(values);
  }
  return trace;
}

SymbolicTrace propagate_symbolic(const Weave& weave) {
  Ctx ctx = make_z_ctx(weave.top.length(), true);
  std::vector<LaurentPoly> values;
  for (int k = 0; k < weave.top.length(); ++k) values.push_back(LaurentPoly::variable(ctx, k));
  SymbolicTrace trace;
  trace.words.push_back(weave.top);
  trace.layers.push_back(values);
  BraidWord word = weave.top;
  for (const auto& m : weave.moves) {
    auto r = apply_move(word, values, m);
    word = r.word;
    values = r.values;
    if (r.s) trace.s_vars.push_back(*r.s);
    trace.words.push_back(word);
    trace.layers.push_back(values);
  }
  return trace;
}

Weave complete_weave(const BraidWord& b) {
  if (b.length() > kMaxBuilderLength)
    throw Unsupported("complete_weave builder is bounded to words of length 24");
  Weave w;
  w.top = b;
  BraidWord cur = b;
  Permutation delta = demazure_product(b);
  BraidWord target = minimal_lift(delta);
  while (!(cur == target)) {
    if (cur.length() > delta.length()) {
      auto path = braid_class_search(cur, has_adjacent_pair);
      if (!path) throw InternalError("no contractible word in the braid-move class");
      for (const auto& m : *path) {
        cur = apply_word_move(cur, m);
        w.moves.push_back(m);
      }
      for (int p = 0; p + 1 < cur.length(); ++p) {
        if (cur.letters[p] == cur.letters[p + 1]) {
          WeaveMove t{MoveKind::Trivalent, p + 1};
          cur = apply_word_move(cur, t);
          w.moves.push_back(t);
          break;
        }
      }
    } else {
      auto path = braid_class_search(cur, [&](const BraidWord& x) { return x == target; });
      if (!path) throw InternalError("reduced word not connected to the target lift");
      for (const auto& m : *path) {
        cur = apply_word_move(cur, m);
        w.moves.push_back(m);
      }
    }
  }
  w.bottom = cur;
  w.complete = true;
  return w;
}

bool chart_contains(const Weave& weave, const RatPoint& p) {
  if (!weave.complete) throw Unsupported("chart_contains requires a complete weave");
  if (p.size() != weave.top.length()) throw Unsupported("point arity mismatch");
  if (!in_braid_variety(weave.top, p)) return false;
  try {
    propagate(weave, p);
  } catch (const NotInChart&) {
    return false;
  }
  return true;
}

RatPoint lift_through_weave(const Weave& weave, const std::vector<Rat>& chart_values) {
  if (!weave.complete) throw Unsupported("lift requires a complete weave");
  if (static_cast<int>(chart_values.size()) != weave.trivalent_count())
    throw Unsupported("need one chart value per trivalent vertex");
  for (const Rat& v : chart_values)
    if (v == 0) throw DivisionByZero("chart values must be nonzero");

  auto layers = weave.word_layers();
  // every crossing of the reduced bottom word is essential, so the bottom
  // point is the origin
  std::vector<Rat> values(weave.bottom.length(), Rat(0));
  int next_value = static_cast<int>(chart_values.size()) - 1;
  int n = weave.top.strands;

  for (int k = static_cast<int>(weave.moves.size()) - 1; k >= 0; --k) {
    const WeaveMove& m = weave.moves[k];
    const BraidWord& before = layers[k];
    int p = m.pos - 1;
    switch (m.kind) {
      case MoveKind::Commute: {
        std::swap(values[p], values[p + 1]);
        break;
      }
      case MoveKind::Hexavalent: {
        Rat y1 = values[p], y2 = values[p + 1], y3 = values[p + 2];
        values[p] = y3;
        values[p + 1] = y1 * y3 - y2;
        values[p + 2] = y1;
        break;
      }
      case MoveKind::Trivalent: {
        Rat w = chart_values[next_value--];
        int i = before.letter(m.pos);
        std::vector<Rat> restored(values.begin(), values.begin() + p);
        restored.push_back(values[p] + Rat(1) / w);
        restored.push_back(w);
        RatMatrix u = upper_block(i, w, n);
        for (int t = p + 2; t < before.length(); ++t) {
          int j = before.letters[t];
          const Rat& zp = values[t - 1];  // slid value in the shorter word
          Rat z = (zp * u.at(j, j) - u.at(j - 1, j)) / u.at(j - 1, j - 1);
          u = braid_block_inverse(j, zp, n) * u * braid_block(j, z, n);
          if (!u.is_upper_triangular()) throw InternalError("un-sliding broke triangularity");
          restored.push_back(z);
        }
        values = std::move(restored);
        break;
      }
    }
  }
  if (next_value != -1) throw InternalError("chart value bookkeeping mismatch");
  return RatPoint(std::move(values));
}

}  // namespace braidvar
