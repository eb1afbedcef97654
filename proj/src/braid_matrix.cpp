#include "braidvar/braid_matrix.hpp"

#include <numeric>

namespace braidvar {

RatPoint parse_point(const std::string& text) { return RatPoint(parse_rat_list(text)); }

RatMatrix braid_block(int i, const Rat& z, int n) {
  if (i < 1 || i >= n) throw Unsupported("braid block index out of range");
  RatMatrix m = RatMatrix::identity(n);
  m.at(i - 1, i - 1) = z;
  m.at(i - 1, i) = -1;
  m.at(i, i - 1) = 1;
  m.at(i, i) = 0;
  return m;
}

PolyMatrix braid_block(int i, const LaurentPoly& z, const Ctx& ctx, int n) {
  if (i < 1 || i >= n) throw Unsupported("braid block index out of range");
  PolyMatrix m = PolyMatrix::identity(ctx, n);
  m.at(i - 1, i - 1) = z;
  m.at(i - 1, i) = LaurentPoly::constant(ctx, Rat(-1));
  m.at(i, i - 1) = LaurentPoly::constant(ctx, Rat(1));
  m.at(i, i) = LaurentPoly(ctx);
  return m;
}

RatMatrix upper_block(int i, const Rat& w, int n) {
  if (w == 0) throw DivisionByZero("upper_block with w = 0");
  RatMatrix m = RatMatrix::identity(n);
  m.at(i - 1, i - 1) = w;
  m.at(i - 1, i) = -1;
  m.at(i, i) = Rat(1) / w;
  return m;
}

PolyMatrix upper_block(int i, const LaurentPoly& w, const Ctx& ctx, int n) {
  PolyMatrix m = PolyMatrix::identity(ctx, n);
  m.at(i - 1, i - 1) = w;
  m.at(i - 1, i) = LaurentPoly::constant(ctx, Rat(-1));
  m.at(i, i) = w.monomial_inverse();
  return m;
}

RatMatrix braid_block_inverse(int i, const Rat& z, int n) {
  RatMatrix m = RatMatrix::identity(n);
  m.at(i - 1, i - 1) = 0;
  m.at(i - 1, i) = 1;
  m.at(i, i - 1) = -1;
  m.at(i, i) = z;
  return m;
}

PolyMatrix braid_block_inverse(int i, const LaurentPoly& z, const Ctx& ctx, int n) {
  PolyMatrix m = PolyMatrix::identity(ctx, n);
  m.at(i - 1, i - 1) = LaurentPoly(ctx);
  m.at(i - 1, i) = LaurentPoly::constant(ctx, Rat(1));
  m.at(i, i - 1) = LaurentPoly::constant(ctx, Rat(-1));
  m.at(i, i) = z;
  return m;
}

RatMatrix braid_matrix(const BraidWord& b, const RatPoint& p) {
  if (p.size() != b.length()) throw Unsupported("point arity must equal word length");
  RatMatrix m = RatMatrix::identity(b.strands);
  for (int k = 1; k <= b.length(); ++k) m = m * braid_block(b.letter(k), p.at(k), b.strands);
  return m;
}

PolyMatrix braid_matrix_symbolic(const BraidWord& b, bool invertible_vars) {
  Ctx ctx = make_z_ctx(b.length(), invertible_vars);
  std::vector<LaurentPoly> args;
  for (int k = 0; k < b.length(); ++k) args.push_back(LaurentPoly::variable(ctx, k));
  return braid_matrix_symbolic(b, ctx, args);
}

PolyMatrix braid_matrix_symbolic(const BraidWord& b, const Ctx& ctx,
                                 const std::vector<LaurentPoly>& args) {
  if (static_cast<int>(args.size()) != b.length())
    throw Unsupported("argument arity must equal word length");
  PolyMatrix m = PolyMatrix::identity(ctx, b.strands);
  for (int k = 1; k <= b.length(); ++k)
    m = m * braid_block(b.letter(k), args[k - 1], ctx, b.strands);
  return m;
}

RatMatrix row_permuted(const RatMatrix& m, const Permutation& w) {
  if (m.rows() != w.size()) throw InternalError("row_permuted size mismatch");
  RatMatrix r(m.rows(), m.cols());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i - 1, j) = m.at(w.apply(i) - 1, j);
  return r;
}

bool in_braid_variety(const BraidWord& b, const RatPoint& p) {
  // With products composed in strand order, the chain endpoint is the
  // coordinate flag of the inverse of the Demazure fold, so the triangularity
  // test permutes rows by delta^{-1}.
  Permutation delta = demazure_product(b);
  return row_permuted(braid_matrix(b, p), delta.inverse()).is_upper_triangular();
}

bool in_double_bs(const BraidWord& b, const RatPoint& p) {
  RatMatrix m = braid_matrix(b, p);
  for (int i = 1; i < b.strands; ++i)
    if (m.leading_principal_minor(i) == 0) return false;
  return true;
}

Weight Weight::negated() const {
  Weight w = *this;
  for (int& e : w.entries) e = -e;
  return w;
}

std::string Weight::str() const {
  std::string s = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s + ")";
}

std::vector<Weight> coordinate_weights(const BraidWord& b) {
  int n = b.strands;
  auto prefix = level_to_origin_prefix(b);
  auto origins = crossing_origins(b);
  std::vector<Weight> out;
  out.reserve(b.length());
  for (int k = 1; k <= b.length(); ++k) {
    int i = b.letter(k);
    // permutation formula: e(w_k(i_k)) - e(w_k(i_k + 1))
    Weight w;
    w.entries.assign(n, 0);
    const Permutation& wk = prefix[k - 1];
    w.entries[wk.apply(i) - 1] += 1;
    w.entries[wk.apply(i + 1) - 1] -= 1;
    // strand tracing: origins of the two strands incident to the crossing
    Weight traced;
    traced.entries.assign(n, 0);
    traced.entries[origins[k - 1].top_origin - 1] += 1;
    traced.entries[origins[k - 1].bottom_origin - 1] -= 1;
    if (!(w == traced))
      throw InternalError("weight formula disagrees with strand tracing at position " +
                          std::to_string(k));
    out.push_back(std::move(w));
  }
  return out;
}

RatPoint torus_act(const std::vector<Rat>& t, const BraidWord& b, const RatPoint& p) {
  if (static_cast<int>(t.size()) != b.strands) throw Unsupported("torus tuple arity mismatch");
  for (const Rat& x : t)
    if (x == 0) throw DivisionByZero("torus element with zero entry");
  if (p.size() != b.length()) throw Unsupported("point arity mismatch");
  auto weights = coordinate_weights(b);
  RatPoint out = p;
  for (int k = 1; k <= b.length(); ++k) {
    Rat factor(1);
    for (int j = 0; j < b.strands; ++j) {
      int e = weights[k - 1].entries[j];
      if (e == 1) factor *= t[j];
      else if (e == -1) factor /= t[j];
    }
    out.at(k) *= factor;
  }
  return out;
}

SubtorusWitness point_stabilizer(const BraidWord& b, const RatPoint& p) {
  if (p.size() != b.length()) throw Unsupported("point arity mismatch");
  int n = b.strands;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto origins = crossing_origins(b);
  for (int k = 1; k <= b.length(); ++k) {
    if (p.at(k) == 0) continue;
    int a = find(origins[k - 1].top_origin);
    int c = find(origins[k - 1].bottom_origin);
    if (a != c) parent[a] = c;
  }
  std::vector<int> block_id(n);
  for (int i = 1; i <= n; ++i) block_id[i - 1] = find(i);
  SubtorusWitness w;
  w.partition = StrandPartition::from_block_of(n, block_id);
  w.rank = n - w.partition.block_count();
  w.stabilizer_dim = w.partition.block_count() - 1;
  return w;
}

bool is_free_point(const BraidWord& b, const RatPoint& p) {
  int n = b.strands;
  auto weights = coordinate_weights(b);
  // Express each weight of a nonzero coordinate in the basis
  // e1-e2, ..., e_{n-1}-e_n of the weight lattice.
  std::vector<std::vector<long long>> rows;
  for (int k = 1; k <= b.length(); ++k) {
    if (p.at(k) == 0) continue;
    std::vector<long long> row(n - 1, 0);
    long long acc = 0;
    for (int j = 0; j < n - 1; ++j) {
      acc += weights[k - 1].entries[j];
      row[j] = acc;
    }
    rows.push_back(std::move(row));
  }
  bool free_by_lattice = false;
  if (!rows.empty()) {
    auto snf = smith_normal_form(IntMatrix::from_rows(rows));
    bool saturated = true;
    for (const Int& d : snf.invariant_factors)
      if (d != 1) saturated = false;
    free_by_lattice = (snf.rank == n - 1) && saturated;
  } else {
    free_by_lattice = (n == 1);
  }
  bool free_by_partition = point_stabilizer(b, p).partition.block_count() == 1;
  if (free_by_lattice != free_by_partition)
    throw InternalError("freeness oracles disagree");
  return free_by_lattice;
}

}  // namespace braidvar
