#include "braidvar/flags.hpp"

#include <algorithm>

namespace braidvar {

Flag Flag::standard(int n) { return of_matrix(RatMatrix::identity(n)); }

Flag Flag::coordinate(const Permutation& w) {
  int n = w.size();
  RatMatrix m(n, n);
  for (int j = 1; j <= n; ++j) m.at(w.apply(j) - 1, j - 1) = 1;
  Flag f;
  f.m_ = std::move(m);
  return f;
}

Flag Flag::of_matrix(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw InternalError("flag matrix must be square");
  int n = a.rows();
  RatMatrix m = a;
  std::vector<int> pivot_row(n, -1);
  auto col_sub = [&](int dst, int src, const Rat& k) {
    for (int r = 0; r < n; ++r) m.at(r, dst) -= k * m.at(r, src);
  };
  for (int j = 0; j < n; ++j) {
    // find the lowest nonzero row; clear it with an earlier pivot column if
    // it collides, repeat (the row index strictly decreases)
    int r;
    for (;;) {
      r = -1;
      for (int i = n - 1; i >= 0; --i)
        if (m.at(i, j) != 0) {
          r = i;
          break;
        }
      if (r < 0) throw DivisionByZero("flag matrix is singular");
      int owner = -1;
      for (int i = 0; i < j; ++i)
        if (pivot_row[i] == r) {
          owner = i;
          break;
        }
      if (owner < 0) break;
      col_sub(j, owner, m.at(r, j));
    }
    pivot_row[j] = r;
    Rat inv = Rat(1) / m.at(r, j);
    for (int i = 0; i < n; ++i) m.at(i, j) *= inv;
    // clear this column at the pivot rows of earlier columns (all above r)
    for (int i = 0; i < j; ++i) {
      int pr = pivot_row[i];
      if (pr < r && m.at(pr, j) != 0) col_sub(j, i, m.at(pr, j));
    }
  }
  Flag f;
  f.m_ = std::move(m);
  return f;
}

bool Flag::subspace_equal(const Flag& o, int i) const {
  if (dim() != o.dim()) throw InternalError("flag dimension mismatch");
  return joint_column_rank(m_, i, o.m_, i) == i;
}

int relative_position(const Flag& f, const Flag& g) {
  if (f.dim() != g.dim()) throw InternalError("flag dimension mismatch");
  int n = f.dim();
  int diff = 0, count = 0;
  for (int i = 1; i < n; ++i) {
    if (!f.subspace_equal(g, i)) {
      diff = i;
      ++count;
    }
  }
  if (count == 0) return 0;
  if (count == 1) return diff;
  throw NotAdjacent("flags differ in " + std::to_string(count) + " subspaces");
}

FlagChain point_to_chain(const BraidWord& b, const RatPoint& p) {
  if (p.size() != b.length()) throw Unsupported("point arity must equal word length");
  FlagChain chain;
  chain.word = b;
  RatMatrix a = RatMatrix::identity(b.strands);
  chain.flags.push_back(Flag::of_matrix(a));
  for (int k = 1; k <= b.length(); ++k) {
    a = a * braid_block(b.letter(k), p.at(k), b.strands);
    chain.flags.push_back(Flag::of_matrix(a));
  }
  return chain;
}

RatPoint chain_to_point(const FlagChain& chain) {
  const BraidWord& b = chain.word;
  int n = b.strands;
  if (static_cast<int>(chain.flags.size()) != b.length() + 1)
    throw InvalidChain("chain length mismatch");
  if (chain.flags[0] != Flag::standard(n)) throw InvalidChain("chain must start at the standard flag");
  std::vector<Rat> coords;
  // The z-value at a step depends on the matrix representative of the
  // previous flag; the bijection with points uses the running product of
  // braid blocks, rebuilt from the extracted values.
  RatMatrix m = RatMatrix::identity(n);
  for (int j = 1; j <= b.length(); ++j) {
    const Flag& prev = chain.flags[j - 1];
    const Flag& next = chain.flags[j];
    int i = b.letter(j);
    if (relative_position(prev, next) != i)
      throw InvalidChain("consecutive flags not in position s_" + std::to_string(i));
    // choose a column of next spanning next^i outside prev^{i-1}
    int chosen = -1;
    for (int c = 0; c < i; ++c) {
      RatMatrix v(n, 1);
      for (int r = 0; r < n; ++r) v.at(r, 0) = next.matrix().at(r, c);
      if (joint_column_rank(m, i - 1, v, 1) == i) {
        chosen = c;
        break;
      }
    }
    if (chosen < 0) throw InvalidChain("degenerate step");
    std::vector<Rat> rhs(n);
    for (int r = 0; r < n; ++r) rhs[r] = next.matrix().at(r, chosen);
    std::vector<Rat> x = m.solve(rhs);
    for (int r = i + 1; r < n; ++r)
      if (x[r] != 0) throw InvalidChain("step leaves the s_i orbit");
    if (x[i] == 0) throw InvalidChain("step not transverse");
    Rat z = x[i - 1] / x[i];
    coords.push_back(z);
    m = m * braid_block(i, z, n);
  }
  return RatPoint(std::move(coords));
}

bool chain_in_braid_variety(const FlagChain& chain) {
  return chain.flags.back() == Flag::coordinate(demazure_product(chain.word).inverse());
}

bool chain_in_double_bs(const FlagChain& chain) {
  const RatMatrix& m = chain.flags.back().matrix();
  for (int i = 1; i < chain.word.strands; ++i)
    if (m.leading_principal_minor(i) == 0) return false;
  return true;
}

Flag multi_shuffle(const std::vector<Flag>& fs, const std::vector<std::vector<int>>& blocks,
                   const Permutation& w) {
  int n = w.size();
  size_t total = 0;
  for (const auto& blk : blocks) total += blk.size();
  if (total != static_cast<size_t>(n) || fs.size() != blocks.size())
    throw Unsupported("blocks must partition {1..n}");
  std::vector<int> block_of(n + 1, -1);
  for (size_t m = 0; m < blocks.size(); ++m) {
    if (static_cast<int>(blocks[m].size()) != fs[m].dim())
      throw Unsupported("flag dimension must match block size");
    for (int x : blocks[m]) {
      if (x < 1 || x > n || block_of[x] != -1) throw Unsupported("blocks must partition {1..n}");
      block_of[x] = static_cast<int>(m);
    }
  }
  RatMatrix out(n, n);
  std::vector<int> used(blocks.size(), 0);
  for (int q = 1; q <= n; ++q) {
    int g = w.apply(q);
    int m = block_of[g];
    int r = used[m]++;  // this column extends block m to dimension r+1
    for (int kk = 0; kk < static_cast<int>(blocks[m].size()); ++kk)
      out.at(blocks[m][kk] - 1, q - 1) = fs[m].matrix().at(kk, r);
  }
  return Flag::of_matrix(out);
}

Flag shuffle(const Flag& f1, const std::vector<int>& i1, const Flag& f2,
             const std::vector<int>& i2, const Permutation& w) {
  return multi_shuffle({f1, f2}, {i1, i2}, w);
}

BlockScan scan_blocks(const BraidWord& b, const StrandPartition& partition) {
  if (partition.n != b.strands) throw Unsupported("partition size must match strand count");
  BlockScan scan;
  scan.partition = partition;
  int k = partition.block_count();
  int n = b.strands;

  std::vector<int> lvl(n);
  for (int i = 0; i < n; ++i) lvl[i] = i + 1;

  auto vprime_of = [&]() {
    std::vector<int> img(n);
    std::vector<int> used(k, 0);
    for (int q = 0; q < n; ++q) {
      int m = partition.block_of(lvl[q]);
      img[q] = partition.blocks[m][used[m]++];
    }
    return Permutation::from_one_line(img);
  };

  scan.vprime.push_back(vprime_of());
  scan.sub_words.assign(k, BraidWord());
  std::vector<std::vector<int>> sub_letters(k);
  scan.sub_position.assign(k, std::vector<int>(b.length() + 1, 0));

  for (int j = 1; j <= b.length(); ++j) {
    int i = b.letter(j);
    int a = lvl[i - 1], c = lvl[i];
    int ba = partition.block_of(a), bc = partition.block_of(c);
    for (int m = 0; m < k; ++m) scan.sub_position[m][j] = scan.sub_position[m][j - 1];
    if (ba == bc) {
      scan.crossing_block.push_back(ba);
      // position among the levels of this block above the crossing
      int sub = 1;
      for (int q = 0; q < i - 1; ++q)
        if (partition.block_of(lvl[q]) == ba) ++sub;
      scan.crossing_sub_letter.push_back(sub);
      sub_letters[ba].push_back(sub);
      scan.sub_position[ba][j]++;
    } else {
      scan.crossing_block.push_back(-1);
      scan.crossing_sub_letter.push_back(0);
    }
    std::swap(lvl[i - 1], lvl[i]);
    scan.vprime.push_back(vprime_of());
  }
  for (int m = 0; m < k; ++m) {
    int nm = static_cast<int>(partition.blocks[m].size());
    if (nm == 1 && !sub_letters[m].empty()) throw InternalError("single-strand block with crossings");
    scan.sub_words[m] = BraidWord(nm, sub_letters[m]);
  }
  return scan;
}

RatPoint stabilized_embed(const BraidWord& b, const StrandPartition& partition,
                          const std::vector<RatPoint>& subpoints) {
  if (!closure_components(b, ClosureTwist::None).refines(partition))
    throw Unsupported("partition blocks must be unions of closure components");
  BlockScan scan = scan_blocks(b, partition);
  int k = partition.block_count();
  if (static_cast<int>(subpoints.size()) != k) throw InvalidSubpoint("need one sub-point per block");

  std::vector<FlagChain> sub_chains;
  for (int m = 0; m < k; ++m) {
    if (subpoints[m].size() != scan.sub_words[m].length())
      throw InvalidSubpoint("sub-point arity mismatch");
    if (!in_double_bs(scan.sub_words[m], subpoints[m]))
      throw InvalidSubpoint("sub-point not in its double Bott-Samelson variety");
    sub_chains.push_back(point_to_chain(scan.sub_words[m], subpoints[m]));
  }

  FlagChain chain;
  chain.word = b;
  for (int j = 0; j <= b.length(); ++j) {
    std::vector<Flag> fs;
    for (int m = 0; m < k; ++m) fs.push_back(sub_chains[m].flags[scan.sub_position[m][j]]);
    chain.flags.push_back(multi_shuffle(fs, partition.blocks, scan.vprime[j]));
  }
  RatPoint out = chain_to_point(chain);
  for (int j = 1; j <= b.length(); ++j)
    if (scan.crossing_block[j - 1] < 0 && out.at(j) != 0)
      throw InternalError("embed produced a nonzero inter-block coordinate");
  if (!in_double_bs(b, out)) throw InternalError("embedded point left the Bott-Samelson variety");
  return out;
}

namespace {

// Basis of F^q intersected with the coordinate subspace spanned by `block`,
// written in block coordinates; expected dimension r.
RatMatrix intersect_with_block(const Flag& f, int q, const std::vector<int>& block, int r) {
  int n = f.dim();
  std::vector<bool> in_block(n + 1, false);
  for (int x : block) in_block[x] = true;
  // rows outside the block give the linear system on coefficient vectors
  int out_rows = n - static_cast<int>(block.size());
  RatMatrix a(out_rows, q);
  int rr = 0;
  for (int row = 1; row <= n; ++row) {
    if (in_block[row]) continue;
    for (int c = 0; c < q; ++c) a.at(rr, c) = f.matrix().at(row - 1, c);
    ++rr;
  }
  // kernel of a by Gauss-Jordan
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < q && rank < out_rows; ++c) {
    int p = -1;
    for (int i = rank; i < out_rows; ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != rank)
      for (int j = 0; j < q; ++j) std::swap(a.at(rank, j), a.at(p, j));
    Rat inv = Rat(1) / a.at(rank, c);
    for (int j = 0; j < q; ++j) a.at(rank, j) *= inv;
    for (int i = 0; i < out_rows; ++i) {
      if (i == rank || a.at(i, c) == 0) continue;
      Rat fmul = a.at(i, c);
      for (int j = 0; j < q; ++j) a.at(i, j) -= fmul * a.at(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  int null_dim = q - rank;
  if (null_dim != r) throw NotInComponent("block flag has unexpected dimension");
  RatMatrix kernel(q, null_dim);
  int kcol = 0;
  std::vector<bool> is_pivot(q, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int c = 0; c < q; ++c) {
    if (is_pivot[c]) continue;
    kernel.at(c, kcol) = 1;
    for (int i = 0; i < rank; ++i) kernel.at(pivot_col[i], kcol) = -a.at(i, c);
    ++kcol;
  }
  // vectors in ambient coordinates, restricted to block rows
  RatMatrix out(static_cast<int>(block.size()), null_dim);
  for (int v = 0; v < null_dim; ++v) {
    for (int brow = 0; brow < static_cast<int>(block.size()); ++brow) {
      Rat s(0);
      for (int c = 0; c < q; ++c) s += f.matrix().at(block[brow] - 1, c) * kernel.at(c, v);
      out.at(brow, v) = s;
    }
  }
  return out;
}

Flag restrict_flag(const Flag& f, const std::vector<int>& block, const Permutation& vprime) {
  int nm = static_cast<int>(block.size());
  int n = f.dim();
  std::vector<bool> in_block(n + 1, false);
  for (int x : block) in_block[x] = true;
  RatMatrix mat(nm, nm);
  int filled = 0;
  for (int r = 1; r <= nm; ++r) {
    // smallest q whose shuffle image covers r block elements
    int q = 0, count = 0;
    for (int idx = 1; idx <= n && count < r; ++idx) {
      if (in_block[vprime.apply(idx)]) ++count;
      q = idx;
    }
    if (count < r) throw NotInComponent("interleaving permutation does not cover the block");
    RatMatrix basis = intersect_with_block(f, q, block, r);
    // extend the partial column set by one independent vector from basis
    bool extended = false;
    for (int v = 0; v < basis.cols() && !extended; ++v) {
      RatMatrix cand(nm, 1);
      for (int i = 0; i < nm; ++i) cand.at(i, 0) = basis.at(i, v);
      if (joint_column_rank(mat, filled, cand, 1) == filled + 1) {
        for (int i = 0; i < nm; ++i) mat.at(i, filled) = cand.at(i, 0);
        ++filled;
        extended = true;
      }
    }
    if (!extended) throw NotInComponent("could not extend restricted flag");
  }
  return Flag::of_matrix(mat);
}

}  // namespace

std::vector<RatPoint> stabilized_project(const BraidWord& b, const StrandPartition& partition,
                                         const RatPoint& p) {
  if (!closure_components(b, ClosureTwist::None).refines(partition))
    throw Unsupported("partition blocks must be unions of closure components");
  if (!in_double_bs(b, p)) throw Unsupported("point not in the double Bott-Samelson variety");
  BlockScan scan = scan_blocks(b, partition);
  for (int j = 1; j <= b.length(); ++j)
    if (scan.crossing_block[j - 1] < 0 && p.at(j) != 0)
      throw NotInComponent("nonzero coordinate at inter-block crossing " + std::to_string(j));

  FlagChain chain = point_to_chain(b, p);
  int k = partition.block_count();
  std::vector<RatPoint> out;
  for (int m = 0; m < k; ++m) {
    FlagChain sub;
    sub.word = scan.sub_words[m];
    sub.flags.push_back(Flag::standard(static_cast<int>(partition.blocks[m].size())));
    for (int j = 1; j <= b.length(); ++j) {
      if (scan.crossing_block[j - 1] != m) continue;
      sub.flags.push_back(restrict_flag(chain.flags[j], partition.blocks[m], scan.vprime[j]));
    }
    out.push_back(chain_to_point(sub));
  }
  return out;
}

}  // namespace braidvar
