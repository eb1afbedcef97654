#include "braidvar/cluster.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace braidvar {

IceQuiver IceQuiver::empty(int n) {
  IceQuiver q;
  q.vertices = n;
  q.frozen.assign(n, false);
  q.color.assign(n, 0);
  return q;
}

void IceQuiver::add_arrow(int from, int to, int mult) {
  if (from == to) throw InternalError("loop arrow");
  auto opposite = arrows.find({to, from});
  while (mult > 0 && opposite != arrows.end() && opposite->second > 0) {
    // cancel against an opposite arrow
    --opposite->second;
    --mult;
    if (opposite->second == 0) {
      arrows.erase(opposite);
      opposite = arrows.end();
    }
  }
  if (mult > 0) arrows[{from, to}] += mult;
}

int IceQuiver::arrow_count(int from, int to) const {
  auto it = arrows.find({from, to});
  return it == arrows.end() ? 0 : it->second;
}

void IceQuiver::validate() const {
  for (const auto& [e, m] : arrows) {
    if (m <= 0) throw InternalError("non-positive arrow multiplicity");
    if (e.first == e.second) throw InternalError("loop arrow");
    if (arrow_count(e.second, e.first) > 0) throw InternalError("2-cycle in ice quiver");
    if (frozen[e.first] && frozen[e.second]) throw InternalError("arrow between frozen vertices");
  }
}

int IceQuiver::mutable_count() const {
  int c = 0;
  for (bool f : frozen)
    if (!f) ++c;
  return c;
}

IceQuiver IceQuiver::mutated(int k) const {
  if (k < 0 || k >= vertices) throw InternalError("vertex out of range");
  if (frozen[k]) throw FrozenVertex("cannot mutate a frozen vertex");
  IceQuiver q = *this;
  q.arrows.clear();
  // composite arrows through k, skipping frozen-frozen pairs
  for (const auto& [e1, m1] : arrows) {
    if (e1.second != k) continue;
    for (const auto& [e2, m2] : arrows) {
      if (e2.first != k) continue;
      int a = e1.first, c = e2.second;
      if (a == c) continue;
      if (frozen[a] && frozen[c]) continue;
      q.add_arrow(a, c, m1 * m2);
    }
  }
  // original arrows, reversed at k
  for (const auto& [e, m] : arrows) {
    if (e.first == k)
      q.add_arrow(e.second, e.first, m);
    else if (e.second == k)
      q.add_arrow(e.second, e.first, m);
    else
      q.add_arrow(e.first, e.second, m);
  }
  q.validate();
  return q;
}

IceQuiver IceQuiver::principal_part() const {
  std::vector<int> keep, index(vertices, -1);
  for (int v = 0; v < vertices; ++v)
    if (!frozen[v]) {
      index[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  IceQuiver q = IceQuiver::empty(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i) q.color[i] = color[keep[i]];
  for (const auto& [e, m] : arrows)
    if (index[e.first] >= 0 && index[e.second] >= 0)
      q.arrows[{index[e.first], index[e.second]}] = m;
  return q;
}

namespace {

// Iterative refinement with individualization; returns the minimal adjacency
// string over all refinement-consistent labelings.
struct Canonicalizer {
  const IceQuiver& q;
  explicit Canonicalizer(const IceQuiver& quiver) : q(quiver) {}

  std::vector<int> refine(std::vector<int> colors) const {
    int n = q.vertices;
    for (;;) {
      std::vector<std::string> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<std::string> nbr;
        for (const auto& [e, m] : q.arrows) {
          if (e.first == v)
            nbr.push_back("o" + std::to_string(colors[e.second]) + "x" + std::to_string(m));
          else if (e.second == v)
            nbr.push_back("i" + std::to_string(colors[e.first]) + "x" + std::to_string(m));
        }
        std::sort(nbr.begin(), nbr.end());
        sig[v] = std::to_string(colors[v]) + "|";
        for (auto& s : nbr) sig[v] += s + ";";
      }
      std::vector<std::string> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      std::vector<int> next(n);
      for (int v = 0; v < n; ++v)
        next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                   sorted.begin());
      if (next == colors) return colors;
      colors = std::move(next);
    }
  }

  std::string string_for(const std::vector<int>& colors) const {
    // colors must be discrete: one vertex per color
    int n = q.vertices;
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[colors[v]] = v;
    std::string s;
    for (int i = 0; i < n; ++i) s += q.frozen[order[i]] ? "F" : "m";
    s += "/";
    std::vector<std::string> edges;
    std::vector<int> pos(n);
    for (int v = 0; v < n; ++v) pos[v] = colors[v];
    for (const auto& [e, m] : q.arrows)
      edges.push_back(std::to_string(pos[e.first]) + ">" + std::to_string(pos[e.second]) + "x" +
                      std::to_string(m));
    std::sort(edges.begin(), edges.end());
    for (auto& e : edges) s += e + ",";
    return s;
  }

  std::string canonical(std::vector<int> colors) const {
    colors = refine(colors);
    int n = q.vertices;
    // find the first non-singleton color class
    std::vector<std::vector<int>> classes(n);
    for (int v = 0; v < n; ++v) classes[colors[v]].push_back(v);
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (classes[c].size() > 1) {
        target = c;
        break;
      }
    if (target < 0) return string_for(colors);
    std::string best;
    for (int v : classes[target]) {
      std::vector<int> split = colors;
      for (int u = 0; u < n; ++u)
        if (split[u] >= target && u != v) split[u] += 1;
      // v keeps color `target`, everyone else in the class moves up
      std::string s = canonical(split);
      if (best.empty() || s < best) best = s;
    }
    return best;
  }
};

}  // namespace

std::string IceQuiver::canonical_string() const {
  Canonicalizer c(*this);
  std::vector<int> init(vertices, 0);
  for (int v = 0; v < vertices; ++v) init[v] = frozen[v] ? 1 : 0;
  return c.canonical(init);
}

std::string IceQuiver::to_dot() const {
  std::string s = "digraph quiver {\n";
  for (int v = 0; v < vertices; ++v) {
    s += "  v" + std::to_string(v) + " [shape=" + (frozen[v] ? "box" : "circle") + ", label=\"" +
         std::to_string(v + 1);
    if (color[v] > 0) s += ":c" + std::to_string(color[v]);
    s += "\"];\n";
  }
  for (const auto& [e, m] : arrows)
    for (int t = 0; t < m; ++t)
      s += "  v" + std::to_string(e.first) + " -> v" + std::to_string(e.second) + ";\n";
  s += "}\n";
  return s;
}

bool quivers_isomorphic(const IceQuiver& a, const IceQuiver& b) {
  if (a.vertices != b.vertices || a.arrows.size() != b.arrows.size()) return false;
  return a.canonical_string() == b.canonical_string();
}

ExtExchangeMatrix ExtExchangeMatrix::from_quiver(const IceQuiver& q) {
  q.validate();
  // mutable vertices first, frozen after, both in index order
  std::vector<int> order;
  for (int v = 0; v < q.vertices; ++v)
    if (!q.frozen[v]) order.push_back(v);
  int n = static_cast<int>(order.size());
  for (int v = 0; v < q.vertices; ++v)
    if (q.frozen[v]) order.push_back(v);
  std::vector<int> pos(q.vertices);
  for (int i = 0; i < q.vertices; ++i) pos[order[i]] = i;
  ExtExchangeMatrix m;
  m.n_mutable = n;
  m.m = IntMatrix(q.vertices, n);
  for (const auto& [e, mult] : q.arrows) {
    int i = pos[e.first], j = pos[e.second];
    if (j < n) m.m.at(i, j) += mult;
    if (i < n) m.m.at(j, i) -= mult;
  }
  return m;
}

IceQuiver ExtExchangeMatrix::to_quiver(const std::vector<bool>& frozen_rows) const {
  int total = m.rows();
  IceQuiver q = IceQuiver::empty(total);
  for (int v = 0; v < total; ++v) q.frozen[v] = v >= n_mutable;
  if (!frozen_rows.empty()) {
    if (static_cast<int>(frozen_rows.size()) != total) throw InternalError("frozen flag size");
    q.frozen = frozen_rows;
  }
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < n_mutable; ++j) {
      if (m.at(i, j) > 0)
        q.arrows[{i, j}] = static_cast<int>(m.at(i, j).convert_to<long long>());
      else if (m.at(i, j) < 0 && i >= n_mutable)
        // arrows into frozen vertices appear only as negative entries in the
        // frozen rows
        q.arrows[{j, i}] = static_cast<int>((-m.at(i, j)).convert_to<long long>());
    }
  q.validate();
  return q;
}

void ExtExchangeMatrix::validate() const {
  for (int i = 0; i < n_mutable; ++i)
    for (int j = 0; j < n_mutable; ++j)
      if (m.at(i, j) != -m.at(j, i)) throw InternalError("principal part not skew-symmetric");
}

ExtExchangeMatrix ExtExchangeMatrix::mutated(int k) const {
  if (k < 0 || k >= n_mutable) throw FrozenVertex("cannot mutate a frozen index");
  ExtExchangeMatrix out = *this;
  auto sgn = [](const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i == k || j == k) {
        out.m.at(i, j) = -m.at(i, j);
      } else {
        Int prod = m.at(i, k) * m.at(k, j);
        if (prod > 0) out.m.at(i, j) = m.at(i, j) + sgn(m.at(i, k)) * prod;
      }
    }
  }
  return out;
}

Seed Seed::initial(const ExtExchangeMatrix& m) {
  Seed s;
  s.matrix = m;
  int total = m.m.rows();
  Ctx ctx = make_z_ctx(total, true, "x");
  for (int i = 0; i < total; ++i) s.exprs.push_back(LaurentPoly::variable(ctx, i));
  return s;
}

Seed Seed::mutated(int k) const {
  if (k < 0 || k >= matrix.n_mutable) throw FrozenVertex("cannot mutate a frozen variable");
  Seed out = *this;
  const Ctx& ctx = exprs.front().ctx();
  auto pow = [&](const LaurentPoly& p, const Int& e) {
    LaurentPoly r = LaurentPoly::constant(ctx, Rat(1));
    for (Int t = 0; t < e; ++t) r = r * p;
    return r;
  };
  LaurentPoly plus = LaurentPoly::constant(ctx, Rat(1));
  LaurentPoly minus = LaurentPoly::constant(ctx, Rat(1));
  for (int i = 0; i < matrix.m.rows(); ++i) {
    const Int& b = matrix.m.at(i, k);
    if (b > 0) plus = plus * pow(exprs[i], b);
    if (b < 0) minus = minus * pow(exprs[i], -b);
  }
  // exchange relation; exact_div raises InternalError when the result is not
  // Laurent, which would contradict the Laurent phenomenon
  out.exprs[k] = (plus + minus).exact_div(exprs[k]);
  out.matrix = matrix.mutated(k);
  return out;
}

IceQuiver amalgamation_quiver(const BraidWord& b) {
  IceQuiver q = IceQuiver::empty(b.length());
  std::vector<int> rightmost(b.strands, -1);  // vertex of the rightmost letter per color
  for (int p = 0; p < b.length(); ++p) {
    int i = b.letters[p];
    int u = rightmost[i];
    q.color[p] = i;
    q.frozen[p] = true;
    if (u >= 0) {
      q.frozen[u] = false;  // thaw
      q.add_arrow(u, p);
    }
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= b.strands) continue;
      int r = rightmost[j];
      if (r < 0 || u < 0) continue;
      bool has_arrow_to_color_i = false;
      for (const auto& [e, mult] : q.arrows)
        if (e.first == r && q.color[e.second] == i) has_arrow_to_color_i = true;
      if (!has_arrow_to_color_i) q.add_arrow(r, u);
    }
    rightmost[i] = p;
  }
  q.validate();
  return q;
}

AutGroup aut_group(const ExtExchangeMatrix& m) {
  auto snf = smith_normal_form(m.m.transposed());
  AutGroup out;
  out.torus_rank = m.m.rows() - snf.rank;
  for (const Int& d : snf.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

RankFlags rank_flags(const ExtExchangeMatrix& m) {
  auto snf = smith_normal_form(m.m);
  RankFlags f;
  f.full_rank = (snf.rank == m.n_mutable);
  f.really_full_rank = f.full_rank;
  for (const Int& d : snf.invariant_factors)
    if (d != 1) f.really_full_rank = false;
  return f;
}

namespace {

// Recognize an orientation of a connected simply-laced Dynkin diagram.
std::optional<std::string> dynkin_label(const IceQuiver& q) {
  int n = q.vertices;
  if (n == 0) return std::nullopt;
  std::vector<std::set<int>> adj(n);
  int edge_count = 0;
  for (const auto& [e, m] : q.arrows) {
    if (m != 1) return std::nullopt;
    if (adj[e.first].count(e.second)) return std::nullopt;
    adj[e.first].insert(e.second);
    adj[e.second].insert(e.first);
    ++edge_count;
  }
  if (edge_count != n - 1) return std::nullopt;  // a tree or nothing
  // connectivity
  std::vector<bool> seen(n, false);
  std::deque<int> queue = {0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        queue.push_back(u);
      }
  }
  if (reached != n) return std::nullopt;
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  int branch = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] > 3) return std::nullopt;
    if (deg[v] == 3) {
      if (branch >= 0) return std::nullopt;
      branch = v;
    }
  }
  if (branch < 0) return "A" + std::to_string(n);
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (deg[cur] == 2) {
      for (int u : adj[cur])
        if (u != prev) {
          prev = cur;
          cur = u;
          break;
        }
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return "E6";
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return "E7";
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return "E8";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> finite_type_classify(const IceQuiver& q, int depth_limit) {
  IceQuiver start = q.principal_part();
  constexpr size_t kNodeBudget = 20000;
  std::set<std::string> visited;
  std::deque<std::pair<IceQuiver, int>> queue;
  visited.insert(start.canonical_string());
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    for (const auto& [e, m] : cur.arrows)
      if (m >= 3) return std::nullopt;  // mutation-infinite
    if (auto label = dynkin_label(cur)) return label;
    if (depth >= depth_limit) continue;
    for (int k = 0; k < cur.vertices; ++k) {
      IceQuiver next = cur.mutated(k);
      auto key = next.canonical_string();
      if (visited.count(key)) continue;
      if (visited.size() >= kNodeBudget) return std::nullopt;
      visited.insert(key);
      queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return std::nullopt;
}

}  // namespace braidvar
