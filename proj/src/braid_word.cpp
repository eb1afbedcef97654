#include "braidvar/braid_word.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace braidvar {

BraidWord::BraidWord(int n, std::vector<int> l) : strands(n), letters(std::move(l)) {
  if (n < 1) throw ParseError("strand count must be positive");
  for (int x : letters)
    if (x < 1 || x >= n)
      throw ParseError("letter " + std::to_string(x) + " out of range for " +
                       std::to_string(n) + " strands");
}

std::string BraidWord::str() const {
  std::string s;
  for (int i = 0; i < length(); ++i) {
    if (i) s += " ";
    s += std::to_string(letters[i]);
  }
  return s;
}

BraidWord parse_braid_word(const std::string& text, std::optional<int> n) {
  std::vector<int> letters;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) {
      letters.push_back(std::stoi(cur));
      cur.clear();
    }
  };
  for (char c : text) {
    if (c == ',' || isspace(static_cast<unsigned char>(c)))
      flush();
    else if (isdigit(static_cast<unsigned char>(c)))
      cur += c;
    else
      throw ParseError("bad character in braid word");
  }
  flush();
  int strands = n ? *n : (letters.empty() ? 2 : *std::max_element(letters.begin(), letters.end()) + 1);
  return BraidWord(strands, std::move(letters));
}

StrandPartition::StrandPartition(int n_, std::vector<std::vector<int>> b) : n(n_), blocks(std::move(b)) {
  std::vector<bool> seen(n + 1, false);
  for (auto& blk : blocks) {
    if (blk.empty()) throw InternalError("empty partition block");
    std::sort(blk.begin(), blk.end());
    for (int x : blk) {
      if (x < 1 || x > n || seen[x]) throw InternalError("invalid partition");
      seen[x] = true;
    }
  }
  for (int i = 1; i <= n; ++i)
    if (!seen[i]) throw InternalError("partition does not cover strand " + std::to_string(i));
  std::sort(blocks.begin(), blocks.end());
}

StrandPartition StrandPartition::singletons(int n) {
  std::vector<std::vector<int>> b;
  for (int i = 1; i <= n; ++i) b.push_back({i});
  return StrandPartition(n, std::move(b));
}

StrandPartition StrandPartition::from_block_of(int n, const std::vector<int>& block_id) {
  std::map<int, std::vector<int>> groups;
  for (int i = 1; i <= n; ++i) groups[block_id[i - 1]].push_back(i);
  std::vector<std::vector<int>> b;
  for (auto& [id, blk] : groups) b.push_back(blk);
  return StrandPartition(n, std::move(b));
}

int StrandPartition::block_of(int strand) const {
  for (int i = 0; i < block_count(); ++i)
    for (int x : blocks[i])
      if (x == strand) return i;
  throw InternalError("strand not in partition");
}

bool StrandPartition::refines(const StrandPartition& coarser) const {
  if (n != coarser.n) return false;
  for (const auto& blk : blocks) {
    int target = coarser.block_of(blk[0]);
    for (int x : blk)
      if (coarser.block_of(x) != target) return false;
  }
  return true;
}

StrandPartition StrandPartition::common_refinement(const StrandPartition& o) const {
  if (n != o.n) throw InternalError("partition size mismatch");
  std::vector<int> key(n);
  for (int i = 1; i <= n; ++i) key[i - 1] = block_of(i) * (o.block_count() + 1) + o.block_of(i);
  return from_block_of(n, key);
}

std::string StrandPartition::str() const {
  std::string s;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += " ";
    s += "{";
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(blocks[i][j]);
    }
    s += "}";
  }
  return s;
}

Permutation coxeter_projection(const BraidWord& b) {
  Permutation w(b.strands);
  for (int x : b.letters) w = w.then(Permutation::transposition(b.strands, x));
  return w;
}

Permutation demazure_product(const BraidWord& b) {
  Permutation d(b.strands);
  for (int x : b.letters)
    if (d.then_transposition_increases_length(x)) d = d.then_transposition(x);
  return d;
}

BraidWord minimal_lift(const Permutation& w) {
  int n = w.size();
  std::vector<int> img = w.one_line();
  std::vector<int> letters;
  // Greedy: the valid first letters of reduced words are the descent
  // positions; picking the smallest at each step yields the lex-min word.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (img[i] > img[i + 1]) {
        letters.push_back(i + 1);
        std::swap(img[i], img[i + 1]);
        progress = true;
        break;
      }
    }
  }
  return BraidWord(n, std::move(letters));
}

BraidWord cyclic_rotate(const BraidWord& b) {
  if (b.length() == 0) throw EmptyWord("cyclic_rotate of empty word");
  std::vector<int> l(b.letters.begin() + 1, b.letters.end());
  l.push_back(b.strands - b.letters.front());
  return BraidWord(b.strands, std::move(l));
}

std::string move_str(const MoveDescriptor& m) {
  char k = m.kind == MoveKind::Trivalent ? 'T' : m.kind == MoveKind::Hexavalent ? 'H' : 'C';
  return std::string(1, k) + "@" + std::to_string(m.pos);
}

MoveDescriptor parse_move(const std::string& s) {
  auto at = s.find('@');
  if (at == std::string::npos || at == 0) throw ParseError("bad move: " + s);
  MoveKind k;
  switch (s[0]) {
    case 'T': k = MoveKind::Trivalent; break;
    case 'H': k = MoveKind::Hexavalent; break;
    case 'C': k = MoveKind::Commute; break;
    default: throw ParseError("bad move kind: " + s);
  }
  return MoveDescriptor{k, std::stoi(s.substr(at + 1))};
}

BraidWord apply_word_move(const BraidWord& b, const MoveDescriptor& m) {
  const auto& l = b.letters;
  int p = m.pos - 1;  // 0-indexed
  switch (m.kind) {
    case MoveKind::Trivalent: {
      if (p < 0 || p + 1 >= b.length() || l[p] != l[p + 1])
        throw InternalError("trivalent move not applicable at " + std::to_string(m.pos));
      std::vector<int> out(l.begin(), l.begin() + p + 1);
      out.insert(out.end(), l.begin() + p + 2, l.end());
      return BraidWord(b.strands, std::move(out));
    }
    case MoveKind::Hexavalent: {
      if (p < 0 || p + 2 >= b.length() || l[p] != l[p + 2] || std::abs(l[p] - l[p + 1]) != 1)
        throw InternalError("hexavalent move not applicable at " + std::to_string(m.pos));
      std::vector<int> out = l;
      std::swap(out[p], out[p + 1]);
      out[p + 2] = out[p];
      return BraidWord(b.strands, std::move(out));
    }
    case MoveKind::Commute: {
      if (p < 0 || p + 1 >= b.length() || std::abs(l[p] - l[p + 1]) <= 1)
        throw InternalError("commute move not applicable at " + std::to_string(m.pos));
      std::vector<int> out = l;
      std::swap(out[p], out[p + 1]);
      return BraidWord(b.strands, std::move(out));
    }
  }
  throw InternalError("unreachable");
}

std::vector<std::pair<MoveDescriptor, BraidWord>> braid_move_neighbors(const BraidWord& b) {
  std::vector<std::pair<MoveDescriptor, BraidWord>> out;
  const auto& l = b.letters;
  for (int p = 0; p + 1 < b.length(); ++p) {
    if (l[p] == l[p + 1]) {
      MoveDescriptor m{MoveKind::Trivalent, p + 1};
      out.emplace_back(m, apply_word_move(b, m));
    } else if (std::abs(l[p] - l[p + 1]) > 1) {
      MoveDescriptor m{MoveKind::Commute, p + 1};
      out.emplace_back(m, apply_word_move(b, m));
    }
  }
  for (int p = 0; p + 2 < b.length(); ++p) {
    if (l[p] == l[p + 2] && std::abs(l[p] - l[p + 1]) == 1) {
      MoveDescriptor m{MoveKind::Hexavalent, p + 1};
      out.emplace_back(m, apply_word_move(b, m));
    }
  }
  return out;
}

std::set<int> essential_crossings(const BraidWord& b) {
  std::set<int> out;
  int full = demazure_product(b).length();
  for (int j = 1; j <= b.length(); ++j) {
    std::vector<int> l = b.letters;
    l.erase(l.begin() + (j - 1));
    if (demazure_product(BraidWord(b.strands, std::move(l))).length() < full) out.insert(j);
  }
  return out;
}

StrandPartition closure_components(const BraidWord& b, ClosureTwist twist) {
  Permutation w = coxeter_projection(b);
  if (twist == ClosureTwist::W0) w = w.then(Permutation::longest(b.strands));
  return StrandPartition(b.strands, w.orbits());
}

int gamma_components(const BraidWord& b) {
  // union-find over strands, one edge per special crossing
  std::vector<int> parent(b.strands + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> rightmost(b.strands, 0);  // rightmost position of each generator
  for (int k = 1; k <= b.length(); ++k) rightmost[b.letter(k)] = k;
  auto origins = crossing_origins(b);
  for (int g = 1; g < b.strands; ++g) {
    int k = rightmost[g];
    if (k == 0) continue;
    int a = find(origins[k - 1].top_origin);
    int c = find(origins[k - 1].bottom_origin);
    if (a != c) parent[a] = c;
  }
  int comps = 0;
  for (int i = 1; i <= b.strands; ++i)
    if (find(i) == i) ++comps;
  return comps;
}

std::vector<Permutation> level_to_origin_prefix(const BraidWord& b) {
  std::vector<Permutation> out;
  out.reserve(b.length() + 1);
  std::vector<int> lvl(b.strands);
  std::iota(lvl.begin(), lvl.end(), 1);
  out.push_back(Permutation::from_one_line(lvl));
  for (int x : b.letters) {
    std::swap(lvl[x - 1], lvl[x]);
    out.push_back(Permutation::from_one_line(lvl));
  }
  return out;
}

std::vector<CrossingStrands> crossing_origins(const BraidWord& b) {
  std::vector<CrossingStrands> out;
  out.reserve(b.length());
  std::vector<int> lvl(b.strands);
  std::iota(lvl.begin(), lvl.end(), 1);
  for (int x : b.letters) {
    out.push_back({lvl[x - 1], lvl[x]});
    std::swap(lvl[x - 1], lvl[x]);
  }
  return out;
}

std::optional<std::vector<MoveDescriptor>> braid_class_search(
    const BraidWord& start, const std::function<bool(const BraidWord&)>& goal,
    size_t max_nodes) {
  if (goal(start)) return std::vector<MoveDescriptor>{};
  std::map<std::vector<int>, std::pair<std::vector<int>, MoveDescriptor>> parent;
  std::deque<BraidWord> queue;
  parent.emplace(start.letters, std::make_pair(std::vector<int>{}, MoveDescriptor{MoveKind::Commute, 0}));
  queue.push_back(start);
  while (!queue.empty()) {
    BraidWord cur = queue.front();
    queue.pop_front();
    for (const auto& [mv, next] : braid_move_neighbors(cur)) {
      if (mv.kind == MoveKind::Trivalent) continue;  // length-preserving only
      if (parent.count(next.letters)) continue;
      parent.emplace(next.letters, std::make_pair(cur.letters, mv));
      if (goal(next)) {
        std::vector<MoveDescriptor> path;
        std::vector<int> at = next.letters;
        while (at != start.letters) {
          auto& [prev, m] = parent.at(at);
          path.push_back(m);
          at = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (parent.size() > max_nodes) throw InternalError("braid_class_search exceeded node budget");
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace braidvar
