#include "braidvar/chart_finder.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "json.hpp"

namespace braidvar {

namespace {

bool is_reduced(const BraidWord& w) { return w.length() == demazure_product(w).length(); }

// Parse sigma1^a (sigma2 sigma1)^b; nullopt when the word has another shape.
std::optional<std::pair<int, int>> parse_ab_form(const BraidWord& w) {
  if (w.strands != 3) return std::nullopt;
  int a = 0;
  int l = w.length();
  while (a < l && w.letters[a] == 1) ++a;
  int rest = l - a;
  if (rest % 2 != 0) return std::nullopt;
  for (int k = 0; k < rest / 2; ++k) {
    if (w.letters[a + 2 * k] != 2 || w.letters[a + 2 * k + 1] != 1) return std::nullopt;
  }
  return std::make_pair(a, rest / 2);
}

struct Reduction {
  std::vector<StageStep> steps;
  BraidWord word;
  RatPoint point;
};

void apply_numeric_moves(Reduction& red, const std::vector<WeaveMove>& moves) {
  BraidWord word = red.word;
  std::vector<Rat> values = red.point.coords;
  for (const auto& m : moves) {
    auto r = apply_move(word, values, m);
    word = r.word;
    values = r.values;
    red.steps.push_back({false, m, word, RatPoint(values)});
  }
  red.word = word;
  red.point = RatPoint(values);
}

// Search for a braid-move path making some adjacent equal pair carry the
// original coordinate `anchor` on its right arm, then contract there. The
// provenance of each position is tracked exactly: hexavalent moves emit one
// mixed value, commutations and the outer positions stay pure.
std::optional<Reduction> reduce_at_anchor(const BraidWord& word, const RatPoint& p, int anchor) {
  using State = std::pair<std::vector<int>, std::vector<int>>;  // letters, provenance
  std::vector<int> prov(word.length());
  for (int i = 0; i < word.length(); ++i) prov[i] = i + 1;

  auto pair_pos = [](const State& s, int anchor_id) {
    for (size_t q = 0; q + 1 < s.first.size(); ++q)
      if (s.first[q] == s.first[q + 1] && s.second[q + 1] == anchor_id)
        return static_cast<int>(q) + 1;  // 1-indexed move position
    return 0;
  };

  State start{word.letters, prov};
  std::map<State, std::pair<State, WeaveMove>> parent;
  std::deque<State> queue;
  parent.emplace(start, std::make_pair(State{}, WeaveMove{MoveKind::Commute, 0}));
  queue.push_back(start);
  std::optional<State> goal;
  if (pair_pos(start, anchor) > 0) goal = start;
  constexpr size_t kNodeBudget = 200000;
  while (!goal && !queue.empty()) {
    State cur = queue.front();
    queue.pop_front();
    BraidWord cw(word.strands, cur.first);
    for (const auto& [mv, next_word] : braid_move_neighbors(cw)) {
      if (mv.kind == MoveKind::Trivalent) continue;
      State next{next_word.letters, cur.second};
      int q = mv.pos - 1;
      if (mv.kind == MoveKind::Commute) {
        std::swap(next.second[q], next.second[q + 1]);
      } else {
        int p1 = cur.second[q], p3 = cur.second[q + 2];
        next.second[q] = p3;
        next.second[q + 1] = 0;  // mixed
        next.second[q + 2] = p1;
      }
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(cur, mv));
      if (pair_pos(next, anchor) > 0) {
        goal = next;
        break;
      }
      if (parent.size() > kNodeBudget) return std::nullopt;
      queue.push_back(next);
    }
  }
  if (!goal) return std::nullopt;
  std::vector<WeaveMove> path;
  State at = *goal;
  while (!(at == start)) {
    auto& [prev, mv] = parent.at(at);
    path.push_back(mv);
    at = prev;
  }
  std::reverse(path.begin(), path.end());

  Reduction red;
  red.word = word;
  red.point = p;
  apply_numeric_moves(red, path);
  int pos = pair_pos(*goal, anchor);
  if (red.point.at(pos + 1) != p.at(anchor))
    throw InternalError("provenance tracking lost the anchored coordinate");
  if (red.point.at(pos + 1) == 0) return std::nullopt;
  apply_numeric_moves(red, {WeaveMove{MoveKind::Trivalent, pos}});
  return red;
}

// All single-trivalent reductions reachable by braid moves, with nonzero
// s-variable, in deterministic search order.
std::vector<Reduction> all_trivalent_reductions(const BraidWord& word, const RatPoint& p) {
  std::vector<Reduction> out;
  std::map<std::vector<int>, std::vector<WeaveMove>> paths;
  std::deque<BraidWord> queue;
  paths.emplace(word.letters, std::vector<WeaveMove>{});
  queue.push_back(word);
  while (!queue.empty()) {
    BraidWord cur = queue.front();
    queue.pop_front();
    const auto& path = paths.at(cur.letters);
    for (int q = 0; q + 1 < cur.length(); ++q) {
      if (cur.letters[q] != cur.letters[q + 1]) continue;
      Reduction red;
      red.word = word;
      red.point = p;
      apply_numeric_moves(red, path);
      if (red.point.at(q + 2) == 0) continue;
      apply_numeric_moves(red, {WeaveMove{MoveKind::Trivalent, q + 1}});
      out.push_back(std::move(red));
    }
    for (const auto& [mv, next] : braid_move_neighbors(cur)) {
      if (mv.kind == MoveKind::Trivalent) continue;
      if (paths.count(next.letters)) continue;
      auto next_path = path;
      next_path.push_back(mv);
      paths.emplace(next.letters, std::move(next_path));
      queue.push_back(next);
    }
  }
  return out;
}

// Braid moves plus cyclic rotations until the word takes the
// sigma1^a (sigma2 sigma1)^b shape.
std::optional<Reduction> normalize_to_ab(const BraidWord& word, const RatPoint& p) {
  Reduction red;
  red.word = word;
  red.point = p;
  for (int rot = 0; rot <= word.length(); ++rot) {
    auto path = braid_class_search(
        red.word, [](const BraidWord& w) { return parse_ab_form(w).has_value(); });
    if (path) {
      apply_numeric_moves(red, *path);
      return red;
    }
    if (!(demazure_product(red.word) == Permutation::longest(red.word.strands)))
      return std::nullopt;  // cannot rotate safely
    auto [rw, rp] = rotate_point(red.word, red.point);
    red.word = rw;
    red.point = rp;
    red.steps.push_back({true, WeaveMove{MoveKind::Commute, 0}, rw, rp});
  }
  return std::nullopt;
}

std::mt19937_64 seeded(uint64_t seed) { return std::mt19937_64(seed * 0x9e3779b97f4a7c15ull + 1); }

Rat small_nonzero(std::mt19937_64& gen) {
  int num = 1 + int(gen() % 5);
  if (gen() & 1) num = -num;
  int den = 1 + int(gen() % 3);
  return Rat(num, den);
}

}  // namespace

std::pair<BraidWord, RatPoint> rotate_point(const BraidWord& b, const RatPoint& p) {
  int n = b.strands;
  if (b.length() == 0) throw EmptyWord("cannot rotate the empty word");
  if (!(demazure_product(b) == Permutation::longest(n)))
    throw Unsupported("rotation transport requires delta(beta) = w0");
  if (!in_braid_variety(b, p)) throw NotOnVariety("rotation transport requires a variety point");
  BraidWord rotated = cyclic_rotate(b);
  // Translate the chain by g = B_{i1}(z1)^{-1}: the flags of the shifted
  // chain are g * (running products), and one step to the w0 coordinate flag
  // is appended.
  RatMatrix g = braid_block_inverse(b.letter(1), p.at(1), n);
  FlagChain chain;
  chain.word = rotated;
  RatMatrix acc = braid_block(b.letter(1), p.at(1), n);
  chain.flags.push_back(Flag::standard(n));  // g * A_1
  for (int k = 2; k <= b.length(); ++k) {
    acc = acc * braid_block(b.letter(k), p.at(k), n);
    chain.flags.push_back(Flag::of_matrix(g * acc));
  }
  chain.flags.push_back(Flag::coordinate(Permutation::longest(n)));
  RatPoint out = chain_to_point(chain);
  if (!in_braid_variety(rotated, out))
    throw InternalError("rotation transport left the braid variety");
  return {rotated, out};
}

std::string ChartCertificate::to_json() const {
  nlohmann::json j;
  j["input_word"] = input_word.str();
  j["input_point"] = input_point.str();
  j["final_word"] = final_word.str();
  j["final_point"] = final_point.str();
  j["stages"] = nlohmann::json::array();
  for (const auto& st : stages) {
    nlohmann::json js;
    js["word"] = st.start_word.str();
    js["point"] = st.start_point.str();
    js["anchor"] = st.anchor;
    js["steps"] = nlohmann::json::array();
    for (const auto& step : st.steps) {
      nlohmann::json jt;
      jt["action"] = step.rotation ? "rotate" : move_str(step.move);
      jt["word"] = step.word_after.str();
      jt["layer"] = step.point_after.str();
      js["steps"].push_back(jt);
    }
    j["stages"].push_back(js);
  }
  return j.dump(2);
}

bool verify_certificate(const ChartCertificate& cert) {
  try {
    BraidWord word = cert.input_word;
    RatPoint point = cert.input_point;
    if (!in_braid_variety(word, point)) return false;
    for (const auto& st : cert.stages) {
      if (!(st.start_word == word) || !(st.start_point == point)) return false;
      for (const auto& step : st.steps) {
        if (step.rotation) {
          auto [rw, rp] = rotate_point(word, point);
          word = rw;
          point = rp;
        } else {
          auto r = apply_move(word, point.coords, step.move);  // throws on vanishing s
          word = r.word;
          point = RatPoint(r.values);
        }
        if (!(word == step.word_after) || !(point == step.point_after)) return false;
      }
    }
    if (!(word == cert.final_word) || !(point == cert.final_point)) return false;
    // terminal chart check: the reduced word's variety is a single chart
    if (!is_reduced(word)) return false;
    return in_braid_variety(word, point);
  } catch (const Error&) {
    return false;
  }
}

namespace {

// Depth-first descent with memoized failures. A state succeeds when its word
// is reduced (the whole variety is a single chart); otherwise it succeeds
// when some single-trivalent reduction with nonzero s-variable leads to a
// successful state. Branches follow the right-to-left anchor scan with the
// residue skip list on beta(a,b)-shaped states; the exhaustive enumeration
// afterwards makes the search complete on the small type-A base cases.
struct DescentSearch {
  std::set<std::pair<std::vector<int>, std::string>> failed;
  long budget = 50000;

  static std::string point_key(const RatPoint& p) { return p.str(); }

  bool descend(const BraidWord& word, const RatPoint& point,
               std::vector<StageRecord>& trail) {
    if (is_reduced(word)) return true;
    auto key = std::make_pair(word.letters, point_key(point));
    if (failed.count(key)) return false;
    if (--budget <= 0)
      throw InternalError("chart search exceeded its node budget on " + word.str());

    auto try_candidate = [&](Reduction&& red, int anchor) {
      if (auto norm = normalize_to_ab(red.word, red.point)) {
        for (auto& s : norm->steps) red.steps.push_back(std::move(s));
        red.word = norm->word;
        red.point = norm->point;
      }
      StageRecord st;
      st.start_word = word;
      st.start_point = point;
      st.anchor = anchor;
      st.steps = std::move(red.steps);
      trail.push_back(std::move(st));
      if (descend(trail.back().steps.back().word_after,
                  trail.back().steps.back().point_after, trail))
        return true;
      trail.pop_back();
      return false;
    };

    if (auto shape = parse_ab_form(word)) {
      auto [ca, cb] = *shape;
      int l = word.length();
      std::set<int> skip = {1, ca + 1, ca + 2};
      if (cb % 3 == 0)
        for (int i = ca + 5; i <= ca + 2 * cb - 1; i += 3) skip.insert(i);
      std::vector<int> anchors;
      for (int i = l; i >= 2; --i)
        if (point.at(i) != 0 && !skip.count(i)) anchors.push_back(i);
      for (int i = l; i >= 2; --i)
        if (point.at(i) != 0 && skip.count(i)) anchors.push_back(i);
      for (int anchor : anchors) {
        auto red = reduce_at_anchor(word, point, anchor);
        if (red && try_candidate(std::move(*red), anchor)) return true;
      }
    }
    for (auto& red : all_trivalent_reductions(word, point))
      if (try_candidate(std::move(red), 0)) return true;
    failed.insert(std::move(key));
    return false;
  }
};

}  // namespace

FreeActionWitness find_chart(int a, int b, const RatPoint& p) {
  BraidWord word = beta_ab(a, b);
  if (p.size() != word.length()) throw Unsupported("point arity must match |beta(a,b)|");
  if (!in_braid_variety(word, p)) throw NotOnVariety("point is not on X(a,b)");
  if (!is_free_point(word, p)) {
    FreeActionWitness w;
    w.stabilizer = point_stabilizer(word, p);
    return w;
  }

  ChartCertificate cert;
  cert.input_word = word;
  cert.input_point = p;
  DescentSearch search;
  if (!search.descend(word, p, cert.stages))
    throw InternalError("chart search stalled on a free point of X(" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
  if (cert.stages.empty()) {
    cert.final_word = word;
    cert.final_point = p;
  } else {
    cert.final_word = cert.stages.back().steps.back().word_after;
    cert.final_point = cert.stages.back().steps.back().point_after;
  }
  if (!verify_certificate(cert)) throw InternalError("constructed certificate failed to replay");
  FreeActionWitness w;
  w.chart = std::move(cert);
  return w;
}

FreeActionWitness find_chart_two_strand(int ell, const RatPoint& p) {
  if (ell < 1) throw Unsupported("need ell >= 1");
  BraidWord word(2, std::vector<int>(ell, 1));
  if (p.size() != ell) throw Unsupported("point arity must be ell");
  if (!in_braid_variety(word, p)) throw NotOnVariety("point is not on X(sigma^ell)");
  if (!is_free_point(word, p)) {
    FreeActionWitness w;
    w.stabilizer = point_stabilizer(word, p);
    return w;
  }
  ChartCertificate cert;
  cert.input_word = word;
  cert.input_point = p;
  BraidWord cur = word;
  RatPoint point = p;
  while (cur.length() > 1) {
    int k = 0;
    for (int i = cur.length(); i >= 1; --i)
      if (point.at(i) != 0) {
        k = i;
        break;
      }
    if (k < 2) throw InternalError("two-strand descent found no usable coordinate");
    auto attempt = [&](int pos) {
      Reduction red;
      red.word = cur;
      red.point = point;
      apply_numeric_moves(red, {WeaveMove{MoveKind::Trivalent, pos}});
      return red;
    };
    Reduction red = attempt(k - 1);
    bool all_zero = std::all_of(red.point.coords.begin(), red.point.coords.end(),
                                [](const Rat& v) { return v == 0; });
    if (all_zero && red.word.length() > 1) {
      // the k-1 arm also carries a nonzero value in this configuration
      red = attempt(k - 2);
    }
    StageRecord st;
    st.start_word = cur;
    st.start_point = point;
    st.anchor = k;
    st.steps = std::move(red.steps);
    cert.stages.push_back(std::move(st));
    cur = red.word;
    point = red.point;
  }
  cert.final_word = cur;
  cert.final_point = point;
  if (!verify_certificate(cert)) throw InternalError("two-strand certificate failed to replay");
  FreeActionWitness w;
  w.chart = std::move(cert);
  return w;
}

RatPoint sample_chart_point(const BraidWord& b, uint64_t seed) {
  Weave weave = complete_weave(b);
  auto gen = seeded(seed);
  std::vector<Rat> values;
  for (int k = 0; k < weave.trivalent_count(); ++k) values.push_back(small_nonzero(gen));
  RatPoint p = lift_through_weave(weave, values);
  if (!in_braid_variety(b, p)) throw InternalError("sampled point left the variety");
  return p;
}

RatPoint complete_bs_point(int a, int b, const RatPoint& bs_point) {
  BraidWord bs = beta_bs_word(a, b);
  if (bs_point.size() != bs.length()) throw Unsupported("point arity must match the BS word");
  if (!in_double_bs(bs, bs_point))
    throw InvalidSubpoint("completion requires a Bott-Samelson point");
  int n = 3;
  FlagChain chain = point_to_chain(bs, bs_point);
  const RatMatrix& m = chain.flags.back().matrix();
  // X = F^2 treated inside <e2, e3>: the kernel of the first coordinate
  Rat c0 = m.at(0, 0), c1 = m.at(0, 1);
  if (c0 == 0 && c1 == 0) throw InternalError("degenerate flag for a Bott-Samelson point");
  std::vector<Rat> x(n);
  for (int r = 0; r < n; ++r) x[r] = c1 * m.at(r, 0) - c0 * m.at(r, 1);
  // G1 = (X, F^2), G2 = (X, <e2,e3>), G3 = coordinate flag of w0
  RatMatrix g1(n, n), g2(n, n);
  for (int r = 0; r < n; ++r) {
    g1.at(r, 0) = x[r];
    g2.at(r, 0) = x[r];
  }
  // complete G1 with a spanning column of F^2 and any third direction
  {
    int pick = (joint_column_rank(g1, 1, m, 1) == 2) ? 0 : 1;
    for (int r = 0; r < n; ++r) g1.at(r, 1) = m.at(r, pick);
    for (int third = 0; third < n; ++third) {
      RatMatrix cand(n, 1);
      cand.at(third, 0) = 1;
      if (joint_column_rank(g1, 2, cand, 1) == 3) {
        g1.at(third, 2) = 1;
        break;
      }
    }
  }
  // complete G2 inside <e2,e3> and with e1
  {
    RatMatrix e2(n, 1), e3(n, 1);
    e2.at(1, 0) = 1;
    e3.at(2, 0) = 1;
    int pick = (joint_column_rank(g2, 1, e2, 1) == 2) ? 1 : 2;
    g2.at(pick, 1) = 1;
    g2.at(0, 2) = 1;
  }
  FlagChain full;
  full.word = beta_ab(a, b);
  full.flags = chain.flags;
  full.flags.push_back(Flag::of_matrix(g1));
  full.flags.push_back(Flag::of_matrix(g2));
  full.flags.push_back(Flag::coordinate(Permutation::longest(n)));
  RatPoint out = chain_to_point(full);
  if (!in_braid_variety(full.word, out)) throw InternalError("completion left the braid variety");
  for (int k = 1; k <= bs.length(); ++k)
    if (out.at(k) != bs_point.at(k)) throw InternalError("completion changed the BS coordinates");
  return out;
}

RatPoint sample_deep_point(int a, int b, uint64_t seed) {
  auto report = deep_locus_xab(a, b);
  if (report.empty) throw NoDeepPoints("the deep locus of X(a,b) is empty");
  BraidWord bs = beta_bs_word(a, b);
  auto comps = stabilizer_components_bs(bs);
  if (comps.empty()) throw InternalError("nonempty deep locus without stabilizer components");
  const StabilizerComponent& comp = comps[seed % comps.size()];
  auto gen = seeded(seed);
  std::vector<RatPoint> subs;
  for (const auto& sub : comp.sub_words) {
    if (sub.strands == 1) {
      subs.emplace_back();
      continue;
    }
    // BS(sigma^m) on two strands = X(sigma^{m+1}) minus its first coordinate
    BraidWord lifted(2, std::vector<int>(sub.length() + 1, 1));
    RatPoint x = sample_chart_point(lifted, gen());
    RatPoint y(std::vector<Rat>(x.coords.begin() + 1, x.coords.end()));
    if (!in_double_bs(sub, y)) throw InternalError("two-strand sample missed BS");
    subs.push_back(std::move(y));
  }
  RatPoint embedded = stabilized_embed(bs, comp.partition, subs);
  RatPoint out = complete_bs_point(a, b, embedded);
  if (is_free_point(beta_ab(a, b), out))
    throw InternalError("deep sample has a free torus action");
  return out;
}

}  // namespace braidvar
