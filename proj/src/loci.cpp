#include "braidvar/loci.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"

namespace braidvar {

namespace {

int spec_dimension(const std::vector<BraidWord>& sub_words) {
  int d = 0;
  for (const auto& w : sub_words) d += w.length() - demazure_product(w).length();
  return d;
}

std::vector<int> inter_block_positions(const BlockScan& scan) {
  std::vector<int> out;
  for (size_t j = 0; j < scan.crossing_block.size(); ++j)
    if (scan.crossing_block[j] < 0) out.push_back(static_cast<int>(j) + 1);
  return out;
}

StabilizerComponent make_component(const BraidWord& b, const StrandPartition& partition) {
  BlockScan scan = scan_blocks(b, partition);
  StabilizerComponent c;
  c.partition = partition;
  c.sub_words = scan.sub_words;
  c.dimension = spec_dimension(scan.sub_words);
  c.zero_positions = inter_block_positions(scan);
  return c;
}

// All ways to split `count` items into two nonempty unordered parts, as
// bitmasks over items with bit 0 always in part one.
std::vector<unsigned> two_block_masks(int count) {
  std::vector<unsigned> masks;
  for (unsigned m = 1; m + 1 < (1u << (count - 1)) + 1; ++m) {
    unsigned full = (m << 1) | 1u;  // item 0 in part one
    if (full == (1u << count) - 1) continue;  // part two empty
    masks.push_back(full);
  }
  // include the split {item0} vs rest
  masks.push_back(1u);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

StrandPartition partition_from_orbit_mask(int n, const std::vector<std::vector<int>>& orbits,
                                          unsigned mask,
                                          const std::vector<std::vector<int>>& fixed_blocks) {
  std::vector<std::vector<int>> blocks(2);
  for (size_t k = 0; k < orbits.size(); ++k) {
    auto& dst = (mask >> k) & 1u ? blocks[0] : blocks[1];
    for (int x : orbits[k]) dst.push_back(x);
  }
  for (const auto& fixed : fixed_blocks) blocks.push_back(fixed);
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const std::vector<int>& v) { return v.empty(); }),
               blocks.end());
  return StrandPartition(n, std::move(blocks));
}

void dedupe_by_zero_pattern(std::vector<StabilizerComponent>& comps) {
  std::set<std::vector<int>> seen;
  std::vector<StabilizerComponent> out;
  for (auto& c : comps) {
    if (!c.empty && !seen.insert(c.zero_positions).second) continue;
    out.push_back(std::move(c));
  }
  comps = std::move(out);
}

}  // namespace

std::string StabilizerComponent::str() const {
  std::string s = partition.str() + " dim=" + std::to_string(dimension);
  if (empty) s += " (empty)";
  return s;
}

std::string StabilizerComponent::to_json() const {
  nlohmann::json j;
  for (const auto& blk : partition.blocks) j["partition"].push_back(blk);
  for (const auto& w : sub_words) j["sub_words"].push_back(w.str());
  j["dimension"] = dimension;
  j["empty"] = empty;
  j["zero_positions"] = zero_positions;
  return j.dump();
}

std::vector<StabilizerComponent> stabilizer_components_bs(const BraidWord& b) {
  int n = b.strands;
  // parabolic bands: maximal strand intervals not separated by a missing
  // generator
  std::vector<bool> present(n, false);
  for (int x : b.letters) present[x] = true;
  std::vector<std::vector<int>> bands;
  std::vector<int> cur = {1};
  for (int s = 2; s <= n; ++s) {
    if (present[s - 1]) {
      cur.push_back(s);
    } else {
      bands.push_back(cur);
      cur = {s};
    }
  }
  bands.push_back(cur);

  auto closure = closure_components(b, ClosureTwist::None);
  std::vector<StabilizerComponent> out;
  for (size_t band = 0; band < bands.size(); ++band) {
    // closure components inside this band
    std::set<int> band_set(bands[band].begin(), bands[band].end());
    std::vector<std::vector<int>> orbits;
    for (const auto& orb : closure.blocks)
      if (band_set.count(orb[0])) orbits.push_back(orb);
    if (orbits.size() < 2) continue;
    std::vector<std::vector<int>> fixed;
    for (size_t other = 0; other < bands.size(); ++other)
      if (other != band) fixed.push_back(bands[other]);
    for (unsigned mask : two_block_masks(static_cast<int>(orbits.size())))
      out.push_back(make_component(b, partition_from_orbit_mask(n, orbits, mask, fixed)));
  }
  dedupe_by_zero_pattern(out);
  std::sort(out.begin(), out.end(), [](const StabilizerComponent& a, const StabilizerComponent& c) {
    return a.partition < c.partition;
  });
  return out;
}

std::vector<StabilizerComponent> t_stabilizer_components_braid(const BraidWord& b) {
  if (!(demazure_product(b) == Permutation::longest(b.strands)))
    throw DemazureNotLongest("t_stabilizer_components_braid requires delta(beta) = w0");
  auto closure = closure_components(b, ClosureTwist::W0);
  std::vector<StabilizerComponent> out;
  if (closure.block_count() < 2) return out;
  for (unsigned mask : two_block_masks(closure.block_count())) {
    auto partition = partition_from_orbit_mask(b.strands, closure.blocks, mask, {});
    StabilizerComponent c = make_component(b, partition);
    for (const auto& w : c.sub_words)
      if (!(demazure_product(w) == Permutation::longest(w.strands))) c.empty = true;
    if (c.empty) c.dimension = 0;
    out.push_back(std::move(c));
  }
  dedupe_by_zero_pattern(out);
  std::sort(out.begin(), out.end(), [](const StabilizerComponent& a, const StabilizerComponent& c) {
    return a.partition < c.partition;
  });
  return out;
}

StabilizerComponent component_intersections(const BraidWord& b,
                                            const std::vector<StrandPartition>& partitions,
                                            ClosureTwist twist) {
  if (partitions.empty()) throw Unsupported("need at least one partition");
  StrandPartition refined = partitions[0];
  for (size_t i = 1; i < partitions.size(); ++i)
    refined = refined.common_refinement(partitions[i]);
  StabilizerComponent c = make_component(b, refined);
  if (twist == ClosureTwist::W0) {
    if (!(demazure_product(b) == Permutation::longest(b.strands)))
      throw DemazureNotLongest("braid-variety intersections require delta(beta) = w0");
    for (const auto& w : c.sub_words)
      if (!(demazure_product(w) == Permutation::longest(w.strands))) c.empty = true;
    if (c.empty) c.dimension = 0;
  }
  return c;
}

std::string DeepLocusReport::to_json() const {
  nlohmann::json j;
  j["empty"] = empty;
  j["smooth"] = smooth;
  j["irreducible"] = irreducible;
  j["equidimensional"] = equidimensional;
  j["components"] = nlohmann::json::array();
  for (const auto& c : components) {
    nlohmann::json jc;
    jc["dynkin"] = c.dynkin;
    jc["frozen"] = c.frozen_count;
    jc["dimension"] = c.dimension;
    if (c.partition.n > 0)
      for (const auto& blk : c.partition.blocks) jc["partition"].push_back(blk);
    for (const auto& w : c.sub_words) jc["sub_words"].push_back(w.str());
    j["components"].push_back(jc);
  }
  j["intersections"] = intersections;
  return j.dump(2);
}

DeepLocusReport deep_locus_two_strand(int ell) {
  if (ell < 1) throw Unsupported("need ell >= 1");
  DeepLocusReport r;
  r.empty = (ell % 2 == 0);
  if (!r.empty) {
    DeepComponentInfo c;
    c.dynkin = "A0";
    c.frozen_count = 0;
    c.dimension = 0;
    r.components.push_back(c);
  }
  return r;
}

BraidWord beta_ab(int a, int b) {
  std::vector<int> letters(a, 1);
  for (int k = 0; k < b; ++k) {
    letters.push_back(2);
    letters.push_back(1);
  }
  return BraidWord(3, std::move(letters));
}

BraidWord beta_bs_word(int a, int b) {
  if (b < 2) throw Unsupported("Bott-Samelson companion needs b >= 2");
  std::vector<int> letters(a, 1);
  for (int k = 0; k < b - 2; ++k) {
    letters.push_back(2);
    letters.push_back(1);
  }
  letters.push_back(2);
  return BraidWord(3, std::move(letters));
}

namespace {

// Dynkin label of a two-strand Bott-Samelson factor of length L, A_{L-1}.
std::string a_label(int rank) { return "A" + std::to_string(std::max(rank, 0)); }

// Enrich formula components with the partitions and sub-words of the
// Bott-Samelson machinery. The machinery reports dim = sum(|b_j| - l(delta));
// the cluster dimension of a component adds the one unit of l(delta) carried
// by its unique two-stranded block.
void attach_bs_data(DeepLocusReport& report, int a, int b) {
  if (b < 2) return;
  auto comps = stabilizer_components_bs(beta_bs_word(a, b));
  if (comps.size() != report.components.size())
    throw InternalError("component count disagrees with the Bott-Samelson machinery");
  std::sort(comps.begin(), comps.end(),
            [](const StabilizerComponent& x, const StabilizerComponent& y) {
              return x.dimension < y.dimension;
            });
  std::vector<DeepComponentInfo*> infos;
  for (auto& info : report.components) infos.push_back(&info);
  std::sort(infos.begin(), infos.end(),
            [](const DeepComponentInfo* x, const DeepComponentInfo* y) {
              return x->dimension < y->dimension;
            });
  for (size_t i = 0; i < comps.size(); ++i) {
    if (infos[i]->dimension != comps[i].dimension + 1)
      throw InternalError("component dimensions disagree with the machinery");
    infos[i]->partition = comps[i].partition;
    infos[i]->sub_words = comps[i].sub_words;
  }
}

}  // namespace

DeepLocusReport deep_locus_xab(int a, int b) {
  if (a < 1 || b < 0) throw Unsupported("deep_locus_xab needs a >= 1, b >= 0");
  DeepLocusReport r;
  if (b <= 3) {
    // type-A reductions: X(a,0) = X(a,1) of type A_{a-2} with one frozen,
    // X(a,2) of type A_{a-1} with two, X(a,3) of type A_{a+1} with two
    int rank, frozen;
    if (b <= 1) {
      rank = a - 2;
      frozen = 1;
    } else if (b == 2) {
      rank = a - 1;
      frozen = 2;
    } else {
      rank = a + 1;
      frozen = 2;
    }
    r.empty = (rank % 2 == 0);  // empty iff the A-rank is even
    if (!r.empty) {
      DeepComponentInfo c;
      c.dynkin = "A0";
      c.frozen_count = frozen - 1;
      c.dimension = frozen - 1;
      r.components.push_back(c);
      attach_bs_data(r, a, b);
    }
    return r;
  }
  bool a_odd = (a % 2 == 1);
  int bmod = b % 3;
  if (a_odd && (bmod == 0 || bmod == 2)) {
    r.empty = true;
    return r;
  }
  r.empty = false;
  if (a_odd) {
    // three components: A_{2(b-1)/3 - 1} twice and A_{a + (2b-5)/3 - 1}
    int small = 2 * (b - 1) / 3 - 1;
    int large = a + (2 * b - 5) / 3 - 1;
    for (int rank : {small, small, large}) {
      DeepComponentInfo c;
      c.dynkin = a_label(rank);
      c.frozen_count = 1;
      c.dimension = rank + 1;
      r.components.push_back(c);
    }
    r.smooth = false;
    r.irreducible = false;
    r.equidimensional = (a == 1);
    r.intersections = {"C1&C2 = point", "C1&C3 = point", "C2&C3 = point"};
  } else {
    int rank;
    if (bmod == 0)
      rank = 2 * (b - 3) / 3;
    else if (bmod == 1)
      rank = a + 2 * (b - 4) / 3;
    else
      // For b = 2 mod 3 the two-strand orbit excludes strand 1, so the
      // sigma_1 block contributes no internal crossings and the rank does
      // not depend on a.
      rank = 2 * (b - 2) / 3;
    DeepComponentInfo c;
    c.dynkin = a_label(rank);
    c.frozen_count = 1;
    c.dimension = rank + 1;
    r.components.push_back(c);
    r.smooth = true;
    r.irreducible = true;
    r.equidimensional = true;
  }
  attach_bs_data(r, a, b);
  return r;
}

DeepLocusReport deep_locus_finite_type(const std::string& label, int n) {
  if (label == "A") {
    if (n < 1) throw Unsupported("A-type rank must be positive");
    DeepLocusReport r = deep_locus_two_strand(n + 2);  // X(sigma^{n+2}) has type A_n
    return r;
  }
  if (label == "D") {
    if (n < 4) throw Unsupported("D-type rank must be at least 4");
    return deep_locus_xab(n - 3, 4);
  }
  if (label == "E6") return deep_locus_xab(1, 5);
  if (label == "E7") return deep_locus_xab(2, 5);
  if (label == "E8") return deep_locus_xab(1, 6);
  throw Unsupported("unsupported Dynkin label: " + label);
}

bool positroid_stabilizer_empty(int k, int n) {
  if (k < 1 || k >= n) throw Unsupported("need 1 <= k < n");
  return std::gcd(k, n) == 1;
}

Permutation grassmannian_permutation(int k, int n) {
  if (k < 1 || k >= n) throw Unsupported("need 1 <= k < n");
  std::vector<int> img;
  for (int i = n - k + 1; i <= n; ++i) img.push_back(i);
  for (int i = 1; i <= n - k; ++i) img.push_back(i);
  return Permutation::from_one_line(img);
}

std::vector<long long> positroid_data_xab(int a, int b) {
  if (a < 1 || b < 1) throw Unsupported("need a, b >= 1");
  int n = a + b + 1;
  std::vector<long long> f(n);
  for (int x = 1; x <= n; ++x) {
    if (x <= a - 1)
      f[x - 1] = x + 2;
    else if (x <= n - 1)
      f[x - 1] = x + 3;
    else
      f[x - 1] = x + a + 2;
  }
  return f;
}

BraidWord positroid_juggling_braid(int a, int b) {
  auto f = positroid_data_xab(a, b);
  int n = a + b + 1;
  struct Arc {
    Rat center, radius;
    long long from, to;
  };
  std::vector<Arc> arcs;
  for (int x = 1; x <= n; ++x)
    arcs.push_back({Rat(x + f[x - 1], 2), Rat(f[x - 1] - x, 2), x, f[x - 1]});

  struct Crossing {
    Rat col;
    int i, j;
  };
  std::vector<Crossing> crossings;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // arcs interleave iff x_i < x_j < f_i < f_j
      if (!(arcs[j].from < arcs[i].to && arcs[i].to < arcs[j].to)) continue;
      const Rat &c1 = arcs[i].center, &r1 = arcs[i].radius;
      const Rat &c2 = arcs[j].center, &r2 = arcs[j].radius;
      Rat col = ((r1 * r1 - r2 * r2) / (c2 - c1) + c1 + c2) / 2;
      crossings.push_back({col, i, j});
    }
  std::stable_sort(crossings.begin(), crossings.end(),
                   [](const Crossing& a, const Crossing& c) { return a.col < c.col; });
  std::vector<int> letters;
  for (const auto& cr : crossings) {
    Rat h2 = arcs[cr.i].radius * arcs[cr.i].radius -
             (cr.col - arcs[cr.i].center) * (cr.col - arcs[cr.i].center);
    int higher = 0;
    for (int k = 0; k < n; ++k) {
      if (k == cr.i || k == cr.j) continue;
      if (!(Rat(arcs[k].from) < cr.col && cr.col < Rat(arcs[k].to))) continue;
      Rat hk = arcs[k].radius * arcs[k].radius -
               (cr.col - arcs[k].center) * (cr.col - arcs[k].center);
      if (hk > h2) ++higher;
    }
    letters.push_back(higher + 1);
  }
  return BraidWord(3, std::move(letters));
}

}  // namespace braidvar
