#include "doctest.h"

#include "braidvar/braid_word.hpp"

#include <random>

using namespace braidvar;

namespace {

BraidWord rand_word(int n, int len, std::mt19937_64& gen) {
  std::vector<int> l;
  for (int i = 0; i < len; ++i) l.push_back(1 + gen() % (n - 1));
  return BraidWord(n, std::move(l));
}

// Exponential-time oracle: the Demazure product is the permutation of the
// longest reduced subword.
Permutation demazure_by_subwords(const BraidWord& b) {
  int len = b.length();
  Permutation best(b.strands);
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    Permutation w(b.strands);
    int wl = 0;
    bool reduced = true;
    for (int i = 0; i < len && reduced; ++i) {
      if (!(mask & (1u << i))) continue;
      if (w.then_transposition_increases_length(b.letters[i])) {
        w = w.then_transposition(b.letters[i]);
        ++wl;
      } else {
        reduced = false;
      }
    }
    if (reduced && wl > best.length()) best = w;
  }
  return best;
}

}  // namespace

TEST_CASE("word parsing, validation") {
  auto b = parse_braid_word("1 1 2 1 2");
  CHECK(b.strands == 3);
  CHECK(b.length() == 5);
  CHECK(b.str() == "1 1 2 1 2");
  CHECK(parse_braid_word("1,3", 4).letters == std::vector<int>{1, 3});
  CHECK_THROWS_AS(parse_braid_word("3", 3), ParseError);
  CHECK(parse_braid_word("", 4).length() == 0);
}

TEST_CASE("coxeter projection examples") {
  CHECK(coxeter_projection(parse_braid_word("1 2 1", 3)).one_line() == std::vector<int>{3, 2, 1});
  CHECK(coxeter_projection(parse_braid_word("", 4)).is_identity());
  CHECK(coxeter_projection(parse_braid_word("1 1", 2)).is_identity());
}

TEST_CASE("demazure product examples") {
  CHECK(demazure_product(parse_braid_word("1 1 1 2 1 2 1 2", 3)) == Permutation::longest(3));
  CHECK(demazure_product(parse_braid_word("", 3)).is_identity());
  CHECK(demazure_product(parse_braid_word("1 1", 2)) == Permutation::transposition(2, 1));
}

TEST_CASE("demazure product agrees with longest-subword oracle") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + gen() % 3;
    auto b = rand_word(n, 1 + gen() % 8, gen);
    CHECK(demazure_product(b) == demazure_by_subwords(b));
  }
}

TEST_CASE("minimal lift examples") {
  CHECK(minimal_lift(Permutation::longest(3)).str() == "1 2 1");
  CHECK(minimal_lift(Permutation::identity(3)).length() == 0);
  CHECK(minimal_lift(Permutation::from_one_line({2, 1, 3})).str() == "1");
}

TEST_CASE("minimal lift is a reduced word and lex-minimal on S4") {
  // exhaustive over S4: projection matches, length matches, lex-min among
  // all reduced words found by breadth-first enumeration
  std::vector<int> base = {1, 2, 3, 4};
  std::sort(base.begin(), base.end());
  do {
    Permutation w = Permutation::from_one_line(base);
    BraidWord lift = minimal_lift(w);
    CHECK(coxeter_projection(lift) == w);
    CHECK(lift.length() == w.length());
    // descent-based DFS collecting the lexicographically first reduced word
    std::vector<int> best;
    std::function<void(Permutation, std::vector<int>&)> dfs = [&](Permutation v,
                                                                  std::vector<int>& acc) {
      if (!best.empty()) return;  // first found in lex DFS order is lex-min
      if (v.is_identity()) {
        best = acc;
        return;
      }
      for (int i = 1; i < v.size(); ++i) {
        if (v.one_line()[i - 1] > v.one_line()[i]) {
          acc.push_back(i);
          std::vector<int> img = v.one_line();
          std::swap(img[i - 1], img[i]);
          dfs(Permutation::from_one_line(img), acc);
          if (!best.empty()) return;
          acc.pop_back();
        }
      }
    };
    std::vector<int> acc;
    dfs(w, acc);
    CHECK(lift.letters == best);
  } while (std::next_permutation(base.begin(), base.end()));
}

TEST_CASE("cyclic rotation examples") {
  CHECK(cyclic_rotate(parse_braid_word("1 2 2 1", 3)).str() == "2 2 1 2");
  CHECK(cyclic_rotate(parse_braid_word("1", 2)).str() == "1");
  CHECK(cyclic_rotate(parse_braid_word("2 1", 3)).str() == "1 1");
  CHECK_THROWS_AS(cyclic_rotate(parse_braid_word("", 3)), EmptyWord);
}

TEST_CASE("braid move neighbors") {
  auto moves1 = braid_move_neighbors(parse_braid_word("1 1 2", 3));
  REQUIRE(moves1.size() == 1);
  CHECK(moves1[0].first.kind == MoveKind::Trivalent);
  CHECK(moves1[0].first.pos == 1);
  CHECK(moves1[0].second.str() == "1 2");

  auto moves2 = braid_move_neighbors(parse_braid_word("1 2 1", 3));
  REQUIRE(moves2.size() == 1);
  CHECK(moves2[0].first.kind == MoveKind::Hexavalent);
  CHECK(moves2[0].first.pos == 1);
  CHECK(moves2[0].second.str() == "2 1 2");

  auto moves3 = braid_move_neighbors(parse_braid_word("1 3", 4));
  REQUIRE(moves3.size() == 1);
  CHECK(moves3[0].first.kind == MoveKind::Commute);
  CHECK(moves3[0].second.str() == "3 1");
}

TEST_CASE("demazure product is invariant under word-graph arrows") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + gen() % 3;
    auto b = rand_word(n, 2 + gen() % 8, gen);
    auto d = demazure_product(b);
    for (const auto& [mv, next] : braid_move_neighbors(b)) CHECK(demazure_product(next) == d);
  }
}

TEST_CASE("demazure length is monotone under right append") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + gen() % 4;
    auto b = rand_word(n, gen() % 8, gen);
    int i = 1 + gen() % (n - 1);
    auto longer = b;
    longer.letters.push_back(i);
    CHECK(demazure_product(longer).length() >= demazure_product(b).length());
  }
}

TEST_CASE("essential crossings examples") {
  CHECK(essential_crossings(parse_braid_word("1 2 1 1", 3)) == std::set<int>{1, 2});
  CHECK(essential_crossings(parse_braid_word("1 2 1", 3)) == std::set<int>{1, 2, 3});
  CHECK(essential_crossings(parse_braid_word("1 1", 2)).empty());
}

TEST_CASE("closure components") {
  auto b = parse_braid_word("1 1 2 3 2 4 1 3 2 3 2 1 1 2", 5);
  auto part = closure_components(b, ClosureTwist::None);
  CHECK(part.str() == "{1,4} {2,5} {3}");

  auto grass = minimal_lift(Permutation::from_one_line({3, 4, 5, 1, 2}));
  CHECK(closure_components(grass, ClosureTwist::None).block_count() == 1);

  CHECK(closure_components(parse_braid_word("", 3), ClosureTwist::None) ==
        StrandPartition::singletons(3));
}

TEST_CASE("closure block count equals cycle count") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + gen() % 4;
    auto b = rand_word(n, gen() % 9, gen);
    CHECK(closure_components(b, ClosureTwist::None).block_count() ==
          static_cast<int>(coxeter_projection(b).cycle_type().size()));
    auto twisted = coxeter_projection(b).then(Permutation::longest(n));
    CHECK(closure_components(b, ClosureTwist::W0).block_count() ==
          static_cast<int>(twisted.cycle_type().size()));
  }
}

TEST_CASE("rotation preserves the twisted cycle type") {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + gen() % 4;
    auto b = rand_word(n, 1 + gen() % 8, gen);
    auto w0 = Permutation::longest(n);
    auto before = coxeter_projection(b).then(w0).cycle_type();
    auto after = coxeter_projection(cyclic_rotate(b)).then(w0).cycle_type();
    CHECK(before == after);
  }
}

TEST_CASE("gamma components") {
  CHECK(gamma_components(parse_braid_word("", 3)) == 3);
  CHECK(gamma_components(parse_braid_word("1 2 2 1 2", 3)) == 1);
  CHECK(gamma_components(parse_braid_word("1 1", 4)) == 3);

  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + gen() % 4;
    auto b = rand_word(n, gen() % 10, gen);
    std::set<int> present(b.letters.begin(), b.letters.end());
    int missing = (n - 1) - static_cast<int>(present.size());
    CHECK(gamma_components(b) == missing + 1);
  }
}

TEST_CASE("braid class search finds a braid-equivalent word") {
  auto b = parse_braid_word("1 2 1", 3);
  auto target = parse_braid_word("2 1 2", 3);
  auto path = braid_class_search(b, [&](const BraidWord& w) { return w == target; });
  REQUIRE(path.has_value());
  BraidWord cur = b;
  for (const auto& m : *path) cur = apply_word_move(cur, m);
  CHECK(cur == target);

  auto none = braid_class_search(b, [](const BraidWord& w) { return w.length() == 99; });
  CHECK(!none.has_value());
}

TEST_CASE("strand partition helpers") {
  StrandPartition p(4, {{1, 3}, {2}, {4}});
  CHECK(p.block_of(3) == 0);
  CHECK(p.refines(StrandPartition(4, {{1, 2, 3}, {4}})));
  CHECK(!StrandPartition(4, {{1, 2, 3}, {4}}).refines(p));
  auto r = p.common_refinement(StrandPartition(4, {{1, 2}, {3, 4}}));
  CHECK(r == StrandPartition(4, {{1}, {2}, {3}, {4}}));
}
