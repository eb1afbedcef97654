#include "doctest.h"

#include "braidvar/weave.hpp"

#include <random>

using namespace braidvar;

namespace {

BraidWord rand_word(int n, int len, std::mt19937_64& gen) {
  std::vector<int> l;
  for (int i = 0; i < len; ++i) l.push_back(1 + gen() % (n - 1));
  return BraidWord(n, std::move(l));
}

std::vector<Rat> rand_nonzero(int count, std::mt19937_64& gen) {
  std::vector<Rat> v;
  for (int i = 0; i < count; ++i) {
    int num = int(gen() % 9) - 4;
    if (num == 0) num = 5;
    v.push_back(Rat(num, 1 + int(gen() % 4)));
  }
  return v;
}

}  // namespace

TEST_CASE("trivalent opening reproduces the five-letter example") {
  auto word = parse_braid_word("1 1 2 1 2", 3);
  Ctx ctx = make_z_ctx(5, true);
  std::vector<LaurentPoly> zs;
  for (int k = 0; k < 5; ++k) zs.push_back(LaurentPoly::variable(ctx, k));
  auto r = apply_move(word, zs, WeaveMove{MoveKind::Trivalent, 1});
  REQUIRE(r.word.str() == "1 2 1 2");
  REQUIRE(r.values.size() == 4);
  auto z1 = zs[0], z2 = zs[1], z3 = zs[2], z4 = zs[3], z5 = zs[4];
  CHECK(r.values[0] == z1 - z2.monomial_inverse());
  CHECK(r.values[1] == z3 * z2.monomial_inverse());
  CHECK(r.values[2] == z2 * z4 - z3);
  CHECK(r.values[3] == z5 * z2 * z2 - z2);
  REQUIRE(r.s.has_value());
  CHECK(*r.s == z2);

  // numeric evaluation at (1,2,3,4,5)
  std::vector<Rat> nums = {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)};
  auto rn = apply_move(word, nums, WeaveMove{MoveKind::Trivalent, 1});
  CHECK(rn.values == std::vector<Rat>{Rat(1, 2), Rat(3, 2), Rat(5), Rat(18)});
  CHECK(*rn.s == Rat(2));
}

TEST_CASE("hexavalent move and involution") {
  auto word = parse_braid_word("1 2 1", 3);
  Ctx ctx = make_z_ctx(3);
  std::vector<LaurentPoly> zs;
  for (int k = 0; k < 3; ++k) zs.push_back(LaurentPoly::variable(ctx, k));
  auto r = apply_move(word, zs, WeaveMove{MoveKind::Hexavalent, 1});
  CHECK(r.word.str() == "2 1 2");
  CHECK(r.values[0] == zs[2]);
  CHECK(r.values[1] == zs[0] * zs[2] - zs[1]);
  CHECK(r.values[2] == zs[0]);
  CHECK(!r.s.has_value());
  auto back = apply_move(r.word, r.values, WeaveMove{MoveKind::Hexavalent, 1});
  CHECK(back.word == word);
  CHECK(back.values[0] == zs[0]);
  CHECK(back.values[1] == zs[1]);
  CHECK(back.values[2] == zs[2]);
}

TEST_CASE("trivalent with vanishing right arm is NotInChart") {
  auto word = parse_braid_word("1 1", 2);
  std::vector<Rat> vals = {Rat(3), Rat(0)};
  CHECK_THROWS_AS(apply_move(word, vals, WeaveMove{MoveKind::Trivalent, 1}), NotInChart);
}

TEST_CASE("matrix certificate per move kind") {
  // B_top(layer) = B_bottom(next layer) * U with U upper triangular, and
  // diagonal in the two-strand trivalent case.
  std::mt19937_64 gen(3);
  auto certify = [](const BraidWord& word, const WeaveMove& mv, bool expect_diagonal) {
    Ctx ctx = make_z_ctx(word.length(), true);
    std::vector<LaurentPoly> zs;
    for (int k = 0; k < word.length(); ++k) zs.push_back(LaurentPoly::variable(ctx, k));
    auto r = apply_move(word, zs, mv);
    auto top = braid_matrix_symbolic(word, ctx, zs);
    auto bottom = braid_matrix_symbolic(r.word, ctx, r.values);
    // U = bottom^{-1} top must be upper triangular; avoid symbolic inversion
    // by checking top == bottom * U for U recovered by forward substitution.
    // Equivalent: check that bottom^{-1} top is upper triangular via the
    // factor identity for each kind. Here we verify the product shape
    // numerically over several substitutions instead.
    std::mt19937_64 g2(7);
    for (int t = 0; t < 5; ++t) {
      std::vector<Rat> at;
      for (int k = 0; k < word.length(); ++k) at.push_back(Rat(1 + int(g2() % 7)));
      RatMatrix tn = braid_matrix(word, RatPoint(at));
      std::vector<Rat> bat;
      for (const auto& v : r.values) bat.push_back(v.eval(at));
      RatMatrix bn = braid_matrix(r.word, RatPoint(bat));
      RatMatrix u = bn.inverse() * tn;
      CHECK(u.is_upper_triangular());
      if (expect_diagonal) {
        for (int i = 0; i < u.rows(); ++i)
          for (int j = i + 1; j < u.cols(); ++j) CHECK(u.at(i, j) == 0);
      }
    }
  };
  certify(parse_braid_word("1 1 1", 2), WeaveMove{MoveKind::Trivalent, 1}, true);
  certify(parse_braid_word("1 1 2 1 2", 3), WeaveMove{MoveKind::Trivalent, 1}, false);
  certify(parse_braid_word("1 2 1 2", 3), WeaveMove{MoveKind::Hexavalent, 1}, false);
  certify(parse_braid_word("1 3 1", 4), WeaveMove{MoveKind::Commute, 1}, false);
}

TEST_CASE("two- and three-strand slide identities hold exactly") {
  // U_i(w) B_i(z) = B_i(w^2 z - w) D with D diagonal
  {
    Ctx ctx = make_ctx({"w", "z"}, {true, false});
    auto w = LaurentPoly::variable(ctx, 0);
    auto z = LaurentPoly::variable(ctx, 1);
    auto lhs = upper_block(1, w, ctx, 2) * braid_block(1, z, ctx, 2);
    auto target = braid_block(1, w * w * z - w, ctx, 2);
    // recover D = target^{-1} lhs via the inverse block
    auto d = braid_block_inverse(1, w * w * z - w, ctx, 2) * lhs;
    CHECK(d.is_diagonal());
    CHECK(lhs == target * d);
  }
  // the three-strand identities
  {
    Ctx ctx = make_ctx({"w", "z1", "z2", "z3"}, {true, false, false, false});
    auto w = LaurentPoly::variable(ctx, 0);
    auto z1 = LaurentPoly::variable(ctx, 1);
    auto z2 = LaurentPoly::variable(ctx, 2);
    auto z3 = LaurentPoly::variable(ctx, 3);
    auto winv = w.monomial_inverse();
    auto c = [&](const Rat& q) { return LaurentPoly::constant(ctx, q); };

    // (1) U_1(w) B_2(z1) = B_2(z1 w^{-1}) M1, M1 = [[w, -z1, 1], [0,1,0], [0,0,w^{-1}]]
    PolyMatrix m1(ctx, 3);
    m1.at(0, 0) = w;
    m1.at(0, 1) = -z1;
    m1.at(0, 2) = c(1);
    m1.at(1, 1) = c(1);
    m1.at(2, 2) = winv;
    CHECK(upper_block(1, w, ctx, 3) * braid_block(2, z1, ctx, 3) ==
          braid_block(2, z1 * winv, ctx, 3) * m1);

    // (2) M1 B_1(z2) = B_1(w z2 - z1) M2, M2 = [[1,0,0],[0,w,-1],[0,0,w^{-1}]]
    PolyMatrix m2(ctx, 3);
    m2.at(0, 0) = c(1);
    m2.at(1, 1) = w;
    m2.at(1, 2) = c(-1);
    m2.at(2, 2) = winv;
    CHECK(m1 * braid_block(1, z2, ctx, 3) == braid_block(1, w * z2 - z1, ctx, 3) * m2);

    // (3) M2 B_2(z3) = B_2(z3 w^2 - w) D, D = diag(1, w^{-1}, w)
    PolyMatrix d(ctx, 3);
    d.at(0, 0) = c(1);
    d.at(1, 1) = winv;
    d.at(2, 2) = w;
    CHECK(m2 * braid_block(2, z3, ctx, 3) == braid_block(2, z3 * w * w - w, ctx, 3) * d);
  }
  // trivalent decomposition B_i(z) B_i(w) = B_i(z - w^{-1}) U_i(w)
  {
    Ctx ctx = make_ctx({"z", "w"}, {false, true});
    auto z = LaurentPoly::variable(ctx, 0);
    auto w = LaurentPoly::variable(ctx, 1);
    CHECK(braid_block(1, z, ctx, 2) * braid_block(1, w, ctx, 2) ==
          braid_block(1, z - w.monomial_inverse(), ctx, 2) * upper_block(1, w, ctx, 2));
  }
}

TEST_CASE("complete weave structure") {
  // sigma^ell on two strands
  for (int ell = 1; ell <= 6; ++ell) {
    auto w = complete_weave(BraidWord(2, std::vector<int>(ell, 1)));
    CHECK(w.complete);
    CHECK(w.trivalent_count() == ell - 1);
    CHECK(w.bottom.str() == "1");
  }
  // the eight-letter three-strand example
  auto w = complete_weave(parse_braid_word("1 1 1 2 1 2 1 2", 3));
  CHECK(w.complete);
  CHECK(w.bottom.str() == "1 2 1");
  CHECK(w.trivalent_count() == 5);
  // reduced words give the empty weave (or pure braid moves to the lex lift)
  auto red = complete_weave(parse_braid_word("1 2 1", 3));
  CHECK(red.trivalent_count() == 0);
  CHECK(red.bottom.str() == "1 2 1");
}

TEST_CASE("trivalent count invariant on random words") {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + gen() % 3;
    auto b = rand_word(n, 1 + gen() % 9, gen);
    auto w = complete_weave(b);
    CHECK(w.trivalent_count() == b.length() - demazure_product(b).length());
    CHECK(coxeter_projection(w.bottom) == demazure_product(b));
    CHECK(w.bottom.length() == demazure_product(b).length());
  }
}

TEST_CASE("lift and propagate are mutually inverse") {
  // the one-trivalent example first
  auto w = complete_weave(parse_braid_word("1 1", 2));
  auto p = lift_through_weave(w, {Rat(2)});
  CHECK(p == RatPoint({Rat(1, 2), Rat(2)}));
  CHECK(in_braid_variety(w.top, p));

  std::mt19937_64 gen(7);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + gen() % 3;
    auto b = rand_word(n, 2 + gen() % 8, gen);
    auto weave = complete_weave(b);
    auto values = rand_nonzero(weave.trivalent_count(), gen);
    auto lifted = lift_through_weave(weave, values);
    CHECK(in_braid_variety(b, lifted));
    auto trace = propagate(weave, lifted);
    CHECK(trace.s_vars == values);
    // membership is preserved along every layer
    CHECK(in_braid_variety(trace.words.back(), RatPoint(trace.layers.back())));
    CHECK(chart_contains(weave, lifted));
  }
}

TEST_CASE("propagation preserves membership on random chart points") {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + gen() % 3;
    auto b = rand_word(n, 2 + gen() % 7, gen);
    auto weave = complete_weave(b);
    if (weave.trivalent_count() == 0) continue;
    auto p = lift_through_weave(weave, rand_nonzero(weave.trivalent_count(), gen));
    auto trace = propagate(weave, p);
    for (size_t l = 0; l < trace.words.size(); ++l)
      CHECK(in_braid_variety(trace.words[l], RatPoint(trace.layers[l])));
  }
}

TEST_CASE("essential crossings vanish on lifted variety points") {
  std::mt19937_64 gen(13);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + gen() % 3;
    auto b = rand_word(n, 2 + gen() % 8, gen);
    auto weave = complete_weave(b);
    auto p = lift_through_weave(weave, rand_nonzero(weave.trivalent_count(), gen));
    REQUIRE(in_braid_variety(b, p));
    for (int j : essential_crossings(b)) CHECK(p.at(j) == 0);
  }
}

TEST_CASE("chart membership examples") {
  auto w = complete_weave(parse_braid_word("1 1", 2));
  CHECK(chart_contains(w, RatPoint({Rat(1, 2), Rat(2)})));
  // zero at the trivalent position
  CHECK(!chart_contains(w, RatPoint({Rat(0), Rat(0)})));
  // not even on the variety
  CHECK(!chart_contains(w, RatPoint({Rat(1), Rat(2)})));
}

TEST_CASE("weave with zero moves leaves input unchanged") {
  Weave w;
  w.top = parse_braid_word("1 2 1", 3);
  w.bottom = w.top;
  w.complete = true;
  RatPoint p({Rat(0), Rat(0), Rat(0)});
  auto trace = propagate(w, p);
  CHECK(trace.layers.back() == p.coords);
  CHECK(trace.s_vars.empty());
}

TEST_CASE("weave serialization round trip") {
  auto b = parse_braid_word("1 1 1 2 1 2 1 2", 3);
  auto w = complete_weave(b);
  auto text = w.serialize();
  auto back = Weave::deserialize(b, text);
  CHECK(back.moves.size() == w.moves.size());
  CHECK(back.bottom == w.bottom);
  CHECK(back.complete);
  CHECK(!w.to_dot().empty());
}
