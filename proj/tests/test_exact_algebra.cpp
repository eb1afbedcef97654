#include "doctest.h"

#include "braidvar/int_matrix.hpp"
#include "braidvar/laurent.hpp"
#include "braidvar/poly_matrix.hpp"
#include "braidvar/rat_matrix.hpp"

#include <random>

using namespace braidvar;

namespace {

// Independent Smith-form oracle via determinantal divisors: d_k = g_k / g_{k-1}
// where g_k is the gcd of all k x k minors.
std::vector<Int> invariant_factors_by_minor_gcd(const IntMatrix& m) {
  int n = std::min(m.rows(), m.cols());
  auto gcd_of_minors = [&](int k) {
    Int g(0);
    std::vector<int> rsel(k), csel(k);
    std::function<void(int, int)> pick_cols = [&](int cstart, int cdepth) {
      if (cdepth == k) {
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rsel[i], csel[j]);
        Int d = sub.determinant();
        if (d < 0) d = -d;
        g = boost::multiprecision::gcd(g, d);
        return;
      }
      for (int c = cstart; c < m.cols(); ++c) {
        csel[cdepth] = c;
        pick_cols(c + 1, cdepth + 1);
      }
    };
    std::function<void(int, int)> pick_rows = [&](int rstart, int rdepth) {
      if (rdepth == k) {
        pick_cols(0, 0);
        return;
      }
      for (int r = rstart; r < m.rows(); ++r) {
        rsel[rdepth] = r;
        pick_rows(r + 1, rdepth + 1);
      }
    };
    pick_rows(0, 0);
    return g;
  };
  std::vector<Int> factors;
  Int prev(1);
  for (int k = 1; k <= n; ++k) {
    Int g = gcd_of_minors(k);
    if (g == 0) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

LaurentPoly rand_poly(const Ctx& ctx, std::mt19937_64& gen) {
  LaurentPoly p(ctx);
  int terms = 1 + gen() % 4;
  for (int t = 0; t < terms; ++t) {
    ExpVec e(ctx->arity());
    for (int i = 0; i < ctx->arity(); ++i) {
      int span = ctx->invertible[i] ? 5 : 3;
      e[i] = int(gen() % span) - (ctx->invertible[i] ? 2 : 0);
    }
    Rat c(int(gen() % 9) - 4);
    p = p + LaurentPoly::monomial(ctx, e, c);
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-7/4") == Rat(-7, 4));
  CHECK(parse_rat("2/4") == Rat(1, 2));
  CHECK(to_string(Rat(1, 2)) == "1/2");
  CHECK(to_string(Rat(5)) == "5");
  auto v = parse_rat_list("2, 1/2");
  REQUIRE(v.size() == 2);
  CHECK(v[1] == Rat(1, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
}

TEST_CASE("poly_arith examples") {
  Ctx ctx = make_ctx({"z"});
  auto z = LaurentPoly::variable(ctx, 0);
  CHECK((z + (-z)).is_zero());

  Ctx ctx3 = make_ctx({"z1", "z2", "z3"});
  auto z1 = LaurentPoly::variable(ctx3, 0);
  auto z2 = LaurentPoly::variable(ctx3, 1);
  auto z3 = LaurentPoly::variable(ctx3, 2);
  auto p = z1 * z3 - z2;
  auto one = LaurentPoly::constant(ctx3, Rat(1));
  CHECK(p * one == p);
  CHECK(p.str() == "z1*z3 - z2");

  Ctx wc = make_ctx({"w"}, true);
  auto w = LaurentPoly::variable(wc, 0);
  auto winv = LaurentPoly::variable(wc, 0, -1);
  auto prod = (w + winv) * w;
  auto expect = w * w + LaurentPoly::constant(wc, Rat(1));
  CHECK(prod == expect);
  CHECK(prod.str() == "w^2 + 1");
}

TEST_CASE("context mismatch is rejected") {
  Ctx a = make_ctx({"x"});
  Ctx b = make_ctx({"y"});
  CHECK_THROWS_AS(LaurentPoly::variable(a, 0) + LaurentPoly::variable(b, 0), ContextMismatch);
}

TEST_CASE("poly_eval examples") {
  Ctx ctx3 = make_ctx({"z1", "z2", "z3"});
  auto p = LaurentPoly::variable(ctx3, 0) * LaurentPoly::variable(ctx3, 2) -
           LaurentPoly::variable(ctx3, 1);
  CHECK(p.eval({Rat(1), Rat(2), Rat(3)}) == Rat(1));

  Ctx wc = make_ctx({"w"}, true);
  auto winv = LaurentPoly::variable(wc, 0, -1);
  CHECK(winv.eval({Rat(1, 2)}) == Rat(2));
  CHECK_THROWS_AS(winv.eval({Rat(0)}), DivisionByZero);

  Ctx wz = make_ctx({"w", "z"}, true);
  auto w = LaurentPoly::variable(wz, 0);
  auto z = LaurentPoly::variable(wz, 1);
  auto q = w * w * z - w;
  CHECK(q.eval({Rat(2), Rat(3)}) == Rat(10));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 gen(7);
  Ctx ctx = make_ctx({"a", "b", "c"}, {true, false, false});
  for (int trial = 0; trial < 50; ++trial) {
    auto p = rand_poly(ctx, gen), q = rand_poly(ctx, gen), r = rand_poly(ctx, gen);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
  }
}

TEST_CASE("poly_eval is a ring homomorphism") {
  std::mt19937_64 gen(11);
  Ctx ctx = make_ctx({"a", "b"}, {true, false});
  for (int trial = 0; trial < 50; ++trial) {
    auto p = rand_poly(ctx, gen), q = rand_poly(ctx, gen);
    std::vector<Rat> at = {Rat(1 + int(gen() % 7)), Rat(int(gen() % 7) - 3)};
    CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
  }
}

TEST_CASE("exact division of Laurent polynomials") {
  Ctx ctx = make_ctx({"x", "y"}, true);
  auto x = LaurentPoly::variable(ctx, 0);
  auto y = LaurentPoly::variable(ctx, 1);
  auto p = (x + y) * (x - y);
  CHECK(p.exact_div(x + y) == x - y);
  auto m = LaurentPoly::monomial(ctx, {2, -1}, Rat(3));
  CHECK((p * m).exact_div(m) == p);
}

TEST_CASE("smith normal form examples") {
  auto check_snf = [](const IntMatrix& m, const std::vector<Int>& expect) {
    auto s = smith_normal_form(m);
    CHECK(s.invariant_factors == expect);
    CHECK((s.u * m * s.v) == s.d);
    CHECK(s.d.is_diagonal());
    Int du = s.u.determinant();
    Int dv = s.v.determinant();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
      CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
  };

  check_snf(IntMatrix::identity(2), {Int(1), Int(1)});
  check_snf(IntMatrix::from_rows({{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}}), {Int(2), Int(2)});
  check_snf(IntMatrix::from_rows({{0}, {1}}), {Int(1)});
}

TEST_CASE("smith normal form agrees with determinantal-divisor oracle") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + gen() % 4, c = 1 + gen() % 4;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = int(gen() % 9) - 4;
    auto s = smith_normal_form(m);
    CHECK(s.invariant_factors == invariant_factors_by_minor_gcd(m));
    CHECK((s.u * m * s.v) == s.d);
  }
  // the Markov matrix, via the independent oracle as well
  IntMatrix markov = IntMatrix::from_rows({{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}});
  CHECK(invariant_factors_by_minor_gcd(markov) == std::vector<Int>{Int(2), Int(2)});
}

TEST_CASE("rational matrix basics") {
  RatMatrix a(2, 2);
  a.at(0, 0) = Rat(2);
  a.at(0, 1) = Rat(-1);
  a.at(1, 0) = Rat(1);
  a.at(1, 1) = Rat(0);
  CHECK(a.determinant() == Rat(1));
  RatMatrix inv = a.inverse();
  CHECK((a * inv) == RatMatrix::identity(2));
  auto x = a.solve({Rat(3), Rat(5)});
  CHECK(a.at(0, 0) * x[0] + a.at(0, 1) * x[1] == Rat(3));
  CHECK(a.at(1, 0) * x[0] + a.at(1, 1) * x[1] == Rat(5));
}

TEST_CASE("poly matrix product with identity") {
  Ctx ctx = make_ctx({"u", "v"});
  PolyMatrix m(ctx, 2);
  m.at(0, 0) = LaurentPoly::variable(ctx, 0);
  m.at(0, 1) = LaurentPoly::constant(ctx, Rat(-1));
  m.at(1, 0) = LaurentPoly::variable(ctx, 1);
  CHECK(m * PolyMatrix::identity(ctx, 2) == m);
}
