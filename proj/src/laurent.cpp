#include "braidvar/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace braidvar {

int VarContext::index_of(const std::string& name) const {
  for (int i = 0; i < arity(); ++i)
    if (names[i] == name) return i;
  throw ParseError("unknown variable: " + name);
}

Ctx make_ctx(std::vector<std::string> names, bool all_invertible) {
  auto ctx = std::make_shared<VarContext>();
  ctx->invertible.assign(names.size(), all_invertible);
  ctx->names = std::move(names);
  return ctx;
}

Ctx make_ctx(std::vector<std::string> names, std::vector<bool> invertible) {
  if (names.size() != invertible.size()) throw InternalError("ctx size mismatch");
  auto ctx = std::make_shared<VarContext>();
  ctx->names = std::move(names);
  ctx->invertible = std::move(invertible);
  return ctx;
}

Ctx make_z_ctx(int l, bool all_invertible, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(l);
  for (int i = 1; i <= l; ++i) names.push_back(stem + std::to_string(i));
  return make_ctx(std::move(names), all_invertible);
}

void require_same_ctx(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.ctx() == b.ctx()) return;
  if (a.ctx() && b.ctx() && *a.ctx() == *b.ctx()) return;
  throw ContextMismatch();
}

LaurentPoly LaurentPoly::constant(Ctx ctx, const Rat& c) {
  LaurentPoly p(std::move(ctx));
  if (c != 0) p.terms_[ExpVec(p.ctx_->arity(), 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::variable(const Ctx& ctx, int index, int power) {
  if (index < 0 || index >= ctx->arity()) throw InternalError("variable index out of range");
  ExpVec e(ctx->arity(), 0);
  e[index] = power;
  return monomial(ctx, std::move(e), Rat(1));
}

LaurentPoly LaurentPoly::variable(const Ctx& ctx, const std::string& name, int power) {
  return variable(ctx, ctx->index_of(name), power);
}

LaurentPoly LaurentPoly::monomial(Ctx ctx, ExpVec e, const Rat& c) {
  LaurentPoly p(std::move(ctx));
  p.check_exponents(e);
  if (c != 0) p.terms_[std::move(e)] = c;
  return p;
}

void LaurentPoly::check_exponents(const ExpVec& e) const {
  if (static_cast<int>(e.size()) != ctx_->arity())
    throw ContextMismatch("exponent arity mismatch");
  for (int i = 0; i < ctx_->arity(); ++i)
    if (e[i] < 0 && !ctx_->invertible[i])
      throw InternalError("negative exponent on non-invertible variable " + ctx_->names[i]);
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat LaurentPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw InternalError("constant_value on non-constant");
  return terms_.begin()->second;
}

void LaurentPoly::add_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  require_same_ctx(*this, o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  require_same_ctx(*this, o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  LaurentPoly r(ctx_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  require_same_ctx(*this, o);
  LaurentPoly r(ctx_);
  ExpVec e(ctx_->arity());
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < ctx_->arity(); ++i) e[i] = e1[i] + e2[i];
      r.check_exponents(e);
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  require_same_ctx(*this, o);
  return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (terms_.size() != 1) throw Unsupported("inverse of non-monomial Laurent polynomial");
  const auto& [e, c] = *terms_.begin();
  ExpVec inv(e.size());
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0 && !ctx_->invertible[i])
      throw Unsupported("inverse requires invertible variable " + ctx_->names[i]);
    inv[i] = -e[i];
  }
  return monomial(ctx_, std::move(inv), Rat(1) / c);
}

namespace {
// graded-lex: higher total degree first, then lexicographically larger first
bool grlex_less(const ExpVec& a, const ExpVec& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}
}  // namespace

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  require_same_ctx(*this, divisor);
  if (divisor.is_zero()) throw DivisionByZero("division by zero polynomial");
  LaurentPoly rem = *this;
  LaurentPoly quo(ctx_);
  // leading term of divisor in graded-lex
  auto lead = [&](const LaurentPoly& p) {
    auto best = p.terms_.begin();
    for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it)
      if (grlex_less(best->first, it->first)) best = it;
    return best;
  };
  auto dlt = lead(divisor);
  const ExpVec& de = dlt->first;
  const Rat& dc = dlt->second;
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 100000) throw InternalError("exact_div did not terminate");
    auto rlt = lead(rem);
    ExpVec qe(de.size());
    for (size_t i = 0; i < de.size(); ++i) qe[i] = rlt->first[i] - de[i];
    // Laurent ring: any exponent is fine as long as the ctx allows it.
    for (size_t i = 0; i < qe.size(); ++i)
      if (qe[i] < 0 && !ctx_->invertible[i])
        throw InternalError("exact_div: quotient not Laurent in " + ctx_->names[i]);
    Rat qc = rlt->second / dc;
    LaurentPoly t = monomial(ctx_, qe, qc);
    quo = quo + t;
    rem = rem - t * divisor;
  }
  return quo;
}

Rat LaurentPoly::eval(const std::vector<Rat>& assignment) const {
  if (static_cast<int>(assignment.size()) != ctx_->arity())
    throw ContextMismatch("assignment arity mismatch");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat v = c;
    for (int i = 0; i < ctx_->arity(); ++i) {
      if (e[i] == 0) continue;
      if (assignment[i] == 0) {
        if (e[i] < 0) throw DivisionByZero("zero assigned to inverted variable " + ctx_->names[i]);
        v = 0;
        break;
      }
      Rat base = e[i] > 0 ? assignment[i] : Rat(1) / assignment[i];
      for (int k = 0; k < std::abs(e[i]); ++k) v *= base;
    }
    total += v;
  }
  return total;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const ExpVec, Rat>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
  std::string out;
  bool first = true;
  for (auto* t : ts) {
    Rat c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < ctx_->arity(); ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->names[i];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace braidvar
