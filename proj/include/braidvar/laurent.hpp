#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braidvar/rational.hpp"

namespace braidvar {

// Ordered list of variable names; a variable flagged invertible may carry
// negative exponents.
struct VarContext {
  std::vector<std::string> names;
  std::vector<bool> invertible;

  int arity() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;
  bool operator==(const VarContext& o) const {
    return names == o.names && invertible == o.invertible;
  }
};

using Ctx = std::shared_ptr<const VarContext>;

Ctx make_ctx(std::vector<std::string> names, bool all_invertible = false);
Ctx make_ctx(std::vector<std::string> names, std::vector<bool> invertible);
// z1..zl
Ctx make_z_ctx(int l, bool all_invertible = false, const std::string& stem = "z");

using ExpVec = std::vector<int>;

// Sparse exact multivariate Laurent polynomial over Q.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Ctx ctx) : ctx_(std::move(ctx)) {}
  static LaurentPoly constant(Ctx ctx, const Rat& c);
  static LaurentPoly variable(const Ctx& ctx, int index, int power = 1);
  static LaurentPoly variable(const Ctx& ctx, const std::string& name, int power = 1);
  static LaurentPoly monomial(Ctx ctx, ExpVec e, const Rat& c);

  const Ctx& ctx() const { return ctx_; }
  const std::map<ExpVec, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rat constant_value() const;  // requires is_constant

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Rat& c) const;
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Inverse of a single-term polynomial. All variables with nonzero exponent
  // must be invertible; otherwise throws Unsupported.
  LaurentPoly monomial_inverse() const;
  // Exact division; throws InternalError when the quotient is not a Laurent
  // polynomial (a Laurent-phenomenon violation when used on seeds).
  LaurentPoly exact_div(const LaurentPoly& divisor) const;

  Rat eval(const std::vector<Rat>& assignment) const;

  // Canonical string: terms in graded-lex descending order, e.g. "z1*z3 - z2".
  std::string str() const;

 private:
  void add_term(const ExpVec& e, const Rat& c);
  void check_exponents(const ExpVec& e) const;
  friend LaurentPoly mul_impl(const LaurentPoly&, const LaurentPoly&);

  Ctx ctx_;
  std::map<ExpVec, Rat> terms_;
};

void require_same_ctx(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace braidvar
