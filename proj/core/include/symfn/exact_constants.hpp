#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "symfn/bignum.hpp"
#include "symfn/symmetric_function.hpp"

namespace symfn {

// Expression over exact rationals closed under sums, products and square
// roots of provably positive arguments.  Immutable once built.
class Expr {
 public:
  enum class Kind { rational, sqrt, sum, product };

  static Expr rat(mpq_class value);
  static Expr rat(long num, long den = 1);
  static Expr sqrt(Expr arg);
  static Expr add(Expr lhs, Expr rhs);
  static Expr mul(Expr lhs, Expr rhs);

  Kind kind() const { return kind_; }

  // Bottom-up evaluation at the given working precision.  Throws
  // std::domain_error if a square-root argument evaluates negative.
  BigReal eval(mpfr_prec_t prec) const;

 private:
  Expr(Kind kind, mpq_class leaf, std::vector<Expr> children)
      : kind_(kind), leaf_(std::move(leaf)), children_(std::move(children)) {}

  Kind kind_;
  mpq_class leaf_;
  std::vector<Expr> children_;
};

// A closed-form constant pi^pi_power * body / denominator.  Construction
// runs a 64-bit sanity evaluation so that negative square-root arguments are
// rejected up front.
class ExactConstant {
 public:
  ExactConstant(int pi_power, long denominator, Expr body);

  int pi_power() const { return pi_power_; }
  long denominator() const { return denominator_; }

  BigReal eval(mpfr_prec_t prec) const;

 private:
  int pi_power_;
  long denominator_;
  Expr body_;
};

inline BigReal eval_constant(const ExactConstant& c, mpfr_prec_t prec) { return c.eval(prec); }

struct GoldenConstantEntry {
  std::string id;  // e.g. "L3.chi8": L(r, family_N)
  Family family = Family::chi;
  int m = 0;
  int r = 0;
  ExactConstant constant;
};

// The golden table of closed-form L-values; ids are unique and the order is
// fixed.  Note L3.f4 and L3.chi4 are distinct rows with equal value (the
// two families coincide at modulus 4), so the 14 rows carry 13 distinct
// closed forms.
const std::vector<GoldenConstantEntry>& constant_table();

// Table lookup by evaluation parameters; nullptr when absent.
const GoldenConstantEntry* find_constant(Family family, int m, int r);
const GoldenConstantEntry* find_constant(std::string_view id);

// Signed secant-number sequence E_0, E_2, ..., E_{2(count-1)} from the
// recurrence sum_k binom(2n, 2k) E_{2k} = 0 with E_0 = 1:
// 1, -1, 5, -61, 1385, ...
std::vector<mpz_class> euler_numbers(int count);

}  // namespace symfn
