#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

namespace symfn {

// Arbitrary-precision real scalar backed by MPFR.  Every value carries its
// own working precision; binary operations produce a result at the wider of
// the two operand precisions.  No global MPFR state is read or written, so
// values may be used freely from multiple threads as long as no single
// BigReal is mutated concurrently.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t prec = 64);
  BigReal(long value, mpfr_prec_t prec);
  BigReal(const mpq_class& value, mpfr_prec_t prec);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal pi(mpfr_prec_t prec);
  static BigReal pow2(long exponent, mpfr_prec_t prec = 64);
  // Parses a decimal string such as "1e-12"; throws std::invalid_argument
  // on malformed input.
  static BigReal from_decimal(std::string_view text, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  BigReal round_to(mpfr_prec_t prec) const;

  // Deterministic scientific rendering with a fixed number of significant
  // digits, e.g. "9.689461462593694e-01".
  std::string decimal(int significant_digits) const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator/(long a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b);
  friend bool operator!=(const BigReal& a, const BigReal& b);
  friend bool operator<(const BigReal& a, const BigReal& b);
  friend bool operator<=(const BigReal& a, const BigReal& b);
  friend bool operator>(const BigReal& a, const BigReal& b);
  friend bool operator>=(const BigReal& a, const BigReal& b);

  friend BigReal abs(const BigReal& a);
  friend BigReal sqrt(const BigReal& a);
  friend BigReal pow_ui(const BigReal& a, unsigned long e);
  friend BigReal rootn(const BigReal& a, unsigned long n);
  friend BigReal sin(const BigReal& a);
  friend BigReal cos(const BigReal& a);
  friend BigReal cot(const BigReal& a);
  friend BigReal ceil(const BigReal& a);

  // Exact-rational scale: a * q rounded once at a's precision.
  friend BigReal mul_q(const BigReal& a, const mpq_class& q);

 private:
  mpfr_t v_;
};

// Namespace-scope redeclarations so the friends above are visible to
// qualified lookup, not only ADL.
BigReal abs(const BigReal& a);
BigReal sqrt(const BigReal& a);
BigReal pow_ui(const BigReal& a, unsigned long e);
BigReal rootn(const BigReal& a, unsigned long n);
BigReal sin(const BigReal& a);
BigReal cos(const BigReal& a);
BigReal cot(const BigReal& a);
BigReal ceil(const BigReal& a);
BigReal mul_q(const BigReal& a, const mpq_class& q);

// Complex scalar over BigReal parts.
struct BigComplex {
  BigReal re;
  BigReal im;

  explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

  // e^(i*angle) = (cos angle, sin angle), both parts at the angle's precision.
  static BigComplex unit(const BigReal& angle);

  mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  BigComplex conj() const;
  BigReal abs() const;

  BigComplex& operator+=(const BigComplex& rhs);
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigReal& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

  friend BigComplex mul_q(const BigComplex& a, const mpq_class& q);
};

}  // namespace symfn
