#include "symfn/bignum.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace symfn {

namespace {

mpfr_prec_t clamp_prec(mpfr_prec_t p) {
  return std::max<mpfr_prec_t>(p, MPFR_PREC_MIN);
}

mpfr_prec_t join(const BigReal& a, const BigReal& b) {
  return std::max(a.prec(), b.prec());
}

}  // namespace

BigReal::BigReal(mpfr_prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, mpfr_prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::pi(mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow2(long exponent, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_set_ui_2exp(r.v_, 1, exponent, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_decimal(std::string_view text, mpfr_prec_t prec) {
  BigReal r(prec);
  std::string s(text);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return r;
}

BigReal BigReal::round_to(mpfr_prec_t prec) const {
  BigReal r(clamp_prec(prec));
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigReal::decimal(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (mpfr_zero_p(v_)) return "0";
  std::vector<char> buf(static_cast<size_t>(significant_digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, v_);
  return std::string(buf.data());
}

BigReal& BigReal::operator+=(const BigReal& rhs) { return *this = *this + rhs; }
BigReal& BigReal::operator-=(const BigReal& rhs) { return *this = *this - rhs; }
BigReal& BigReal::operator*=(const BigReal& rhs) { return *this = *this * rhs; }
BigReal& BigReal::operator/=(const BigReal& rhs) { return *this = *this / rhs; }

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(join(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(join(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(join(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(join(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

BigReal abs(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal pow_ui(const BigReal& a, unsigned long e) {
  BigReal r(a.prec());
  mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}

BigReal rootn(const BigReal& a, unsigned long n) {
  BigReal r(a.prec());
  mpfr_rootn_ui(r.v_, a.v_, n, MPFR_RNDN);
  return r;
}

BigReal sin(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_sin(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal cos(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_cos(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal cot(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_cot(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal ceil(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_ceil(r.v_, a.v_);
  return r;
}

BigReal mul_q(const BigReal& a, const mpq_class& q) {
  BigReal r(a.prec());
  mpfr_mul_q(r.v_, a.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigComplex BigComplex::unit(const BigReal& angle) {
  BigComplex r(angle.prec());
  mpfr_sin_cos(r.im.raw(), r.re.raw(), angle.raw(), MPFR_RNDN);
  return r;
}

BigComplex BigComplex::conj() const { return BigComplex(re, -im); }

BigReal BigComplex::abs() const {
  BigReal r(prec());
  mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re + b.re, a.im + b.im);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re - b.re, a.im - b.im);
}

BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re, -a.im); }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

BigComplex operator*(const BigComplex& a, const BigReal& b) {
  return BigComplex(a.re * b, a.im * b);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigReal d = b.re * b.re + b.im * b.im;
  return BigComplex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

BigComplex mul_q(const BigComplex& a, const mpq_class& q) {
  return BigComplex(mul_q(a.re, q), mul_q(a.im, q));
}

}  // namespace symfn
