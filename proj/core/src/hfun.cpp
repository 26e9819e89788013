#include "symfn/hfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace symfn {

namespace {

int ceil_log2_factorial(int r) {
  double bits = 0.0;
  for (int k = 2; k <= r; ++k) bits += std::log2(static_cast<double>(k));
  return static_cast<int>(bits) + 1;
}

int ceil_log2(int n) {
  int bits = 0;
  while ((1 << bits) < n) ++bits;
  return bits;
}

// i^r as one of {1, i, -1, -i}; re/im in {-1, 0, 1}.
std::pair<int, int> i_power(int r) {
  switch (((r % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

mpfr_prec_t h_guard_bits(int r, int modulus) {
  return 32 + ceil_log2_factorial(r) + 4 * ceil_log2(modulus < 2 ? 2 : modulus);
}

HRational HRational::make(int order, int max_order) {
  if (order < 1) throw std::invalid_argument("h_rational: order must be >= 1");
  if (order > max_order) {
    throw std::invalid_argument("h_rational: order " + std::to_string(order) +
                                " exceeds the configured budget " + std::to_string(max_order));
  }
  std::vector<mpq_class> num = {mpq_class(1), mpq_class(1)};  // 1 + t
  for (int r = 1; r < order; ++r) {
    // next(t) = t * ((1 - t) * num'(t) + r * num(t))
    std::vector<mpq_class> next(num.size() + 1, mpq_class(0));
    for (size_t k = 0; k < num.size(); ++k) {
      if (k >= 1) {
        mpq_class d = mpq_class(static_cast<long>(k)) * num[k];
        next[k] += d;        // t * num'(t)
        next[k + 1] -= d;    // -t^2 * num'(t)
      }
      next[k + 1] += mpq_class(r) * num[k];
    }
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    num = std::move(next);
  }
  for (mpq_class& c : num) c.canonicalize();
  return HRational(order, std::move(num));
}

BigComplex HRational::eval(const BigComplex& t) const {
  const mpfr_prec_t wp = t.prec();
  BigComplex one_minus_t(BigReal(1, wp) - t.re, -t.im);
  if (one_minus_t.is_zero()) throw std::domain_error("h_r has a pole at t = 1");

  BigComplex acc(wp);
  for (size_t k = numerator_.size(); k-- > 0;) {
    acc = acc * t;
    acc.re = acc.re + BigReal(numerator_[k], wp);
  }

  BigComplex denom(BigReal(2, wp), BigReal(0, wp));
  for (int k = 0; k < order_; ++k) denom = denom * one_minus_t;
  return acc / denom;
}

BigComplex h_eval(int r, const BigComplex& t, mpfr_prec_t prec) {
  HRational h = HRational::make(r);
  const mpfr_prec_t wp = std::max<mpfr_prec_t>(t.prec(), prec + 32 + ceil_log2_factorial(r));
  BigComplex tt(t.re.round_to(wp), t.im.round_to(wp));
  return h.eval(tt);
}

BigComplex h_trig(int r, const BigReal& x, mpfr_prec_t prec) {
  if (r < 1 || r > 5) throw std::invalid_argument("h_trig: r must be in 1..5");
  const mpfr_prec_t wp = std::max<mpfr_prec_t>(prec + 32, x.prec());
  BigReal zero(0, wp), one(1, wp);
  if (!(x > zero && x < one)) throw std::invalid_argument("h_trig: x must be in (0,1)");

  BigReal theta = BigReal::pi(wp) * x.round_to(wp);
  BigReal s = sin(theta);
  BigReal c = cos(theta);
  BigComplex result(wp);
  switch (r) {
    case 1:
      result.im = cot(theta) / 2;
      break;
    case 2:
      result.re = BigReal(-1, wp) / (pow_ui(s, 2) * 4);
      break;
    case 3:
      result.im = -c / (pow_ui(s, 3) * 4);
      break;
    case 4:
      result.re = (one + pow_ui(c, 2) * 2) / (pow_ui(s, 4) * 8);
      break;
    case 5:
      result.im = (c * 2 + pow_ui(c, 3)) / (pow_ui(s, 5) * 4);
      break;
  }
  return result;
}

SeriesValue h_series(int r, const BigReal& x, long truncation, mpfr_prec_t prec) {
  if (r < 2) throw std::invalid_argument("h_series: r must be >= 2");
  if (truncation < 2) throw std::invalid_argument("h_series: truncation radius must be >= 2");
  if (truncation > kSeriesTruncationBudget) {
    throw std::invalid_argument("h_series: truncation radius exceeds budget");
  }
  const mpfr_prec_t wp = std::max<mpfr_prec_t>(prec + 64, x.prec());
  BigReal zero(0, wp), one(1, wp);
  if (!(x > zero && x < one)) throw std::invalid_argument("h_series: x must be in (0,1)");

  BigReal xw = x.round_to(wp);
  BigReal sum(0, wp);
  BigReal max_term(0, wp);
  mpfr_t base, term;
  mpfr_init2(base, wp);
  mpfr_init2(term, wp);
  for (long n = -truncation; n <= truncation; ++n) {
    mpfr_add_si(base, xw.raw(), n, MPFR_RNDN);
    mpfr_pow_si(term, base, -r, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term, MPFR_RNDN);
    mpfr_abs(term, term, MPFR_RNDN);
    if (mpfr_cmp(term, max_term.raw()) > 0) mpfr_set(max_term.raw(), term, MPFR_RNDN);
  }
  mpfr_clear(base);
  mpfr_clear(term);

  // prefactor (r-1)! * (-1/(2 pi i))^r = (r-1)! * (i/(2 pi))^r
  BigReal fact(1, wp);
  for (int k = 2; k < r; ++k) fact = fact * k;
  BigReal scale = fact / pow_ui(BigReal::pi(wp) * 2, static_cast<unsigned long>(r));
  auto [ure, uim] = i_power(r);

  SeriesValue out;
  out.terms = 2 * truncation + 1;
  out.value = BigComplex(scale * sum * ure, scale * sum * uim);

  // Tail before the prefactor: sum_{|n|>K} |x+n|^(-r) <= 2 (K-1)^(1-r)/(r-1).
  BigReal tail = BigReal(2, wp) / (pow_ui(BigReal(truncation - 1, wp),
                                          static_cast<unsigned long>(r - 1)) * (r - 1));
  BigReal rounding = max_term * (2 * truncation + 2) * BigReal::pow2(-static_cast<long>(prec), wp);
  out.error_bound = (scale * (tail + rounding) * 2).round_to(64);
  return out;
}

long h_series_suggested_truncation(int r, const BigReal& eps) {
  if (r < 2) throw std::invalid_argument("h_series: r must be >= 2");
  if (!(eps > BigReal(0, 64))) throw std::invalid_argument("h_series: eps must be positive");
  BigReal k = ceil(rootn(BigReal(2, 96) / eps, static_cast<unsigned long>(r - 1)));
  if (!(k < BigReal(kSeriesTruncationBudget, 96))) return kSeriesTruncationBudget;
  long suggested = static_cast<long>(k.to_double());
  return suggested < 64 ? 64 : suggested;
}

}  // namespace symfn
