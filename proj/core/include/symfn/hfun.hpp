#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "symfn/bignum.hpp"

namespace symfn {

inline constexpr int kMaxHOrder = 64;
inline constexpr long kSeriesTruncationBudget = 10'000'000;

// Exact rational-function representation of the auxiliary kernel of order r:
//
//     h_r(t) = numerator(t) / (2 * (1 - t)^r)
//
// generated from h_1(t) = (1+t) / (2(1-t)) by repeatedly applying t * d/dt.
// One differentiation step on the (numerator, pole order) pair is
//
//     num_{r+1}(t) = t * ((1 - t) * num_r'(t) + r * num_r(t)),
//
// all coefficients exact rationals.  The degree never exceeds the order and
// the numerator vanishes at t = 0 from order 2 on.
class HRational {
 public:
  // Builds the order-r representation; r >= 1 and r <= max_order.
  static HRational make(int order, int max_order = kMaxHOrder);

  int order() const { return order_; }
  // Coefficient k is the t^k coefficient of the numerator.
  const std::vector<mpq_class>& numerator() const { return numerator_; }

  // Evaluates at t (Horner form) in the precision of t.  Throws
  // std::domain_error at the pole t = 1.
  BigComplex eval(const BigComplex& t) const;

 private:
  HRational(int order, std::vector<mpq_class> numerator)
      : order_(order), numerator_(std::move(numerator)) {}

  int order_;
  std::vector<mpq_class> numerator_;
};

// Evaluates h_r at t with working precision prec plus guard bits; the result
// is reliable to about 2^-prec relative error for |t| = 1 bounded away from
// the pole.
BigComplex h_eval(int r, const BigComplex& t, mpfr_prec_t prec);

// Closed trigonometric forms on the unit circle, t = e^(2*pi*i*x), 0 < x < 1:
//   r=1:  (i/2) cot(pi x)
//   r=2:  -1 / (4 sin^2(pi x))
//   r=3:  -(i/4) cos(pi x) / sin^3(pi x)
//   r=4:  (1 + 2 cos^2(pi x)) / (8 sin^4(pi x))
//   r=5:  (i/4) (2 cos(pi x) + cos^3(pi x)) / sin^5(pi x)
// Only r in 1..5 is available.
BigComplex h_trig(int r, const BigReal& x, mpfr_prec_t prec);

struct SeriesValue {
  BigComplex value;
  BigReal error_bound;  // rigorous: truncation tail plus rounding slack
  long terms = 0;
};

// Bilateral-series route, r >= 2 only:
//
//   h_r(e^(2*pi*i*x)) = (r-1)! * (-1/(2*pi*i))^r * sum_{|n|<=K} (x+n)^(-r)
//
// with the tail over |n| > K bounded by 2 (K-1)^(1-r) / (r-1) before the
// prefactor.  r = 1 is rejected (the bilateral series is only conditionally
// summable there).
SeriesValue h_series(int r, const BigReal& x, long truncation, mpfr_prec_t prec);

// Truncation radius that drives the tail bound below eps, ignoring the
// (r-1)!/(2 pi)^r prefactor: max(64, ceil((2/eps)^(1/(r-1)))).
long h_series_suggested_truncation(int r, const BigReal& eps);

// Guard bits for evaluating h_r near an N-th root of unity: cancellation in
// (1 - t) costs about log2(N) bits at a = 1 and the coefficient sum grows
// like r!.
mpfr_prec_t h_guard_bits(int r, int modulus);

}  // namespace symfn
