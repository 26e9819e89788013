#pragma once

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "symfn/bignum.hpp"
#include "symfn/hfun.hpp"
#include "symfn/symmetric_function.hpp"

namespace symfn {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;
inline constexpr long kDirectTermBudget = 1'000'000'000;
inline constexpr long kZetaTermBudget = 1'000'000'000;

// Raised when a requested tolerance would need more series terms than the
// configured budget allows.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation routes.  The names are the wire strings used by the CLI
// (--method) and by the JSON output.
enum class Method { theorem23, half_sum, trig3, trig3_f, trig5, direct };

std::string_view method_name(Method m);
Method method_from_name(std::string_view name);

// A computed L-series value with a rigorous error bound.
//
// For the real-valued built-in families the true value is real; any
// imaginary residue is rounding noise and is always below error_bound.
struct LValue {
  BigComplex value;
  BigReal error_bound;
  Method method = Method::theorem23;
  long terms_used = 0;
};

// One evaluation order: which function, which exponent, which route.
struct EvalRequest {
  SymmetricFunction f;
  int r = 3;
  Method method = Method::theorem23;
  mpfr_prec_t precision_bits = kDefaultPrecision;
  BigReal direct_tolerance = BigReal::from_decimal("1e-12", 96);
  int jobs = 1;
};

// Validates the request invariants (exponent parity matches the function,
// method-specific hypotheses, built-in-family provenance for the trig
// routes) and dispatches.
LValue evaluate(const EvalRequest& req);

// Master finite-sum route, any r >= 2 whose parity matches f:
//
//   L(r, f) = 1/2 * 1/(r-1)! * (-2 pi i / N)^r * sum_{a=1}^{N-1} f(a) h_r(z^a),
//
// with z = e^(2 pi i / N).  Each z^a is synthesized from one high-precision
// pi constant rather than by repeated multiplication.
LValue l_theorem23(const SymmetricFunction& f, int r, mpfr_prec_t prec);

// Half-range refinement for even modulus N = 2q and odd r = 2p+1 >= 3:
//
//   L(r, f) = (-1)^(p+1)/(r-1)! * pi^r i / q^r * sum_{a=1}^{q-1} f(a) h_r(z^a).
//
// Roughly halves the kernel evaluations of the master route.
LValue l_half_sum(const SymmetricFunction& f, int r, mpfr_prec_t prec);

// L(3, chi_2m) by the purely real trigonometric sum
//   pi^3/(4 m^3) * sum_{a=1}^{m-1} sin(a pi/m) / (1 - cos(a pi/m))^2.
LValue l_trig3(int m, mpfr_prec_t prec);

// L(3, f_4m) by the odd-argument trigonometric sum
//   pi^3/(32 m^3) * sum over odd a in 1..2m-1 of sin(pi a/2m)/(1-cos(pi a/2m))^2.
LValue l_trig3_f(int m, mpfr_prec_t prec);

// L(5, chi_2m) by the cot-weighted trigonometric sum
//   pi^5/(48 m^5) * sum_{a=1}^{m-1} cot(pi a/2m) (5 + cos(pi a/m)) / (1 - cos(pi a/m))^2.
LValue l_trig5(int m, mpfr_prec_t prec);

// Direct partial summation of sum_{n>=1} f(n)/n^r, the independent oracle
// for every other route.  The term count M is the smallest that pushes the
// rigorous tail bound max|f| * M^(1-r)/(r-1) below tolerance; throws
// InfeasibleError when M would exceed term_budget.  With jobs > 1 the range
// is split into fixed-size chunks reduced in index order, so the result is
// bit-identical for any job count.
LValue l_direct(const SymmetricFunction& f, int r, const BigReal& tolerance,
                mpfr_prec_t prec, int jobs = 1, long term_budget = kDirectTermBudget);

// |L(r, f_4m) - L(r, chi_4m) + 2^-r L(r, chi_2m)|, all three computed via
// l_half_sum.  The identity splits the mod-4m series into its odd-index part
// and a scaled mod-2m copy, so the residual must sit below the combined
// error bounds; m >= 2, r odd >= 3.
BigReal split_identity_residual(int m, int r, mpfr_prec_t prec);

// Reference zeta value: direct summation to M-1 plus the tail corrections
//   M^(1-s)/(s-1) + M^(-s)/2 + s M^(-s-1)/12,
// with M chosen so the remainder bound s(s+1)(s+2) M^(-s-3)/720 is below
// tolerance.  Integer s >= 2.
BigReal zeta_oracle(int s, const BigReal& tolerance, long term_budget = kZetaTermBudget);

struct LimitRow {
  int m = 0;
  LValue value;
  BigReal gap;  // reference minus computed value
};

struct LimitStudy {
  BigReal reference;  // zeta(r) for the chi family, (1 - 2^-r) zeta(r) for f
  std::vector<LimitRow> rows;
};

// Sweeps L(r, family(m)) over an ascending schedule of m values via
// l_half_sum and reports each gap to the zeta reference.  No monotonicity is
// promised; the caller owns the schedule.  Odd r >= 3; m >= 2 for chi,
// m >= 1 for f.
LimitStudy zeta_limit_study(int r, std::span<const int> schedule, Family family,
                            mpfr_prec_t prec, const BigReal& zeta_tolerance);

}  // namespace symfn
