#include "symfn/engine.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace symfn {

namespace {

// conj(i)^r = (-i)^r as {re, im} in {-1, 0, 1}.
std::pair<int, int> neg_i_power(int r) {
  switch (((r % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
  }
}

BigComplex mul_unit(const BigComplex& z, std::pair<int, int> unit) {
  auto [ur, ui] = unit;
  if (ui == 0) return BigComplex(z.re * ur, z.im * ur);
  return BigComplex(z.im * (-ui), z.re * ui);
}

BigComplex mul_qc(const QComplex& q, const BigComplex& z) {
  if (q.is_real()) return BigComplex(mul_q(z.re, q.re), mul_q(z.im, q.re));
  return BigComplex(mul_q(z.re, q.re) - mul_q(z.im, q.im),
                    mul_q(z.im, q.re) + mul_q(z.re, q.im));
}

BigReal factorial(int n, mpfr_prec_t prec) {
  BigReal r(1, prec);
  for (int k = 2; k <= n; ++k) r = r * k;
  return r;
}

void require_parity(const SymmetricFunction& f, int r) {
  if (parity_of_exponent(r) != f.parity()) {
    throw std::invalid_argument("exponent r=" + std::to_string(r) +
                                " does not match the function's parity class");
  }
}

// Smallest M with bound_scale * M^(1-r)/(r-1) <= tolerance.
long tail_term_count(const mpq_class& bound_scale, int r, const BigReal& tolerance,
                     long budget) {
  if (!(tolerance > BigReal(0, 64))) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (sgn(bound_scale) == 0) return 1;
  BigReal ratio = BigReal(bound_scale, 96) / (tolerance.round_to(96) * (r - 1));
  BigReal m = ceil(rootn(ratio, static_cast<unsigned long>(r - 1)));
  if (!(m < BigReal(budget, 96))) {
    throw InfeasibleError("tolerance needs " + m.decimal(3) + " terms; budget is " +
                          std::to_string(budget));
  }
  long count = static_cast<long>(m.to_double());
  return std::max(count, 1L);
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::theorem23: return "theorem23";
    case Method::half_sum: return "half_sum";
    case Method::trig3: return "trig3";
    case Method::trig3_f: return "trig3_f";
    case Method::trig5: return "trig5";
    case Method::direct: return "direct";
  }
  return "?";
}

Method method_from_name(std::string_view name) {
  if (name == "theorem23") return Method::theorem23;
  if (name == "half_sum") return Method::half_sum;
  if (name == "trig3") return Method::trig3;
  if (name == "trig3_f") return Method::trig3_f;
  if (name == "trig5") return Method::trig5;
  if (name == "direct") return Method::direct;
  throw std::invalid_argument("unknown method: '" + std::string(name) + "'");
}

LValue l_theorem23(const SymmetricFunction& f, int r, mpfr_prec_t prec) {
  if (r < 2) throw std::invalid_argument("l_theorem23: r must be >= 2");
  require_parity(f, r);

  const int n = f.modulus();
  const mpfr_prec_t wp = prec + h_guard_bits(r, n);
  const HRational h = HRational::make(r);
  const BigReal two_pi = BigReal::pi(wp) * 2;

  BigComplex sum(wp);
  BigReal abs_acc(0, wp);
  long terms = 0;
  for (int a = 1; a <= n - 1; ++a) {
    const QComplex& chi = f.value(a);
    if (chi.is_zero()) continue;
    mpq_class frac(a, n);
    frac.canonicalize();
    BigComplex t = BigComplex::unit(mul_q(two_pi, frac));
    BigComplex hv = h.eval(t);
    sum += mul_qc(chi, hv);
    abs_acc += BigReal(chi.abs_upper_bound(), wp) * hv.abs();
    ++terms;
  }

  // 1/2 * 1/(r-1)! * (2 pi / N)^r, direction (-i)^r.
  BigReal scale = pow_ui(two_pi / n, static_cast<unsigned long>(r)) /
                  (factorial(r - 1, wp) * 2);
  LValue out;
  out.method = Method::theorem23;
  out.terms_used = terms;
  out.value = mul_unit(BigComplex(sum.re * scale, sum.im * scale), neg_i_power(r));
  out.error_bound =
      (scale * abs_acc * BigReal::pow2(-static_cast<long>(prec), wp) * 2).round_to(64);
  return out;
}

LValue l_half_sum(const SymmetricFunction& f, int r, mpfr_prec_t prec) {
  if (r < 3 || r % 2 == 0) throw std::invalid_argument("l_half_sum: r must be odd and >= 3");
  if (f.modulus() % 2 != 0) throw std::invalid_argument("l_half_sum: modulus must be even");
  require_parity(f, r);

  const int n = f.modulus();
  const int q = n / 2;
  const int p = (r - 1) / 2;
  const mpfr_prec_t wp = prec + h_guard_bits(r, n);
  const HRational h = HRational::make(r);
  const BigReal pi = BigReal::pi(wp);

  BigComplex sum(wp);
  BigReal abs_acc(0, wp);
  long terms = 0;
  for (int a = 1; a <= q - 1; ++a) {
    const QComplex& chi = f.value(a);
    if (chi.is_zero()) continue;
    mpq_class frac(a, q);
    frac.canonicalize();
    BigComplex t = BigComplex::unit(mul_q(pi, frac));
    BigComplex hv = h.eval(t);
    sum += mul_qc(chi, hv);
    abs_acc += BigReal(chi.abs_upper_bound(), wp) * hv.abs();
    ++terms;
  }

  const int sign = (p % 2 != 0) ? 1 : -1;  // (-1)^(p+1)
  BigReal scale = pow_ui(pi / q, static_cast<unsigned long>(r)) / factorial(r - 1, wp);
  LValue out;
  out.method = Method::half_sum;
  out.terms_used = terms;
  // sign * i * scale * sum
  out.value = BigComplex(sum.im * scale * (-sign), sum.re * scale * sign);
  out.error_bound =
      (scale * abs_acc * BigReal::pow2(-static_cast<long>(prec), wp) * 2).round_to(64);
  return out;
}

LValue l_trig3(int m, mpfr_prec_t prec) {
  if (m < 2) throw std::invalid_argument("l_trig3: m must be >= 2");
  const mpfr_prec_t wp = prec + h_guard_bits(3, 2 * m);
  const BigReal pi = BigReal::pi(wp);
  BigReal one(1, wp);

  BigReal sum(0, wp);
  for (int a = 1; a <= m - 1; ++a) {
    mpq_class frac(a, m);
    frac.canonicalize();
    BigReal theta = mul_q(pi, frac);
    sum += sin(theta) / pow_ui(one - cos(theta), 2);
  }

  LValue out;
  out.method = Method::trig3;
  out.terms_used = m - 1;
  out.value = BigComplex(pow_ui(pi, 3) / (pow_ui(BigReal(m, wp), 3) * 4) * sum, BigReal(0, wp));
  out.error_bound =
      (abs(out.value.re) * BigReal::pow2(-static_cast<long>(prec), wp) * 2).round_to(64);
  return out;
}

LValue l_trig3_f(int m, mpfr_prec_t prec) {
  if (m < 1) throw std::invalid_argument("l_trig3_f: m must be >= 1");
  const mpfr_prec_t wp = prec + h_guard_bits(3, 4 * m);
  const BigReal pi = BigReal::pi(wp);
  BigReal one(1, wp);

  BigReal sum(0, wp);
  for (int a = 1; a <= 2 * m - 1; a += 2) {
    mpq_class frac(a, 2 * m);
    frac.canonicalize();
    BigReal theta = mul_q(pi, frac);
    sum += sin(theta) / pow_ui(one - cos(theta), 2);
  }

  LValue out;
  out.method = Method::trig3_f;
  out.terms_used = m;
  out.value = BigComplex(pow_ui(pi, 3) / (pow_ui(BigReal(m, wp), 3) * 32) * sum, BigReal(0, wp));
  out.error_bound =
      (abs(out.value.re) * BigReal::pow2(-static_cast<long>(prec), wp) * 2).round_to(64);
  return out;
}

LValue l_trig5(int m, mpfr_prec_t prec) {
  if (m < 2) throw std::invalid_argument("l_trig5: m must be >= 2");
  const mpfr_prec_t wp = prec + h_guard_bits(5, 2 * m);
  const BigReal pi = BigReal::pi(wp);
  BigReal one(1, wp), five(5, wp);

  BigReal sum(0, wp);
  for (int a = 1; a <= m - 1; ++a) {
    mpq_class half(a, 2 * m), full(a, m);
    half.canonicalize();
    full.canonicalize();
    BigReal c = cos(mul_q(pi, full));
    sum += cot(mul_q(pi, half)) * (five + c) / pow_ui(one - c, 2);
  }

  LValue out;
  out.method = Method::trig5;
  out.terms_used = m - 1;
  out.value = BigComplex(pow_ui(pi, 5) / (pow_ui(BigReal(m, wp), 5) * 48) * sum, BigReal(0, wp));
  out.error_bound =
      (abs(out.value.re) * BigReal::pow2(-static_cast<long>(prec), wp) * 2).round_to(64);
  return out;
}

LValue l_direct(const SymmetricFunction& f, int r, const BigReal& tolerance,
                mpfr_prec_t prec, int jobs, long term_budget) {
  if (r < 2) throw std::invalid_argument("l_direct: r must be >= 2");
  const mpq_class max_abs = f.max_abs_bound();
  const long total = tail_term_count(max_abs, r, tolerance, term_budget);
  const mpfr_prec_t wp = prec + 32;
  const int n = f.modulus();

  // Residue table at working precision; the inner loop reads it only.
  std::vector<BigComplex> chi;
  std::vector<char> zero(static_cast<size_t>(n), 0);
  bool all_real = true;
  chi.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    QComplex v = (a == 0) ? QComplex() : f.value(a);
    zero[static_cast<size_t>(a)] = v.is_zero() ? 1 : 0;
    if (!v.is_real()) all_real = false;
    chi.emplace_back(BigReal(v.re, wp), BigReal(v.im, wp));
  }

  constexpr long kChunk = 1 << 15;
  const long chunk_count = (total + kChunk - 1) / kChunk;
  std::vector<BigComplex> partial(static_cast<size_t>(chunk_count), BigComplex(wp));

  auto sum_chunk = [&](long index) {
    const long lo = index * kChunk + 1;
    const long hi = std::min(total, (index + 1) * kChunk);
    mpfr_t npow, term;
    mpfr_init2(npow, wp);
    mpfr_init2(term, wp);
    mpz_t nz;
    mpz_init(nz);
    BigComplex acc(wp);
    for (long i = lo; i <= hi; ++i) {
      const size_t a = static_cast<size_t>(i % n);
      if (zero[a]) continue;
      mpz_ui_pow_ui(nz, static_cast<unsigned long>(i), static_cast<unsigned long>(r));
      mpfr_set_z(npow, nz, MPFR_RNDN);
      mpfr_div(term, chi[a].re.raw(), npow, MPFR_RNDN);
      mpfr_add(acc.re.raw(), acc.re.raw(), term, MPFR_RNDN);
      if (!all_real) {
        mpfr_div(term, chi[a].im.raw(), npow, MPFR_RNDN);
        mpfr_add(acc.im.raw(), acc.im.raw(), term, MPFR_RNDN);
      }
    }
    mpz_clear(nz);
    mpfr_clear(npow);
    mpfr_clear(term);
    partial[static_cast<size_t>(index)] = std::move(acc);
  };

  const int workers = std::clamp(jobs, 1, 64);
  if (workers == 1 || chunk_count == 1) {
    for (long c = 0; c < chunk_count; ++c) sum_chunk(c);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (long c = next.fetch_add(1); c < chunk_count; c = next.fetch_add(1)) sum_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  LValue out;
  out.method = Method::direct;
  out.terms_used = total;
  out.value = BigComplex(wp);
  for (const BigComplex& c : partial) out.value += c;  // fixed reduction order

  // tail = max_abs * M^(1-r) / (r-1)
  BigReal tail = mul_q(
      1 / (pow_ui(BigReal(total, 96), static_cast<unsigned long>(r - 1)) * (r - 1)), max_abs);
  BigReal rounding = mul_q(BigReal::pow2(-static_cast<long>(prec), 96) * 4, max_abs);
  out.error_bound = (tail + rounding).round_to(64);
  return out;
}

BigReal split_identity_residual(int m, int r, mpfr_prec_t prec) {
  if (m < 2) throw std::invalid_argument("split_identity_residual: m must be >= 2");
  if (r < 3 || r % 2 == 0) {
    throw std::invalid_argument("split_identity_residual: r must be odd and >= 3");
  }
  LValue lf = l_half_sum(make_f_4m(m), r, prec);
  LValue l4 = l_half_sum(make_chi_2m(2 * m), r, prec);
  LValue l2 = l_half_sum(make_chi_2m(m), r, prec);
  mpq_class half_pow(mpz_class(1), mpz_class(1) << r);
  BigComplex residual = lf.value - l4.value + mul_q(l2.value, half_pow);
  return residual.abs();
}

BigReal zeta_oracle(int s, const BigReal& tolerance, long term_budget) {
  if (s < 2) throw std::invalid_argument("zeta_oracle: s must be an integer >= 2");
  if (!(tolerance > BigReal(0, 64))) {
    throw std::invalid_argument("zeta_oracle: tolerance must be positive");
  }

  // Remainder after the 1/12 correction term is s(s+1)(s+2) M^(-s-3) / 720;
  // M is sized to keep it at tolerance/2, leaving the other half for rounding.
  BigReal coeff(static_cast<long>(s) * (s + 1) * (s + 2), 96);
  BigReal m_min = ceil(rootn(coeff / (tolerance.round_to(96) * 360),
                             static_cast<unsigned long>(s + 3)));
  if (!(m_min < BigReal(term_budget, 96))) {
    throw InfeasibleError("zeta tolerance needs " + m_min.decimal(3) + " terms; budget is " +
                          std::to_string(term_budget));
  }
  const long m = std::max(static_cast<long>(m_min.to_double()), 10L);

  const long tol_exp = mpfr_get_exp(tolerance.raw());
  const mpfr_prec_t wp = 96 + std::max<long>(0, -tol_exp);

  BigReal sum(0, wp);
  mpfr_t npow, term;
  mpfr_init2(npow, wp);
  mpfr_init2(term, wp);
  mpz_t nz;
  mpz_init(nz);
  for (long i = 1; i <= m - 1; ++i) {
    mpz_ui_pow_ui(nz, static_cast<unsigned long>(i), static_cast<unsigned long>(s));
    mpfr_set_z(npow, nz, MPFR_RNDN);
    mpfr_si_div(term, 1, npow, MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term, MPFR_RNDN);
  }
  mpz_clear(nz);
  mpfr_clear(npow);
  mpfr_clear(term);

  BigReal mb(m, wp);
  BigReal ms = pow_ui(mb, static_cast<unsigned long>(s));  // M^s
  sum += mb / (ms * (s - 1));                              // M^(1-s)/(s-1)
  sum += 1 / (ms * 2);                                     // M^(-s)/2
  sum += BigReal(s, wp) / (ms * mb * 12);                  // s M^(-s-1)/12
  return sum;
}

LimitStudy zeta_limit_study(int r, std::span<const int> schedule, Family family,
                            mpfr_prec_t prec, const BigReal& zeta_tolerance) {
  if (r < 3 || r % 2 == 0) {
    throw std::invalid_argument("zeta_limit_study: r must be odd and >= 3");
  }
  if (family == Family::custom) {
    throw std::invalid_argument("zeta_limit_study: family must be chi or f");
  }
  if (schedule.empty()) throw std::invalid_argument("zeta_limit_study: empty schedule");
  const int min_m = family == Family::chi ? 2 : 1;
  for (size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < min_m) {
      throw std::invalid_argument("zeta_limit_study: m below the family minimum");
    }
    if (i > 0 && schedule[i] <= schedule[i - 1]) {
      throw std::invalid_argument("zeta_limit_study: schedule must be strictly ascending");
    }
  }

  LimitStudy study;
  study.reference = zeta_oracle(r, zeta_tolerance);
  if (family == Family::f) {
    // Odd-index zeta: (1 - 2^-r) * zeta(r), exact rational scale.
    mpq_class odd_scale(mpz_class((mpz_class(1) << r) - 1), mpz_class(1) << r);
    odd_scale.canonicalize();
    study.reference = mul_q(study.reference, odd_scale);
  }

  for (int m : schedule) {
    LimitRow row;
    row.m = m;
    row.value = l_half_sum(family == Family::chi ? make_chi_2m(m) : make_f_4m(m), r, prec);
    row.gap = study.reference - row.value.value.re;
    study.rows.push_back(std::move(row));
  }
  return study;
}

LValue evaluate(const EvalRequest& req) {
  if (req.precision_bits < MPFR_PREC_MIN) {
    throw std::invalid_argument("precision too small");
  }
  if (req.r < 2) throw std::invalid_argument("r must be >= 2");
  require_parity(req.f, req.r);

  switch (req.method) {
    case Method::theorem23:
      return l_theorem23(req.f, req.r, req.precision_bits);
    case Method::half_sum:
      return l_half_sum(req.f, req.r, req.precision_bits);
    case Method::trig3:
      if (req.f.family() != Family::chi || req.r != 3) {
        throw std::invalid_argument("trig3 applies to the chi family with r = 3");
      }
      return l_trig3(req.f.family_m(), req.precision_bits);
    case Method::trig3_f:
      if (req.f.family() != Family::f || req.r != 3) {
        throw std::invalid_argument("trig3_f applies to the f family with r = 3");
      }
      return l_trig3_f(req.f.family_m(), req.precision_bits);
    case Method::trig5:
      if (req.f.family() != Family::chi || req.r != 5) {
        throw std::invalid_argument("trig5 applies to the chi family with r = 5");
      }
      return l_trig5(req.f.family_m(), req.precision_bits);
    case Method::direct:
      return l_direct(req.f, req.r, req.direct_tolerance, req.precision_bits, req.jobs);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace symfn
