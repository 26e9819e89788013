#include "symfn/exact_constants.hpp"

#include <stdexcept>
#include <utility>

namespace symfn {

Expr Expr::rat(mpq_class value) {
  value.canonicalize();
  return Expr(Kind::rational, std::move(value), {});
}

Expr Expr::rat(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return Expr(Kind::rational, std::move(q), {});
}

Expr Expr::sqrt(Expr arg) {
  std::vector<Expr> kids;
  kids.push_back(std::move(arg));
  return Expr(Kind::sqrt, mpq_class(0), std::move(kids));
}

Expr Expr::add(Expr lhs, Expr rhs) {
  std::vector<Expr> kids;
  kids.push_back(std::move(lhs));
  kids.push_back(std::move(rhs));
  return Expr(Kind::sum, mpq_class(0), std::move(kids));
}

Expr Expr::mul(Expr lhs, Expr rhs) {
  std::vector<Expr> kids;
  kids.push_back(std::move(lhs));
  kids.push_back(std::move(rhs));
  return Expr(Kind::product, mpq_class(0), std::move(kids));
}

BigReal Expr::eval(mpfr_prec_t prec) const {
  switch (kind_) {
    case Kind::rational:
      return BigReal(leaf_, prec);
    case Kind::sqrt: {
      BigReal arg = children_[0].eval(prec);
      if (arg.sign() < 0) throw std::domain_error("square root of a negative value");
      return symfn::sqrt(arg);
    }
    case Kind::sum:
      return children_[0].eval(prec) + children_[1].eval(prec);
    case Kind::product:
      return children_[0].eval(prec) * children_[1].eval(prec);
  }
  throw std::logic_error("unreachable expression kind");
}

ExactConstant::ExactConstant(int pi_power, long denominator, Expr body)
    : pi_power_(pi_power), denominator_(denominator), body_(std::move(body)) {
  if (pi_power_ < 0) throw std::invalid_argument("pi power must be non-negative");
  if (denominator_ <= 0) throw std::invalid_argument("denominator must be positive");
  body_.eval(64);  // sanity pass; rejects negative square-root arguments
}

BigReal ExactConstant::eval(mpfr_prec_t prec) const {
  const mpfr_prec_t wp = prec + 32;
  BigReal value = body_.eval(wp);
  if (pi_power_ > 0) {
    value = value * pow_ui(BigReal::pi(wp), static_cast<unsigned long>(pi_power_));
  }
  return value / denominator_;
}

namespace {

Expr sqrt_int(long n) { return Expr::sqrt(Expr::rat(n)); }

// a + b*sqrt(n)
Expr radical_sum(long a, long b, long n) {
  return Expr::add(Expr::rat(a), Expr::mul(Expr::rat(b), sqrt_int(n)));
}

std::vector<GoldenConstantEntry> build_table() {
  std::vector<GoldenConstantEntry> t;
  // (a + b sqrt(3)) * sqrt(2 + sqrt(3)), the nested radical shared by the
  // modulus-48 entries.
  auto nested = [](long a, long b) {
    return Expr::mul(radical_sum(a, b, 3), Expr::sqrt(radical_sum(2, 1, 3)));
  };

  t.push_back({"L3.chi4", Family::chi, 2, 3, ExactConstant(3, 32, Expr::rat(1))});
  t.push_back({"L3.chi6", Family::chi, 3, 3,
               ExactConstant(3, 243, Expr::mul(Expr::rat(5), sqrt_int(3)))});
  t.push_back({"L3.chi8", Family::chi, 4, 3, ExactConstant(3, 256, radical_sum(1, 6, 2))});
  t.push_back({"L3.chi12", Family::chi, 6, 3, ExactConstant(3, 7776, radical_sum(261, 20, 3))});
  t.push_back({"L3.chi24", Family::chi, 12, 3,
               ExactConstant(3, 62208,
                             Expr::add(nested(2484, -828),
                                       Expr::add(Expr::mul(Expr::rat(54), sqrt_int(2)),
                                                 radical_sum(261, 20, 3))))});
  t.push_back({"L3.f4", Family::f, 1, 3, ExactConstant(3, 32, Expr::rat(1))});
  t.push_back({"L3.f8", Family::f, 2, 3,
               ExactConstant(3, 128, Expr::mul(Expr::rat(3), sqrt_int(2)))});
  t.push_back({"L3.f12", Family::f, 3, 3, ExactConstant(3, 864, Expr::rat(29))});
  t.push_back({"L3.f24", Family::f, 6, 3,
               ExactConstant(3, 62208,
                             Expr::add(nested(2484, -828),
                                       Expr::mul(Expr::rat(54), sqrt_int(2))))});
  t.push_back({"L5.chi4", Family::chi, 2, 5, ExactConstant(5, 1536, Expr::rat(5))});
  t.push_back({"L5.chi6", Family::chi, 3, 5,
               ExactConstant(5, 8748, Expr::mul(Expr::rat(17), sqrt_int(3)))});
  t.push_back({"L5.chi8", Family::chi, 4, 5, ExactConstant(5, 49152, radical_sum(5, 114, 2))});
  t.push_back({"L5.chi12", Family::chi, 6, 5,
               ExactConstant(5, 1119744, radical_sum(3675, 68, 3))});
  t.push_back({"L5.chi24", Family::chi, 12, 5,
               ExactConstant(5, 35831808,
                             Expr::add(nested(143460, -47820),
                                       Expr::add(Expr::mul(Expr::rat(342), sqrt_int(2)),
                                                 radical_sum(3675, 68, 3))))});
  return t;
}

}  // namespace

const std::vector<GoldenConstantEntry>& constant_table() {
  static const std::vector<GoldenConstantEntry> table = build_table();
  return table;
}

const GoldenConstantEntry* find_constant(Family family, int m, int r) {
  for (const GoldenConstantEntry& e : constant_table()) {
    if (e.family == family && e.m == m && e.r == r) return &e;
  }
  return nullptr;
}

const GoldenConstantEntry* find_constant(std::string_view id) {
  for (const GoldenConstantEntry& e : constant_table()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<mpz_class> euler_numbers(int count) {
  if (count < 1) throw std::invalid_argument("euler_numbers: count must be >= 1");
  std::vector<mpz_class> e;
  e.reserve(static_cast<size_t>(count));
  e.emplace_back(1);
  mpz_class binom;
  for (int n = 1; n < count; ++n) {
    mpz_class acc(0);
    for (int k = 0; k < n; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * n),
                   static_cast<unsigned long>(2 * k));
      acc += binom * e[static_cast<size_t>(k)];
    }
    e.push_back(-acc);
  }
  return e;
}

}  // namespace symfn
