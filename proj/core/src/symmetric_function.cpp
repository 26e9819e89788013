#include "symfn/symmetric_function.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace symfn {

SymmetricFunction::SymmetricFunction(int modulus, Parity parity,
                                     std::vector<QComplex> values, Family family,
                                     int family_m)
    : modulus_(modulus),
      parity_(parity),
      values_(std::move(values)),
      family_(family),
      family_m_(family_m) {
  if (modulus_ < 2) throw std::invalid_argument("symmetric function: modulus must be >= 2");
  if (values_.size() != static_cast<size_t>(modulus_ - 1)) {
    throw std::invalid_argument("symmetric function: need one value per residue 1..N-1");
  }
  const int sign = reflection_sign(parity_);
  for (int a = 1; a <= modulus_ - 1; ++a) {
    const QComplex& lhs = values_[static_cast<size_t>(modulus_ - a - 1)];
    QComplex rhs = values_[static_cast<size_t>(a - 1)];
    if (sign < 0) rhs = -rhs;
    if (lhs != rhs) {
      throw std::invalid_argument("symmetric function: reflection law fails at a=" +
                                  std::to_string(a));
    }
  }
  if (parity_ == Parity::odd && modulus_ % 2 == 0 &&
      !values_[static_cast<size_t>(modulus_ / 2 - 1)].is_zero()) {
    throw std::invalid_argument("symmetric function: midpoint must vanish for odd parity");
  }
}

QComplex SymmetricFunction::extend(long n) const {
  long rem = n % modulus_;
  if (rem < 0) rem += modulus_;
  if (rem == 0) return QComplex();
  return values_[static_cast<size_t>(rem - 1)];
}

mpq_class SymmetricFunction::max_abs_bound() const {
  mpq_class best(0);
  for (const QComplex& v : values_) {
    mpq_class b = v.abs_upper_bound();
    if (b > best) best = b;
  }
  return best;
}

namespace {
// Table-size guard; also keeps 4*m clear of int overflow.
constexpr int kMaxFamilyIndex = 1'000'000;
}  // namespace

SymmetricFunction make_chi_2m(int m) {
  if (m < 2) throw std::invalid_argument("make_chi_2m: m must be >= 2");
  if (m > kMaxFamilyIndex) throw std::invalid_argument("make_chi_2m: m exceeds the table budget");
  const int n = 2 * m;
  std::vector<QComplex> values(static_cast<size_t>(n - 1));
  for (int a = 1; a <= n - 1; ++a) {
    int v = 0;
    if (a <= m - 1) v = 1;
    else if (a >= m + 1) v = -1;
    values[static_cast<size_t>(a - 1)] = QComplex::integer(v);
  }
  return SymmetricFunction(n, Parity::odd, std::move(values), Family::chi, m);
}

SymmetricFunction make_f_4m(int m) {
  if (m < 1) throw std::invalid_argument("make_f_4m: m must be >= 1");
  if (m > kMaxFamilyIndex) throw std::invalid_argument("make_f_4m: m exceeds the table budget");
  const int n = 4 * m;
  std::vector<QComplex> values(static_cast<size_t>(n - 1));
  for (int a = 1; a <= n - 1; ++a) {
    int v = 0;
    if (a % 2 != 0) v = (a <= 2 * m - 1) ? 1 : -1;
    values[static_cast<size_t>(a - 1)] = QComplex::integer(v);
  }
  return SymmetricFunction(n, Parity::odd, std::move(values), Family::f, m);
}

SymmetricFunction from_table(int modulus, Parity parity,
                             const std::map<int, QComplex>& partial_values) {
  if (modulus < 2) throw std::invalid_argument("from_table: modulus must be >= 2");
  const bool even_n = modulus % 2 == 0;
  const int mid = modulus / 2;

  for (const auto& [a, v] : partial_values) {
    if (a < 1 || a > modulus - 1) {
      throw std::invalid_argument("from_table: residue out of range: " + std::to_string(a));
    }
    if (2 * a > modulus) {
      throw std::invalid_argument("from_table: residue " + std::to_string(a) +
                                  " is in the reflected half; supply only a < N/2");
    }
    if (even_n && a == mid && parity == Parity::odd && !v.is_zero()) {
      throw std::invalid_argument("from_table: midpoint must be zero for odd parity");
    }
  }

  std::vector<QComplex> values(static_cast<size_t>(modulus - 1));
  const int sign = reflection_sign(parity);
  for (int a = 1; 2 * a < modulus; ++a) {
    auto it = partial_values.find(a);
    if (it == partial_values.end()) {
      throw std::invalid_argument("from_table: missing value at a=" + std::to_string(a));
    }
    values[static_cast<size_t>(a - 1)] = it->second;
    QComplex reflected = it->second;
    if (sign < 0) reflected = -reflected;
    values[static_cast<size_t>(modulus - a - 1)] = reflected;
  }
  if (even_n) {
    if (parity == Parity::even) {
      auto it = partial_values.find(mid);
      if (it == partial_values.end()) {
        throw std::invalid_argument("from_table: even parity with even modulus needs a midpoint value");
      }
      values[static_cast<size_t>(mid - 1)] = it->second;
    }
    // Odd parity midpoint stays zero (forced by the reflection law).
  }
  size_t expected = static_cast<size_t>((modulus - 1) / 2);
  if (even_n && (parity == Parity::even || partial_values.count(mid) != 0)) expected += 1;
  if (partial_values.size() != expected) {
    throw std::invalid_argument("from_table: unexpected extra values supplied");
  }
  return SymmetricFunction(modulus, parity, std::move(values));
}

CharacterVerdict classify_character(const SymmetricFunction& f) {
  const int n = f.modulus();
  CharacterVerdict verdict;

  // Vanishing must follow the gcd rule exactly.
  for (long a = 1; a < n; ++a) {
    const bool unit = std::gcd(a, static_cast<long>(n)) == 1;
    const bool zero = f.extend(a).is_zero();
    if (unit == zero) {
      verdict.is_character = false;
      verdict.gcd_witness = a;
      return verdict;
    }
  }

  // Multiplicativity on units; smallest violating pair wins.
  for (long a = 1; a < n; ++a) {
    if (std::gcd(a, static_cast<long>(n)) != 1) continue;
    for (long b = a; b < n; ++b) {
      if (std::gcd(b, static_cast<long>(n)) != 1) continue;
      if (f.extend(a * b) != f.extend(a) * f.extend(b)) {
        verdict.is_character = false;
        verdict.mult_witness = {a, b};
        return verdict;
      }
    }
  }

  verdict.is_character = true;
  return verdict;
}

}  // namespace symfn
