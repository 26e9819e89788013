#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "symfn/qcomplex.hpp"

namespace symfn {

// Parity class of the reflection law: values(N-a) = (-1)^r values(a) with
// (-1)^r = -1 for odd, +1 for even.
enum class Parity { odd, even };

inline int reflection_sign(Parity p) { return p == Parity::odd ? -1 : 1; }
inline Parity parity_of_exponent(int r) { return (r % 2 != 0) ? Parity::odd : Parity::even; }

// Provenance of a built-in family, used by the CLI and by method dispatch.
enum class Family { chi, f, custom };

// A function on residues 1..N-1 obeying the reflection law, extended
// N-periodically to all integers with value 0 at multiples of N.
// Immutable after construction; construction validates the reflection law
// (and the forced zero midpoint for odd parity, even N).
class SymmetricFunction {
 public:
  SymmetricFunction(int modulus, Parity parity, std::vector<QComplex> values,
                    Family family = Family::custom, int family_m = 0);

  int modulus() const { return modulus_; }
  Parity parity() const { return parity_; }
  Family family() const { return family_; }
  int family_m() const { return family_m_; }

  // Value at residue a, 1 <= a <= N-1.
  const QComplex& value(int a) const { return values_.at(static_cast<size_t>(a - 1)); }
  const std::vector<QComplex>& values() const { return values_; }

  // Periodic extension to any integer: zero at multiples of N, and the
  // reflection law gives values at negative arguments.
  QComplex extend(long n) const;

  // Exact rational bound on max |value|; used in tail estimates.
  mpq_class max_abs_bound() const;

 private:
  int modulus_;
  Parity parity_;
  std::vector<QComplex> values_;
  Family family_;
  int family_m_;
};

// Block-sign family mod 2m: +1 on 1..m-1, 0 at m, -1 on m+1..2m-1. Odd parity.
SymmetricFunction make_chi_2m(int m);

// Odd-support block-sign family mod 4m: 0 on even a, +1 on odd a <= 2m-1,
// -1 on odd a in 2m+1..4m-1. Odd parity.
SymmetricFunction make_f_4m(int m);

// Builds a symmetric function from the free half of the table: values for
// 1 <= a < N/2, completed by the reflection law.  For even N the midpoint
// N/2 is forced to 0 for odd parity and must be supplied for even parity.
SymmetricFunction from_table(int modulus, Parity parity,
                             const std::map<int, QComplex>& partial_values);

struct CharacterVerdict {
  bool is_character = false;
  // A residue whose vanishing disagrees with the gcd rule (value zero on a
  // unit, or nonzero on a non-unit), checked before the pair scan.
  std::optional<long> gcd_witness;
  // Smallest (a, b) in lexicographic order with value(ab) != value(a)*value(b).
  std::optional<std::pair<long, long>> mult_witness;
};

// Decides whether the periodic extension is a Dirichlet character mod N:
// nonzero exactly on residues coprime to N, and multiplicative on them.
// The check is exhaustive over residues and residue pairs.
CharacterVerdict classify_character(const SymmetricFunction& f);

}  // namespace symfn
