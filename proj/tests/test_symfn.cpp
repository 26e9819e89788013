#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <vector>

#include "symfn/serialize.hpp"
#include "symfn/symmetric_function.hpp"
#include "test_util.hpp"

using namespace symfn;

namespace {

std::vector<long> integer_values(const SymmetricFunction& f) {
  std::vector<long> out;
  for (const QComplex& v : f.values()) {
    REQUIRE(v.is_real());
    REQUIRE(v.re.get_den() == 1);
    out.push_back(v.re.get_num().get_si());
  }
  return out;
}

}  // namespace

TEST_CASE("chi family tables") {
  CHECK(integer_values(make_chi_2m(2)) == std::vector<long>{1, 0, -1});
  CHECK(integer_values(make_chi_2m(3)) == std::vector<long>{1, 1, 0, -1, -1});
  CHECK(integer_values(make_chi_2m(4)) == std::vector<long>{1, 1, 1, 0, -1, -1, -1});
  CHECK_THROWS_AS(make_chi_2m(1), std::invalid_argument);
  CHECK_THROWS_AS(make_chi_2m(0), std::invalid_argument);
}

TEST_CASE("f family tables") {
  CHECK(integer_values(make_f_4m(1)) == std::vector<long>{1, 0, -1});
  CHECK(integer_values(make_f_4m(1)) == integer_values(make_chi_2m(2)));
  CHECK(integer_values(make_f_4m(2)) == std::vector<long>{1, 0, 1, 0, -1, 0, -1});
  CHECK_THROWS_AS(make_f_4m(0), std::invalid_argument);
}

TEST_CASE("reflection law on the built-in families") {
  for (int m = 2; m <= 9; ++m) {
    SymmetricFunction chi = make_chi_2m(m);
    const int n = chi.modulus();
    CHECK(chi.value(m).is_zero());
    for (int a = 1; a < n; ++a) CHECK(chi.value(n - a) == -chi.value(a));
  }
  for (int m = 1; m <= 6; ++m) {
    SymmetricFunction f = make_f_4m(m);
    const int n = f.modulus();
    for (int a = 1; a < n; ++a) CHECK(f.value(n - a) == -f.value(a));
  }
}

TEST_CASE("from_table completes the reflected half") {
  SymmetricFunction a = from_table(4, Parity::odd, {{1, QComplex::integer(1)}});
  CHECK(integer_values(a) == std::vector<long>{1, 0, -1});

  SymmetricFunction b =
      from_table(6, Parity::odd, {{1, QComplex::integer(1)}, {2, QComplex::integer(1)}});
  CHECK(integer_values(b) == integer_values(make_chi_2m(3)));

  SymmetricFunction c =
      from_table(5, Parity::even, {{1, QComplex::integer(2)}, {2, QComplex::integer(-1)}});
  CHECK(integer_values(c) == std::vector<long>{2, -1, -1, 2});
}

TEST_CASE("from_table rejects bad input") {
  // Nonzero midpoint with odd parity.
  CHECK_THROWS_AS(from_table(4, Parity::odd,
                             {{1, QComplex::integer(1)}, {2, QComplex::integer(1)}}),
                  std::invalid_argument);
  // Missing a required value.
  CHECK_THROWS_AS(from_table(6, Parity::odd, {{1, QComplex::integer(1)}}),
                  std::invalid_argument);
  // Reflected-half residue supplied.
  CHECK_THROWS_AS(from_table(4, Parity::odd, {{3, QComplex::integer(1)}}),
                  std::invalid_argument);
  // Even parity with even modulus needs the midpoint.
  CHECK_THROWS_AS(from_table(4, Parity::even, {{1, QComplex::integer(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_table(1, Parity::odd, {}), std::invalid_argument);
}

TEST_CASE("periodic extension") {
  SymmetricFunction chi4 = make_chi_2m(2);
  CHECK(chi4.extend(7) == QComplex::integer(-1));
  CHECK(chi4.extend(-1) == QComplex::integer(-1));  // = -chi4(1)
  CHECK(chi4.extend(0).is_zero());
  for (long k = -5; k <= 5; ++k) CHECK(chi4.extend(4 * k).is_zero());

  testutil::RationalSampler sampler(20240811);
  for (int m : {2, 3, 5, 8}) {
    SymmetricFunction chi = make_chi_2m(m);
    SymmetricFunction f = make_f_4m(m);
    const int n = chi.modulus();
    for (int trial = 0; trial < 50; ++trial) {
      long x = sampler.integer(-10L * n, 10L * n);
      CHECK(chi.extend(x + n) == chi.extend(x));
      CHECK(chi.extend(-x) == -chi.extend(x));  // odd parity
      CHECK(f.extend(x + f.modulus()) == f.extend(x));
      CHECK(f.extend(-x) == -f.extend(x));
    }
  }

  // Even parity: extension is even.
  SymmetricFunction even =
      from_table(5, Parity::even, {{1, QComplex::integer(2)}, {2, QComplex::integer(-1)}});
  for (int trial = 0; trial < 30; ++trial) {
    long x = sampler.integer(-50, 50);
    CHECK(even.extend(-x) == even.extend(x));
  }
}

TEST_CASE("character classification of the small families") {
  CHECK(classify_character(make_chi_2m(2)).is_character);
  for (int m : {3, 4, 5, 6}) {
    CharacterVerdict v = classify_character(make_chi_2m(m));
    CHECK_FALSE(v.is_character);
    CHECK((v.gcd_witness.has_value() || v.mult_witness.has_value()));
  }
  CHECK(classify_character(make_f_4m(1)).is_character);
  CHECK(classify_character(make_f_4m(2)).is_character);
  CHECK_FALSE(classify_character(make_f_4m(3)).is_character);
  CHECK_FALSE(classify_character(make_f_4m(6)).is_character);
}

TEST_CASE("classification witnesses re-check as genuine violations") {
  for (int m = 1; m <= 12; ++m) {
    for (int which = 0; which < 2; ++which) {
      if (which == 0 && m < 2) continue;
      SymmetricFunction f = which == 0 ? make_chi_2m(m) : make_f_4m(m);
      CharacterVerdict v = classify_character(f);
      if (v.is_character) continue;
      if (v.gcd_witness) {
        long a = *v.gcd_witness;
        const bool unit = std::gcd(a, static_cast<long>(f.modulus())) == 1;
        CHECK(unit == f.extend(a).is_zero());
      } else {
        REQUIRE(v.mult_witness.has_value());
        auto [a, b] = *v.mult_witness;
        CHECK(f.extend(a * b) != f.extend(a) * f.extend(b));
      }
    }
  }
}

TEST_CASE("character census over both families") {
  std::set<std::string> characters;
  for (int m = 2; m <= 12; ++m) {
    if (classify_character(make_chi_2m(m)).is_character) {
      characters.insert("chi" + std::to_string(2 * m));
    }
  }
  for (int m = 1; m <= 12; ++m) {
    if (classify_character(make_f_4m(m)).is_character) {
      characters.insert("f" + std::to_string(4 * m));
    }
  }
  CHECK(characters == std::set<std::string>{"chi4", "f4", "f8"});
}

TEST_CASE("json round trip") {
  SymmetricFunction chi8 = make_chi_2m(4);
  SymmetricFunction back = symmetric_function_from_json(to_json(chi8));
  CHECK(back.modulus() == chi8.modulus());
  CHECK(back.parity() == chi8.parity());
  CHECK(back.values() == chi8.values());

  // Complex rational values survive the trip too.
  SymmetricFunction fancy = from_table(
      5, Parity::even,
      {{1, QComplex(mpq_class(1, 2), mpq_class(1, 3))}, {2, QComplex(mpq_class(-2), mpq_class(5, 7))}});
  SymmetricFunction fancy_back = symmetric_function_from_json(to_json(fancy));
  CHECK(fancy_back.values() == fancy.values());
  CHECK(to_json(fancy_back) == to_json(fancy));
}

TEST_CASE("direct construction validates the reflection law") {
  std::vector<QComplex> bad = {QComplex::integer(1), QComplex::integer(0),
                               QComplex::integer(1)};
  CHECK_THROWS_AS(SymmetricFunction(4, Parity::odd, bad), std::invalid_argument);
  std::vector<QComplex> bad_mid = {QComplex::integer(1), QComplex::integer(2),
                                   QComplex::integer(-1)};
  CHECK_THROWS_AS(SymmetricFunction(4, Parity::odd, bad_mid), std::invalid_argument);
  std::vector<QComplex> good = {QComplex::integer(1), QComplex::integer(0),
                                QComplex::integer(-1)};
  CHECK_NOTHROW(SymmetricFunction(4, Parity::odd, good));
}
