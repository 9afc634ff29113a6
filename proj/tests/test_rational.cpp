#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tutte/rational.hpp"

using tutte::Rational;

namespace {

std::mt19937_64 rng(0x5eed01);

Rational random_rational(long num_range = 200, long den_range = 40) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_range);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
  Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("parse and print round-trip the text form") {
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational::parse("-5").str() == "-5");
  CHECK(Rational::parse("10/15").str() == "2/3");
  CHECK(Rational::parse("-4/6").str() == "-2/3");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("x"));
  for (int i = 0; i < 200; ++i) {
    Rational r = random_rational();
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("field axioms on random samples") {
  for (int i = 0; i < 300; ++i) {
    Rational a = random_rational(), b = random_rational();
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK(a * b / b == a);
    CHECK((a < b) + (a == b) + (b < a) == 1);  // total order trichotomy
  }
}

TEST_CASE("pow handles negative exponents and signs") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK(Rational(-2).pow(0) == Rational(1));
  CHECK(Rational(0).pow(5) == Rational(0));
  CHECK_THROWS(Rational(0).pow(-1));
}

TEST_CASE("floor and integrality") {
  CHECK(Rational(7, 2).floor() == Rational(3));
  CHECK(Rational(-7, 2).floor() == Rational(-4));
  CHECK(Rational(6, 3).is_integer());
  CHECK_FALSE(Rational(7, 3).is_integer());
}

TEST_CASE("sign tracks the numerator") {
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(3, 7).sign() == 1);
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
}
