#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tutte/unipoly.hpp"

using tutte::Rational;
using tutte::UniPoly;

namespace {
std::mt19937_64 rng(0x5eed02);
Rational rnd(long n = 30, long d = 9) {
  std::uniform_int_distribution<long> num(-n, n), den(1, d);
  return Rational(num(rng), den(rng));
}
}  // namespace

TEST_CASE("zero polynomial conventions") {
  UniPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.eval(Rational(7)) == Rational(0));
  CHECK(UniPoly({Rational(0), Rational(0)}).is_zero());
}

TEST_CASE("eval matches hand values") {
  UniPoly p({Rational(-1), Rational(0), Rational(1)});  // q^2 - 1
  CHECK(p.eval(Rational(3)) == Rational(8));
  CHECK(p.degree() == 2);
  CHECK(p.str() == "q^2 - 1");
}

TEST_CASE("interpolation: constant and quadratic forced cases") {
  UniPoly c = tutte::interpolate({{Rational(0), Rational(5)}, {Rational(1), Rational(5)}}, 1);
  CHECK(c == UniPoly({Rational(5)}));

  UniPoly sq = tutte::interpolate(
      {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(4)}}, 2);
  CHECK(sq == UniPoly({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("interpolation error cases") {
  CHECK_THROWS_WITH(tutte::interpolate({{Rational(0), Rational(1)}}, 1),
                    "insufficient nodes");
  CHECK_THROWS_WITH(
      tutte::interpolate({{Rational(2), Rational(1)}, {Rational(2), Rational(3)}}, 1),
      "degenerate nodes");
}

TEST_CASE("interpolate after eval is the identity on bounded-degree polynomials") {
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> deg_dist(0, 6);
    int d = deg_dist(rng);
    std::vector<Rational> coeffs(d + 1);
    for (auto& c : coeffs) c = rnd();
    coeffs[d] = coeffs[d].is_zero() ? Rational(1) : coeffs[d];
    UniPoly p(coeffs);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int k = 0; k <= d; ++k) {
      Rational x(k * 3 + 1, 2);
      pts.emplace_back(x, p.eval(x));
    }
    CHECK(tutte::interpolate(pts, d) == p);
  }
}

TEST_CASE("Petersen flow polynomial from seven integer samples") {
  // Golden coefficients; sampled values are the polynomial's own integer
  // values, exercising exact reconstruction.
  UniPoly f({Rational(240), Rational(-620), Rational(624), Rational(-325), Rational(95),
             Rational(-15), Rational(1)});
  std::vector<std::pair<Rational, Rational>> pts;
  for (int k = 1; k <= 7; ++k) pts.emplace_back(Rational(k), f.eval(Rational(k)));
  CHECK(tutte::interpolate(pts, 6) == f);
  CHECK(f.eval(Rational(5, 2)) > Rational(0));
  CHECK(f.eval(Rational(5, 2)) == Rational(135, 64));
}
