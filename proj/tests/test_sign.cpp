#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tutte/sign.hpp"
#include "tutte/tutte_eval.hpp"

using namespace tutte;

namespace {
std::mt19937_64 rng(0x5eed07);

long rnd_int(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng);
}

Multigraph random_multigraph(int max_n, int max_m) {
  int n = static_cast<int>(rnd_int(1, max_n));
  Multigraph g(n);
  int m = static_cast<int>(rnd_int(0, max_m));
  for (int i = 0; i < m; ++i)
    g.add_edge(static_cast<int>(rnd_int(0, n - 1)), static_cast<int>(rnd_int(0, n - 1)));
  return g;
}

SignValue brute_sign(const Multigraph& g, const PlanePoint& p) {
  return sign_of(z_brute(g, p.q(), WeightFunction(g, p.gamma())));
}

void check_agrees(const Multigraph& g, const PlanePoint& p) {
  SignReport r = sign_dispatch(g, p);
  SignValue expected = brute_sign(g, p);
  INFO("point (", p.x.str(), ",", p.y.str(), ") method ", r.method, " -> ", to_string(r.sign),
       " expected ", to_string(expected));
  CHECK(r.sign == expected);
  if (r.value) CHECK(*r.value == z_brute(g, p.q(), WeightFunction(g, p.gamma())));
}

Rational rnd_rat_in(const Rational& lo, const Rational& hi, long den = 16) {
  // lo + k/den*(hi-lo) for random k in (0, den)
  long k = rnd_int(1, den - 1);
  return lo + (hi - lo) * Rational(k, den);
}
}  // namespace

TEST_CASE("deciders on the pinned cases") {
  CHECK_FALSE(decide_colourable(complete_graph(4), 3));
  CHECK(decide_colourable(complete_graph(4), 4));
  CHECK(decide_colourable(cycle_graph(5), 3));
  CHECK_THROWS_WITH(decide_colourable(complete_graph(5), 3, /*cap*/ 2),
                    "NP point, instance too large");
  CHECK(decide_nz_flow(cycle_graph(5), 2));   // all degrees even
  CHECK_FALSE(decide_nz_flow(path_graph(2), 7));  // bridge obstruction
  CHECK_FALSE(decide_nz_flow(petersen_graph(), 4));  // the classic non-4-flowable graph
  CHECK(decide_nz_flow(petersen_graph(), 5));
  CHECK_THROWS_AS(decide_colourable(complete_graph(4), 2), std::invalid_argument);
}

TEST_CASE("deciders agree with the counting oracles on random graphs") {
  for (int trial = 0; trial < 120; ++trial) {
    Multigraph g = random_multigraph(5, 7);
    for (int q = 3; q <= 4; ++q) {
      CHECK(decide_colourable(g, q) == (count_colourings_brute(g, q) > 0));
      CHECK(decide_nz_flow(g, q) == (count_nzflows_brute(g, q) > 0));
    }
    CHECK(decide_nz_flow(g, 2) == (count_nzflows_brute(g, 2) > 0));
  }
}

TEST_CASE("value_matroid_qneg: base cases and equality with enumeration") {
  BinaryMatroid empty(0, {});
  CHECK(value_matroid_qneg(empty, Rational(-2), WeightFunction()) == Rational(1));

  // free matroid: product of (1 + gamma/q) factors
  BinaryMatroid id3(3, {0b001, 0b010, 0b100});
  WeightFunction w;
  for (EdgeId id : id3.labels()) w.set(id, Rational(-1, 2));
  CHECK(value_matroid_qneg(id3, Rational(-2), w) ==
        (Rational(1) + Rational(-1, 2) / Rational(-2)).pow(3));

  // K3 cycle matroid at q=-2, gamma=-3/2
  Multigraph k3 = cycle_graph(3);
  BinaryMatroid m = cycle_matroid(k3);
  WeightFunction w3(k3, Rational(-3, 2));
  Rational got = value_matroid_qneg(m, Rational(-2), w3);
  CHECK(got == z_tilde(m, Rational(-2), w3));
  CHECK(got > Rational(0));

  CHECK_THROWS(value_matroid_qneg(m, Rational(2), w3));
  WeightFunction bad(k3, Rational(-3));
  CHECK_THROWS(value_matroid_qneg(m, Rational(-2), bad));
}

TEST_CASE("value_matroid_qneg positive and exact on random loopless matroids") {
  for (int trial = 0; trial < 120; ++trial) {
    int cols = static_cast<int>(rnd_int(0, 6));
    int rows = static_cast<int>(rnd_int(1, 4));
    std::vector<std::uint64_t> bits(rows);
    for (auto& b : bits) b = static_cast<std::uint64_t>(rnd_int(0, (1 << cols) - 1));
    BinaryMatroid m(cols, bits);
    bool loopless = true;
    for (int c = 0; c < cols; ++c)
      if (m.is_loop(c)) loopless = false;
    if (!loopless) continue;
    Rational q = -rnd_rat_in(Rational(1, 8), Rational(4));
    WeightFunction w;
    for (EdgeId id : m.labels()) w.set(id, -rnd_rat_in(Rational(0), Rational(2)));
    Rational v = value_matroid_qneg(m, q, w);
    CHECK(v > Rational(0));
    CHECK(v == z_tilde(m, q, w));
  }
}

TEST_CASE("value_matroid_js: base cases, sign law, equality with enumeration") {
  BinaryMatroid empty(0, {});
  CHECK(value_matroid_js(empty, Rational(1, 2), WeightFunction()) == Rational(1));

  // single coloop: factor (1 + gamma/q) < 0
  BinaryMatroid single(1, {0b1});
  WeightFunction w;
  w.set(0, Rational(-3, 4));  // gamma < -q = -5/8
  Rational v = value_matroid_js(single, Rational(5, 8), w);
  CHECK(v == Rational(1) + Rational(-3, 4) / Rational(5, 8));
  CHECK(v < Rational(0));

  // C3 cycle matroid at the region-L point (1/2, -1/4): q = 5/8, gamma = -5/4
  Multigraph c3 = cycle_graph(3);
  BinaryMatroid m = cycle_matroid(c3);
  WeightFunction wc(c3, Rational(-5, 4));
  Rational got = value_matroid_js(m, Rational(5, 8), wc);
  CHECK(got == z_tilde(m, Rational(5, 8), wc));
  CHECK(got > Rational(0));  // rank 2, sign (-1)^2

  CHECK_THROWS(value_matroid_js(m, Rational(5, 8), WeightFunction(c3, Rational(-3))));
  CHECK_THROWS(value_matroid_js(m, Rational(3, 2), wc));
}

TEST_CASE("value_matroid_js sign (-1)^rank and exactness on random matroids") {
  int done = 0;
  for (int trial = 0; trial < 600 && done < 120; ++trial) {
    int cols = static_cast<int>(rnd_int(0, 6));
    int rows = static_cast<int>(rnd_int(1, 4));
    std::vector<std::uint64_t> bits(rows);
    for (auto& b : bits) b = static_cast<std::uint64_t>(rnd_int(0, (1 << cols) - 1));
    BinaryMatroid m(cols, bits);
    Rational q = rnd_rat_in(Rational(1, 16), Rational(15, 16), 32);
    // choose per-element weights inside the right window
    WeightFunction w;
    bool feasible = true;
    Rational one_minus_q = Rational(1) - q;
    for (int c = 0; c < cols && feasible; ++c) {
      EdgeId id = m.labels()[c];
      if (m.is_loop(c)) {
        w.set(id, rnd_rat_in(Rational(-1), Rational(2)));
      } else if (m.is_coloop(c)) {
        w.set(id, -q - rnd_rat_in(Rational(0), Rational(2)));
      } else {
        // |1+gamma| < sqrt(1-q): try gamma = -1 +- (1-q)*k/16 which squares
        // below 1-q since (1-q) < sqrt(1-q) for q in (0,1)
        Rational offset = one_minus_q * Rational(rnd_int(-15, 15), 16);
        Rational gamma = Rational(-1) + offset;
        if ((Rational(1) + gamma) * (Rational(1) + gamma) >= one_minus_q) {
          feasible = false;
          break;
        }
        w.set(id, gamma);
      }
    }
    if (!feasible) continue;
    ++done;
    Rational v = value_matroid_js(m, q, w);
    CHECK(v == z_tilde(m, q, w));
    int full_rank = m.full_rank();
    CHECK(sign_of(v) == (full_rank % 2 == 0 ? SignValue::Positive : SignValue::Negative));
  }
  CHECK(done >= 100);
}

TEST_CASE("sign_dispatch pinned examples") {
  // C4 at (-1,0): bipartite -> positive
  SignReport r = sign_dispatch(cycle_graph(4), {Rational(-1), Rational(0)});
  CHECK(r.sign == SignValue::Positive);
  CHECK(r.method == "bipartite-test");

  // K3 at (0,-1): Z(K3;2,-2) = -8
  r = sign_dispatch(cycle_graph(3), {Rational(0), Rational(-1)});
  CHECK(r.sign == SignValue::Negative);

  // K3 at (-2,1/2): region E with q = 3/2 -> exact fallback
  r = sign_dispatch(cycle_graph(3), {Rational(-2), Rational(1, 2)});
  CHECK(r.method == "exact-fallback");
  CHECK(r.sign == brute_sign(cycle_graph(3), {Rational(-2), Rational(1, 2)}));

  // loopless connected graphs in region L: sign (-1)^{n-1}
  for (int n = 2; n <= 5; ++n) {
    SignReport rl = sign_dispatch(cycle_graph(n), {Rational(1, 2), Rational(-1, 4)});
    CHECK(rl.sign == (n % 2 == 1 ? SignValue::Positive : SignValue::Negative));
    SignReport rp = sign_dispatch(path_graph(n), {Rational(1, 2), Rational(-1, 4)});
    CHECK(rp.sign == ((n + 1) % 2 == 1 ? SignValue::Positive : SignValue::Negative));
  }
}

TEST_CASE("region A sign rule agrees with brute force everywhere, boundaries included") {
  std::vector<PlanePoint> points = {
      {Rational(2), Rational(2)},        {Rational(1, 2), Rational(1, 2)},
      {Rational(1, 2), Rational(3)},     {Rational(3), Rational(1, 2)},
      {Rational(0), Rational(0)},        {Rational(0), Rational(1, 2)},
      {Rational(0), Rational(3)},        {Rational(1, 2), Rational(0)},
      {Rational(3), Rational(0)},        {Rational(1), Rational(1, 2)},
      {Rational(1, 2), Rational(1)},     {Rational(1), Rational(1)},
      {Rational(0), Rational(1)},        {Rational(1), Rational(0)},
  };
  for (const auto& p : points)
    for (int trial = 0; trial < 25; ++trial) check_agrees(random_multigraph(5, 7), p);
}

TEST_CASE("sign_dispatch agrees with brute force on every FP rule, random points") {
  auto run = [&](auto sample_point, int count = 60) {
    for (int i = 0; i < count; ++i) {
      PlanePoint p = sample_point();
      check_agrees(random_multigraph(4, 7), p);
    }
  };

  // region A interior
  run([] { return PlanePoint{rnd_rat_in(Rational(0), Rational(3)), rnd_rat_in(Rational(0), Rational(3))}; });
  // q = 1 hyperbola: x free, y = 1/(x-1)+1, avoiding other regions is not
  // needed since dispatch handles any classification
  run([] {
    Rational x = rnd_rat_in(Rational(-3), Rational(-1, 5));
    return PlanePoint{x, Rational(1) / (x - Rational(1)) + Rational(1)};
  });
  // region E with integer q: x = 1 - k/(1-y)
  run([] {
    Rational y = rnd_rat_in(Rational(0), Rational(1));
    long k = rnd_int(2, 5);
    return PlanePoint{Rational(1) - Rational(k) / (Rational(1) - y), y};
  });
  // region F with integer q: y = 1 - k/(1-x)
  run([] {
    Rational x = rnd_rat_in(Rational(0), Rational(1));
    long k = rnd_int(2, 5);
    return PlanePoint{x, Rational(1) - Rational(k) / (Rational(1) - x)};
  });
  // (-1, 0) and the NP decider points
  run([] { return PlanePoint{Rational(-1), Rational(0)}; }, 40);
  run([] { return PlanePoint{Rational(-2), Rational(0)}; }, 40);
  run([] { return PlanePoint{Rational(-3), Rational(0)}; }, 40);
  run([] { return PlanePoint{Rational(0), Rational(-1)}; }, 40);
  run([] { return PlanePoint{Rational(0), Rational(-2)}; }, 40);
  run([] { return PlanePoint{Rational(0), Rational(-5)}; }, 40);
  run([] { return PlanePoint{Rational(0), Rational(-7)}; }, 40);
  // region K
  run([] { return PlanePoint{rnd_rat_in(Rational(1), Rational(4)), rnd_rat_in(Rational(-1), Rational(0))}; });
  // region J
  run([] { return PlanePoint{rnd_rat_in(Rational(-1), Rational(0)), rnd_rat_in(Rational(1), Rational(4))}; });
  // region L
  run([] {
    Rational x = rnd_rat_in(Rational(0), Rational(1), 32);
    return PlanePoint{x, rnd_rat_in(-x, Rational(0), 32)};
  });
  // region M
  run([] {
    Rational y = rnd_rat_in(Rational(0), Rational(1), 32);
    return PlanePoint{rnd_rat_in(-y, Rational(0), 32), y};
  });
  // K and J edges: y = -1 and x = -1
  run([] { return PlanePoint{rnd_rat_in(Rational(1), Rational(4)), Rational(-1)}; }, 30);
  run([] { return PlanePoint{Rational(-1), rnd_rat_in(Rational(1), Rational(4))}; }, 30);
}

TEST_CASE("region L preconditions hold for gamma = y-1 symbolically") {
  for (int trial = 0; trial < 200; ++trial) {
    Rational x = rnd_rat_in(Rational(0), Rational(1), 64);
    Rational y = rnd_rat_in(-x, Rational(0), 64);
    PlanePoint p{x, y};
    Rational q = p.q();
    // the lemma chain: q = (1-x)(1-y) < (1-x)(1+x) = 1-x^2 < 1 and q > 1-x > 0
    CHECK(q < Rational(1) - x * x);
    CHECK(q > Rational(1) - x);
    CHECK(q > Rational(0));
    CHECK(q < Rational(1));
    Rational gamma = p.gamma();
    CHECK((Rational(1) + gamma) * (Rational(1) + gamma) < Rational(1) - q);  // normal window
    CHECK(gamma < -q);                                                       // coloop window
  }
}

TEST_CASE("sign_dispatch agrees with brute force at arbitrary plane points") {
  // Unconstrained sampling drives every classification row, including
  // boundary seams between rules and the exact-fallback regions.
  for (int trial = 0; trial < 500; ++trial) {
    PlanePoint p{Rational(rnd_int(-12, 12), rnd_int(1, 4)), Rational(rnd_int(-12, 12), rnd_int(1, 4))};
    check_agrees(random_multigraph(4, 6), p);
  }
}

TEST_CASE("exact fallback covers hard regions and matches brute force") {
  std::vector<PlanePoint> hard = {
      {Rational(-1, 2), Rational(-1, 2)},  // G
      {Rational(-2), Rational(-2)},        // B
      {Rational(-2), Rational(2)},         // C
      {Rational(2), Rational(-2)},         // D
      {Rational(-1), Rational(-1)},        // B-special (FP but no dedicated rule)
  };
  for (const auto& p : hard)
    for (int trial = 0; trial < 20; ++trial) check_agrees(random_multigraph(4, 6), p);
}
