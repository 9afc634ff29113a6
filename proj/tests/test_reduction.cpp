#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tutte/reduction.hpp"
#include "tutte/tutte_eval.hpp"

using namespace tutte;

namespace {
std::mt19937_64 rng(0x5eed09);

long rnd_int(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng);
}
}  // namespace

TEST_CASE("brute-force cut counting on the pinned examples") {
  // path s-u-t: every single edge separates
  Multigraph path(3, {{0, 1}, {1, 2}});
  CHECK(count_min_cuts_brute(path, 0, 2) == CutCount{1, 2});

  // C4 through s,a,t,b: four pairs separate
  Multigraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(count_min_cuts_brute(c4, 0, 2) == CutCount{2, 4});

  // two disjoint s-t paths of length 2
  Multigraph two(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}});
  CHECK(count_min_cuts_brute(two, 0, 2) == CutCount{2, 4});

  Multigraph direct(2, {{0, 1}});
  CHECK_THROWS(count_min_cuts_brute(direct, 0, 1));
  Multigraph split(3, {{0, 1}});
  CHECK_THROWS(count_min_cuts_brute(split, 0, 2));
}

TEST_CASE("idealized reduction recovers (k, C) on the pinned instances") {
  Multigraph path(3, {{0, 1}, {1, 2}});
  Multigraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  SignOracle oracle = exact_sign_oracle();

  ReductionReport r = count_min_cuts_via_sign(path, 0, 2, Rational(5, 2), oracle);
  CHECK(r.count == CutCount{1, 2});
  CHECK(r.bracket_hi - r.bracket_lo <= r.params.precision);

  CHECK(count_min_cuts_via_sign(c4, 0, 2, Rational(3, 2), oracle).count == CutCount{2, 4});
  CHECK(count_min_cuts_via_sign(c4, 0, 2, Rational(1, 2), oracle).count == CutCount{2, 4});
  CHECK(count_min_cuts_via_sign(c4, 0, 2, Rational(-1), oracle).count == CutCount{2, 4});

  CHECK_THROWS(count_min_cuts_via_sign(path, 0, 2, Rational(1), oracle));
  CHECK_THROWS(count_min_cuts_via_sign(path, 0, 2, Rational(0), oracle));
}

TEST_CASE("estimate facts and endpoint signs hold on constructed instances") {
  SignOracle oracle = exact_sign_oracle();
  std::vector<std::pair<Multigraph, std::pair<int, int>>> instances;
  instances.push_back({Multigraph(3, {{0, 1}, {1, 2}}), {0, 2}});
  instances.push_back({Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), {0, 2}});
  instances.push_back({Multigraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), {0, 1}});

  for (const auto& [g, st] : instances) {
    auto [s, t] = st;
    CutCount truth = count_min_cuts_brute(g, s, t);
    for (Rational q : {Rational(5, 2), Rational(3, 2), Rational(1, 2), Rational(-1)}) {
      ReductionReport rep = count_min_cuts_via_sign(g, s, t, q, oracle);
      CHECK(rep.count == truth);

      int m = g.edge_count();
      const Rational& M = rep.params.M;
      const Rational& delta = rep.params.delta;
      // Facts (6) and (7) against the exact two-terminal split at weight M.
      TwoTerminalSplit split = z_two_terminal(g, s, t, q, WeightFunction(g, M));
      Rational center = M.pow(m) * q;
      CHECK((split.z_st - center).abs() <= delta * M.pow(m) * q.abs());
      Rational cut_center = Rational(truth.c) * M.pow(m - truth.k) * q * q;
      CHECK(cut_center * (Rational(1) - delta) <= split.z_s_bar_t);
      CHECK(split.z_s_bar_t <= cut_center * (Rational(1) + delta));

      // endpoint signs as the lemmas claim
      auto z_at = [&](const Rational& eps) {
        Multigraph gp = g;
        EdgeId aux = gp.add_edge(s, t);
        WeightFunction w(gp, M);
        w.set(aux, q > Rational(1) ? Rational(-1) - eps : Rational(-1) + eps);
        return z_multivariate(gp, q, w);
      };
      int lo_sign = z_at(rep.params.eps_lo).sign();
      int hi_sign = z_at(rep.params.eps_hi).sign();
      if (q > Rational(1) || q < Rational(0)) {
        CHECK(lo_sign == 1);
        CHECK(hi_sign == -1);
      } else {
        CHECK(lo_sign == -1);
        CHECK(hi_sign == 1);
      }
    }
  }
}

TEST_CASE("idealized reduction equals brute force on random connected graphs") {
  SignOracle oracle = exact_sign_oracle();
  int done = 0;
  for (int trial = 0; trial < 400 && done < 12; ++trial) {
    int n = static_cast<int>(rnd_int(3, 5));
    Multigraph g(n);
    int m = static_cast<int>(rnd_int(2, 6));
    for (int i = 0; i < m; ++i) {
      int u = static_cast<int>(rnd_int(0, n - 1));
      int v = static_cast<int>(rnd_int(0, n - 1));
      if (u == v) continue;
      if ((u == 0 && v == n - 1) || (v == 0 && u == n - 1)) continue;
      g.add_edge(u, v);
    }
    if (!g.is_connected() || g.edge_count() < 2) continue;
    ++done;
    CutCount truth = count_min_cuts_brute(g, 0, n - 1);
    Rational q = trial % 2 ? Rational(5, 2) : Rational(-1);
    CHECK(count_min_cuts_via_sign(g, 0, n - 1, q, oracle).count == truth);
  }
  CHECK(done == 12);
}

TEST_CASE("gadgetized mode either completes or fails with the documented message") {
  SignOracle oracle = exact_sign_oracle();
  Multigraph path(3, {{0, 1}, {1, 2}});
  try {
    ReductionReport rep =
        count_min_cuts_via_sign(path, 0, 2, Rational(5, 2), oracle, ReductionMode::Gadgetized);
    CHECK(rep.count == CutCount{1, 2});
  } catch (const std::runtime_error& ex) {
    // the bounded search stands in for the imported shift lemmas and may
    // run out of reach; that failure must be explicit and informative
    CHECK(std::string(ex.what()).find("approach_weight") != std::string::npos);
  }
}
