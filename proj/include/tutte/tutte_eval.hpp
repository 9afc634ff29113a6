#ifndef TUTTE_TUTTE_EVAL_HPP
#define TUTTE_TUTTE_EVAL_HPP

#include <cstdint>

#include "tutte/graph.hpp"
#include "tutte/unipoly.hpp"

namespace tutte {

/// Z(G;q,gamma) = sum over edge subsets A of q^kappa(V,A) * prod_{e in A} gamma_e.
/// Direct enumeration; the oracle of record.  Throws when |E| exceeds the cap.
Rational z_brute(const Multigraph& g, const Rational& q, const WeightFunction& w,
                 int brute_cap = 20);

/// Same value as z_brute on every input, computed by deletion-contraction
/// with loop / parallel / bridge / series reductions and per-call memoization.
Rational z_multivariate(const Multigraph& g, const Rational& q, const WeightFunction& w);

/// Split of Z by whether s and t end up in the same component.
struct TwoTerminalSplit {
  Rational z_st;
  Rational z_s_bar_t;
  Rational total() const { return z_st + z_s_bar_t; }
};

/// Computed from two full evaluations (Z, and Z of g plus an auxiliary
/// (s,t) edge of weight 1) by solving the 2x2 system; falls back to direct
/// enumeration at q in {0,1} where the system is singular.
TwoTerminalSplit z_two_terminal(const Multigraph& g, int s, int t, const Rational& q,
                                const WeightFunction& w);

/// P(G;q) = Z(G;q,-1), reconstructed by interpolation at q = 1..|V|+1.
UniPoly chromatic_poly(const Multigraph& g);

/// F(G;q) = q^{-|V|} (-1)^{|E|} Z(G;q,-q), degree = |E|-|V|+kappa,
/// reconstructed by interpolation at integer nodes.
UniPoly flow_poly(const Multigraph& g);

/// Enumeration oracles for positive integer q.  Throw when the search space
/// (q^|V| resp. (q-1)^|E| resp. q^|V|) exceeds the cap.
std::int64_t count_colourings_brute(const Multigraph& g, int q,
                                    std::int64_t oracle_cap = 50'000'000);
std::int64_t count_nzflows_brute(const Multigraph& g, int q,
                                 std::int64_t oracle_cap = 50'000'000);
Rational potts_brute(const Multigraph& g, int q, const Rational& gamma,
                     std::int64_t oracle_cap = 50'000'000);

}  // namespace tutte

#endif
