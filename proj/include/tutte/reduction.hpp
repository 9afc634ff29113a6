#ifndef TUTTE_REDUCTION_HPP
#define TUTTE_REDUCTION_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "tutte/graph.hpp"
#include "tutte/sign.hpp"

namespace tutte {

/// Tuned quantities of one reduction run.
struct ReductionParams {
  Rational M;         // heavy edge weight
  int h = 0;          // thickening exponent realizing M = (gamma2+1)^h - 1
  Rational delta;     // relative slack of the Z_st / Z_s|t estimates
  Rational eps_lo;    // left end of the initial search interval
  Rational eps_hi;    // right end of the initial search interval
  Rational rho;       // bound on |Z(G')| at the final endpoint
  Rational precision; // target width of the final bracket
};

struct CutCount {
  int k = 0;           // minimum cut cardinality
  std::int64_t c = 0;  // number of size-k (s,t)-cuts
  bool operator==(const CutCount&) const = default;
};

/// Exhaustive enumeration over edge subsets; the oracle of record.
/// Requires s,t connected with no (s,t) edge.
CutCount count_min_cuts_brute(const Multigraph& g, int s, int t);

/// Sign oracle on a weighted graph.
using SignOracle = std::function<SignValue(const Multigraph&, const Rational& q,
                                           const WeightFunction&)>;

/// The idealized oracle: exact sign of the multivariate Z.
SignOracle exact_sign_oracle();

enum class ReductionMode { Idealized, Gadgetized };

struct ReductionReport {
  CutCount count;
  ReductionParams params;
  long oracle_queries = 0;
  Rational bracket_lo;  // final epsilon bracket
  Rational bracket_hi;
  ReductionMode mode = ReductionMode::Idealized;
};

/// Counts minimum-cardinality (s,t)-cuts using only sign queries on
/// weighted graphs built from g: every edge gets the heavy weight M and one
/// extra (s,t) edge carries -1-eps (q>1) or -1+eps (q<1); binary search on
/// eps locates the sign change and the bracket inequalities force (k, C).
/// Requires q not in {0, 1}.  In gadgetized mode the heavy and tuned
/// weights are realized by thickenings and searched series/parallel
/// compositions over the supplied base weights, and the search shrinks by
/// 2/3 per query to absorb the implementation tolerance.
ReductionReport count_min_cuts_via_sign(const Multigraph& g, int s, int t, const Rational& q,
                                        const SignOracle& oracle,
                                        ReductionMode mode = ReductionMode::Idealized);

}  // namespace tutte

#endif
