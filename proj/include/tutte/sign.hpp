#ifndef TUTTE_SIGN_HPP
#define TUTTE_SIGN_HPP

#include <optional>
#include <string>

#include "tutte/graph.hpp"
#include "tutte/matroid.hpp"
#include "tutte/plane.hpp"

namespace tutte {

enum class SignValue { Negative, Zero, Positive };

inline SignValue sign_of(const Rational& r) {
  int s = r.sign();
  return s < 0 ? SignValue::Negative : (s > 0 ? SignValue::Positive : SignValue::Zero);
}

std::string to_string(SignValue s);

struct SignReport {
  SignValue sign;
  std::string method;       // names the rule that produced the answer
  std::string certificate;  // loop/bridge counts, parity, decider outcome, ...
  /// Exact Z when the chosen method computes it along the way.
  std::optional<Rational> value;
};

/// Exact decision of q-colourability / nowhere-zero q-flow existence at desk
/// scale.  Flow cases q = 2 and q >= 6 answer through the Eulerian and
/// bridgeless predicates.  Throws "NP point, instance too large" past the cap.
bool decide_colourable(const Multigraph& g, int q, long node_cap = 20'000'000);
bool decide_nz_flow(const Multigraph& g, int q, long node_cap = 20'000'000);

/// Ztilde(M;q,gamma) for q < 0, loopless M, all weights in [-2,0]: strictly
/// positive, computed by parallel-merging size-2 circuits and
/// deletion-contraction on circuit elements.
Rational value_matroid_qneg(const BinaryMatroid& m, const Rational& q,
                            const WeightFunction& w);

/// Ztilde(M;q,gamma) for q in (0,1) under the loop/coloop/normal weight
/// window; the result has sign (-1)^{r_M(E)}.  Five ordered recursion cases.
Rational value_matroid_js(const BinaryMatroid& m, const Rational& q,
                          const WeightFunction& w);

/// Sign of Z(G;q,gamma) for gamma = y-1 uniform, dispatched to the
/// region-specific polynomial-time rule when one exists, to the desk-scale
/// deciders at the NP points, and to exact evaluation everywhere else.
SignReport sign_dispatch(const Multigraph& g, const PlanePoint& p);

}  // namespace tutte

#endif
