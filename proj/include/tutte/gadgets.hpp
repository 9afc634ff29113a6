#ifndef TUTTE_GADGETS_HPP
#define TUTTE_GADGETS_HPP

#include <memory>
#include <string>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/plane.hpp"

namespace tutte {

/// Two-terminal weighted graph implementing an effective edge weight.
struct Gadget {
  Multigraph graph;
  int s = 0;
  int t = 1;
  WeightFunction weights;
};

struct ImplementedWeight {
  Rational w_star;        // q * Z_st / Z_s|t
  Rational scale_factor;  // Z_s|t / q^2, the substitution bookkeeping factor
  PlanePoint point() const { return {scale_q / w_star + Rational(1), w_star + Rational(1)}; }
  Rational scale_q;       // the ambient q the weight was computed at
};

/// Exact effective weight of a gadget.  Throws "non-implementing gadget"
/// when Z_s|t = 0 and rejects q = 0.
ImplementedWeight implemented_weight(const Gadget& gd, const Rational& q);

class ShiftExpr;
using ShiftExprPtr = std::shared_ptr<const ShiftExpr>;

/// Series/parallel composition tree over weighted single edges.  Subtrees
/// are shared, so the tree is cheap even when its literal expansion is not.
class ShiftExpr {
 public:
  enum class Kind { Leaf, Series, Parallel };

  static ShiftExprPtr leaf(const Rational& w);
  static ShiftExprPtr series(ShiftExprPtr l, ShiftExprPtr r);
  static ShiftExprPtr parallel(ShiftExprPtr l, ShiftExprPtr r);

  Kind kind() const { return kind_; }
  const Rational& leaf_weight() const { return w_; }
  const ShiftExprPtr& left() const { return l_; }
  const ShiftExprPtr& right() const { return r_; }

  long leaf_count() const { return leaves_; }
  /// Bottom-up closed-form effective weight at ambient q.
  Rational weight(const Rational& q) const;
  /// Substitution factor Z_s|t(expansion)/q^2: each series node contributes
  /// q + w_left + w_right, parallel nodes contribute nothing.
  Rational scale(const Rational& q) const;
  /// Literal two-terminal gadget with one edge per leaf.
  Gadget expand() const;
  /// New expression with every leaf of the given weight replaced.
  ShiftExprPtr substitute_leaf(const Rational& leaf_w, const ShiftExprPtr& replacement) const;
  std::string str() const;

 private:
  ShiftExpr() = default;
  Kind kind_ = Kind::Leaf;
  Rational w_;
  ShiftExprPtr l_, r_;
  long leaves_ = 1;
};

/// Closed-form composition rules.  series throws "singular series
/// composition" when q + w1 + w2 = 0; stretch applies series k-1 times.
Rational series_weight(const Rational& w1, const Rational& w2, const Rational& q);
Rational parallel_weight(const Rational& w1, const Rational& w2);
Rational stretch_weight(const Rational& w, const Rational& q, int k);
Rational thicken_weight(const Rational& w, int k);

/// Expression forms of the k-stretch (path) and k-thickening (fan).
ShiftExprPtr stretch_expr(const ShiftExprPtr& e, int k);
ShiftExprPtr thicken_expr(const ShiftExprPtr& e, int k);

/// The diamond operation: parallel pair of two-edge paths.  Throws
/// "diamond undefined" at x = -1 or y = -1-2x.  Every call re-certifies the
/// closed form against the literal four-edge gadget.
PlanePoint diamond(const PlanePoint& p);

struct DiamondTrace {
  std::vector<PlanePoint> points;     // strictly increasing y, last has y > 1
  int collinear_exceptions = 0;       // firings of the y = -1-2x branch
  bool hit_x_minus_one = false;       // the x = -1 terminal branch fired
  ShiftExprPtr expr;                  // accumulated shift expression
  bool fully_certified = false;       // literal expansion checked end to end
};

/// Iterated diamond escape from region G (max(|x|,|y|)<1, q>32/27) to a
/// point with finite y > 1, with the two exceptional branches.
DiamondTrace diamond_iterate(const PlanePoint& p, long iteration_cap = 10000,
                             long certify_edge_cap = 4096);

struct LemmaResult {
  PlanePoint point;
  Gadget gadget;
  ShiftExprPtr expr;  // null for the clique-based gadgets, which are not series-parallel
};

/// Constructive shift lemmas by name: xlefttoyup, shiftB1..shiftB4,
/// triangle1, triangle2, 3227g1, stretchCD, Fq12, Eq01, Eq12, F (the
/// clique gadget reaching y' < 0), F2 (its continuation into region B or G).
/// Hypotheses are checked exactly; the thrown message names the failed
/// inequality.  Every returned point is re-derived via implemented_weight.
std::vector<LemmaResult> construct(const PlanePoint& p, const std::string& lemma);

struct GammaNResult {
  Gadget gadget;           // K_n minus (s,t), all weights -1+delta
  Rational implemented;    // exact effective weight
};

/// The K_n - (s,t) gadget.  At delta = 0 the implemented weight is exactly
/// (n-2)/(q-n+1) < -1.  Requires non-integer q with 1 < q < n-1.
GammaNResult gamma_n_gadget(int n, const Rational& q, const Rational& delta);

struct PetersenResult {
  Gadget gadget;           // Petersen minus one edge, all weights -q-delta
  Rational w;              // exact effective weight, in (-q, 0)
};

/// The Petersen flow gadget for non-integer q in (2,4).
PetersenResult petersen_gadget(const Rational& q, const Rational& delta);

enum class TargetCoordinate { X, Y };

struct ApproachResult {
  bool success = false;
  ShiftExprPtr expr;       // meaningful only on success
  Rational achieved;       // the implemented coordinate
};

/// Bounded best-first search over series/parallel composition trees whose
/// implemented coordinate lands in [target - tolerance, target].  Failure
/// is an explicit outcome, not an error.
ApproachResult approach_weight(const std::vector<PlanePoint>& base, const Rational& target,
                               const Rational& tolerance,
                               TargetCoordinate coord = TargetCoordinate::Y,
                               int depth_cap = 12, int width_cap = 256);

/// Replace edge f of g with a copy of the gadget (terminals glued onto f's
/// endpoints).  Used by the substitution-identity tests and the gadgetized
/// reduction mode.
struct Substitution {
  Multigraph graph;
  WeightFunction weights;
};
Substitution substitute_edge(const Multigraph& g, const WeightFunction& w, EdgeId f,
                             const Gadget& gd);

}  // namespace tutte

#endif
