#include "tutte/reduction.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tutte/gadgets.hpp"
#include "tutte/tutte_eval.hpp"

namespace tutte {

namespace {

struct Uf {
  explicit Uf(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) {
      p[a] = p[p[a]];
      a = p[a];
    }
    return a;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
  std::vector<int> p;
};

bool separated(const Multigraph& g, std::uint32_t removed_mask, int s, int t) {
  Uf uf(g.vertex_count());
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!(removed_mask >> i & 1)) uf.unite(edges[i].u, edges[i].v);
  return uf.find(s) != uf.find(t);
}

}  // namespace

CutCount count_min_cuts_brute(const Multigraph& g, int s, int t) {
  if (s == t || s < 0 || t < 0 || s >= g.vertex_count() || t >= g.vertex_count())
    throw std::invalid_argument("cut counting needs distinct valid terminals");
  for (const auto& e : g.edges())
    if ((e.u == s && e.v == t) || (e.u == t && e.v == s))
      throw std::invalid_argument("cut counting assumes no direct (s,t) edge");
  int m = g.edge_count();
  if (m > 24) throw std::invalid_argument("cut enumeration cap exceeded");
  if (separated(g, 0, s, t)) throw std::invalid_argument("s and t must be connected");

  std::vector<std::int64_t> by_size(m + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
    if (separated(g, mask, s, t)) ++by_size[__builtin_popcount(mask)];
  for (int k = 0; k <= m; ++k)
    if (by_size[k] > 0) return {k, by_size[k]};
  throw std::logic_error("no cut found in a connected instance");
}

SignOracle exact_sign_oracle() {
  return [](const Multigraph& g, const Rational& q, const WeightFunction& w) {
    return sign_of(z_multivariate(g, q, w));
  };
}

namespace {

struct Schedule {
  ReductionParams params;
  Rational slope_bound;
  SignValue want_lo;
  SignValue want_hi;
};

Schedule make_schedule(int m, const Rational& q) {
  Schedule s;
  Rational absq = q.abs();
  Rational maxq = max(absq, Rational(1) / absq);
  Rational m_star = max((Rational(8) * maxq).pow(m), Rational(2) / (q - Rational(1)).abs());
  int h = 1;
  while (!(Rational(2).pow(h) - Rational(1) > m_star)) ++h;
  s.params.h = h;
  s.params.M = Rational(2).pow(h) - Rational(1);
  const Rational& M = s.params.M;
  s.params.delta = (Rational(2) * maxq).pow(m) / M;
  s.params.eps_lo = M.pow(-2 * m);
  if (q > Rational(1))
    s.params.eps_hi = min(Rational(1), q - Rational(1));
  else if (q.sign() > 0)
    s.params.eps_hi = Rational(1) - q;
  else
    s.params.eps_hi = Rational(1);
  // |dZ/deps| <= |Z_st| + |Z_s|t|/|q| <= (1+delta)|q| M^{m-1} (M + 2^m),
  // from the two cut estimates with C <= 2^m and k >= 1.
  s.slope_bound =
      (Rational(1) + s.params.delta) * absq * M.pow(m - 1) * (M + Rational(2).pow(m));
  // Validated precision: rho = precision * slope stays below
  // eps_lo M^m |q| 4^{-m}, which is what forces the final bracket width
  // under 1.  (An M^{-m^2} schedule satisfies this once m is large.)
  s.params.precision =
      s.params.eps_lo * M.pow(m) * absq * Rational(4).pow(-m) / s.slope_bound / Rational(2);
  s.params.rho = s.params.precision * s.slope_bound;
  s.want_lo = q.sign() > 0 && q < Rational(1) ? SignValue::Negative : SignValue::Positive;
  s.want_hi = s.want_lo == SignValue::Positive ? SignValue::Negative : SignValue::Positive;
  return s;
}

struct QueryEngine {
  const Multigraph& g;
  int s, t;
  const Rational& q;
  const SignOracle& oracle;
  ReductionMode mode;
  const Schedule& sched;
  long queries = 0;

  // idealized: G' carries weight M everywhere plus one (s,t) edge at
  // gamma' = -1-eps (q>1) or -1+eps (q<1).
  SignValue query_exact(const Rational& eps) {
    Multigraph gp = g;
    EdgeId aux = gp.add_edge(s, t);
    WeightFunction w(gp, sched.params.M);
    Rational gamma_prime = q > Rational(1) ? Rational(-1) - eps : Rational(-1) + eps;
    w.set(aux, gamma_prime);
    ++queries;
    return oracle(gp, q, w);
  }

  // gadgetized: heavy edges become h-fans of gamma2; the tuned edge is a
  // searched composition.  Returns the effective eps actually queried.
  SignValue query_gadget(const Rational& eps, const Rational& pi, Rational& eps_effective) {
    const Rational gamma1 = Rational(-1, 2) - (q > Rational(1) ? Rational(1) : Rational(0));
    const Rational gamma2 = Rational(1);
    Rational y1 = gamma1 + Rational(1);  // -1/2 for q>1, 1/2 otherwise
    int j = 1;
    while (!(y1.abs().pow(j) < eps)) j += 2;
    Rational scale_pow = y1.abs().pow(j + 2);
    Rational target = eps / scale_pow;
    Rational tol = pi / scale_pow;

    std::vector<PlanePoint> base;
    base.push_back({q / gamma2 + Rational(1), gamma2 + Rational(1)});
    base.push_back({q / gamma1 + Rational(1), y1});
    ApproachResult found = approach_weight(base, target, tol, TargetCoordinate::Y, 16, 512);
    if (!found.success) {
      std::ostringstream os;
      os << "gadgetized mode: bounded approach_weight search could not realize y'' in ["
         << (target - tol).str() << ", " << target.str()
         << "]; the full construction needs the imported shift lemmas";
      throw std::runtime_error(os.str());
    }
    ShiftExprPtr expr = found.expr;
    for (int i = 0; i < j + 2; ++i) expr = ShiftExpr::parallel(expr, ShiftExpr::leaf(gamma1));
    Rational w_eff = expr->weight(q);
    Rational y_eff = w_eff + Rational(1);
    eps_effective = q > Rational(1) ? -y_eff : y_eff;
    if (!(eps - pi <= eps_effective && eps_effective <= eps))
      throw std::logic_error("gadgetized mode: realized eps left its window");

    // Build G'': h-fans for heavy edges, the searched gadget for gamma'.
    Multigraph gp = g;
    EdgeId aux = gp.add_edge(s, t);
    WeightFunction w(gp, sched.params.M);
    w.set(aux, Rational(0) /* replaced below */);
    Gadget fan;
    {
      Multigraph fan_graph(2);
      for (int i = 0; i < sched.params.h; ++i) fan_graph.add_edge(0, 1);
      fan = {fan_graph, 0, 1, WeightFunction(fan_graph, gamma2)};
    }
    Multigraph cur = gp;
    WeightFunction cw = w;
    for (int i = 0; i < g.edge_count(); ++i) {
      // edge ids are reassigned by each substitution; re-find a heavy edge
      EdgeId heavy = -1;
      for (const auto& e : cur.edges())
        if (cw.at(e.id) == sched.params.M) {
          heavy = e.id;
          break;
        }
      Substitution sub = substitute_edge(cur, cw, heavy, fan);
      cur = std::move(sub.graph);
      cw = std::move(sub.weights);
    }
    Gadget tuned = expr->expand();
    // locate the auxiliary edge in the rebuilt graph: it is the unique
    // remaining edge with weight 0
    EdgeId aux_now = -1;
    for (const auto& e : cur.edges())
      if (cw.at(e.id).is_zero()) aux_now = e.id;
    Substitution sub = substitute_edge(cur, cw, aux_now, tuned);
    ++queries;
    SignValue observed = oracle(sub.graph, q, sub.weights);
    int scale_sign = expr->scale(q).sign();
    if (scale_sign == 0) throw std::logic_error("gadgetized mode: degenerate substitution scale");
    if (scale_sign < 0) {
      if (observed == SignValue::Positive)
        observed = SignValue::Negative;
      else if (observed == SignValue::Negative)
        observed = SignValue::Positive;
    }
    return observed;
  }
};

}  // namespace

ReductionReport count_min_cuts_via_sign(const Multigraph& g, int s, int t, const Rational& q,
                                        const SignOracle& oracle, ReductionMode mode) {
  if (q.is_zero() || q == Rational(1))
    throw std::invalid_argument("the reduction needs q outside {0, 1}");
  for (const auto& e : g.edges())
    if ((e.u == s && e.v == t) || (e.u == t && e.v == s))
      throw std::invalid_argument("the reduction assumes no direct (s,t) edge");
  if (!g.is_connected()) throw std::invalid_argument("the reduction assumes a connected graph");
  if (g.edge_count() < 1) throw std::invalid_argument("the reduction needs at least one edge");

  int m = g.edge_count();
  Schedule sched = make_schedule(m, q);
  QueryEngine engine{g, s, t, q, oracle, mode, sched};

  auto query = [&](const Rational& eps, const Rational& pi, Rational& eps_eff) {
    if (mode == ReductionMode::Idealized) {
      eps_eff = eps;
      return engine.query_exact(eps);
    }
    return engine.query_gadget(eps, pi, eps_eff);
  };

  Rational lo = sched.params.eps_lo, hi = sched.params.eps_hi;
  Rational eps_eff(0);
  Rational endpoint_pi = lo / Rational(2);
  SignValue s_lo = query(lo, endpoint_pi, eps_eff);
  SignValue s_hi = query(hi, (hi - lo) / Rational(3), eps_eff);
  if (s_lo != sched.want_lo || s_hi != sched.want_hi)
    throw std::runtime_error("interval endpoints violate Lemma's sign guarantees");

  while (hi - lo > sched.params.precision) {
    Rational mid = (lo + hi) / Rational(2);
    Rational pi = mode == ReductionMode::Idealized ? Rational(0) : (hi - lo) / Rational(3);
    SignValue sign;
    try {
      sign = query(mid, pi, eps_eff);
    } catch (const std::runtime_error& ex) {
      std::ostringstream os;
      os << ex.what() << " [bracket reached (" << lo.str() << ", " << hi.str() << ") after "
         << engine.queries << " oracle queries; target width " << sched.params.precision.str()
         << "]";
      throw std::runtime_error(os.str());
    }
    if (sign == SignValue::Zero) {
      lo = mode == ReductionMode::Idealized ? mid : eps_eff;
      hi = lo;
      break;
    }
    if (sign == sched.want_lo)
      lo = mode == ReductionMode::Idealized ? mid : eps_eff;
    else
      hi = mode == ReductionMode::Idealized ? mid : eps_eff;
  }

  // The zero of the eps-linear Z lies in [lo, hi]; at eps = lo the bracket
  // inequalities pin k and C.
  Rational eps = lo;
  const Rational& M = sched.params.M;
  const Rational& delta = sched.params.delta;
  Rational rho = sched.params.rho;
  Rational absq = q.abs();
  Rational d = q > Rational(1) ? Rational(1) - (Rational(1) + eps) / q
                               : Rational(1) - (Rational(1) - eps) / q;
  Rational ad = d.abs();

  ReductionReport report;
  report.params = sched.params;
  report.mode = mode;
  report.bracket_lo = lo;
  report.bracket_hi = hi;

  bool found = false;
  for (int k = 1; k <= m; ++k) {
    Rational denom_scale = ad * M.pow(m - k) * q * q;
    Rational c_lo = (eps * M.pow(m) * absq * (Rational(1) - delta) - rho) /
                    (denom_scale * (Rational(1) + delta));
    Rational c_hi = (eps * M.pow(m) * absq * (Rational(1) + delta) + rho) /
                    (denom_scale * (Rational(1) - delta));
    // integers in [c_lo, c_hi] intersected with [1, 2^m]
    Rational start = max(c_lo, Rational(1));
    Rational stop = min(c_hi, Rational(2).pow(m));
    if (start > stop) continue;
    mpz_class first = start.floor().numerator() + (start.is_integer() ? 0 : 1);
    mpz_class last = stop.floor().numerator();
    if (first > last) continue;
    if (found || last > first)
      throw std::runtime_error("bracket did not pin a unique (k, C) pair");
    if (!(c_hi - c_lo < Rational(1)))
      throw std::runtime_error("final bracket width reached 1; schedule validation failed");
    report.count.k = k;
    report.count.c = first.get_si();
    found = true;
  }
  if (!found) throw std::runtime_error("no feasible cut count in any bracket");
  report.oracle_queries = engine.queries;
  return report;
}

}  // namespace tutte
