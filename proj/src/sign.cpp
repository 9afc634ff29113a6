#include "tutte/sign.hpp"

#include <sstream>
#include <stdexcept>

#include "tutte/tutte_eval.hpp"

namespace tutte {

std::string to_string(SignValue s) {
  switch (s) {
    case SignValue::Negative: return "negative";
    case SignValue::Zero: return "zero";
    case SignValue::Positive: return "positive";
  }
  return "?";
}

namespace {

SignValue sign_of_parity(long exponent) {
  return exponent % 2 == 0 ? SignValue::Positive : SignValue::Negative;
}

struct ColourSearch {
  const Multigraph& g;
  int q;
  long cap;
  long nodes = 0;
  std::vector<int> colour{};

  bool run() {
    colour.assign(g.vertex_count(), -1);
    return assign(0);
  }
  bool assign(int v) {
    if (++nodes > cap) throw std::invalid_argument("NP point, instance too large");
    if (v == g.vertex_count()) return true;
    for (int c = 0; c < q; ++c) {
      bool feasible = true;
      for (const auto& e : g.edges()) {
        int other = -1;
        if (e.u == v && e.v < v) other = e.v;
        if (e.v == v && e.u < v) other = e.u;
        if (other >= 0 && colour[other] == c) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      colour[v] = c;
      if (assign(v + 1)) return true;
      colour[v] = -1;
    }
    return false;
  }
};

struct FlowSearch {
  const Multigraph& g;
  int q;
  long cap;
  long nodes = 0;
  std::vector<int> value{};
  // vertices whose last incident edge (in index order) is i
  std::vector<std::vector<int>> completes{};

  bool run() {
    int m = g.edge_count();
    value.assign(m, 0);
    completes.assign(m, {});
    std::vector<int> last(g.vertex_count(), -1);
    for (int i = 0; i < m; ++i) {
      const auto& e = g.edges()[i];
      if (e.u == e.v) continue;
      last[e.u] = i;
      last[e.v] = i;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
      if (last[v] >= 0) completes[last[v]].push_back(v);
    std::vector<int> balance(g.vertex_count(), 0);
    return assign(0, balance);
  }
  bool assign(int i, std::vector<int>& balance) {
    if (++nodes > cap) throw std::invalid_argument("NP point, instance too large");
    if (i == g.edge_count()) return true;
    const auto& e = g.edges()[i];
    if (e.u == e.v) return assign(i + 1, balance);  // loops take any nonzero value
    for (int val = 1; val < q; ++val) {
      balance[e.u] += val;
      balance[e.v] -= val;
      bool feasible = true;
      for (int v : completes[i])
        if (balance[v] % q != 0) {
          feasible = false;
          break;
        }
      if (feasible && assign(i + 1, balance)) return true;
      balance[e.u] -= val;
      balance[e.v] += val;
    }
    return false;
  }
};

}  // namespace

bool decide_colourable(const Multigraph& g, int q, long node_cap) {
  if (q < 3) throw std::invalid_argument("colourability decider needs q >= 3");
  if (!g.loops().empty()) return false;
  ColourSearch search{g, q, node_cap};
  return search.run();
}

bool decide_nz_flow(const Multigraph& g, int q, long node_cap) {
  if (q < 2) throw std::invalid_argument("flow decider needs q >= 2");
  if (!g.bridges().empty()) return false;  // bridge obstruction, any q
  if (q == 2) return g.is_eulerian();
  if (q >= 6) return true;  // bridgeless graphs always carry a 6-flow
  FlowSearch search{g, q, node_cap};
  return search.run();
}

namespace {

// Weights keyed by element label, mutable under parallel/series merges.
Rational qneg_rec(const BinaryMatroid& m, const Rational& q, WeightFunction w) {
  // Merge every size-2 circuit so contraction never creates a loop.
  BinaryMatroid cur = m;
  for (int c = 0; c < cur.ground_size();) {
    int partner = cur.parallel_partner(c);
    if (partner < 0) {
      ++c;
      continue;
    }
    Rational a = w.at(cur.labels()[c]), b = w.at(cur.labels()[partner]);
    w.set(cur.labels()[c], a + b + a * b);
    cur = cur.delete_element(partner);
    c = 0;
  }
  int n = cur.ground_size();
  if (cur.full_rank() == n) {
    // Free matroid: every subset independent, the sum factorizes.
    Rational product(1);
    for (EdgeId id : cur.labels()) product *= Rational(1) + w.at(id) / q;
    return product;
  }
  // Some element lies in a circuit: any non-coloop qualifies.
  int e = 0;
  while (cur.is_coloop(e)) ++e;
  Rational gamma = w.at(cur.labels()[e]);
  return qneg_rec(cur.delete_element(e), q, w) +
         (gamma / q) * qneg_rec(cur.contract_element(e), q, w);
}

}  // namespace

Rational value_matroid_qneg(const BinaryMatroid& m, const Rational& q,
                            const WeightFunction& w) {
  if (q.sign() >= 0) throw std::invalid_argument("value_matroid_qneg needs q < 0");
  for (int c = 0; c < m.ground_size(); ++c) {
    if (m.is_loop(c)) throw std::invalid_argument("value_matroid_qneg needs a loopless matroid");
    const Rational& g = w.at(m.labels()[c]);
    if (g < Rational(-2) || g > Rational(0))
      throw std::invalid_argument("value_matroid_qneg needs weights in [-2,0]");
  }
  return qneg_rec(m, q, w);
}

namespace {

void js_check_windows(const BinaryMatroid& m, const Rational& q, const WeightFunction& w) {
  Rational one_minus_q = Rational(1) - q;
  for (int c = 0; c < m.ground_size(); ++c) {
    const Rational& g = w.at(m.labels()[c]);
    if (m.is_loop(c)) {
      if (g <= Rational(-1))
        throw std::invalid_argument("value_matroid_js: loop weight must exceed -1");
    } else if (m.is_coloop(c)) {
      if (g >= -q) throw std::invalid_argument("value_matroid_js: coloop weight must be below -q");
    } else {
      // |1+gamma| < sqrt(1-q), compared by squaring
      Rational shifted = Rational(1) + g;
      if (shifted * shifted >= one_minus_q)
        throw std::invalid_argument("value_matroid_js: normal weight outside the square-root window");
    }
  }
}

Rational js_rec(BinaryMatroid m, const Rational& q, WeightFunction w) {
  if (m.ground_size() == 0) return Rational(1);
  js_check_windows(m, q, w);
  // 1: loops peel off with positive factor
  for (int c = 0; c < m.ground_size(); ++c)
    if (m.is_loop(c))
      return (Rational(1) + w.at(m.labels()[c])) * js_rec(m.delete_element(c), q, w);
  // 2: coloops contract with negative factor
  for (int c = 0; c < m.ground_size(); ++c)
    if (m.is_coloop(c))
      return (Rational(1) + w.at(m.labels()[c]) / q) * js_rec(m.contract_element(c), q, w);
  // 3: size-2 circuits merge by parallel composition
  for (int c = 0; c < m.ground_size(); ++c) {
    int partner = m.parallel_partner(c);
    if (partner < 0) continue;
    Rational a = w.at(m.labels()[c]), b = w.at(m.labels()[partner]);
    w.set(m.labels()[c], a + b + a * b);
    return js_rec(m.delete_element(partner), q, w);
  }
  // 4: size-2 cocircuits merge by series composition
  {
    int n = m.ground_size();
    std::uint64_t all = n == 0 ? 0 : (~0ull >> (64 - n));
    int full = m.full_rank();
    for (int c1 = 0; c1 < n; ++c1)
      for (int c2 = c1 + 1; c2 < n; ++c2) {
        std::uint64_t rest = all & ~(1ull << c1) & ~(1ull << c2);
        if (m.rank_mask(rest) != full - 1) continue;  // not a cocircuit (coloops ruled out)
        Rational a = w.at(m.labels()[c1]), b = w.at(m.labels()[c2]);
        Rational denom = q + a + b;
        Rational factor = denom / q;
        w.set(m.labels()[c1], a * b / denom);
        return factor * js_rec(m.contract_element(c2), q, w);
      }
  }
  // 5: plain deletion-contraction
  Rational gamma = w.at(m.labels()[0]);
  return js_rec(m.delete_element(0), q, w) + (gamma / q) * js_rec(m.contract_element(0), q, w);
}

}  // namespace

Rational value_matroid_js(const BinaryMatroid& m, const Rational& q, const WeightFunction& w) {
  if (q <= Rational(0) || q >= Rational(1))
    throw std::invalid_argument("value_matroid_js needs q in (0,1)");
  js_check_windows(m, q, w);
  return js_rec(m, q, w);
}

namespace {

Multigraph without_loops(const Multigraph& g, int& loop_count) {
  Multigraph cur = g;
  loop_count = 0;
  for (EdgeId id : g.loops()) {
    cur = cur.delete_edge(id);
    ++loop_count;
  }
  return cur;
}

SignReport dispatch_region_a(const Multigraph& g, const PlanePoint& p) {
  const Rational zero(0);
  Rational q = p.q();
  long n = g.vertex_count();
  long kappa = g.kappa_all();
  if (q.is_zero())
    return {n == 0 ? SignValue::Positive : SignValue::Zero, "A-trivial-sign", "q=0", {}};
  if (p.x == zero && p.y == zero) {
    return {g.edge_count() == 0 ? SignValue::Positive : SignValue::Zero, "A-trivial-sign",
            "origin: zero when any edge exists", {}};
  }
  if (p.y == zero) {  // chromatic-type boundary
    if (!g.loops().empty())
      return {SignValue::Zero, "A-trivial-sign", "y=0 with a loop", {}};
    long exponent = n + (p.x < Rational(1) ? kappa : 0);
    return {sign_of_parity(exponent), "A-trivial-sign", "y=0, loopless: sign (-1)^(n+kappa[x<1])", {}};
  }
  if (p.x == zero) {  // flow-type boundary
    if (!g.bridges().empty())
      return {SignValue::Zero, "A-trivial-sign", "x=0 with a bridge", {}};
    long exponent = (p.y < Rational(1) ? n : 0) + kappa;
    return {sign_of_parity(exponent), "A-trivial-sign", "x=0, bridgeless: sign (-1)^(n[y<1]+kappa)",
            {}};
  }
  // interior: sign((y-1)^n (x-1)^kappa), both bases nonzero
  long exponent = (p.y < Rational(1) ? n : 0) + (p.x < Rational(1) ? kappa : 0);
  return {sign_of_parity(exponent), "A-trivial-sign", "sign((y-1)^n (x-1)^kappa)", {}};
}

SignReport dispatch_q1(const Multigraph& g, const PlanePoint& p) {
  // Z = prod_e (1 + gamma) = y^{|E|}
  Rational value = p.y.pow(g.edge_count());
  return {sign_of(value), "q1-product", "Z = y^m on the q=1 hyperbola", value};
}

SignReport dispatch_region_k(const Multigraph& g, const PlanePoint& p) {
  if (p.x == Rational(1))
    return {g.vertex_count() == 0 ? SignValue::Positive : SignValue::Zero, "K-matroid", "q=0", {}};
  int loop_count = 0;
  Multigraph core = without_loops(g, loop_count);
  Rational q = p.q();
  Rational positive_part =
      value_matroid_qneg(cycle_matroid(core), q, WeightFunction(core, p.gamma()));
  Rational value = q.pow(g.vertex_count()) * p.y.pow(loop_count) * positive_part;
  std::ostringstream cert;
  cert << "loops=" << loop_count << ", loopless matroid value " << positive_part.str() << " > 0";
  return {sign_of(value), "K-matroid", cert.str(), value};
}

SignReport dispatch_region_j(const Multigraph& g, const PlanePoint& p) {
  if (p.y == Rational(1))
    return {g.vertex_count() == 0 ? SignValue::Positive : SignValue::Zero, "J-dual-matroid", "q=0",
            {}};
  int loop_count = 0;
  Multigraph core = without_loops(g, loop_count);
  Rational q = p.q();
  BinaryMatroid m = cycle_matroid(core);
  BinaryMatroid dual = m.dual();
  // Ztilde(M;q,gamma) = q^{-r} gamma^{m} Ztilde(M*;q,x-1); dual loops are the
  // bridges of the graph and peel off with factor x each.
  Rational dual_weight = p.x - Rational(1);
  int bridge_count = 0;
  BinaryMatroid trimmed = dual;
  for (int c = 0; c < trimmed.ground_size();) {
    if (trimmed.is_loop(c)) {
      trimmed = trimmed.delete_element(c);
      ++bridge_count;
      c = 0;
    } else {
      ++c;
    }
  }
  WeightFunction dw;
  for (EdgeId id : trimmed.labels()) dw.set(id, dual_weight);
  Rational positive_part = value_matroid_qneg(trimmed, q, dw);
  Rational value = q.pow(g.vertex_count()) * p.y.pow(loop_count) * q.pow(-m.full_rank()) *
                   p.gamma().pow(core.edge_count()) * p.x.pow(bridge_count) * positive_part;
  std::ostringstream cert;
  cert << "loops=" << loop_count << ", bridges=" << bridge_count << ", dual matroid value "
       << positive_part.str() << " > 0";
  return {sign_of(value), "J-dual-matroid", cert.str(), value};
}

SignReport dispatch_region_l(const Multigraph& g, const PlanePoint& p) {
  int loop_count = 0;
  Multigraph core = without_loops(g, loop_count);
  Rational q = p.q();
  BinaryMatroid m = cycle_matroid(core);
  Rational js = value_matroid_js(m, q, WeightFunction(core, p.gamma()));
  Rational value = q.pow(g.vertex_count()) * p.y.pow(loop_count) * js;
  std::ostringstream cert;
  cert << "loops=" << loop_count << ", rank=" << m.full_rank() << ", js value sign (-1)^rank";
  return {sign_of(value), "L-matroid-js", cert.str(), value};
}

SignReport dispatch_region_m(const Multigraph& g, const PlanePoint& p) {
  int loop_count = 0;
  Multigraph core = without_loops(g, loop_count);
  Rational q = p.q();
  BinaryMatroid m = cycle_matroid(core);
  BinaryMatroid dual = m.dual();
  Rational dual_weight = p.x - Rational(1);
  int bridge_count = 0;
  BinaryMatroid trimmed = dual;
  for (int c = 0; c < trimmed.ground_size();) {
    if (trimmed.is_loop(c)) {
      trimmed = trimmed.delete_element(c);
      ++bridge_count;
      c = 0;
    } else {
      ++c;
    }
  }
  WeightFunction dw;
  for (EdgeId id : trimmed.labels()) dw.set(id, dual_weight);
  Rational js = value_matroid_js(trimmed, q, dw);
  Rational value = q.pow(g.vertex_count()) * p.y.pow(loop_count) * q.pow(-m.full_rank()) *
                   p.gamma().pow(core.edge_count()) * p.x.pow(bridge_count) * js;
  std::ostringstream cert;
  cert << "loops=" << loop_count << ", bridges=" << bridge_count
       << ", dual js value sign (-1)^rank";
  return {sign_of(value), "M-dual-matroid-js", cert.str(), value};
}

SignReport exact_fallback(const Multigraph& g, const PlanePoint& p) {
  Rational value = z_multivariate(g, p.q(), WeightFunction(g, p.gamma()));
  return {sign_of(value), "exact-fallback", "", value};
}

}  // namespace

SignReport sign_dispatch(const Multigraph& g, const PlanePoint& p) {
  if (g.vertex_count() == 0) return {SignValue::Positive, "empty-graph", "Z=1", Rational(1)};
  PointClass pc = classify(p);
  long m = g.edge_count();

  switch (pc.region) {
    case Region::A:
      return dispatch_region_a(g, p);
    case Region::Q1Hyperbola:
      return dispatch_q1(g, p);
    case Region::E:
      if (pc.status == Status::FP) {
        if (p.y == Rational(1)) return {SignValue::Zero, "E-potts-positive", "y=1: Z=0", {}};
        return {SignValue::Positive, "E-potts-positive", "integer q: Potts sum of positives", {}};
      }
      break;
    case Region::F:
      if (pc.status == Status::FP) {
        if (p.x == Rational(1)) return {SignValue::Zero, "F-flow-positive", "x=1: Z=0", {}};
        return {sign_of_parity(m), "F-flow-positive",
                "integer q: flow-model sum is positive, sign (-1)^m", {}};
      }
      break;
    case Region::BEBoundary:
      if (p.x == Rational(-1)) {
        bool two_colourable = g.loops().empty() && g.is_bipartite();
        return {two_colourable ? SignValue::Positive : SignValue::Zero, "bipartite-test",
                two_colourable ? "bipartite" : "not 2-colourable", {}};
      }
      if (p.x.is_integer()) {
        long chi_q = (Rational(1) - p.x).numerator().get_si();
        bool colourable = decide_colourable(g, static_cast<int>(chi_q));
        std::ostringstream cert;
        cert << (colourable ? "" : "not ") << chi_q << "-colourable";
        return {colourable ? SignValue::Positive : SignValue::Zero, "colourability-decider",
                cert.str(), {}};
      }
      break;
    case Region::BFBoundary: {
      if (p.y == Rational(-1)) {
        bool eulerian = g.is_eulerian();
        return {eulerian ? sign_of_parity(m) : SignValue::Zero, "eulerian-test",
                eulerian ? "eulerian: one nowhere-zero 2-flow" : "odd degree vertex", {}};
      }
      if (p.y == Rational(-2)) {
        bool flows = decide_nz_flow(g, 3);
        return {flows ? sign_of_parity(m) : SignValue::Zero, "flow-decider",
                flows ? "nowhere-zero 3-flow found" : "no nowhere-zero 3-flow", {}};
      }
      if (p.y.is_integer() && p.y <= Rational(-5)) {
        bool bridgeless = g.bridges().empty();
        return {bridgeless ? sign_of_parity(m) : SignValue::Zero, "bridgeless-test",
                bridgeless ? "bridgeless: six-flow exists" : "bridge found", {}};
      }
      break;
    }
    case Region::K:
      return dispatch_region_k(g, p);
    case Region::J:
      return dispatch_region_j(g, p);
    case Region::L:
      return dispatch_region_l(g, p);
    case Region::M:
      return dispatch_region_m(g, p);
    default:
      break;
  }
  return exact_fallback(g, p);
}

}  // namespace tutte
