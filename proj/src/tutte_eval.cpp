#include "tutte/tutte_eval.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

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
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
  std::vector<int> p;
};

// Compact working graph for the evaluator.
struct WEdge {
  int u, v;
  Rational w;
};
struct WGraph {
  int n = 0;
  std::vector<WEdge> edges;
};

WGraph make_wgraph(const Multigraph& g, const WeightFunction& w) {
  WGraph wg;
  wg.n = g.vertex_count();
  wg.edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) wg.edges.push_back({e.u, e.v, w.at(e.id)});
  return wg;
}

// Drops vertices with no incident edge (factor q each) and relabels densely.
void strip_isolated(WGraph& g, Rational& factor, const Rational& q) {
  std::vector<char> used(g.n, 0);
  for (const auto& e : g.edges) used[e.u] = used[e.v] = 1;
  int isolated = static_cast<int>(std::count(used.begin(), used.end(), 0));
  if (isolated == 0) return;
  std::vector<int> remap(g.n);
  int next = 0;
  for (int v = 0; v < g.n; ++v)
    if (used[v]) remap[v] = next++;
  for (auto& e : g.edges) {
    e.u = remap[e.u];
    e.v = remap[e.v];
  }
  g.n = next;
  factor *= q.pow(isolated);
}

// One pass of the reduction order: loops, parallel merge, bridge
// contraction, series merge.  Returns true if anything changed; sets
// zeroed when a zero loop factor kills the whole evaluation.
bool reduce_pass(WGraph& g, Rational& factor, const Rational& q, bool& zeroed) {
  bool changed = false;

  // Loops: factor (1 + w) each.
  {
    std::vector<WEdge> kept;
    kept.reserve(g.edges.size());
    for (auto& e : g.edges) {
      if (e.u == e.v) {
        Rational f = Rational(1) + e.w;
        if (f.is_zero()) {
          zeroed = true;
          return true;
        }
        factor *= f;
        changed = true;
      } else {
        kept.push_back(std::move(e));
      }
    }
    g.edges = std::move(kept);
  }

  // Parallel merge: (1+w1)(1+w2)-1 per coincident pair.
  {
    std::map<std::pair<int, int>, std::size_t> first_seen;
    std::vector<WEdge> kept;
    kept.reserve(g.edges.size());
    for (auto& e : g.edges) {
      auto key = std::minmax(e.u, e.v);
      auto [it, fresh] = first_seen.try_emplace(key, kept.size());
      if (fresh) {
        kept.push_back(std::move(e));
      } else {
        Rational& w0 = kept[it->second].w;
        w0 = (Rational(1) + w0) * (Rational(1) + e.w) - Rational(1);
        changed = true;
      }
    }
    g.edges = std::move(kept);
  }

  strip_isolated(g, factor, q);

  // Bridges: Z(G) = (q + w) Z(G/e), a polynomial identity in q.
  {
    std::vector<std::size_t> bridge_idx;
    {
      Uf all(g.n);
      int base_merges = 0;
      for (const auto& e : g.edges)
        if (all.unite(e.u, e.v)) ++base_merges;
      for (std::size_t skip = 0; skip < g.edges.size(); ++skip) {
        Uf uf(g.n);
        int merges = 0;
        for (std::size_t i = 0; i < g.edges.size(); ++i)
          if (i != skip && uf.unite(g.edges[i].u, g.edges[i].v)) ++merges;
        if (merges < base_merges) bridge_idx.push_back(skip);
      }
    }
    if (!bridge_idx.empty()) {
      // Contract them all at once with a union-find over bridge endpoints.
      Uf uf(g.n);
      for (std::size_t i : bridge_idx) {
        factor *= q + g.edges[i].w;
        uf.unite(g.edges[i].u, g.edges[i].v);
      }
      std::vector<int> remap(g.n, -1);
      int next = 0;
      for (int v = 0; v < g.n; ++v) {
        int r = uf.find(v);
        if (remap[r] == -1) remap[r] = next++;
      }
      std::vector<WEdge> kept;
      kept.reserve(g.edges.size() - bridge_idx.size());
      std::vector<char> is_bridge(g.edges.size(), 0);
      for (std::size_t i : bridge_idx) is_bridge[i] = 1;
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (is_bridge[i]) continue;
        kept.push_back({remap[uf.find(g.edges[i].u)], remap[uf.find(g.edges[i].v)],
                        std::move(g.edges[i].w)});
      }
      g.n = next;
      g.edges = std::move(kept);
      changed = true;
    }
  }

  // Series merge at interior degree-2 vertices, factor (q + w1 + w2).
  // One sweep with live incidences so long paths collapse in few passes.
  {
    std::vector<std::vector<int>> incident(g.n);
    std::vector<char> dead(g.edges.size(), 0);
    std::vector<char> consumed(g.n, 0);  // middle vertices absorbed by merges
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      incident[g.edges[i].u].push_back(static_cast<int>(i));
      incident[g.edges[i].v].push_back(static_cast<int>(i));
    }
    bool merged_any = false;
    for (int x = 0; x < g.n; ++x) {
      auto& inc = incident[x];
      inc.erase(std::remove_if(inc.begin(), inc.end(), [&](int i) { return dead[i]; }),
                inc.end());
      if (inc.size() != 2) continue;
      int i1 = inc[0], i2 = inc[1];
      if (i1 == i2) continue;  // loop at x
      int a = g.edges[i1].u == x ? g.edges[i1].v : g.edges[i1].u;
      int b = g.edges[i2].u == x ? g.edges[i2].v : g.edges[i2].u;
      if (a == x || b == x || a == b) continue;  // loop or parallel pair; other rules apply
      Rational denom = q + g.edges[i1].w + g.edges[i2].w;
      if (denom.is_zero()) continue;  // singular; leave for branching
      factor *= denom;
      g.edges[i1] = {a, b, g.edges[i1].w * g.edges[i2].w / denom};
      dead[i2] = 1;
      // rewire: the surviving edge now touches b instead of x, and the
      // absorbed vertex disappears without an isolated-vertex factor
      incident[b].push_back(i1);
      inc.clear();
      consumed[x] = 1;
      merged_any = true;
    }
    if (merged_any) {
      std::vector<WEdge> kept;
      kept.reserve(g.edges.size());
      for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (!dead[i]) kept.push_back(std::move(g.edges[i]));
      g.edges = std::move(kept);
      std::vector<int> remap(g.n, -1);
      int next = 0;
      for (int v = 0; v < g.n; ++v)
        if (!consumed[v]) remap[v] = next++;
      for (auto& e : g.edges) {
        e.u = remap[e.u];
        e.v = remap[e.v];
      }
      g.n = next;
      changed = true;
    }
  }

  if (changed) strip_isolated(g, factor, q);
  return changed;
}

std::string memo_key(const WGraph& g) {
  std::vector<std::string> parts;
  parts.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    auto [a, b] = std::minmax(e.u, e.v);
    parts.push_back(std::to_string(a) + "," + std::to_string(b) + "," + e.w.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string key = std::to_string(g.n);
  for (auto& p : parts) {
    key += ';';
    key += p;
  }
  return key;
}

Rational z_rec(WGraph g, const Rational& q, std::map<std::string, Rational>& memo) {
  Rational factor(1);
  bool zeroed = false;
  while (reduce_pass(g, factor, q, zeroed)) {
    if (zeroed) return Rational(0);
  }
  if (g.edges.empty()) return factor * q.pow(g.n);

  std::string key = memo_key(g);
  if (auto it = memo.find(key); it != memo.end()) return factor * it->second;

  // Every remaining edge lies on a cycle; branch on the first one.
  WEdge e = g.edges.front();
  WGraph del = g;
  del.edges.erase(del.edges.begin());
  WGraph con;
  con.n = g.n - 1;
  {
    int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
    auto remap = [&](int v) { return v == gone ? keep : (v > gone ? v - 1 : v); };
    for (std::size_t i = 1; i < g.edges.size(); ++i)
      con.edges.push_back({remap(g.edges[i].u), remap(g.edges[i].v), g.edges[i].w});
  }
  Rational result = z_rec(std::move(del), q, memo) + e.w * z_rec(std::move(con), q, memo);
  memo.emplace(std::move(key), result);
  return factor * result;
}

}  // namespace

Rational z_brute(const Multigraph& g, const Rational& q, const WeightFunction& w,
                 int brute_cap) {
  int m = g.edge_count();
  if (m > brute_cap) throw std::invalid_argument("brute-force cap exceeded");
  w.check_total(g);
  const auto& edges = g.edges();
  Rational total(0);
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    Uf uf(g.vertex_count());
    int merges = 0;
    Rational term(1);
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      term *= w.at(edges[i].id);
      if (uf.unite(edges[i].u, edges[i].v)) ++merges;
    }
    total += term * q.pow(g.vertex_count() - merges);
  }
  return total;
}

Rational z_multivariate(const Multigraph& g, const Rational& q, const WeightFunction& w) {
  w.check_total(g);
  // q = 1 shortcut: q^kappa is identically 1, so Z factorizes per edge.
  if (q == Rational(1)) {
    Rational r(1);
    for (const auto& e : g.edges()) r *= Rational(1) + w.at(e.id);
    return r;
  }
  std::map<std::string, Rational> memo;
  return z_rec(make_wgraph(g, w), q, memo);
}

namespace {

TwoTerminalSplit split_by_enumeration(const Multigraph& g, int s, int t, const Rational& q,
                                      const WeightFunction& w) {
  int m = g.edge_count();
  if (m > 24) throw std::invalid_argument("two-terminal enumeration cap exceeded");
  const auto& edges = g.edges();
  TwoTerminalSplit out{Rational(0), Rational(0)};
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    Uf uf(g.vertex_count());
    int merges = 0;
    Rational term(1);
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      term *= w.at(edges[i].id);
      if (uf.unite(edges[i].u, edges[i].v)) ++merges;
    }
    term *= q.pow(g.vertex_count() - merges);
    (uf.find(s) == uf.find(t) ? out.z_st : out.z_s_bar_t) += term;
  }
  return out;
}

}  // namespace

TwoTerminalSplit z_two_terminal(const Multigraph& g, int s, int t, const Rational& q,
                                const WeightFunction& w) {
  if (s == t || s < 0 || t < 0 || s >= g.vertex_count() || t >= g.vertex_count())
    throw std::invalid_argument("two-terminal split needs distinct valid terminals");
  if (q.is_zero() || q == Rational(1)) return split_by_enumeration(g, s, t, q, w);

  Rational z = z_multivariate(g, q, w);
  Multigraph aug = g;
  EdgeId auxiliary = aug.add_edge(s, t);
  WeightFunction aw = w;
  aw.set(auxiliary, Rational(1));
  Rational z_plus = z_multivariate(aug, q, aw);
  // Z      = Z_st + Z_s|t
  // Z_plus = 2 Z_st + (1 + 1/q) Z_s|t
  Rational z_sbt = (z_plus - Rational(2) * z) * q / (Rational(1) - q);
  return {z - z_sbt, z_sbt};
}

UniPoly chromatic_poly(const Multigraph& g) {
  long degree = g.vertex_count();
  std::vector<std::pair<Rational, Rational>> pts;
  for (long k = 1; k <= degree + 1; ++k) {
    Rational q(k);
    pts.emplace_back(q, z_multivariate(g, q, WeightFunction(g, Rational(-1))));
  }
  return interpolate(pts, degree);
}

UniPoly flow_poly(const Multigraph& g) {
  long degree = g.edge_count() - g.vertex_count() + g.kappa_all();
  int sign = g.edge_count() % 2 == 0 ? 1 : -1;
  std::vector<std::pair<Rational, Rational>> pts;
  for (long k = 1; k <= degree + 1; ++k) {
    Rational q(k);
    Rational z = z_multivariate(g, q, WeightFunction(g, -q));
    pts.emplace_back(q, Rational(sign) * z / q.pow(g.vertex_count()));
  }
  return interpolate(pts, degree);
}

namespace {

std::int64_t checked_pow(std::int64_t base, int exp, std::int64_t cap) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) throw std::invalid_argument("oracle cap exceeded");
    r *= base;
  }
  return r;
}

}  // namespace

std::int64_t count_colourings_brute(const Multigraph& g, int q, std::int64_t oracle_cap) {
  if (q < 1) throw std::invalid_argument("colour count needs q >= 1");
  checked_pow(q, g.vertex_count(), oracle_cap);
  int n = g.vertex_count();
  std::vector<int> colour(n, 0);
  std::int64_t count = 0;
  while (true) {
    bool proper = true;
    for (const auto& e : g.edges())
      if (colour[e.u] == colour[e.v]) {
        proper = false;
        break;
      }
    if (proper) ++count;
    int pos = 0;
    while (pos < n && ++colour[pos] == q) colour[pos++] = 0;
    if (pos == n) break;
  }
  return count;
}

std::int64_t count_nzflows_brute(const Multigraph& g, int q, std::int64_t oracle_cap) {
  if (q < 1) throw std::invalid_argument("flow count needs q >= 1");
  checked_pow(q, g.edge_count(), oracle_cap);
  int m = g.edge_count();
  if (q == 1) return m == 0 ? 1 : 0;  // no nonzero values exist
  std::vector<int> val(m, 1);
  const auto& edges = g.edges();
  std::int64_t count = 0;
  while (true) {
    // Conservation at every vertex under the stored orientation (u -> v).
    std::vector<int> balance(g.vertex_count(), 0);
    for (int i = 0; i < m; ++i) {
      if (edges[i].u == edges[i].v) continue;
      balance[edges[i].u] += val[i];
      balance[edges[i].v] -= val[i];
    }
    bool conserved = true;
    for (int b : balance)
      if (b % q != 0) {
        conserved = false;
        break;
      }
    if (conserved) ++count;
    int pos = 0;
    while (pos < m && ++val[pos] == q) val[pos++] = 1;
    if (pos == m) break;
  }
  return count;
}

Rational potts_brute(const Multigraph& g, int q, const Rational& gamma,
                     std::int64_t oracle_cap) {
  if (q < 1) throw std::invalid_argument("Potts sum needs q >= 1");
  checked_pow(q, g.vertex_count(), oracle_cap);
  int n = g.vertex_count();
  std::vector<int> spin(n, 0);
  Rational total(0);
  while (true) {
    Rational term(1);
    for (const auto& e : g.edges())
      if (spin[e.u] == spin[e.v]) term *= Rational(1) + gamma;
    total += term;
    int pos = 0;
    while (pos < n && ++spin[pos] == q) spin[pos++] = 0;
    if (pos == n) break;
  }
  return total;
}

}  // namespace tutte
