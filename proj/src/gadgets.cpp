#include "tutte/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tutte/tutte_eval.hpp"

namespace tutte {

namespace {

PlanePoint point_from_weight(const Rational& q, const Rational& w) {
  if (w.is_zero()) throw std::invalid_argument("weight 0 has no finite x-coordinate");
  return {q / w + Rational(1), w + Rational(1)};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

ImplementedWeight implemented_weight(const Gadget& gd, const Rational& q) {
  require(!q.is_zero(), "implemented weight needs q != 0");
  TwoTerminalSplit split = z_two_terminal(gd.graph, gd.s, gd.t, q, gd.weights);
  if (split.z_s_bar_t.is_zero()) throw std::invalid_argument("non-implementing gadget");
  ImplementedWeight out;
  out.w_star = q * split.z_st / split.z_s_bar_t;
  out.scale_factor = split.z_s_bar_t / (q * q);
  out.scale_q = q;
  return out;
}

ShiftExprPtr ShiftExpr::leaf(const Rational& w) {
  auto e = std::shared_ptr<ShiftExpr>(new ShiftExpr());
  e->kind_ = Kind::Leaf;
  e->w_ = w;
  e->leaves_ = 1;
  return e;
}

ShiftExprPtr ShiftExpr::series(ShiftExprPtr l, ShiftExprPtr r) {
  auto e = std::shared_ptr<ShiftExpr>(new ShiftExpr());
  e->kind_ = Kind::Series;
  e->leaves_ = l->leaves_ + r->leaves_;
  e->l_ = std::move(l);
  e->r_ = std::move(r);
  return e;
}

ShiftExprPtr ShiftExpr::parallel(ShiftExprPtr l, ShiftExprPtr r) {
  auto e = std::shared_ptr<ShiftExpr>(new ShiftExpr());
  e->kind_ = Kind::Parallel;
  e->leaves_ = l->leaves_ + r->leaves_;
  e->l_ = std::move(l);
  e->r_ = std::move(r);
  return e;
}

Rational ShiftExpr::weight(const Rational& q) const {
  switch (kind_) {
    case Kind::Leaf:
      return w_;
    case Kind::Series:
      return series_weight(l_->weight(q), r_->weight(q), q);
    case Kind::Parallel:
      return parallel_weight(l_->weight(q), r_->weight(q));
  }
  throw std::logic_error("bad expression node");
}

Rational ShiftExpr::scale(const Rational& q) const {
  switch (kind_) {
    case Kind::Leaf:
      return Rational(1);
    case Kind::Parallel:
      return l_->scale(q) * r_->scale(q);
    case Kind::Series:
      return (q + l_->weight(q) + r_->weight(q)) * l_->scale(q) * r_->scale(q);
  }
  throw std::logic_error("bad expression node");
}

namespace {

void expand_into(const ShiftExpr& e, int s, int t, int& next_vertex,
                 std::vector<std::pair<int, int>>& edges, std::vector<Rational>& weights) {
  switch (e.kind()) {
    case ShiftExpr::Kind::Leaf:
      edges.emplace_back(s, t);
      weights.push_back(e.leaf_weight());
      return;
    case ShiftExpr::Kind::Series: {
      int mid = next_vertex++;
      expand_into(*e.left(), s, mid, next_vertex, edges, weights);
      expand_into(*e.right(), mid, t, next_vertex, edges, weights);
      return;
    }
    case ShiftExpr::Kind::Parallel:
      expand_into(*e.left(), s, t, next_vertex, edges, weights);
      expand_into(*e.right(), s, t, next_vertex, edges, weights);
      return;
  }
}

}  // namespace

Gadget ShiftExpr::expand() const {
  int next_vertex = 2;
  std::vector<std::pair<int, int>> edges;
  std::vector<Rational> weights;
  expand_into(*this, 0, 1, next_vertex, edges, weights);
  Gadget gd;
  gd.graph = Multigraph(next_vertex, edges);
  gd.s = 0;
  gd.t = 1;
  for (std::size_t i = 0; i < weights.size(); ++i) gd.weights.set(gd.graph.edges()[i].id, weights[i]);
  return gd;
}

ShiftExprPtr ShiftExpr::substitute_leaf(const Rational& leaf_w,
                                        const ShiftExprPtr& replacement) const {
  switch (kind_) {
    case Kind::Leaf:
      return w_ == leaf_w ? replacement : leaf(w_);
    case Kind::Series:
      return series(l_->substitute_leaf(leaf_w, replacement),
                    r_->substitute_leaf(leaf_w, replacement));
    case Kind::Parallel:
      return parallel(l_->substitute_leaf(leaf_w, replacement),
                      r_->substitute_leaf(leaf_w, replacement));
  }
  throw std::logic_error("bad expression node");
}

std::string ShiftExpr::str() const {
  switch (kind_) {
    case Kind::Leaf:
      return w_.str();
    case Kind::Series:
      return "S(" + l_->str() + "," + r_->str() + ")";
    case Kind::Parallel:
      return "P(" + l_->str() + "," + r_->str() + ")";
  }
  return "?";
}

Rational series_weight(const Rational& w1, const Rational& w2, const Rational& q) {
  Rational denom = q + w1 + w2;
  if (denom.is_zero()) throw std::invalid_argument("singular series composition");
  return w1 * w2 / denom;
}

Rational parallel_weight(const Rational& w1, const Rational& w2) {
  return (Rational(1) + w1) * (Rational(1) + w2) - Rational(1);
}

Rational stretch_weight(const Rational& w, const Rational& q, int k) {
  require(k >= 1, "stretch needs k >= 1");
  Rational acc = w;
  for (int i = 1; i < k; ++i) acc = series_weight(acc, w, q);
  return acc;
}

Rational thicken_weight(const Rational& w, int k) {
  require(k >= 1, "thicken needs k >= 1");
  return (Rational(1) + w).pow(k) - Rational(1);
}

ShiftExprPtr stretch_expr(const ShiftExprPtr& e, int k) {
  require(k >= 1, "stretch needs k >= 1");
  ShiftExprPtr acc = e;
  for (int i = 1; i < k; ++i) acc = ShiftExpr::series(acc, e);
  return acc;
}

ShiftExprPtr thicken_expr(const ShiftExprPtr& e, int k) {
  require(k >= 1, "thicken needs k >= 1");
  ShiftExprPtr acc = e;
  for (int i = 1; i < k; ++i) acc = ShiftExpr::parallel(acc, e);
  return acc;
}

namespace {

// Certify a small expression against its literal gadget.
void certify_expr(const ShiftExprPtr& e, const Rational& q, const Rational& expected_w,
                  long edge_cap) {
  if (q.is_zero() || e->leaf_count() > edge_cap) return;
  Gadget literal = e->expand();
  ImplementedWeight iw = implemented_weight(literal, q);
  if (iw.w_star != expected_w)
    throw std::logic_error("gadget certification failed: literal weight " + iw.w_star.str() +
                           " vs closed form " + expected_w.str());
}

}  // namespace

PlanePoint diamond(const PlanePoint& p) {
  const Rational one(1), two(2);
  require(p.x != Rational(-1), "diamond undefined");
  require(p.y != -one - two * p.x, "diamond undefined");
  Rational x = p.x, y = p.y;
  Rational xs = x * x;
  PlanePoint out{(x + xs + xs * x + y) / (one + two * x + y),
                 ((x + y) * (x + y)) / ((one + x) * (one + x))};
  // Re-certify against the literal four-edge gadget.
  Rational q = p.q();
  if (!q.is_zero()) {
    ShiftExprPtr leaf = ShiftExpr::leaf(p.gamma());
    ShiftExprPtr gadget = ShiftExpr::parallel(ShiftExpr::series(leaf, leaf),
                                              ShiftExpr::series(leaf, leaf));
    certify_expr(gadget, q, out.y - one, 16);
  }
  return out;
}

DiamondTrace diamond_iterate(const PlanePoint& p, long iteration_cap, long certify_edge_cap) {
  const Rational one(1), two(2);
  Rational q = p.q();
  require(max(p.x.abs(), p.y.abs()) < one, "diamond iteration requires max(|x|,|y|) < 1");
  require(q > Rational(32, 27), "diamond iteration requires q > 32/27");

  DiamondTrace trace;
  trace.points.push_back(p);
  trace.expr = ShiftExpr::leaf(p.gamma());
  PlanePoint cur = p;

  for (long step = 0; step < iteration_cap; ++step) {
    if (cur.y > one) {
      trace.fully_certified = trace.expr->leaf_count() <= certify_edge_cap;
      if (trace.fully_certified) certify_expr(trace.expr, q, cur.y - one, certify_edge_cap);
      return trace;
    }
    Rational w = cur.y - one;
    if (cur.y == -one - two * cur.x) {
      // Exceptional branch 1: the diamond would land on y = 1.  Use the
      // series/series/parallel composite instead.
      ++trace.collinear_exceptions;
      Rational xs = cur.x * cur.x;
      PlanePoint next{one - xs.pow(-1) + xs, (one - xs) / (one + xs)};
      Rational gain = two * (cur.x * xs + cur.x + one) / (xs + one);
      if (next.y - cur.y != gain)
        throw std::logic_error("exceptional branch 1: gain formula mismatch");
      ShiftExprPtr s1 = ShiftExpr::series(trace.expr, trace.expr);
      ShiftExprPtr s2 = ShiftExpr::series(s1, s1);
      ShiftExprPtr composed = ShiftExpr::parallel(s1, s2);
      // one-level literal check with the current weight as edges
      {
        ShiftExprPtr e = ShiftExpr::leaf(w);
        ShiftExprPtr es1 = ShiftExpr::series(e, e);
        certify_expr(ShiftExpr::parallel(es1, ShiftExpr::series(es1, es1)), q, next.y - one, 16);
      }
      trace.expr = composed;
      if (!(next.y > cur.y)) throw std::logic_error("diamond trace must increase y");
      cur = next;
      trace.points.push_back(cur);
      continue;
    }
    if (cur.x == -one) {
      // Exceptional branch 2: (x_j, y_j) = (-1, 1-q/2) with q < 2; the
      // parallel/series/parallel composite jumps straight to y > 1.
      trace.hit_x_minus_one = true;
      require(q < two, "x = -1 branch needs q < 2");
      PlanePoint xdd{q / (Rational(4) - q),
                     (q * q - Rational(6) * q + Rational(4)) / (two * (two - q))};
      if (!(xdd.y < -one)) throw std::logic_error("x = -1 branch: y'' must be below -1");
      PlanePoint final_point{xdd.x * xdd.x, xdd.y * xdd.y};
      {
        ShiftExprPtr e = ShiftExpr::leaf(w);
        ShiftExprPtr ser = ShiftExpr::series(e, ShiftExpr::parallel(e, e));
        certify_expr(ShiftExpr::parallel(ser, ser), q, final_point.y - one, 16);
      }
      ShiftExprPtr ser = ShiftExpr::series(trace.expr, ShiftExpr::parallel(trace.expr, trace.expr));
      trace.expr = ShiftExpr::parallel(ser, ser);
      if (!(final_point.y > cur.y)) throw std::logic_error("diamond trace must increase y");
      cur = final_point;
      trace.points.push_back(cur);
      trace.fully_certified = trace.expr->leaf_count() <= certify_edge_cap;
      if (trace.fully_certified) certify_expr(trace.expr, q, cur.y - one, certify_edge_cap);
      return trace;
    }
    PlanePoint next = diamond(cur);
    ShiftExprPtr s = ShiftExpr::series(trace.expr, trace.expr);
    trace.expr = ShiftExpr::parallel(s, s);
    if (!(next.y > cur.y)) throw std::logic_error("diamond trace must increase y");
    cur = next;
    trace.points.push_back(cur);
  }
  std::ostringstream os;
  os << "diamond iteration cap exceeded after " << iteration_cap << " steps; trace:";
  for (const auto& pt : trace.points) os << " (" << pt.x.str() << "," << pt.y.str() << ")";
  throw std::runtime_error(os.str());
}

namespace {

LemmaResult finish(const Rational& q, PlanePoint point, ShiftExprPtr expr,
                   long certify_cap = 4096) {
  certify_expr(expr, q, point.y - Rational(1), certify_cap);
  return {std::move(point),
          expr->leaf_count() <= certify_cap ? expr->expand() : Gadget{}, expr};
}

std::vector<LemmaResult> construct_xlefttoyup(const PlanePoint& p) {
  Rational q = p.q();
  require(q > Rational(0), "lemma xlefttoyup requires q > 0");
  require(p.x < Rational(-1), "lemma xlefttoyup requires x < -1");
  ShiftExprPtr e = ShiftExpr::leaf(p.gamma());
  PlanePoint out{p.x * p.x, (p.x + p.y) / (Rational(1) + p.x)};
  auto res = finish(q, out, ShiftExpr::series(e, e));
  require(res.point.y > Rational(1), "xlefttoyup postcondition y' > 1 failed");
  return {res};
}

std::vector<LemmaResult> construct_shiftB1(const PlanePoint& p) {
  Rational q = p.q();
  require(p.x < Rational(-1), "lemma shiftB1 requires x < -1");
  require(p.y < Rational(-1), "lemma shiftB1 requires y < -1");
  // odd j with |x|^j + 1 > q, then y' = q/(x^j - 1) + 1 lies in (0,1)
  int j = 1;
  while (!(p.x.abs().pow(j) + Rational(1) > q)) j += 2;
  ShiftExprPtr e = ShiftExpr::leaf(p.gamma());
  ShiftExprPtr stretched = stretch_expr(e, j);
  Rational yp = q / (p.x.pow(j) - Rational(1)) + Rational(1);
  require(Rational(0) < yp && yp < Rational(1), "shiftB1: stretched point must have y' in (0,1)");
  int k = 1;
  while (!((yp.pow(k) * p.y).abs() < Rational(1))) ++k;
  Rational y1 = yp.pow(k) * p.y;
  ShiftExprPtr par = e;
  for (int i = 0; i < k; ++i) par = ShiftExpr::parallel(par, stretched);
  auto first = finish(q, point_from_weight(q, y1 - Rational(1)), par);
  require(Rational(-1) < first.point.y && first.point.y < Rational(0),
          "shiftB1 postcondition y1 in (-1,0) failed");
  auto second = finish(q, p, e);
  return {first, second};
}

std::vector<LemmaResult> construct_shiftB2(const PlanePoint& p) {
  Rational q = p.q();
  require(p.x < Rational(-1), "lemma shiftB2 requires x < -1");
  require(p.y == Rational(-1), "lemma shiftB2 requires y = -1");
  int j = 1;
  while (!(q / (p.x.abs().pow(j) + Rational(1)) < Rational(1))) j += 2;
  ShiftExprPtr e = ShiftExpr::leaf(p.gamma());
  ShiftExprPtr stretched = stretch_expr(e, j);
  Rational yp = q / (p.x.pow(j) - Rational(1)) + Rational(1);
  require(Rational(0) < yp && yp < Rational(1), "shiftB2: stretched point must have y' in (0,1)");
  Rational y1 = yp * p.y;  // = -y'
  auto first = finish(q, point_from_weight(q, y1 - Rational(1)), ShiftExpr::parallel(stretched, e));
  require(Rational(-1) < first.point.y && first.point.y < Rational(0),
          "shiftB2 postcondition y1 in (-1,0) failed");
  auto ups = construct_xlefttoyup(p);
  return {first, ups[0]};
}

std::vector<LemmaResult> construct_shiftB3(const PlanePoint& p) {
  require(p.x < Rational(-1), "lemma shiftB3 requires x < -1");
  require(Rational(-1) < p.y && p.y < Rational(0), "lemma shiftB3 requires -1 < y < 0");
  auto ups = construct_xlefttoyup(p);
  return {finish(p.q(), p, ShiftExpr::leaf(p.gamma())), ups[0]};
}

std::vector<LemmaResult> construct_shiftB4(const PlanePoint& p) {
  Rational q = p.q();
  require(Rational(-1) <= p.x && p.x < Rational(0), "lemma shiftB4 requires -1 <= x < 0");
  require(p.y < Rational(-1), "lemma shiftB4 requires y < -1");
  ShiftExprPtr e = ShiftExpr::leaf(p.gamma());
  ShiftExprPtr thick = thicken_expr(e, 2);
  Rational ya = p.y * p.y;
  Rational xa = q / (ya - Rational(1)) + Rational(1);
  require(xa > Rational(1), "shiftB4: 2-thickening must land at x > 1");
  int j = 1;
  while (!(p.x.abs() * xa.pow(j) + Rational(1) > q)) ++j;
  ShiftExprPtr chain = e;
  for (int i = 0; i < j; ++i) chain = ShiftExpr::series(chain, thick);
  Rational xb = p.x * xa.pow(j);
  Rational yb = q / (xb - Rational(1)) + Rational(1);
  require(Rational(0) < yb && yb < Rational(1), "shiftB4: series point must have y in (0,1)");
  int k = 1;
  while (!((p.y.abs() * yb.pow(k)) < Rational(1))) ++k;
  Rational y1 = p.y * yb.pow(k);
  ShiftExprPtr par = e;
  for (int i = 0; i < k; ++i) par = ShiftExpr::parallel(par, chain);
  auto first = finish(q, point_from_weight(q, y1 - Rational(1)), par);
  require(Rational(-1) < first.point.y && first.point.y < Rational(0),
          "shiftB4 postcondition y1 in (-1,0) failed");
  return {first, finish(q, p, e)};
}

std::vector<LemmaResult> construct_triangle1(const PlanePoint& p) {
  Rational q = p.q();
  require(p.y < -Rational(1) - Rational(2) * p.x, "lemma triangle1 requires y < -1-2x");
  require(p.x > Rational(-1), "lemma triangle1 requires x > -1");
  ShiftExprPtr e = ShiftExpr::leaf(p.gamma());
  ShiftExprPtr s = ShiftExpr::series(e, e);
  Rational ydd = (p.x + p.y) / (Rational(1) + p.x);
  require(ydd < Rational(-1), "triangle1: 2-stretch must reach y'' < -1");
  Rational yprime = ydd * ydd;
  auto res = finish(q, point_from_weight(q, yprime - Rational(1)), ShiftExpr::parallel(s, s));
  require(res.point.y > Rational(1), "triangle1 postcondition y' > 1 failed");
  return {res};
}

std::vector<LemmaResult> construct_triangle2(const PlanePoint& p) {
  Rational q = p.q();
  require(p.x < -Rational(1) - Rational(2) * p.y, "lemma triangle2 requires x < -1-2y");
  require(p.y > Rational(-1), "lemma triangle2 requires y > -1");
  require(q > Rational(0), "lemma triangle2 requires q > 0");
  ShiftExprPtr e = ShiftExpr::leaf(p.gamma());
  ShiftExprPtr t = ShiftExpr::parallel(e, e);
  Rational xdd = (p.x + p.y) / (Rational(1) + p.y);
  require(xdd < Rational(-1), "triangle2: 2-thickening must reach x'' < -1");
  Rational ydd = p.y * p.y;
  PlanePoint mid{xdd, ydd};
  Rational yprime = (mid.x + mid.y) / (Rational(1) + mid.x);
  auto res = finish(q, point_from_weight(q, yprime - Rational(1)), ShiftExpr::series(t, t));
  require(res.point.y > Rational(1), "triangle2 postcondition y' > 1 failed");
  return {res};
}

std::vector<LemmaResult> construct_stretchCD(const PlanePoint& p) {
  Rational q = p.q();
  bool case1 = p.y > Rational(1) && p.x < Rational(-1);
  bool case2 = p.x > Rational(1) && p.y < Rational(-1);
  require(case1 || case2, "lemma stretchCD requires (y>1, x<-1) or (x>1, y<-1)");
  require(q < Rational(0), "lemma stretchCD requires q < 0");
  int j = 2;
  while (!(p.x.pow(j) - Rational(1) > q.abs())) j += 2;
  ShiftExprPtr e = ShiftExpr::leaf(p.gamma());
  Rational y1 = q / (p.x.pow(j) - Rational(1)) + Rational(1);
  auto res = finish(q, point_from_weight(q, y1 - Rational(1)), stretch_expr(e, j));
  require(Rational(0) < res.point.y && res.point.y < Rational(1),
          "stretchCD postcondition y1 in (0,1) failed");
  return {res};
}

std::vector<LemmaResult> construct_Fq12(const PlanePoint& p) {
  Rational q = p.q();
  require(p.x < Rational(-1), "lemma Fq12 requires x < -1");
  require(Rational(0) < p.y && p.y < Rational(1), "lemma Fq12 requires 0 < y < 1");
  require(Rational(1) < q && q < Rational(2), "lemma Fq12 requires 1 < q < 2");
  Rational bound = Rational(1) - q / Rational(2);
  int j = 1;
  while (!(p.y.pow(j) < bound)) ++j;
  ShiftExprPtr e = ShiftExpr::leaf(p.gamma());
  ShiftExprPtr thick = thicken_expr(e, j);
  Rational xp = q / (p.y.pow(j) - Rational(1)) + Rational(1);
  require(Rational(-1) < xp && xp < Rational(0), "Fq12: thickened point must have x' in (-1,0)");
  int k = 1;
  while (!(Rational(0) < p.x * xp.pow(k) && p.x * xp.pow(k) < bound)) k += 2;
  ShiftExprPtr chain = e;
  for (int i = 0; i < k; ++i) chain = ShiftExpr::series(chain, thick);
  Rational x1 = p.x * xp.pow(k);
  Rational y1 = q / (x1 - Rational(1)) + Rational(1);
  auto res = finish(q, point_from_weight(q, y1 - Rational(1)), chain);
  require(Rational(-1) < res.point.y && res.point.y < Rational(0),
          "Fq12 postcondition y1 in (-1,0) failed");
  return {res};
}

std::vector<LemmaResult> construct_Eq01(const PlanePoint& p) {
  Rational q = p.q();
  require(Rational(0) < p.x && p.x < Rational(1), "lemma Eq01 requires 0 < x < 1");
  require(p.y < Rational(-1), "lemma Eq01 requires y < -1");
  require(Rational(0) < q && q < Rational(1), "lemma Eq01 requires 0 < q < 1");
  int j = 1;
  while (!(p.x.pow(j) < Rational(1) - q)) ++j;
  Rational y1 = q / (p.x.pow(j) - Rational(1)) + Rational(1);
  auto res = finish(q, point_from_weight(q, y1 - Rational(1)),
                    stretch_expr(ShiftExpr::leaf(p.gamma()), j));
  require(Rational(0) < res.point.y && res.point.y < Rational(1),
          "Eq01 postcondition y1 in (0,1) failed");
  return {res};
}

std::vector<LemmaResult> construct_Eq12(const PlanePoint& p) {
  Rational q = p.q();
  require(Rational(0) < p.x && p.x < Rational(1), "lemma Eq12 requires 0 < x < 1");
  require(p.y < Rational(-1), "lemma Eq12 requires y < -1");
  require(Rational(1) < q && q < Rational(2), "lemma Eq12 requires 1 < q < 2");
  int j = 1;
  while (!(p.x.pow(j) < Rational(1) - q / Rational(2))) ++j;
  Rational y1 = q / (p.x.pow(j) - Rational(1)) + Rational(1);
  auto res = finish(q, point_from_weight(q, y1 - Rational(1)),
                    stretch_expr(ShiftExpr::leaf(p.gamma()), j));
  require(Rational(-1) < res.point.y && res.point.y < Rational(0),
          "Eq12 postcondition y1 in (-1,0) failed");
  return {res};
}

std::vector<LemmaResult> construct_3227g1(const PlanePoint& p) {
  Rational q = p.q();
  const Rational zero(0), one(1), two(2);
  require(max(p.x.abs(), p.y.abs()) < one, "lemma 3227g1 requires max(|x|,|y|) < 1");
  require(q > one, "lemma 3227g1 requires q > 1");
  bool big_q = q > Rational(32, 27);
  bool below_line = p.y < -one - two * p.x;
  bool left_line = p.x < -one - two * p.y;
  require(big_q || below_line || left_line,
          "lemma 3227g1 requires q > 32/27 or y < -1-2x or x < -1-2y");

  ShiftExprPtr e = ShiftExpr::leaf(p.gamma());
  if (-one < p.y && p.y < zero) return {finish(q, p, e)};
  if (p.y == zero) {
    // A 3-stretch lands at y = x(1+x)/(1+x+x^2), inside (-1,0) for -1<x<0.
    Rational y3 = (p.x + p.x * p.x) / (one + p.x + p.x * p.x);
    auto res = finish(q, point_from_weight(q, y3 - one), stretch_expr(e, 3));
    require(-one < res.point.y && res.point.y < zero, "3227g1: 3-stretch fallback failed");
    return {res};
  }
  require(zero < p.y && p.y < one, "lemma 3227g1 internal: expected 0 < y < 1 here");
  require(q < two, "lemma 3227g1 internal: 1 < q < 2 must hold in this branch");

  // A point with y > 1 (and so x > 1), from the diamond escape or triangle1.
  PlanePoint high;
  ShiftExprPtr high_expr;
  if (big_q) {
    DiamondTrace trace = diamond_iterate(p);
    high = trace.points.back();
    high_expr = trace.expr;
  } else {
    auto tri = construct_triangle1(p);
    high = tri[0].point;
    high_expr = tri[0].expr;
  }

  int j = 2;
  while (!(p.x.pow(j) < one - q / Rational(4))) j += 2;
  Rational xj = p.x.pow(j);
  Rational target = (one - q / Rational(4)) / xj;
  Rational tol = q / (Rational(8) * xj);
  ApproachResult approach =
      approach_weight({high, p}, target, tol, TargetCoordinate::X, 14, 384);
  if (!approach.success)
    throw std::runtime_error("3227g1: bounded search could not reach the target x window");
  Rational xdd = approach.achieved;
  ShiftExprPtr xdd_expr =
      approach.expr->substitute_leaf(high.y - one, high_expr);

  ShiftExprPtr chain = xdd_expr;
  for (int i = 0; i < j; ++i) chain = ShiftExpr::series(chain, e);
  Rational xstar = xdd * xj;
  Rational ystar = q / (xstar - one) + one;
  require(ystar < -one, "3227g1: series point must have y* < -1");
  int ell = 1;
  while (!((ystar.abs() * p.y.pow(ell)) < one)) ++ell;
  Rational y1 = ystar * p.y.pow(ell);
  ShiftExprPtr par = chain;
  for (int i = 0; i < ell; ++i) par = ShiftExpr::parallel(par, e);
  auto res = finish(q, point_from_weight(q, y1 - one), par);
  require(-one < res.point.y && res.point.y < zero, "3227g1 postcondition y1 in (-1,0) failed");
  return {res};
}

// Clique gadget with every edge fanned into k parallel copies of the base
// weight; implements the same weight as Gamma_n at delta = y^k.
Gadget gamma_n_fanned(int n, int k, const Rational& gamma) {
  Multigraph graph(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i == 0 && j == 1) continue;
      for (int copy = 0; copy < k; ++copy) graph.add_edge(i, j);
    }
  return {graph, 0, 1, WeightFunction(graph, gamma)};
}

std::vector<LemmaResult> construct_F(const PlanePoint& p) {
  Rational q = p.q();
  require(p.x < Rational(-1), "lemma F requires x < -1");
  require(Rational(0) < p.y && p.y < Rational(1), "lemma F requires 0 < y < 1");
  require(q > Rational(2), "lemma F requires q > 2");
  require(!q.is_integer(), "lemma F requires non-integer q");

  int n = static_cast<int>(q.floor().numerator().get_si()) + 2;
  // k-thickening of (x,y) implements weight -1+delta with delta = y^k;
  // grow k until the perturbed clique still implements a weight below -1.
  for (int k = 1; k <= 256; ++k) {
    Gadget gd = gamma_n_fanned(n, k, p.gamma());
    Rational w = implemented_weight(gd, q).w_star;
    if (w < Rational(-1)) {
      PlanePoint out{q / w + Rational(1), w + Rational(1)};
      return {LemmaResult{out, std::move(gd), nullptr}};
    }
  }
  throw std::runtime_error("lemma F: no thickening depth kept the clique weight below -1");
}

std::vector<LemmaResult> construct_F2(const PlanePoint& p) {
  Rational q = p.q();
  auto first = construct_F(p);  // hypotheses checked there
  PlanePoint cur = first[0].point;
  Gadget gd = std::move(first[0].gadget);
  require(!(cur.x == Rational(-1) && cur.y == Rational(-1)),
          "lemma F2: landed on the special point (-1,-1)");
  auto in_b_or_g = [](const PlanePoint& pt) {
    Region r = classify(pt).region;
    return r == Region::B || r == Region::G;
  };
  if (!in_b_or_g(cur)) {
    // the proof's remaining case: 0 <= x' < 1 and y' <= -1, fixed by a
    // parallel composition with enough base edges
    require(Rational(0) <= cur.x && cur.x < Rational(1) && cur.y <= Rational(-1),
            "lemma F2: intermediate point outside the expected case split");
    int j = 1;
    while (!(cur.y.abs() * p.y.pow(j) < Rational(1))) ++j;
    Rational y2 = cur.y * p.y.pow(j);
    for (int copy = 0; copy < j; ++copy) {
      EdgeId id = gd.graph.add_edge(gd.s, gd.t);
      gd.weights.set(id, p.gamma());
    }
    Rational w = implemented_weight(gd, q).w_star;
    if (w + Rational(1) != y2)
      throw std::logic_error("lemma F2: parallel continuation mis-certified");
    cur = {q / w + Rational(1), y2};
  }
  require(in_b_or_g(cur), "lemma F2: terminal point must land in region B or G");
  return {LemmaResult{cur, std::move(gd), nullptr}};
}

}  // namespace

std::vector<LemmaResult> construct(const PlanePoint& p, const std::string& lemma) {
  if (lemma == "xlefttoyup") return construct_xlefttoyup(p);
  if (lemma == "shiftB1") return construct_shiftB1(p);
  if (lemma == "shiftB2") return construct_shiftB2(p);
  if (lemma == "shiftB3") return construct_shiftB3(p);
  if (lemma == "shiftB4") return construct_shiftB4(p);
  if (lemma == "triangle1") return construct_triangle1(p);
  if (lemma == "triangle2") return construct_triangle2(p);
  if (lemma == "3227g1") return construct_3227g1(p);
  if (lemma == "F") return construct_F(p);
  if (lemma == "F2") return construct_F2(p);
  if (lemma == "stretchCD") return construct_stretchCD(p);
  if (lemma == "Fq12") return construct_Fq12(p);
  if (lemma == "Eq01") return construct_Eq01(p);
  if (lemma == "Eq12") return construct_Eq12(p);
  throw std::invalid_argument("unknown lemma: " + lemma);
}

GammaNResult gamma_n_gadget(int n, const Rational& q, const Rational& delta) {
  require(n >= 4, "gamma_n gadget needs n >= 4");
  if (q.is_integer()) throw std::invalid_argument("gamma_n gadget: integer q excluded");
  require(Rational(1) < q && q < Rational(n - 1), "gamma_n gadget needs 1 < q < n-1");
  require(Rational(0) <= delta && delta < Rational(1), "gamma_n gadget needs delta in [0,1)");

  Multigraph graph(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) graph.add_edge(i, j);
  Gadget gd{graph, 0, 1, WeightFunction(graph, Rational(-1) + delta)};
  Rational w = implemented_weight(gd, q).w_star;
  if (delta.is_zero()) {
    Rational closed = Rational(n - 2) / (q - Rational(n - 1));
    if (w != closed)
      throw std::logic_error("gamma_n certification failed: " + w.str() + " vs " + closed.str());
  }
  if (!(w < Rational(-1)))
    throw std::invalid_argument("gamma_n gadget: delta too large, implemented weight not below -1");
  return {std::move(gd), std::move(w)};
}

PetersenResult petersen_gadget(const Rational& q, const Rational& delta) {
  if (q.is_integer()) throw std::invalid_argument("petersen gadget: integer q excluded");
  require(Rational(2) < q && q < Rational(4), "petersen gadget needs 2 < q < 4");
  require(delta >= Rational(0), "petersen gadget needs delta >= 0");

  Multigraph pet = petersen_graph();
  EdgeId removed = pet.edges()[0].id;  // the (0,1) outer edge
  Multigraph graph = pet.delete_edge(removed);
  Gadget gd{graph, 0, 1, WeightFunction(graph, -q - delta)};
  Rational w = implemented_weight(gd, q).w_star;
  if (delta.is_zero()) {
    // Cross-check against the flow-polynomial formula
    // w = -q F(G;q) / (F(G;q) - (q-1) F(Gamma;q)).
    Rational fg = flow_poly(pet).eval(q);
    Rational fgamma = flow_poly(graph).eval(q);
    Rational closed = -q * fg / (fg - (q - Rational(1)) * fgamma);
    if (w != closed)
      throw std::logic_error("petersen certification failed: " + w.str() + " vs " + closed.str());
  }
  if (!(-q < w && w < Rational(0)))
    throw std::invalid_argument("petersen gadget: implemented weight left (-q, 0)");
  return {std::move(gd), std::move(w)};
}

namespace {

struct SearchState {
  ShiftExprPtr expr;
  Rational w;
  double score;
};

}  // namespace

ApproachResult approach_weight(const std::vector<PlanePoint>& base, const Rational& target,
                               const Rational& tolerance, TargetCoordinate coord, int depth_cap,
                               int width_cap) {
  require(!base.empty(), "approach_weight needs at least one base point");
  require(tolerance.sign() > 0, "approach_weight needs a positive tolerance");
  Rational q = base[0].q();
  for (const auto& b : base)
    if (b.q() != q) throw std::invalid_argument("approach_weight base points must share one q");
  require(!q.is_zero(), "approach_weight needs q != 0");

  Rational lo = target - tolerance;
  auto coordinate_of = [&](const Rational& w) -> std::pair<bool, Rational> {
    if (coord == TargetCoordinate::Y) return {true, w + Rational(1)};
    if (w.is_zero()) return {false, Rational(0)};
    return {true, q / w + Rational(1)};
  };
  auto hits = [&](const Rational& w) {
    auto [ok, c] = coordinate_of(w);
    return ok && lo <= c && c <= target;
  };
  auto score_of = [&](const Rational& w) {
    auto [ok, c] = coordinate_of(w);
    if (!ok) return 1e300;
    return std::abs(c.to_double() - target.to_double());
  };

  std::vector<SearchState> pool;
  std::set<std::string> seen;
  for (const auto& b : base) {
    Rational w = b.gamma();
    if (!seen.insert(w.str()).second) continue;
    pool.push_back({ShiftExpr::leaf(w), w, score_of(w)});
    if (hits(w)) return {true, pool.back().expr, coordinate_of(w).second};
  }

  std::size_t frontier_start = 0;
  while (frontier_start < pool.size()) {
    std::size_t pool_end = pool.size();
    std::vector<SearchState> fresh;
    for (std::size_t i = frontier_start; i < pool_end; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const auto& a = pool[i];
        const auto& b = pool[j];
        if (a.expr->leaf_count() + b.expr->leaf_count() > depth_cap) continue;
        Rational combos[2];
        int n_combos = 0;
        combos[n_combos++] = parallel_weight(a.w, b.w);
        Rational denom = q + a.w + b.w;
        if (!denom.is_zero()) combos[n_combos++] = a.w * b.w / denom;
        for (int c = 0; c < n_combos; ++c) {
          const Rational& w = combos[c];
          if (!seen.insert(w.str()).second) continue;
          ShiftExprPtr expr = c == 0 ? ShiftExpr::parallel(a.expr, b.expr)
                                     : ShiftExpr::series(a.expr, b.expr);
          if (hits(w)) return {true, expr, coordinate_of(w).second};
          fresh.push_back({expr, w, score_of(w)});
        }
      }
    if (fresh.empty()) break;
    std::sort(fresh.begin(), fresh.end(),
              [](const SearchState& a, const SearchState& b) { return a.score < b.score; });
    if (static_cast<int>(fresh.size()) > width_cap) fresh.resize(width_cap);
    frontier_start = pool.size();
    pool.insert(pool.end(), fresh.begin(), fresh.end());
  }
  return {};
}

Substitution substitute_edge(const Multigraph& g, const WeightFunction& w, EdgeId f,
                             const Gadget& gd) {
  const auto& fe = g.edge_by_id(f);
  int host_n = g.vertex_count();
  int extra = gd.graph.vertex_count() - 2;
  Multigraph out(host_n + extra);
  WeightFunction weights;
  for (const auto& e : g.edges()) {
    if (e.id == f) continue;
    EdgeId id = out.add_edge(e.u, e.v);
    weights.set(id, w.at(e.id));
  }
  // terminals glue onto f's endpoints; interior gadget vertices append
  auto remap = [&](int v) {
    if (v == gd.s) return fe.u;
    if (v == gd.t) return fe.v;
    int offset = v - (v > gd.s ? 1 : 0) - (v > gd.t ? 1 : 0);
    return host_n + offset;
  };
  for (const auto& e : gd.graph.edges()) {
    EdgeId id = out.add_edge(remap(e.u), remap(e.v));
    weights.set(id, gd.weights.at(e.id));
  }
  return {std::move(out), std::move(weights)};
}

}  // namespace tutte
