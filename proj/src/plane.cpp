#include "tutte/plane.hpp"

#include <sstream>
#include <stdexcept>

namespace tutte {

std::string to_string(Region r) {
  switch (r) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::BSpecial: return "B-special";
    case Region::C: return "C";
    case Region::D: return "D";
    case Region::E: return "E";
    case Region::F: return "F";
    case Region::BEBoundary: return "BE-boundary";
    case Region::BFBoundary: return "BF-boundary";
    case Region::G: return "G";
    case Region::H: return "H";
    case Region::I: return "I";
    case Region::J: return "J";
    case Region::K: return "K";
    case Region::L: return "L";
    case Region::M: return "M";
    case Region::Q1Hyperbola: return "Q1-hyperbola";
    case Region::Open: return "Open";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::FP: return "FP";
    case Status::NPComplete: return "NP-complete";
    case Status::SharpPHard: return "SharpP-hard";
    case Status::Open: return "Open";
  }
  return "?";
}

PointClass classify(const PlanePoint& p) {
  const Rational& x = p.x;
  const Rational& y = p.y;
  const Rational zero(0), one(1), minus_one(-1);
  Rational q = p.q();

  // (1) first quadrant
  if (x >= zero && y >= zero) return {Region::A, Status::FP};
  // (2) the special point (-1,-1)
  if (x == minus_one && y == minus_one) return {Region::BSpecial, Status::FP};
  // (3) third-quadrant wedge
  if (min(x, y) <= minus_one && max(x, y) < zero) return {Region::B, Status::SharpPHard};
  // (4), (5) outer quadrants
  if (x < minus_one && y > one) return {Region::C, Status::SharpPHard};
  if (x > one && y < minus_one) return {Region::D, Status::SharpPHard};
  // (6) boundary between B and E: x <= -1, y = 0 (q = 1-x)
  if (x <= minus_one && y == zero) {
    if (x == minus_one) return {Region::BEBoundary, Status::FP};
    if (x.is_integer()) return {Region::BEBoundary, Status::NPComplete};
    return {Region::BEBoundary, Status::SharpPHard};
  }
  // (7) boundary between B and F: x = 0, y <= -1 (q = 1-y)
  if (x == zero && y <= minus_one) {
    if (y == minus_one) return {Region::BFBoundary, Status::FP};
    if (y == Rational(-2)) return {Region::BFBoundary, Status::NPComplete};
    if (y == Rational(-3) || y == Rational(-4)) return {Region::BFBoundary, Status::Open};
    if (y.is_integer()) return {Region::BFBoundary, Status::FP};  // y <= -5
    return {Region::BFBoundary, q < Rational(4) ? Status::SharpPHard : Status::Open};
  }
  // (8) region E: x <= -1, 0 < y <= 1
  if (x <= minus_one && zero < y && y <= one) {
    if (q.is_integer()) return {Region::E, Status::FP};
    if (x == minus_one && Rational(11, 27) <= y && y < one) return {Region::E, Status::Open};
    return {Region::E, Status::SharpPHard};
  }
  // (9) region F: 0 < x <= 1, y <= -1
  if (zero < x && x <= one && y <= minus_one) {
    if (q.is_integer()) return {Region::F, Status::FP};
    if (y == minus_one && Rational(11, 27) <= x && x < one) return {Region::F, Status::Open};
    if (q < Rational(4)) return {Region::F, Status::SharpPHard};
    return {Region::F, Status::Open};
  }
  // (10) the q = 1 hyperbola
  if (q == one) return {Region::Q1Hyperbola, Status::FP};
  // (11)-(13) vicinity of the origin
  Rational absmax = max(x.abs(), y.abs());
  if (absmax < one && q > Rational(32, 27)) return {Region::G, Status::SharpPHard};
  if (absmax < one && y < -Rational(2) * x - one) return {Region::H, Status::SharpPHard};
  // The H/I pair is x/y-symmetric, so region I uses x < -1-2y (the proved
  // form; the alternative "x < -2y+1" would overlap J and break symmetry).
  if (absmax < one && x < -Rational(2) * y - one) return {Region::I, Status::SharpPHard};
  // (14)-(17) remaining tractable slivers
  if (minus_one <= x && x < zero && y >= one) return {Region::J, Status::FP};
  if (x >= one && minus_one <= y && y < zero) return {Region::K, Status::FP};
  if (zero < x && x < one && -x < y && y < zero) return {Region::L, Status::FP};
  if (zero < y && y < one && -y < x && x < zero) return {Region::M, Status::FP};
  // (18)
  return {Region::Open, Status::Open};
}

std::vector<GridRow> scan_grid(const Rational& x_min, const Rational& x_max,
                               const Rational& y_min, const Rational& y_max,
                               const Rational& step) {
  if (step.sign() <= 0) throw std::invalid_argument("grid step must be positive");
  std::vector<GridRow> rows;
  for (Rational x = x_min; x <= x_max; x += step)
    for (Rational y = y_min; y <= y_max; y += step) {
      PlanePoint p{x, y};
      rows.push_back({p, classify(p)});
    }
  return rows;
}

std::string grid_to_csv(const std::vector<GridRow>& rows) {
  std::ostringstream os;
  os << "x,y,q,region,status\n";
  for (const auto& r : rows)
    os << r.point.x.str() << "," << r.point.y.str() << "," << r.point.q().str() << ","
       << to_string(r.cls.region) << "," << to_string(r.cls.status) << "\n";
  return os.str();
}

std::string grid_to_json(const std::vector<GridRow>& rows) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i) os << ",";
    os << "{\"x\":\"" << r.point.x.str() << "\",\"y\":\"" << r.point.y.str()
       << "\",\"q\":\"" << r.point.q().str() << "\",\"region\":\"" << to_string(r.cls.region)
       << "\",\"status\":\"" << to_string(r.cls.status) << "\"}";
  }
  os << "]";
  return os.str();
}

}  // namespace tutte
