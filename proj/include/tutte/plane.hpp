#ifndef TUTTE_PLANE_HPP
#define TUTTE_PLANE_HPP

#include <string>
#include <vector>

#include "tutte/rational.hpp"

namespace tutte {

/// Exact rational point of the (x,y) Tutte plane.  q and gamma are always
/// derived: q = (x-1)(y-1), gamma = y-1.
struct PlanePoint {
  Rational x;
  Rational y;

  Rational q() const { return (x - Rational(1)) * (y - Rational(1)); }
  Rational gamma() const { return y - Rational(1); }
};

enum class Region {
  A,
  B,
  BSpecial,
  C,
  D,
  E,
  F,
  BEBoundary,
  BFBoundary,
  G,
  H,
  I,
  J,
  K,
  L,
  M,
  Q1Hyperbola,
  Open,
};

enum class Status {
  FP,
  NPComplete,
  SharpPHard,
  Open,
};

struct PointClass {
  Region region;
  Status status;
};

std::string to_string(Region r);
std::string to_string(Status s);

/// Ordered rule list with exact comparisons; first match wins.
PointClass classify(const PlanePoint& p);

struct GridRow {
  PlanePoint point;
  PointClass cls;
};

/// Classification of every lattice point x in [x_min, x_max],
/// y in [y_min, y_max] with the given positive step.
std::vector<GridRow> scan_grid(const Rational& x_min, const Rational& x_max,
                               const Rational& y_min, const Rational& y_max,
                               const Rational& step);

std::string grid_to_csv(const std::vector<GridRow>& rows);
std::string grid_to_json(const std::vector<GridRow>& rows);

}  // namespace tutte

#endif
