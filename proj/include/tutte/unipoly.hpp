#ifndef TUTTE_UNIPOLY_HPP
#define TUTTE_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "tutte/rational.hpp"

namespace tutte {

/// Univariate polynomial in q with exact rational coefficients,
/// stored dense, ascending powers.  Empty coefficient list = zero polynomial.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  /// Coefficient of q^k (zero when k exceeds the degree).
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational eval(const Rational& q) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Rational& s) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Human-readable form, e.g. "q^2 - 3/2*q + 1".
  std::string str() const;
  /// Coefficient list lowest-degree-first, e.g. "[1, -3/2, 1]".
  std::string coeff_list_str() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Unique polynomial of degree <= degree_bound through the given nodes
/// (Newton's divided differences, exact arithmetic).
/// Throws "degenerate nodes" on duplicate abscissae and
/// "insufficient nodes" when fewer than degree_bound+1 points are given.
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                    long degree_bound);

}  // namespace tutte

#endif
