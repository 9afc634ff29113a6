#include "tutte/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace tutte {

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::eval(const Rational& q) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const {
  std::vector<Rational> c(c_);
  for (auto& x : c) x *= s;
  return UniPoly(std::move(c));
}

std::string UniPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rational& a = c_[k];
    if (a.is_zero()) continue;
    if (first) {
      if (a.sign() < 0) os << "-";
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    Rational mag = a.abs();
    if (k == 0 || mag != Rational(1)) {
      os << mag.str();
      if (k > 0) os << "*";
    }
    if (k > 0) {
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::string UniPoly::coeff_list_str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].str();
  }
  os << "]";
  return os.str();
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                    long degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  if (static_cast<long>(points.size()) < degree_bound + 1)
    throw std::invalid_argument("insufficient nodes");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("degenerate nodes");

  // Newton divided differences on the first degree_bound+1 nodes.
  std::size_t n = static_cast<std::size_t>(degree_bound) + 1;
  std::vector<Rational> x(n), dd(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = points[i].first;
    dd[i] = points[i].second;
  }
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - level]);

  // Expand sum dd[k] * prod_{i<k}(q - x_i).
  UniPoly result;
  UniPoly basis = UniPoly::constant(Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    result = result + basis.scaled(dd[k]);
    basis = basis * UniPoly({-x[k], Rational(1)});
  }

  // Remaining nodes must lie on the curve, otherwise no polynomial of the
  // stated degree passes through the data.
  for (std::size_t i = n; i < points.size(); ++i)
    if (result.eval(points[i].first) != points[i].second)
      throw std::invalid_argument("nodes not on a degree-bounded polynomial");
  return result;
}

}  // namespace tutte
