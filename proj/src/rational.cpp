#include "tutte/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tutte {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (v.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
  v.canonicalize();
  return Rational(v);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("rational division by zero");
  v_ /= b.v_;
  return *this;
}

Rational Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Rational(mpq_class(f));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::invalid_argument("zero to a negative power");
    return Rational(0);
  }
  mpz_class num, den;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), k);
  mpq_class r = e < 0 ? mpq_class(den, num) : mpq_class(num, den);
  r.canonicalize();
  return Rational(r);
}

std::string Rational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

std::size_t Rational::hash() const {
  // FNV over the limbs of numerator and denominator
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](const mpz_class& z) {
    h ^= static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 2);
    h *= 1099511628211ull;
    std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
      h *= 1099511628211ull;
    }
  };
  mix(v_.get_num());
  mix(v_.get_den());
  return h;
}

}  // namespace tutte
