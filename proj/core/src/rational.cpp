// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace swrt {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const BigInt& n, const BigInt& d) : v_(n, d) {
  if (sgn(d) == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(unsigned long e) const {
  Rational r(1);
  mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return r;  // powers of a canonical fraction stay canonical
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::parse(const std::string& text) {
  Rational r;
  if (text.empty() || r.v_.set_str(text, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  if (sgn(r.v_.get_den()) == 0) throw std::invalid_argument("Rational: zero denominator");
  r.v_.canonicalize();
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt mod_nonneg(const BigInt& n, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::invalid_argument("mod_inverse: arguments are not coprime");
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace swrt
