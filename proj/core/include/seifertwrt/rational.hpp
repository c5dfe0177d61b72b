// SPDX-License-Identifier: Apache-2.0
// Exact arithmetic: arbitrary-precision integers and always-reduced rationals.

#ifndef SEIFERT_WRT_RATIONAL_HPP
#define SEIFERT_WRT_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace swrt {

using BigInt = mpz_class;

// gmpxx has no long long constructor; lossless on LP64 targets.
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

// Reduced fraction with positive denominator.  gmpxx does not canonicalize
// on construction, so every mutating path below re-establishes the invariant.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(long n, long d);
  Rational(const BigInt& n, const BigInt& d);

  const BigInt num() const { return v_.get_num(); }
  const BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational pow(unsigned long e) const;

  // Canonical "n" or "n/d" form; parses the same shape back.
  std::string str() const;
  static Rational parse(const std::string& text);

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// floor(n/d) for exact integers, valid for negative numerators.
BigInt floor_div(const BigInt& n, const BigInt& d);

// Nonnegative residue of n mod m, m > 0.
BigInt mod_nonneg(const BigInt& n, const BigInt& m);

// Inverse of a mod m; requires gcd(a, m) = 1 (throws otherwise).
BigInt mod_inverse(const BigInt& a, const BigInt& m);

// Binomial coefficient C(n, k); zero for k < 0 or k > n.
BigInt binomial(long n, long k);

}  // namespace swrt

#endif
