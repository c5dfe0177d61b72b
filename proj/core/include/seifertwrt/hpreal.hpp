// SPDX-License-Identifier: Apache-2.0
// Arbitrary-precision real numbers over MPFR with value semantics.
// Every value carries its own precision; binary operations round to the
// larger of the two operand precisions.

#ifndef SEIFERT_WRT_HPREAL_HPP
#define SEIFERT_WRT_HPREAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "seifertwrt/precision.hpp"
#include "seifertwrt/rational.hpp"

namespace swrt {

class HPReal {
 public:
  explicit HPReal(mpfr_prec_t prec = kDefaultPrecision) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  HPReal(long v, mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_si(x_, v, MPFR_RNDN); }
  HPReal(int v, mpfr_prec_t prec) : HPReal(static_cast<long>(v), prec) {}
  HPReal(double v, mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_d(x_, v, MPFR_RNDN); }
  HPReal(const Rational& v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_q(x_, v.raw().get_mpq_t(), MPFR_RNDN);
  }
  HPReal(const BigInt& v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_z(x_, v.get_mpz_t(), MPFR_RNDN);
  }

  HPReal(const HPReal& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
  HPReal(HPReal&& o) noexcept { mpfr_init2(x_, MPFR_PREC_MIN); mpfr_swap(x_, o.x_); }
  HPReal& operator=(const HPReal& o) {
    if (this != &o) { mpfr_set_prec(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    return *this;
  }
  HPReal& operator=(HPReal&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
  ~HPReal() { mpfr_clear(x_); }

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

  // Parses decimal text ("1e-20", "0.25", ...) at the given precision.
  static HPReal parse(const std::string& text, mpfr_prec_t prec);
  static HPReal pi(mpfr_prec_t prec) { HPReal r(prec); mpfr_const_pi(r.x_, MPFR_RNDN); return r; }
  // 2^e as an exact value; e may be negative.
  static HPReal pow2(long e, mpfr_prec_t prec) {
    HPReal r(1L, prec);
    mpfr_mul_2si(r.x_, r.x_, e, MPFR_RNDN);
    return r;
  }

  bool is_zero() const { return mpfr_zero_p(x_); }
  bool is_finite() const { return mpfr_number_p(x_); }
  int sign() const { return mpfr_sgn(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }

  // Fixed-notation scientific string with the given significant digits.
  std::string str(int digits = 40) const;

  HPReal& operator+=(const HPReal& o) { return apply2(mpfr_add, o); }
  HPReal& operator-=(const HPReal& o) { return apply2(mpfr_sub, o); }
  HPReal& operator*=(const HPReal& o) { return apply2(mpfr_mul, o); }
  HPReal& operator/=(const HPReal& o) { return apply2(mpfr_div, o); }

  friend HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
  friend HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
  friend HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
  friend HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
  friend HPReal operator-(const HPReal& a) {
    HPReal r(a.prec());
    mpfr_neg(r.x_, a.x_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
  friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
  friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
  friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
  friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
  friend bool operator!=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.x_, b.x_) != 0; }

 private:
  using Fn2 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  HPReal& apply2(Fn2 fn, const HPReal& o) {
    if (o.prec() > prec()) {
      HPReal t(o.prec());
      fn(t.x_, x_, o.x_, MPFR_RNDN);
      mpfr_swap(x_, t.x_);
    } else {
      fn(x_, x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  mpfr_t x_;
};

HPReal abs(const HPReal& a);
HPReal sqrt(const HPReal& a);   // requires a >= 0
HPReal exp(const HPReal& a);
HPReal log(const HPReal& a);    // requires a > 0
HPReal sin(const HPReal& a);
HPReal cos(const HPReal& a);
HPReal sinh(const HPReal& a);
HPReal cosh(const HPReal& a);
HPReal atan2(const HPReal& y, const HPReal& x);
HPReal hypot(const HPReal& x, const HPReal& y);
HPReal gamma(const HPReal& a);  // Euler Gamma, used at real half-integers
HPReal pow_si(const HPReal& a, long e);
HPReal min(const HPReal& a, const HPReal& b);
HPReal max(const HPReal& a, const HPReal& b);

// Directed-rounding helpers for certified bound computation.  All assume the
// indicated sign conditions hold so that rounding up yields an upper bound.
HPReal add_up(const HPReal& a, const HPReal& b);
HPReal mul_up(const HPReal& a, const HPReal& b);
HPReal div_up(const HPReal& a, const HPReal& b);
HPReal exp_up(const HPReal& a);
HPReal sub_down(const HPReal& a, const HPReal& b);

}  // namespace swrt

#endif
