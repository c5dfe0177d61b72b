// SPDX-License-Identifier: Apache-2.0
// Complex numbers over HPReal.  Elementary functions use principal branches;
// callers that need a different branch pass an explicit logarithm instead of
// relying on this header to pick one.

#ifndef SEIFERT_WRT_HPCOMPLEX_HPP
#define SEIFERT_WRT_HPCOMPLEX_HPP

#include <string>

#include "seifertwrt/hpreal.hpp"

namespace swrt {

struct HPComplex {
  HPReal re, im;

  explicit HPComplex(mpfr_prec_t prec = kDefaultPrecision) : re(prec), im(prec) {}
  HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}
  HPComplex(long r, mpfr_prec_t prec) : re(r, prec), im(prec) {}
  HPComplex(int r, mpfr_prec_t prec) : re(static_cast<long>(r), prec), im(prec) {}
  HPComplex(const Rational& r, mpfr_prec_t prec) : re(r, prec), im(prec) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  HPComplex& operator+=(const HPComplex& o) { re += o.re; im += o.im; return *this; }
  HPComplex& operator-=(const HPComplex& o) { re -= o.re; im -= o.im; return *this; }
  HPComplex& operator*=(const HPComplex& o);
  HPComplex& operator/=(const HPComplex& o);
  HPComplex& operator*=(const HPReal& s) { re *= s; im *= s; return *this; }

  friend HPComplex operator+(HPComplex a, const HPComplex& b) { return a += b; }
  friend HPComplex operator-(HPComplex a, const HPComplex& b) { return a -= b; }
  friend HPComplex operator*(HPComplex a, const HPComplex& b) { return a *= b; }
  friend HPComplex operator/(HPComplex a, const HPComplex& b) { return a /= b; }
  friend HPComplex operator*(HPComplex a, const HPReal& s) { return a *= s; }
  friend HPComplex operator*(const HPReal& s, HPComplex a) { return a *= s; }
  friend HPComplex operator-(const HPComplex& a) { return HPComplex(-a.re, -a.im); }

  std::string str(int digits = 40) const;
};

HPComplex i_unit(mpfr_prec_t prec);
HPReal abs(const HPComplex& z);
HPComplex conj(const HPComplex& z);
HPComplex exp(const HPComplex& z);
HPComplex log(const HPComplex& z);   // principal branch, z != 0
HPComplex sqrt(const HPComplex& z);  // principal branch
HPComplex sin(const HPComplex& z);
HPComplex sinh(const HPComplex& z);
HPComplex pow_si(const HPComplex& z, long e);

// exp(i*pi*t) for rational t, reduced exactly mod 2 before evaluation.
HPComplex exp_i_pi(const Rational& t, mpfr_prec_t prec);

// sin(pi*t) with the same exact reduction.
HPReal sin_pi(const Rational& t, mpfr_prec_t prec);

// 2*sinh(a*z) evaluated as e^(az) - e^(-az).
HPComplex two_sinh(const HPComplex& az);

}  // namespace swrt

#endif
