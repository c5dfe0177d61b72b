// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/hpcomplex.hpp"

#include <stdexcept>

namespace swrt {

HPComplex& HPComplex::operator*=(const HPComplex& o) {
  HPReal r = re * o.re - im * o.im;
  HPReal i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

HPComplex& HPComplex::operator/=(const HPComplex& o) {
  // MPFR exponents span a huge range, so the textbook formula is safe here.
  HPReal d = o.re * o.re + o.im * o.im;
  if (d.is_zero()) throw std::invalid_argument("HPComplex: division by zero");
  HPReal r = (re * o.re + im * o.im) / d;
  HPReal i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string HPComplex::str(int digits) const {
  return re.str(digits) + (im.sign() < 0 ? " - " : " + ") + abs(im).str(digits) + "i";
}

HPComplex i_unit(mpfr_prec_t prec) { return HPComplex(HPReal(prec), HPReal(1L, prec)); }

HPReal abs(const HPComplex& z) { return hypot(z.re, z.im); }

HPComplex conj(const HPComplex& z) { return HPComplex(z.re, -z.im); }

HPComplex exp(const HPComplex& z) {
  mpfr_prec_t p = z.prec();
  HPReal m = exp(z.re);
  HPReal c(p), s(p);
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return HPComplex(m * c, m * s);
}

HPComplex log(const HPComplex& z) {
  if (z.is_zero()) throw std::invalid_argument("log: zero argument");
  return HPComplex(log(abs(z)), atan2(z.im, z.re));
}

HPComplex sqrt(const HPComplex& z) {
  mpfr_prec_t p = z.prec();
  if (z.im.is_zero()) {
    if (z.re.sign() >= 0) return HPComplex(sqrt(z.re), HPReal(p));
    return HPComplex(HPReal(p), sqrt(-z.re));
  }
  // w = sqrt((|z|+re)/2), sqrt(z) = w + i*im/(2w); stable since im != 0.
  HPReal w = sqrt((abs(z) + z.re) * HPReal(Rational(1, 2), p));
  HPReal two(2L, p);
  return HPComplex(w, z.im / (two * w));
}

HPComplex sin(const HPComplex& z) {
  mpfr_prec_t p = z.prec();
  HPReal sr(p), cr(p), shi(p), chi(p);
  mpfr_sin_cos(sr.raw(), cr.raw(), z.re.raw(), MPFR_RNDN);
  mpfr_sinh_cosh(shi.raw(), chi.raw(), z.im.raw(), MPFR_RNDN);
  return HPComplex(sr * chi, cr * shi);
}

HPComplex sinh(const HPComplex& z) {
  mpfr_prec_t p = z.prec();
  HPReal shr(p), chr(p), si(p), ci(p);
  mpfr_sinh_cosh(shr.raw(), chr.raw(), z.re.raw(), MPFR_RNDN);
  mpfr_sin_cos(si.raw(), ci.raw(), z.im.raw(), MPFR_RNDN);
  return HPComplex(shr * ci, chr * si);
}

HPComplex pow_si(const HPComplex& z, long e) {
  if (e == 0) return HPComplex(1L, z.prec());
  HPComplex base = e > 0 ? z : HPComplex(1L, z.prec()) / z;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  HPComplex acc(1L, z.prec());
  while (n) {
    if (n & 1) acc *= base;
    if (n >>= 1) base *= base;
  }
  return acc;
}

HPComplex exp_i_pi(const Rational& t, mpfr_prec_t prec) {
  // Reduce t mod 2 exactly; the reduced argument lies in [0, 2).
  Rational red(mod_nonneg(t.num(), 2 * t.den()), t.den());
  HPReal arg = HPReal(red, prec) * HPReal::pi(prec);
  HPReal c(prec), s(prec);
  mpfr_sin_cos(s.raw(), c.raw(), arg.raw(), MPFR_RNDN);
  return HPComplex(std::move(c), std::move(s));
}

HPReal sin_pi(const Rational& t, mpfr_prec_t prec) {
  return exp_i_pi(t, prec).im;
}

HPComplex two_sinh(const HPComplex& az) {
  HPComplex e = exp(az);
  return e - HPComplex(1L, az.prec()) / e;
}

}  // namespace swrt
