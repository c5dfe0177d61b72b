// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/hpreal.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace swrt {

HPReal HPReal::parse(const std::string& text, mpfr_prec_t prec) {
  HPReal r(prec);
  if (text.empty() || mpfr_set_str(r.x_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("HPReal: cannot parse '" + text + "'");
  return r;
}

std::string HPReal::str(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, x_);
  return std::string(buf.data());
}

namespace {
using Fn1 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
HPReal apply1(Fn1 fn, const HPReal& a) {
  HPReal r(a.prec());
  fn(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

HPReal abs(const HPReal& a) { return apply1(mpfr_abs, a); }
HPReal sqrt(const HPReal& a) {
  if (a.sign() < 0) throw std::invalid_argument("sqrt: negative argument");
  return apply1(mpfr_sqrt, a);
}
HPReal exp(const HPReal& a) { return apply1(mpfr_exp, a); }
HPReal log(const HPReal& a) {
  if (a.sign() <= 0) throw std::invalid_argument("log: non-positive argument");
  return apply1(mpfr_log, a);
}
HPReal sin(const HPReal& a) { return apply1(mpfr_sin, a); }
HPReal cos(const HPReal& a) { return apply1(mpfr_cos, a); }
HPReal sinh(const HPReal& a) { return apply1(mpfr_sinh, a); }
HPReal cosh(const HPReal& a) { return apply1(mpfr_cosh, a); }
HPReal gamma(const HPReal& a) { return apply1(mpfr_gamma, a); }

HPReal atan2(const HPReal& y, const HPReal& x) {
  HPReal r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPReal hypot(const HPReal& x, const HPReal& y) {
  HPReal r(std::max(y.prec(), x.prec()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

HPReal pow_si(const HPReal& a, long e) {
  HPReal r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

HPReal min(const HPReal& a, const HPReal& b) { return a <= b ? a : b; }
HPReal max(const HPReal& a, const HPReal& b) { return a >= b ? a : b; }

HPReal add_up(const HPReal& a, const HPReal& b) {
  HPReal r(std::max(a.prec(), b.prec()));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}
HPReal mul_up(const HPReal& a, const HPReal& b) {
  HPReal r(std::max(a.prec(), b.prec()));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}
HPReal div_up(const HPReal& a, const HPReal& b) {
  HPReal r(std::max(a.prec(), b.prec()));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}
HPReal exp_up(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDU);
  return r;
}
HPReal sub_down(const HPReal& a, const HPReal& b) {
  HPReal r(std::max(a.prec(), b.prec()));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDD);
  return r;
}

}  // namespace swrt
