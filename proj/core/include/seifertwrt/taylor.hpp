// SPDX-License-Identifier: Apache-2.0
// Dense truncated power series: complex coefficients for local expansions
// around a point, and exact rational coefficients for series identities.

#ifndef SEIFERT_WRT_TAYLOR_HPP
#define SEIFERT_WRT_TAYLOR_HPP

#include <vector>

#include "seifertwrt/hpcomplex.hpp"
#include "seifertwrt/rational.hpp"

namespace swrt {

// Expansion sum c[j] * u^j, truncated beyond c.size() - 1.
struct TaylorSeries {
  std::vector<HPComplex> c;

  int order() const { return static_cast<int>(c.size()) - 1; }
};

TaylorSeries ts_constant(const HPComplex& v, int order);
TaylorSeries ts_add(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries ts_mul(const TaylorSeries& a, const TaylorSeries& b, int order);
TaylorSeries ts_scale(const TaylorSeries& a, const HPComplex& s);
// Reciprocal of a unit series (c[0] != 0), truncated at order.
TaylorSeries ts_invert(const TaylorSeries& a, int order);
// Substitutes g (with g(0) = 0) into f, truncated at order.
TaylorSeries ts_compose(const TaylorSeries& f, const TaylorSeries& g, int order);
// Functional inverse of v(u) = v1*u + v2*u^2 + ... with v1 != 0: u(v) to order.
TaylorSeries ts_revert(const TaylorSeries& v, int order);

// exp(lambda * (y0 + u)) expanded in u.
TaylorSeries ts_exp_linear(const HPComplex& lambda, const HPComplex& y0, int order,
                           mpfr_prec_t prec);
// 2*sinh(alpha * (y0 + u)) expanded in u.
TaylorSeries ts_two_sinh(const HPComplex& alpha, const HPComplex& y0, int order,
                         mpfr_prec_t prec);
// exp(gamma * (y0 + u)^2) expanded in u.
TaylorSeries ts_exp_quadratic(const HPComplex& gamma, const HPComplex& y0, int order,
                              mpfr_prec_t prec);

// Horner evaluation of the truncated series at u.
HPComplex ts_eval(const TaylorSeries& f, const HPComplex& u);

// Exact power series with rational coefficients, offset by a power of y:
// value = y^shift * sum c[j] y^j.  Used for identities that must hold on the
// nose, e.g. even/odd structure and exact leading terms.
struct RationalSeries {
  long shift = 0;
  std::vector<Rational> c;
};

RationalSeries rs_mul(const RationalSeries& a, const RationalSeries& b, long order);
// Division a/b where b has nonzero leading coefficient; order counts powers
// beyond the resulting shift.
RationalSeries rs_div(const RationalSeries& a, const RationalSeries& b, long order);
// 2*sinh(r*y) = sum_{k} 2 r^(2k+1) y^(2k+1) / (2k+1)!, truncated at order.
RationalSeries rs_two_sinh(const Rational& r, long order);
// Moves exact leading zero coefficients into the shift (c[0] != 0 after).
RationalSeries rs_normalize(RationalSeries s);

}  // namespace swrt

#endif
