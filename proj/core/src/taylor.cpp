// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/taylor.hpp"

#include <stdexcept>

namespace swrt {

TaylorSeries ts_constant(const HPComplex& v, int order) {
  TaylorSeries s;
  s.c.assign(static_cast<size_t>(order) + 1, HPComplex(v.prec()));
  s.c[0] = v;
  return s;
}

TaylorSeries ts_add(const TaylorSeries& a, const TaylorSeries& b) {
  const TaylorSeries& lo = a.c.size() <= b.c.size() ? a : b;
  TaylorSeries r = a.c.size() <= b.c.size() ? b : a;
  for (size_t j = 0; j < lo.c.size(); ++j) r.c[j] += lo.c[j];
  return r;
}

TaylorSeries ts_mul(const TaylorSeries& a, const TaylorSeries& b, int order) {
  mpfr_prec_t p = kDefaultPrecision;
  if (!a.c.empty()) p = std::max(p, a.c[0].prec());
  if (!b.c.empty()) p = std::max(p, b.c[0].prec());
  TaylorSeries r;
  r.c.assign(static_cast<size_t>(order) + 1, HPComplex(p));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i > static_cast<size_t>(order)) break;
    for (size_t j = 0; j + i <= static_cast<size_t>(order) && j < b.c.size(); ++j)
      r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

TaylorSeries ts_scale(const TaylorSeries& a, const HPComplex& s) {
  TaylorSeries r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

TaylorSeries ts_invert(const TaylorSeries& a, int order) {
  if (a.c.empty() || a.c[0].is_zero())
    throw std::invalid_argument("ts_invert: series is not a unit");
  mpfr_prec_t p = a.c[0].prec();
  HPComplex one(1L, p);
  TaylorSeries r;
  r.c.assign(static_cast<size_t>(order) + 1, HPComplex(p));
  r.c[0] = one / a.c[0];
  for (int k = 1; k <= order; ++k) {
    HPComplex acc(p);
    for (int j = 1; j <= k && j < static_cast<int>(a.c.size()); ++j)
      acc += a.c[static_cast<size_t>(j)] * r.c[static_cast<size_t>(k - j)];
    r.c[static_cast<size_t>(k)] = -acc / a.c[0];
  }
  return r;
}

TaylorSeries ts_compose(const TaylorSeries& f, const TaylorSeries& g, int order) {
  if (!g.c.empty() && !g.c[0].is_zero())
    throw std::invalid_argument("ts_compose: inner series must vanish at 0");
  mpfr_prec_t p = f.c.empty() ? kDefaultPrecision : f.c[0].prec();
  // Horner over the outer coefficients.
  TaylorSeries r = ts_constant(HPComplex(p), order);
  for (size_t k = f.c.size(); k-- > 0;) {
    r = ts_mul(r, g, order);
    r.c[0] += f.c[k];
  }
  return r;
}

TaylorSeries ts_revert(const TaylorSeries& v, int order) {
  if (v.c.size() < 2 || !v.c[0].is_zero() || v.c[1].is_zero())
    throw std::invalid_argument("ts_revert: need v(0) = 0 and v'(0) != 0");
  mpfr_prec_t p = v.c[1].prec();
  // Newton-style order doubling is unnecessary at these sizes; solve the
  // triangular system coefficient by coefficient instead.
  TaylorSeries u;
  u.c.assign(static_cast<size_t>(order) + 1, HPComplex(p));
  if (order >= 1) u.c[1] = HPComplex(1L, p) / v.c[1];
  // With u known below order k, the order-k coefficient of v(u(t)) - t is
  // linear in u_k with slope v'(0); zero it out order by order.
  for (int k = 2; k <= order; ++k) {
    TaylorSeries comp = ts_compose(v, u, k);
    u.c[static_cast<size_t>(k)] = -comp.c[static_cast<size_t>(k)] / v.c[1];
  }
  return u;
}

TaylorSeries ts_exp_linear(const HPComplex& lambda, const HPComplex& y0, int order,
                           mpfr_prec_t prec) {
  TaylorSeries s;
  s.c.reserve(static_cast<size_t>(order) + 1);
  HPComplex term = exp(lambda * y0);
  s.c.push_back(term);
  for (int j = 1; j <= order; ++j) {
    term = term * lambda;
    term = term * (HPComplex(1L, prec) / HPComplex(Rational(j), prec));
    s.c.push_back(term);
  }
  return s;
}

TaylorSeries ts_two_sinh(const HPComplex& alpha, const HPComplex& y0, int order,
                         mpfr_prec_t prec) {
  // 2 sinh(a(y0+u)) = 2 sinh(a y0) cosh(a u) + 2 cosh(a y0) sinh(a u).
  HPComplex e = exp(alpha * y0);
  HPComplex einv = HPComplex(1L, prec) / e;
  HPComplex two_sh = e - einv, two_ch = e + einv;
  TaylorSeries s;
  s.c.reserve(static_cast<size_t>(order) + 1);
  HPComplex apow(1L, prec);  // alpha^j / j!
  for (int j = 0; j <= order; ++j) {
    if (j > 0) apow = apow * alpha * (HPComplex(1L, prec) / HPComplex(Rational(j), prec));
    s.c.push_back((j % 2 == 0 ? two_sh : two_ch) * apow);
  }
  return s;
}

TaylorSeries ts_exp_quadratic(const HPComplex& gamma, const HPComplex& y0, int order,
                              mpfr_prec_t prec) {
  // exp(g(y0+u)^2) = exp(g y0^2) * exp(2 g y0 u) * exp(g u^2).
  TaylorSeries lin = ts_exp_linear(gamma * y0 * HPComplex(2L, prec) ,
                                   HPComplex(prec), order, prec);
  // exp at argument 0 gives coefficients (2 g y0)^j / j!; scale by exp(g y0^2).
  lin = ts_scale(lin, exp(gamma * y0 * y0));
  TaylorSeries quad;
  quad.c.assign(static_cast<size_t>(order) + 1, HPComplex(prec));
  HPComplex term(1L, prec);
  for (int j = 0; 2 * j <= order; ++j) {
    if (j > 0) term = term * gamma * (HPComplex(1L, prec) / HPComplex(Rational(j), prec));
    quad.c[static_cast<size_t>(2 * j)] = term;
  }
  return ts_mul(lin, quad, order);
}

RationalSeries rs_mul(const RationalSeries& a, const RationalSeries& b, long order) {
  RationalSeries r;
  r.shift = a.shift + b.shift;
  r.c.assign(static_cast<size_t>(order) + 1, Rational(0));
  for (size_t i = 0; i < a.c.size() && i <= static_cast<size_t>(order); ++i)
    for (size_t j = 0; j + i <= static_cast<size_t>(order) && j < b.c.size(); ++j)
      r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

RationalSeries rs_div(const RationalSeries& a, const RationalSeries& b, long order) {
  if (b.c.empty() || b.c[0].is_zero())
    throw std::invalid_argument("rs_div: divisor has zero leading coefficient");
  RationalSeries r;
  r.shift = a.shift - b.shift;
  r.c.assign(static_cast<size_t>(order) + 1, Rational(0));
  for (long k = 0; k <= order; ++k) {
    Rational acc = static_cast<size_t>(k) < a.c.size() ? a.c[static_cast<size_t>(k)] : Rational(0);
    for (long j = 1; j <= k && static_cast<size_t>(j) < b.c.size(); ++j)
      acc -= b.c[static_cast<size_t>(j)] * r.c[static_cast<size_t>(k - j)];
    r.c[static_cast<size_t>(k)] = acc / b.c[0];
  }
  return r;
}

RationalSeries rs_two_sinh(const Rational& r, long order) {
  RationalSeries s;
  s.shift = 0;
  s.c.assign(static_cast<size_t>(order) + 1, Rational(0));
  Rational term = r * Rational(2);  // 2 r^(2k+1) / (2k+1)!
  for (long k = 1; k <= order; k += 2) {
    s.c[static_cast<size_t>(k)] = term;
    if (k + 2 <= order) term = term * r * r / Rational((k + 1) * (k + 2));
  }
  return s;
}

RationalSeries rs_normalize(RationalSeries s) {
  size_t lead = 0;
  while (lead < s.c.size() && s.c[lead].is_zero()) ++lead;
  if (lead == s.c.size()) throw std::invalid_argument("rs_normalize: zero series");
  s.shift += static_cast<long>(lead);
  s.c.erase(s.c.begin(), s.c.begin() + static_cast<long>(lead));
  return s;
}

HPComplex ts_eval(const TaylorSeries& f, const HPComplex& u) {
  const mpfr_prec_t prec = std::max(u.prec(), f.c.empty() ? u.prec() : f.c[0].prec());
  HPComplex acc(prec);
  for (size_t k = f.c.size(); k-- > 0;) acc = acc * u + f.c[k];
  return acc;
}

}  // namespace swrt
