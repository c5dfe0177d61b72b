// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/laurent.hpp"

#include <stdexcept>

#include "seifertwrt/precision.hpp"

namespace swrt {

HPComplex LaurentPart::residue() const {
  if (order == 0) return HPComplex(location.prec());
  return c.back();
}

LaurentPart laurent_principal(const SeriesFactory& num, const SeriesFactory& den,
                              const HPComplex& y0, int max_order) {
  if (max_order < 1) throw std::invalid_argument("laurent_principal: max_order must be >= 1");
  TaylorSeries d = den(2 * max_order + 1);
  mpfr_prec_t p = d.c.empty() ? y0.prec() : d.c[0].prec();

  HPReal scale(p);
  for (const auto& v : d.c) scale = max(scale, abs(v));
  if (scale.is_zero())
    throw std::invalid_argument("laurent_principal: denominator vanishes to expansion order");
  HPReal thresh = scale * HPReal::pow2(vanishing_exponent(p), p);

  int v = 0;
  while (v < static_cast<int>(d.c.size()) && abs(d.c[static_cast<size_t>(v)]) <= thresh) ++v;
  if (v == static_cast<int>(d.c.size()))
    throw std::invalid_argument("laurent_principal: denominator vanishes to expansion order");
  if (v > max_order)
    throw std::invalid_argument("laurent_principal: pole order exceeds max_order");

  LaurentPart out;
  out.location = y0;
  if (v == 0) return out;  // regular point

  // num/den = u^(-v) * num * (den/u^v)^(-1); only orders < v matter.
  TaylorSeries dhat;
  dhat.c.assign(d.c.begin() + v, d.c.end());
  TaylorSeries inv = ts_invert(dhat, v - 1);
  TaylorSeries nn = num(v - 1);
  TaylorSeries b = ts_mul(nn, inv, v - 1);

  HPReal bscale(p);
  for (const auto& x : b.c) bscale = max(bscale, abs(x));
  HPReal bthresh = bscale * HPReal::pow2(vanishing_exponent(p), p);
  int lead = 0;
  while (lead < v && (bscale.is_zero() || abs(b.c[static_cast<size_t>(lead)]) <= bthresh)) ++lead;
  out.order = v - lead;
  out.c.assign(b.c.begin() + lead, b.c.begin() + v);
  return out;
}

}  // namespace swrt
