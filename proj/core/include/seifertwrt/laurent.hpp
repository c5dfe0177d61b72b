// SPDX-License-Identifier: Apache-2.0
// Principal parts of ratios of analytic functions at a point.

#ifndef SEIFERT_WRT_LAURENT_HPP
#define SEIFERT_WRT_LAURENT_HPP

#include <functional>
#include <vector>

#include "seifertwrt/taylor.hpp"

namespace swrt {

// Principal part sum_{k=1..order} c[order-k] * u^(-k) of a function of
// u = y - y0; order 0 means the point is regular.  When order > 0 the leading
// coefficient c[0] (of u^(-order)) is nonzero.
struct LaurentPart {
  HPComplex location;  // expansion point y0
  int order = 0;
  std::vector<HPComplex> c;  // c[k] multiplies u^(k - order); size == order

  // Coefficient of u^(-1); zero when regular.
  HPComplex residue() const;
};

// Produces the expansion of the factor around the fixed point to the
// requested truncation order.
using SeriesFactory = std::function<TaylorSeries(int order)>;

// Principal part of num/den at y0.  num and den must expand around y0; den
// must not vanish identically to the probed order, and the pole order must
// not exceed max_order.  Coefficients below the relative vanishing threshold
// 2^(-prec/2) are treated as exact zeros of the underlying algebra.
LaurentPart laurent_principal(const SeriesFactory& num, const SeriesFactory& den,
                              const HPComplex& y0, int max_order);

}  // namespace swrt

#endif
