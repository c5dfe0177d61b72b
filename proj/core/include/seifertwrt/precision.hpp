// SPDX-License-Identifier: Apache-2.0
// Precision policy shared by the whole library.

#ifndef SEIFERT_WRT_PRECISION_HPP
#define SEIFERT_WRT_PRECISION_HPP

#include <mpfr.h>

namespace swrt {

// Default working precision in bits for all floating computation.
inline constexpr mpfr_prec_t kDefaultPrecision = 256;

// Default verification tolerance scales as 2^(-prec/4): half the working
// digits are reserved for accumulated roundoff, half of the remainder for
// headroom in the reported residuals.
inline constexpr long tolerance_exponent(mpfr_prec_t prec) { return -static_cast<long>(prec) / 4; }

// Numeric vanishing threshold for quantities that are exactly zero in the
// underlying algebra: 2^(-prec/2), to be scaled by term count and magnitude
// at the call site.
inline constexpr long vanishing_exponent(mpfr_prec_t prec) { return -static_cast<long>(prec) / 2; }

}  // namespace swrt

#endif
