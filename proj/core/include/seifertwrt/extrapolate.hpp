// SPDX-License-Identifier: Apache-2.0
// Polynomial extrapolation of sampled values to t = 0 (Neville tableau).
// Used to read off limits of the form lim_{t->0+} f(t) from samples at a
// geometrically shrinking sequence of t values.

#ifndef SEIFERT_WRT_EXTRAPOLATE_HPP
#define SEIFERT_WRT_EXTRAPOLATE_HPP

#include <vector>

#include "seifertwrt/hpcomplex.hpp"

namespace swrt {

struct Extrapolation {
  HPComplex value;  // deepest extrapolant over the last degree+1 samples
  HPReal spread;    // distance between the two deepest available extrapolants
};

// Extrapolates (t_j, v_j) to t = 0 with a polynomial of the given degree.
// Requires strictly decreasing positive t and at least degree+1 samples; the
// spread compares the deepest extrapolant against the next best one and is a
// heuristic error scale, not a certified bound.
Extrapolation extrapolate_to_zero(const std::vector<HPReal>& t,
                                  const std::vector<HPComplex>& v, int degree);

}  // namespace swrt

#endif
