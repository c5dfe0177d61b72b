// SPDX-License-Identifier: Apache-2.0
// Contour integration of analytic integrands: double-exponential (tanh-sinh)
// nodes on finite segments, plus rays truncated where a caller-supplied
// Gaussian decay certificate bounds the discarded tail below tolerance.

#ifndef SEIFERT_WRT_CONTOUR_HPP
#define SEIFERT_WRT_CONTOUR_HPP

#include <functional>
#include <vector>

#include "seifertwrt/hpcomplex.hpp"

namespace swrt {

// Certified bound |f(anchor + s*dir)| <= amplitude * exp(-rate*s^2 + linear*s)
// valid for s >= s_min, with rate > 0.
struct DecayCertificate {
  HPReal amplitude;
  HPReal rate;
  HPReal linear;
  double s_min = 0.0;
};

struct Segment {
  HPComplex a, b;
};

// Half-line anchor + s*dir, s >= 0, with |dir| = 1.  Oriented from the anchor
// outward unless inward is set, in which case it runs from infinity toward
// the anchor (used for the incoming half of a full line).
struct Ray {
  HPComplex anchor;
  HPComplex dir;
  DecayCertificate decay;
  bool inward = false;
};

struct Contour {
  std::vector<Segment> segments;
  std::vector<Ray> rays;

  // Full line through anchor, oriented from anchor - infinity*dir to
  // anchor + infinity*dir: an inward ray along -dir plus an outward ray
  // along +dir, so the two halves add with the line's orientation.
  static Contour line(const HPComplex& anchor, const HPComplex& dir,
                      const DecayCertificate& decay);
};

struct QuadratureOptions {
  int start_level = 5;       // first tanh-sinh refinement level (h = 2^-level)
  int max_level = 12;        // node budget: throws when exceeded
  double max_segment_length = 6.5;  // long segments are subdivided
};

struct QuadratureResult {
  HPComplex value;
  HPReal err_bound;  // ray truncation bounds plus refinement differences
  long evals = 0;
};

using Integrand = std::function<HPComplex(const HPComplex&)>;

// Integrates f over the contour to absolute tolerance tol (> 0) at the given
// working precision.  Throws when a segment fails to converge within the node
// budget or a ray certificate cannot reach the tolerance.
QuadratureResult contour_integrate(const Integrand& f, const Contour& contour,
                                   const HPReal& tol, mpfr_prec_t prec,
                                   const QuadratureOptions& opts = {});

}  // namespace swrt

#endif
