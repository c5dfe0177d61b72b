// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/contour.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seifertwrt/parallel.hpp"

namespace swrt {

namespace {

// tanh-sinh nodes at t = j * 2^-level, j = 0..J.  cx[j] = 1 - x(t_j) is the
// complement of the abscissa, kept separate so nodes near a segment endpoint
// retain full relative accuracy; w[j] is the weight dt-density.
struct NodeTable {
  HPReal h;
  std::vector<HPReal> cx;
  std::vector<HPReal> w;
};

std::map<std::pair<long, int>, NodeTable> g_node_tables;
std::mutex g_node_mutex;

// Truncation point of the t-axis: weights beyond it are below 2^-(prec+32).
double t_cutoff(mpfr_prec_t prec) {
  const double u = (static_cast<double>(prec) + 40.0) * 0.6931471805599453 / 3.141592653589793;
  return std::asinh(u) + 0.5;
}

const NodeTable& node_table(mpfr_prec_t prec, int level) {
  std::lock_guard<std::mutex> lock(g_node_mutex);
  auto key = std::make_pair(static_cast<long>(prec), level);
  auto it = g_node_tables.find(key);
  if (it != g_node_tables.end()) return it->second;

  NodeTable tbl;
  tbl.h = HPReal::pow2(-level, prec);
  const long count = static_cast<long>(std::ceil(t_cutoff(prec) * std::ldexp(1.0, level))) + 1;
  tbl.cx.reserve(count);
  tbl.w.reserve(count);
  const HPReal half_pi = HPReal::pi(prec) / HPReal(2, prec);
  for (long j = 0; j < count; ++j) {
    const HPReal t = HPReal(j, prec) * tbl.h;
    const HPReal sh = sinh(t);
    const HPReal u = half_pi * sh;
    // 1 - tanh(u) = 2 e^{-2u} / (1 + e^{-2u}), stable for large u.
    const HPReal e = exp(HPReal(-2, prec) * u);
    tbl.cx.push_back(HPReal(2, prec) * e / (HPReal(1, prec) + e));
    const HPReal cu = cosh(u);
    tbl.w.push_back(half_pi * cosh(t) / (cu * cu));
  }
  return g_node_tables.emplace(key, std::move(tbl)).first->second;
}

// Sum of w_j * (f(b - half*cx_j) + f(a + half*cx_j)) over j = start, start+step, ...
HPComplex node_sum(const Integrand& f, const HPComplex& a, const HPComplex& b,
                   const HPComplex& half, const NodeTable& tbl, long start,
                   long step, mpfr_prec_t prec, long& evals) {
  std::vector<long> js;
  for (long j = start; j < static_cast<long>(tbl.cx.size()); j += step) js.push_back(j);
  if (js.empty()) return HPComplex(prec);

  const long chunk = 8;
  const long n_chunks = (static_cast<long>(js.size()) + chunk - 1) / chunk;
  std::vector<HPComplex> slot(n_chunks, HPComplex(prec));
  run_chunked(static_cast<long>(js.size()), chunk,
              [&](long chunk_idx, long lo, long hi) {
                HPComplex acc = HPComplex(prec);
                for (long i = lo; i < hi; ++i) {
                  const long j = js[i];
                  const HPComplex zp = b - half * tbl.cx[j];
                  const HPComplex zm = a + half * tbl.cx[j];
                  acc = acc + (f(zp) + f(zm)) * tbl.w[j];
                }
                slot[chunk_idx] = acc;
              });
  HPComplex total = HPComplex(prec);
  for (const auto& s : slot) total = total + s;
  evals += 2 * static_cast<long>(js.size());
  return total;
}

// Integrates one segment by tanh-sinh refinement; adds the final refinement
// difference to err and the evaluation count to evals.
HPComplex integrate_segment(const Integrand& f, const Segment& seg,
                            const HPReal& seg_tol, mpfr_prec_t prec,
                            const QuadratureOptions& opts, HPReal& err,
                            long& evals) {
  const HPComplex two(HPReal(2, prec), HPReal(0, prec));
  const HPComplex mid = (seg.a + seg.b) / two;
  const HPComplex half = (seg.b - seg.a) / two;

  const NodeTable& tbl0 = node_table(prec, opts.start_level);
  HPComplex sum = f(mid) * tbl0.w[0];
  ++evals;
  sum = sum + node_sum(f, seg.a, seg.b, half, tbl0, 1, 1, prec, evals);
  HPComplex prev = half * sum * tbl0.h;

  for (int level = opts.start_level + 1; level <= opts.max_level; ++level) {
    const NodeTable& tbl = node_table(prec, level);
    sum = sum + node_sum(f, seg.a, seg.b, half, tbl, 1, 2, prec, evals);
    const HPComplex cur = half * sum * tbl.h;
    const HPReal diff = abs(cur - prev);
    if (diff <= seg_tol) {
      err = err + diff;
      return cur;
    }
    prev = cur;
  }
  throw std::runtime_error("contour quadrature: node budget exceeded before convergence");
}

// Splits a segment into pieces no longer than opts.max_segment_length.
void push_subdivided(std::vector<Segment>& out, const Segment& seg, double max_len,
                     mpfr_prec_t prec) {
  const double len = abs(seg.b - seg.a).to_double();
  const long pieces = std::max(1L, static_cast<long>(std::ceil(len / max_len)));
  const HPComplex delta = (seg.b - seg.a) / HPComplex(HPReal(pieces, prec), HPReal(0, prec));
  HPComplex left = seg.a;
  for (long i = 1; i <= pieces; ++i) {
    const HPComplex right = (i == pieces) ? seg.b : seg.a + delta * HPReal(i, prec);
    out.push_back(Segment{left, right});
    left = right;
  }
}

// Smallest doubling point S >= max(s_min, 1) where the certificate tail bound
// A e^{-g S^2 + b S} / (2 g S - b) drops below ray_tol.
HPReal truncation_point(const DecayCertificate& cert, const HPReal& ray_tol,
                        mpfr_prec_t prec, HPReal& tail_bound) {
  if (!(cert.rate > HPReal(0, prec))) {
    throw std::invalid_argument("ray decay certificate requires a positive Gaussian rate");
  }
  HPReal s = max(HPReal(cert.s_min, prec), HPReal(1, prec));
  const HPReal two(2, prec);
  for (int iter = 0; iter < 64; ++iter) {
    const HPReal slope = two * cert.rate * s - cert.linear;
    if (slope > HPReal(0, prec)) {
      const HPReal bound = cert.amplitude * exp(cert.linear * s - cert.rate * s * s) / slope;
      if (bound <= ray_tol) {
        tail_bound = bound;
        return s;
      }
    }
    s = s * two;
  }
  throw std::runtime_error("contour quadrature: ray certificate cannot reach tolerance");
}

}  // namespace

Contour Contour::line(const HPComplex& anchor, const HPComplex& dir,
                      const DecayCertificate& decay) {
  Contour c;
  c.rays.push_back(Ray{anchor, dir, decay, false});
  c.rays.push_back(Ray{anchor, -dir, decay, true});
  return c;
}

QuadratureResult contour_integrate(const Integrand& f, const Contour& contour,
                                   const HPReal& tol, mpfr_prec_t prec,
                                   const QuadratureOptions& opts) {
  if (!(tol > HPReal(0, prec))) {
    throw std::invalid_argument("contour quadrature tolerance must be positive");
  }

  QuadratureResult result;
  result.value = HPComplex(prec);
  result.err_bound = HPReal(0, prec);

  // Rays receive a quarter of the tolerance budget as truncation error; the
  // truncated pieces join the segment list for the remaining budget.
  std::vector<Segment> segments;
  for (const auto& seg : contour.segments) {
    push_subdivided(segments, seg, opts.max_segment_length, prec);
  }
  if (!contour.rays.empty()) {
    const HPReal ray_tol = tol / HPReal(4 * static_cast<long>(contour.rays.size()), prec);
    for (const auto& ray : contour.rays) {
      const HPComplex dir = ray.dir / HPComplex(abs(ray.dir), HPReal(0, prec));
      HPReal tail(0, prec);
      const HPReal s_end = truncation_point(ray.decay, ray_tol, prec, tail);
      result.err_bound = result.err_bound + tail;
      const HPComplex far = ray.anchor + dir * s_end;
      push_subdivided(segments,
                      ray.inward ? Segment{far, ray.anchor}
                                 : Segment{ray.anchor, far},
                      opts.max_segment_length, prec);
    }
  }
  if (segments.empty()) return result;

  const HPReal seg_tol =
      (contour.rays.empty() ? tol : tol * HPReal(3, prec) / HPReal(4, prec)) /
      HPReal(static_cast<long>(segments.size()), prec);
  for (const auto& seg : segments) {
    result.value = result.value +
                   integrate_segment(f, seg, seg_tol, prec, opts,
                                     result.err_bound, result.evals);
  }
  return result;
}

}  // namespace swrt
