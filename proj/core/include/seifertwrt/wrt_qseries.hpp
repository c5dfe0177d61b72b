// SPDX-License-Identifier: Apache-2.0
// The colored WRT function Phi(q; N): exact term generation on the lattice
// (1/4P)Z, certified evaluation inside the unit disk, the theta-like
// exponential sums phi^(k) with their split into a root-of-unity part and a
// divisible part, and the radial-limit experiment against tau(K; N).

#ifndef SEIFERT_WRT_WRT_QSERIES_HPP
#define SEIFERT_WRT_WRT_QSERIES_HPP

#include <utility>

#include "seifertwrt/exact_sums.hpp"
#include "seifertwrt/qseries.hpp"
#include "seifertwrt/report.hpp"
#include "seifertwrt/seifert.hpp"

namespace swrt {

// Phi(q; N) truncated at a lattice-exponent cutoff.  The quadruple sum runs
// over half-integer l with |2l| <= N-1, sign vectors eps, and m >= 0, with
// the prefactor 1/(2(q^{1/2}-q^{-1/2})) expanded as the geometric series
// -(1/2) q^{1/2} sum_{k>=0} q^k; every exponent lands on (1/4P)Z exactly.
struct PhiSeries {
  SeifertLoop loop;
  long N;
  QSeries series;  // lattice_den = 4P, tail certificate attached
};

// Enumerates all terms with lattice exponent <= cutoff (units of 1/4P).
// Requires N >= 1 and cutoff >= 0; throws logic_error if any exponent
// falls off the lattice.
PhiSeries phi_series(const SeifertLoop& loop, long N, long long cutoff);

// Shared truncation of D(M) sum_{l in ells} R(l), the structural shape of
// both Phi (all half-integer l with |2l| <= N-1, M = N) and the
// inhomogeneous term of the color recursion (l = +-(N+1)/2, M = N+2).
// Here D(M) = (-1)^n q^{-c(M)/4} / (2(q^{1/2}-q^{-1/2})) and R(l) sums
// eps_1...eps_n C(m+n-3, n-3) q^{(2Pm+a_{l,eps})^2/(4P)}.
QSeries dr_series(const SeifertLoop& loop, long prefactor_color,
                  const std::vector<Rational>& ells, long long cutoff);

// Evaluates phi_series at q = e^{log_q} with the structural tail bound.
// Requires Re(log_q) < 0 (strictly inside the unit disk).
QSeriesEval phi_eval(const SeifertLoop& loop, long N, const HPComplex& log_q,
                     long long cutoff);

// phi^(k)(t) = (-1)^n sum_{l,eps} eps_1...eps_n sum_{m>=0} C(m+n-3, n-3)
//   e^{pi i (2Pm+a)^2 / (2KP)} e^{-(2Pm+a)^k t},   Re t > 0, k in {1, 2},
// truncated once the certified geometric tail falls below the working
// precision floor; the bound on the omitted mass is returned.
struct PhiKResult {
  HPComplex value;
  HPReal tail_bound;
};
PhiKResult phi_k(const SeifertLoop& loop, long N, long K, const HPComplex& t,
                 int k);

// Phi(q; N) at q = e^{2 pi i/K} e^{-t}, t > 0, through the bridge
//   2 (q^{1/2} - q^{-1/2}) q^{c(N)/4} Phi(q; N) = phi^(2)(t/(4P)),
// which needs only O(sqrt(P prec / t)) terms near the unit circle where the
// stored series converges too slowly to evaluate directly.
HPComplex phi_eval_direct(const SeifertLoop& loop, long N, long K,
                          const HPReal& t);

// Splits phi^(1)(t) by residue class: phi_A keeps the k in [0, 2KP) not
// divisible by K (finite sum with geometric denominators), phi_B collapses
// the divisible classes to a sum over m mod 2P; both carry the 1/G(KP)
// normalization, so phi_A + phi_B = phi^(1).  Real t > 0 only; the
// geometric denominators are then bounded away from zero.
std::pair<HPComplex, HPComplex> phi_AB(const SeifertLoop& loop, long N,
                                       long K, const HPReal& t);

// Samples Phi at q = e^{2 pi i/K} e^{-t_j}, t_j = t0 2^{-j}, j < levels,
// extrapolates to t = 0 with the given polynomial degree, and compares the
// limit against tau(K; N).  Requires K >= 2, t0 > 0, levels >= degree + 1.
// The t-expansion at the root of unity is divergent (coefficient growth
// ~ m! (c P K)^m), so every sample must sit inside the asymptotic regime
// t << 1/(P K) for the extrapolant to stabilize; hence the small default t0.
VerificationReport radial_limit(const SeifertLoop& loop, long N, long K,
                                const Rational& t0 = Rational(1, 1024),
                                int levels = 8, int degree = 6,
                                double tol = 1e-6,
                                mpfr_prec_t prec = kDefaultPrecision);

}  // namespace swrt

#endif
