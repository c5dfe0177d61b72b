// SPDX-License-Identifier: Apache-2.0
// Exact q-series on a fixed fractional exponent lattice.  A series stores
// every nonzero rational coefficient for exponents up to its cutoff; terms
// beyond the cutoff are absent but may be covered by a structural tail
// certificate that bounds their total coefficient mass per unit exponent
// window, which is what makes truncated evaluation certifiable.

#ifndef SEIFERT_WRT_QSERIES_HPP
#define SEIFERT_WRT_QSERIES_HPP

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "seifertwrt/hpcomplex.hpp"
#include "seifertwrt/rational.hpp"

namespace swrt {

// Certificate for series whose omitted terms have exponents of the shape
// x = (2Pm + a)^2 / (4P) - s0 + k with m, k >= 0 integers, |a| <= a_max, and
// per-term coefficient magnitude C(m+n-3, n-3) (1 when n <= 2).  The total
// coefficient mass with exponent in [x, x+1) is then at most
//   scale * C(M(x)+n-2, n-2),  M(x) = floor((sqrt(4P(x+1+s0)) + a_max)/(2P)).
struct TailCertificate {
  long P = 1;
  int n = 1;
  Rational scale;  // number of (l, eps) branches times the global coefficient
  Rational s0;     // exponent offset, see above
  BigInt a_max;

  // Upper bound (directed rounding) on the omitted-coefficient mass in [x, x+1).
  HPReal mass_bound(const HPReal& x) const;
};

struct QSeries {
  static constexpr long long kComplete = LLONG_MAX;

  long lattice_den = 1;                  // D > 0: stored exponent = index / D
  std::map<long long, Rational> terms;   // nonzero coefficients only
  long long cutoff = kComplete;          // lattice units; kComplete = exact
  std::optional<TailCertificate> tail;   // absent for complete or derived series

  bool complete() const { return cutoff == kComplete; }
  // Smallest stored exponent, or the cutoff when nothing is stored.
  long long min_exp() const { return terms.empty() ? cutoff : terms.begin()->first; }
  Rational exponent(long long index) const {
    return Rational(to_bigint(index), BigInt(lattice_den));
  }
};

enum class QSeriesOp { Add, Mul };

struct QSeriesEval {
  HPComplex value;
  HPReal tail_bound;
};

// Exact polynomial helpers.
QSeries qs_zero(long lattice_den);
QSeries qs_monomial(long lattice_den, long long index, const Rational& coeff);

// Exact combination on a shared lattice (throws on lattice mismatch).  The
// result cutoff is the minimum of the inputs' cutoffs, adjusted for exponent
// shifts under multiplication; coefficients beyond it are dropped.
QSeries qs_combine(const QSeries& a, const QSeries& b, QSeriesOp op);

// Multiplies by the monomial c * q^(shift/D), keeping any tail certificate.
QSeries qs_shift_scale(const QSeries& s, long long shift, const Rational& c);

// Drops stored terms above new_cutoff and lowers the certified cutoff.
QSeries qs_truncate(const QSeries& s, long long new_cutoff);

// First exponent <= upto at which a and b differ, paired with the nonzero
// difference a - b there; nullopt when they agree.  Requires both certified
// at least to upto (throws otherwise).
std::optional<std::pair<long long, Rational>> qs_first_mismatch(
    const QSeries& a, const QSeries& b, long long upto);

// True when a and b agree exactly on all exponents <= upto; requires both
// certified at least to upto (throws otherwise).
bool qs_equal_upto(const QSeries& a, const QSeries& b, long long upto);

// Evaluates sum of c * exp((e/D) * log_q) in ascending exponent order and
// returns a certified bound for the omitted tail.  Requires Re(log_q) < 0 and
// either a complete series or a tail certificate.
QSeriesEval qs_eval(const QSeries& s, const HPComplex& log_q);

// CSV rows "exp_num,exp_den,coeff_num,coeff_den" in ascending exponent order.
std::string qs_to_csv(const QSeries& s);

}  // namespace swrt

#endif
