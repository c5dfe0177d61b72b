// SPDX-License-Identifier: Apache-2.0
// Seifert loop data: exceptional fibers, exact topological constants, and the
// meromorphic kernel F_N whose lattice of centers 2 pi i m carries the poles
// used by the residue and resummation machinery.

#ifndef SEIFERT_WRT_SEIFERT_HPP
#define SEIFERT_WRT_SEIFERT_HPP

#include <string>
#include <vector>

#include "seifertwrt/hpcomplex.hpp"
#include "seifertwrt/rational.hpp"
#include "seifertwrt/taylor.hpp"

namespace swrt {

// One exceptional fiber of order p with framing numerator q, gcd(p, q) = 1.
struct ExceptionalFiber {
  long p;
  long q;
};

// Fiber data (p_1/q_1, ..., p_n/q_n) with p_j >= 2 pairwise coprime and the
// integral homology normalization sum_j q_j P / p_j = 1, P = p_1 ... p_n.
class SeifertLoop {
 public:
  explicit SeifertLoop(std::vector<ExceptionalFiber> fibers);

  // Parses "p1/q1,p2/q2,..." (e.g. "2/1,3/1,5/-4").
  static SeifertLoop parse(const std::string& text);

  const std::vector<ExceptionalFiber>& fibers() const { return fibers_; }
  int n() const { return static_cast<int>(fibers_.size()); }
  long P() const { return P_; }
  std::string str() const;

 private:
  std::vector<ExceptionalFiber> fibers_;
  long P_ = 1;
};

// Dedekind sum s(q, p) = (1/4p) sum_{l=1}^{p-1} cot(pi l/p) cot(pi l q/p),
// gcd(q, p) = 1.  Evaluated at extended precision and snapped to the exact
// rational 6 p s(q, p) in Z; throws if the snap distance is not negligible.
Rational dedekind_sum(long q, long p, mpfr_prec_t prec = kDefaultPrecision);

struct LoopConstants {
  long P = 1;
  std::vector<Rational> dedekind;  // s(q_j, p_j) per fiber
  Rational theta0;                 // 3 - 1/P + 12 sum_j s(q_j, p_j); P theta0 in Z

  // Framing-shifted weight c(N) = theta0 + (N^2 - 1) P.
  Rational c(long N) const;
};

LoopConstants loop_constants(const SeifertLoop& loop,
                             mpfr_prec_t prec = kDefaultPrecision);

// Overall normalization B = -e^{3 pi i / 4} / (4 sqrt(P)).
HPComplex loop_B(const SeifertLoop& loop, mpfr_prec_t prec = kDefaultPrecision);

// g0(kappa) = sqrt(kappa / 2) / sin(pi / kappa), principal square root.
// Throws when sin(pi / kappa) vanishes to working precision.
HPComplex g0_factor(const HPComplex& kappa);

// Lattice residue a_{l,eps} = P (2 l + n - 2) + sum_j eps_j P / p_j for
// half-integer l (2 l in Z) and eps_j = +-1; always an integer.
long a_coeff(const SeifertLoop& loop, const Rational& ell, const std::vector<int>& eps);

// F_N(y) = 2 sinh(N y/2) prod_j 2 sinh(y/(2 p_j)) / (2 sinh(y/2))^{n-1}.
// Removable points are evaluated by local expansion; true poles throw.
HPComplex F_eval(const SeifertLoop& loop, long N, const HPComplex& y);

// Exact expansion of F_N at y = 0: even series with shift 2 and lead N/P.
RationalSeries F_taylor(const SeifertLoop& loop, long N, long order);

// Order of the pole of F_N at y = 2 pi i m: n - 2 - #{j : p_j | m}.
// Nonpositive values mean the point is removable (a zero of that order).
int F_pole_order(const SeifertLoop& loop, long m);

// Local factorization F_N(2 pi i m + u) = u^{-pole_order} reg(u) with reg a
// unit series; the factors vanishing at the center are peeled off exactly.
struct LocalFactorization {
  int pole_order = 0;
  TaylorSeries reg;
};

LocalFactorization F_local(const SeifertLoop& loop, long N, long m, int order,
                           mpfr_prec_t prec);

}  // namespace swrt

#endif
