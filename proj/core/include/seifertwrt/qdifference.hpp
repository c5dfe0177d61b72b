// SPDX-License-Identifier: Apache-2.0
// The operator algebra of the color-shift and weight operators acting on
// q-series families, the structure series D, R, C-tilde, C behind the color
// recursion, exact verification of the inhomogeneous and homogeneous
// difference equations, and the classical-limit polynomial with its
// factorization.

#ifndef SEIFERT_WRT_QDIFFERENCE_HPP
#define SEIFERT_WRT_QDIFFERENCE_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seifertwrt/qseries.hpp"
#include "seifertwrt/report.hpp"
#include "seifertwrt/wrt_qseries.hpp"

namespace swrt {

// One normal-ordered monomial coeff * q^{q_exp} m^{m_pow} l^{l_pow} where
// (m F)(N) = q^{N/2} F(N) and (l F)(N) = F(N+1), so l m = q^{1/2} m l.
struct QDiffMonomial {
  Rational coeff;
  Rational q_exp;
  Rational m_pow;
  long l_pow = 0;  // >= 0
};

// Finite sum of monomials kept in normal form (all weight powers left of
// shift powers); the product reorders via l^b m^c = q^{bc/2} m^c l^b.
class QDiffOperator {
 public:
  QDiffOperator() = default;
  static QDiffOperator monomial(const Rational& coeff, const Rational& q_exp,
                                const Rational& m_pow, long l_pow);

  bool is_zero() const { return terms_.empty(); }
  // Monomials in deterministic (m_pow, l_pow, q_exp) order.
  std::vector<QDiffMonomial> monomials() const;

  QDiffOperator& operator+=(const QDiffOperator& o);
  QDiffOperator& operator-=(const QDiffOperator& o);
  QDiffOperator& operator*=(const QDiffOperator& o);
  friend QDiffOperator operator+(QDiffOperator a, const QDiffOperator& b) { return a += b; }
  friend QDiffOperator operator-(QDiffOperator a, const QDiffOperator& b) { return a -= b; }
  friend QDiffOperator operator*(QDiffOperator a, const QDiffOperator& b) { return a *= b; }
  friend bool operator==(const QDiffOperator& a, const QDiffOperator& b) {
    return a.terms_ == b.terms_;
  }

  // JSON list of monomials {"coeff", "q_exp", "m_pow", "l_pow"}.
  std::string to_json() const;

 private:
  struct Key {
    Rational m_pow;
    long l_pow;
    Rational q_exp;
    bool operator<(const Key& o) const;
    bool operator==(const Key& o) const {
      return m_pow == o.m_pow && l_pow == o.l_pow && q_exp == o.q_exp;
    }
  };
  std::map<Key, Rational> terms_;
};

// A color family N -> PhiSeries; callers must supply every color the
// operator touches, each truncated generously enough for the target cutoff.
using PhiFamily = std::function<PhiSeries(long)>;

// Exact action at color N: each monomial contributes
// coeff * q^{q_exp + m_pow N/2} * family(N + l_pow), a lattice shift of the
// shifted-color series.  Throws invalid_argument when a shift leaves the
// (1/4P) lattice, when the operator is empty, or when the family truncations
// cannot certify the requested cutoff (cutoff underflow).
QSeries apply_operator(const QDiffOperator& op, const PhiFamily& family,
                       long N, long long cutoff);

// D(N) = (-1)^n q^{-c(N)/4} / (2(q^{1/2}-q^{-1/2})) expanded geometrically.
QSeries d_series(const SeifertLoop& loop, long N, long long cutoff);

// R(l) = sum_eps eps_1...eps_n sum_{m>=0} C(m+n-3, n-3) q^{(2Pm+a_{l,eps})^2/(4P)}.
QSeries r_series(const SeifertLoop& loop, const Rational& ell, long long cutoff);

// C-tilde(N) = D(N+2) (R((N+1)/2) + R(-(N+1)/2)), the inhomogeneous term of
// Phi(N+2) = q^{-P(N+1)} Phi(N) + C-tilde(N).
QSeries c_tilde_series(const SeifertLoop& loop, long N, long long cutoff);

// C as a bivariate object: sum over keys a >= 0 of coeff[a] q^{a^2/(4P)}
// (w^a + w^{-a}) in the weight variable w, keys complete up to a_bound.
struct CBivariate {
  long P = 1;
  int n = 1;
  long a_bound = 0;
  std::map<long, Rational> coeff;
};
CBivariate c_bivariate(const SeifertLoop& loop, long a_bound);

// Substitutes w = q^s (half-integer s) into the bivariate C, producing the
// exact lattice series with a structural tail certificate.  Throws when the
// key bound cannot certify the requested cutoff.
QSeries c_specialize(const SeifertLoop& loop, const CBivariate& c,
                     const Rational& s, long long cutoff);

// The named series of the color recursion at one (N, cutoff).
struct StructureSeries {
  QSeries d;        // D(N)
  QSeries r_plus;   // R((N+1)/2)
  QSeries r_minus;  // R(-(N+1)/2)
  QSeries c_tilde;  // C-tilde(N)
  CBivariate c;     // keys sufficient for the specialization checks
};
StructureSeries structure_series(const SeifertLoop& loop, long N,
                                 long long cutoff);

// Exact check of Phi(N+2) = q^{-P(N+1)} Phi(N) + C-tilde(N) up to cutoff;
// for (2, 2k+1) loops also checks the first-order relation
// Phi(M) = -q^{(k+1/2)(1-2M)} Phi(M-1) + q^{(k+1/2)(1-M)} [2M-1]_q at
// M = N+1.  Failing claims report the first mismatching exponent.
VerificationReport verify_inhomogeneous(const SeifertLoop& loop, long N,
                                        long long cutoff);

// Exact check of the homogeneous product form
//   C~(N+1) Phi(N+2) - C~(N) Phi(N+3)
//     = q^{-P(N+1)} C~(N+1) Phi(N) - q^{-P(N+2)} C~(N) Phi(N+1),
// plus numeric checks of the ratio form: C~(N+1)/C~(N) against
// q^{-P/2} C(q w)/C(q^{1/2} w) at w = q^{N/2} (q = 3/10), and for (2, 2k+1)
// loops the second-order equation with C'(w) = w - w^{-1} (q = 1/5).
VerificationReport verify_third_order(const SeifertLoop& loop, long N,
                                      long long cutoff,
                                      mpfr_prec_t prec = kDefaultPrecision);

// Laurent polynomial in two commuting variables (w, l).
struct LaurentPoly2 {
  std::map<std::pair<long, long>, Rational> coeff;  // (w-exp, l-exp)
};

LaurentPoly2 lp2_monomial(long w_exp, long l_exp, const Rational& c);
LaurentPoly2 lp2_add(const LaurentPoly2& a, const LaurentPoly2& b);
LaurentPoly2 lp2_sub(const LaurentPoly2& a, const LaurentPoly2& b);
LaurentPoly2 lp2_mul(const LaurentPoly2& a, const LaurentPoly2& b);
Rational lp2_eval(const LaurentPoly2& p, const Rational& w, const Rational& l);
bool lp2_equal(const LaurentPoly2& a, const LaurentPoly2& b);

// The q = 1 limit of the difference operator: for generic loops the cubic
//   l^3 - l^2 - w^{-2P} l + w^{-2P} = (l-1)(l-w^{-P})(l+w^{-P}),
// for (2, 2k+1) loops the quadratic
//   l^2 + (w^{-2(2k+1)}-1) l - w^{-2(2k+1)} = (l-1)(l+w^{-2(2k+1)}).
// The report checks expansion-equals-product exactly and that the stated
// roots annihilate the polynomial.
struct ClassicalLimit {
  LaurentPoly2 expanded;
  std::vector<LaurentPoly2> factors;
  VerificationReport report;
};
ClassicalLimit classical_limit(const SeifertLoop& loop);

}  // namespace swrt

#endif
