// SPDX-License-Identifier: Apache-2.0
// Finite root-of-unity sums: the quantum invariant tau(K; N) and its
// normalized form, quadratic Gauss sums and reciprocity, and the exact
// vanishing machinery (sign-flip pairing, K-factorization, epsilon sums).

#ifndef SEIFERT_WRT_EXACT_SUMS_HPP
#define SEIFERT_WRT_EXACT_SUMS_HPP

#include <vector>

#include "seifertwrt/report.hpp"
#include "seifertwrt/seifert.hpp"

namespace swrt {

// One summand of the tau sum: weight * e^{pi i numerator_exponent / (2KP)}
// with the exponent reduced into [0, 4KP).
struct RootOfUnityTerm {
  BigInt numerator_exponent;
  HPComplex weight;
};

// The k-th summand of tau(K; N): phase exponent -k^2 mod 4KP and the real
// sine-ratio weight; requires K not dividing k.
RootOfUnityTerm tau_term(const SeifertLoop& loop, long K, long N, long k,
                         mpfr_prec_t prec);

// tau(K; N) = (B G0(K)/K) e^{-(pi i/2K)(theta0 + (N^2-1)P)} sum_{k, K not| k}
// over k in [0, 2PK); ascending-k summation order.  Requires K >= 2, N >= 1.
HPComplex tau(const SeifertLoop& loop, long K, long N,
              mpfr_prec_t prec = kDefaultPrecision);

// Z(K; N) = tau(K; N) / G0(K).
HPComplex z_norm(const SeifertLoop& loop, long K, long N,
                 mpfr_prec_t prec = kDefaultPrecision);

// G(KP) = sum_{k mod 2KP} e^{-pi i k^2/(2KP)} next to its evaluated closed
// form sqrt(2KP) e^{-pi i/4}; callers compare the two.
struct GaussSumPair {
  HPComplex sum;
  HPComplex closed_form;
};
GaussSumPair gauss_G(long K, long P, mpfr_prec_t prec = kDefaultPrecision);

// Quadratic reciprocity: for M1 M2 even, M1 L integral, M1, M2 nonzero,
//   lhs = sum_{k mod M1} e^{pi i (M2/M1) k^2 + 2 pi i L k}
//   rhs = sqrt|M1/M2| e^{(pi i/4) sign(M1 M2)} sum_{k mod M2} e^{-pi i (M1/M2)(k+L)^2}
// with "k mod M" meaning k in [0, |M|).  Both sides are returned.
struct ReciprocityPair {
  HPComplex lhs;
  HPComplex rhs;
};
ReciprocityPair reciprocity(long M1, long M2, const Rational& L,
                            mpfr_prec_t prec = kDefaultPrecision);

// Exact sign sum  sum_{eps in {+-1}^n} eps_1...eps_n (sum_j eps_j/p_j)^s,
// zero for 0 <= s <= n-1.
Rational epsilon_sum(const SeifertLoop& loop, int s);

// K = K1 K2 with gcd(p_1, K1) = gcd(p_2...p_n, K2) = gcd(K1, K2) = 1,
// built by the iterated gcd chains and common-factor division.
struct KFactorization {
  long K1;
  long K2;
};
KFactorization factor_k(long K, const SeifertLoop& loop);

// The unique m~ in [0, K) with (2Pm + a_{l,eps})^2 == (2Pm~ + a_{l,eps~})^2
// mod 4KP, built by composing single-coordinate sign flips; the map m -> m~
// is a bijection.  Throws logic_error if the congruence fails (bug signal).
long crt_pair(const SeifertLoop& loop, long K, const Rational& ell,
              const std::vector<int>& eps, const std::vector<int>& eps_tilde,
              long m);

// Verifies sum_eps eps_1...eps_n (sum eps_j/p_j)^s sum_{m mod K}
// e^{(pi i/2PK)(2Pm+a_{l,eps})^2} = 0 for 0 <= s <= n-1 two ways: the exact
// route (pairing makes the Gauss factor eps-independent; the epsilon sum
// vanishes identically) and a direct numeric sum against the cancellation
// threshold.
VerificationReport vanishing_check(const SeifertLoop& loop, long K,
                                   const Rational& ell, int s,
                                   mpfr_prec_t prec = kDefaultPrecision);

}  // namespace swrt

#endif
