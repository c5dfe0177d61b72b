// SPDX-License-Identifier: Apache-2.0
// Resummation of the trivial-connection contribution: the perturbative
// expansion of the tilted Gaussian integral I(kappa), its Borel transform in
// closed form with the poles it inherits from F_N, directional and median
// Borel sums by certified contour quadrature, the Stokes jump across the
// singular direction, and the integral-plus-residues decomposition of the
// normalized invariant at integer level.

#ifndef SEIFERT_WRT_RESURGENCE_HPP
#define SEIFERT_WRT_RESURGENCE_HPP

#include <vector>

#include "seifertwrt/contour.hpp"
#include "seifertwrt/laurent.hpp"
#include "seifertwrt/report.hpp"
#include "seifertwrt/seifert.hpp"

namespace swrt {

// Z_pert(kappa) = E(kappa) * I_pert(kappa): the exact prefactor series
// E(kappa) = (B/2 pi i) e^{-pi i c(N)/(2 kappa)} expanded in 1/kappa, the
// integral series I_pert from term-by-term Gaussian moments, their Cauchy
// product a_m, and the Borel coefficients a_m / Gamma(m+1/2).
struct PerturbativeSeries {
  std::vector<HPComplex> a;         // a[m] multiplies kappa^(-m-1/2)
  std::vector<HPComplex> e_factor;  // e_factor[j] multiplies kappa^(-j)
  std::vector<HPComplex> i_factor;  // i_factor[m] multiplies kappa^(-m-1/2)
  std::vector<HPComplex> borel;     // borel[m] multiplies xi^(m-1/2)
};

// I-series coefficients for m = 0..M: the y^(2m) Taylor coefficient of F_N
// times the tilted Gaussian moment e^{i pi/4} i^m (8 pi P)^(m+1/2)
// Gamma(m+1/2).  The m = 0 entry is zero because F_N vanishes to order 2.
std::vector<HPComplex> i_pert(const SeifertLoop& loop, long N, int M,
                              mpfr_prec_t prec = kDefaultPrecision);

PerturbativeSeries z_pert(const SeifertLoop& loop, long N, int M,
                          mpfr_prec_t prec = kDefaultPrecision);

// Closed form of the Borel transform of I_pert:
//   [4 pi i P F_N(y)/y] at y = sqrt(8 pi i P xi) minus the same at -y,
// with the principal square root; the induced cut lies along the positive
// imaginary xi-axis, where the singular set Omega sits.  Throws domain_error
// at xi = 0 (branch point) and at poles xi = pi i m^2/(2P).
HPComplex borel_I_closed(const SeifertLoop& loop, long N, const HPComplex& xi);

// One singular point omega_m = pi i m^2/(2P) of the Borel transform: the
// y-plane pole order of F_N(y)/y at 2 pi i m and the full xi-plane principal
// part of the branch continued from the right side of the cut (y near
// +2 pi i m), which is the branch whose residues drive the Stokes jump.
struct SingularityDatum {
  long m = 0;
  HPComplex omega;
  LaurentPart principal;  // in xi - omega
  int y_order = 0;        // n - 2 - #{j : p_j | m}
};

// All singular points with 1 <= m <= m_max and y_order >= 1, ascending m.
std::vector<SingularityDatum> singularities(const SeifertLoop& loop, long N,
                                            long m_max,
                                            mpfr_prec_t prec = kDefaultPrecision);

// Contour parameters for the resummation quadratures.
struct ResummationOptions {
  double delta = 0.2;    // tilt (rad) of S^{+-} away from the singular direction
  double epsilon = 1.0;  // real offset of the vertical median contour
};

// Borel sum in the direction theta, computed on the y-plane as
//   (B/2 pi i) e^{-pi i c(N)/(2 kappa)} Int_{R e^{i(pi/4 + theta/2)}}
//     e^{kappa g(y)} F_N(y) dy,   g(y) = i y^2/(8 pi P),
// oriented from -infinity to +infinity along the tilted line.  Requires
// |arg kappa + theta| < pi/2 (Gaussian decay) and a contour distance of at
// least 2 pi sin(delta/2)/2 from the pole lattice 2 pi i Z; the quadrature
// tolerance is tightened in proportion to the pole distance.
HPComplex directional_sum(const SeifertLoop& loop, long N,
                          const HPComplex& kappa, double theta,
                          mpfr_prec_t prec = kDefaultPrecision,
                          const ResummationOptions& opts = {});

// Median sum across the singular direction theta_0 = pi/2, two ways:
// the average of the two lateral sums at theta_0 +- delta, and the vertical
// contour epsilon + i R (the average of the two tilted contours folds onto
// one vertical line by the y -> -y symmetry of the integrand).  Both values
// are returned so callers can compare them.  Requires Im kappa < 0.
struct MedianPair {
  HPComplex via_average;
  HPComplex via_vertical;
};
MedianPair median_sum(const SeifertLoop& loop, long N, const HPComplex& kappa,
                      mpfr_prec_t prec = kDefaultPrecision,
                      const ResummationOptions& opts = {});

// Stokes jump across theta_0: lhs = S^- - S^+ by two quadratures, rhs from
// the singularity data,
//   rhs = E(kappa) sum_m e^{-kappa omega_m} 2 pi i
//           sum_{j=1..order} c_{-j} (-kappa)^(j-1)/(j-1)!,
// the residue of e^{-kappa xi} against each principal part (the factor
// (-kappa)^(j-1) is the (j-1)-th derivative of e^{-kappa xi}; for simple
// poles this is the plain residue formula).  truncation_bound accounts for
// the omitted m > m_max terms via one explicitly computed extra period
// m_max+1..m_max+2P and a certified geometric closure.  Requires Im kappa < 0.
struct StokesJump {
  HPComplex lhs;
  HPComplex rhs;
  HPReal truncation_bound;
};
StokesJump stokes_jump(const SeifertLoop& loop, long N, const HPComplex& kappa,
                       long m_max, mpfr_prec_t prec = kDefaultPrecision,
                       const ResummationOptions& opts = {});

// Principal part at y = 2 pi i m of the decomposition integrand
// e^{K g(y)} F_N(y) / (1 - e^{-K y}); the last factor adds one to the pole
// order of F_N at every lattice point (e^{-2 pi i K m} = 1 for integer K).
LaurentPart blr_principal(const SeifertLoop& loop, long N, long K, long m,
                          mpfr_prec_t prec = kDefaultPrecision);

// Decomposition of the normalized invariant at integer level K:
//   total = z_triv + residue_sum,
//   z_triv      = directional sum at theta = 0 evaluated at kappa = K,
//   residue_sum = -B e^{-pi i c(N)/(2K)} sum_{m=1}^{2P-1}
//                   Res_{y = 2 pi i m} e^{K g(y)} F_N(y)/(1 - e^{-K y}).
// total reproduces z_norm(loop, K, N); quadrature_err carries the contour
// error bound.  Requires K >= 2.
struct BLRDecomposition {
  HPComplex z_triv;
  HPComplex residue_sum;
  HPComplex total;
  HPReal quadrature_err;
};
BLRDecomposition blr_decompose(const SeifertLoop& loop, long N, long K,
                               mpfr_prec_t prec = kDefaultPrecision);

// Report builders (rows carry lhs, rhs, residual, tolerance per claim).
VerificationReport median_report(const SeifertLoop& loop, long N,
                                 const HPComplex& kappa,
                                 mpfr_prec_t prec = kDefaultPrecision,
                                 const ResummationOptions& opts = {});
VerificationReport stokes_report(const SeifertLoop& loop, long N,
                                 const HPComplex& kappa, long m_max,
                                 mpfr_prec_t prec = kDefaultPrecision,
                                 const ResummationOptions& opts = {});
VerificationReport blr_report(const SeifertLoop& loop, long N, long K,
                              mpfr_prec_t prec = kDefaultPrecision);

}  // namespace swrt

#endif
