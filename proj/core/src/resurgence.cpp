// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/resurgence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "seifertwrt/exact_sums.hpp"
#include "seifertwrt/qseries.hpp"
#include "seifertwrt/taylor.hpp"
#include "seifertwrt/wrt_qseries.hpp"

namespace swrt {

namespace {

Rational sum_inv_p(const SeifertLoop& loop) {
  Rational s(0);
  for (const auto& f : loop.fibers()) s = s + Rational(1, f.p);
  return s;
}

// E(kappa) = (B / 2 pi i) e^{-pi i c(N)/(2 kappa)}, the exact prefactor in
// front of the trivial-connection integral.
HPComplex e_prefactor(const SeifertLoop& loop, const Rational& cN,
                      const HPComplex& kappa, mpfr_prec_t prec) {
  const HPReal pi = HPReal::pi(prec);
  const HPComplex two_pi_i(HPReal(0, prec), HPReal(2, prec) * pi);
  const HPComplex lam(HPReal(0, prec), -(pi * HPReal(cN, prec)) / HPReal(2, prec));
  return loop_B(loop, prec) / two_pi_i * exp(lam / kappa);
}

// e^{kappa g(y)} F_N(y) with g(y) = i y^2 / (8 pi P).
Integrand make_integrand(const SeifertLoop& loop, long N, const HPComplex& kappa,
                         mpfr_prec_t prec) {
  const HPComplex denom(HPReal(8 * loop.P(), prec) * HPReal::pi(prec),
                        HPReal(0, prec));
  const HPComplex coef = i_unit(prec) * kappa / denom;
  return [loop, N, coef](const HPComplex& y) {
    return exp(coef * y * y) * F_eval(loop, N, y);
  };
}

// Quadrature tolerance: 16 guard bits under the verification tolerance,
// tightened in proportion to the contour's distance from the pole lattice.
HPReal quadrature_tolerance(mpfr_prec_t prec, double pole_dist) {
  HPReal t = HPReal::pow2(tolerance_exponent(prec) - 16, prec);
  if (pole_dist < 1.0) t = t * HPReal(pole_dist, prec);
  return t;
}

// Gaussian decay certificate on the tilted line s e^{i phi}: for
// s >= s_min = 2/|cos phi| every half-argument satisfies |Re(y)/2| >= 1, so
// |2 sinh(y/2)|^{n-1} >= ((1-e^{-2}) e^{s |cos phi|/2})^{n-1} while the
// numerator factors give 2^n e^{(N + sum 1/p_j) s |cos phi|/2}; the kappa
// Gaussian decays at rate |kappa| sin(arg kappa + 2 phi) / (8 pi P).
DecayCertificate tilted_certificate(const SeifertLoop& loop, long N,
                                    const HPComplex& kappa, double phi,
                                    mpfr_prec_t prec) {
  const int n = loop.n();
  const HPReal pi = HPReal::pi(prec);
  const HPReal phi_hp(phi, prec);
  const HPReal ang = atan2(kappa.im, kappa.re) + HPReal(2, prec) * phi_hp;
  const HPReal rate = abs(kappa) * sin(ang) / (HPReal(8 * loop.P(), prec) * pi);
  if (!(rate > HPReal(0, prec))) {
    throw std::domain_error(
        "Borel sum direction outside the sector |arg kappa + theta| < pi/2");
  }
  Rational nu = (Rational(N) + sum_inv_p(loop) - Rational(n - 1)) / Rational(2);
  if (nu < Rational(0)) nu = Rational(0);
  const HPReal one(1, prec);
  DecayCertificate cert;
  cert.amplitude =
      HPReal::pow2(n, prec) * pow_si(one - exp(HPReal(-2, prec)), 1 - n);
  cert.rate = rate;
  cert.linear = HPReal(nu, prec) * abs(cos(phi_hp));
  cert.s_min = 2.0 / std::abs(std::cos(phi));
  return cert;
}

// Certificate on the vertical line eps + i s: |sinh z| >= sinh |Re z| bounds
// the denominator uniformly by (2 sinh(eps/2))^{n-1}, the numerator by
// 2^n e^{(N + sum 1/p_j) eps/2}, and the kappa Gaussian contributes
// e^{|Im kappa|(eps^2 - s^2)/(8 pi P)} e^{2 |Re kappa| eps s/(8 pi P)}.
DecayCertificate vertical_certificate(const SeifertLoop& loop, long N,
                                      const HPComplex& kappa, double eps,
                                      mpfr_prec_t prec) {
  const int n = loop.n();
  const HPReal pi8p = HPReal(8 * loop.P(), prec) * HPReal::pi(prec);
  const HPReal rate = -kappa.im / pi8p;
  if (!(rate > HPReal(0, prec))) {
    throw std::domain_error("vertical median contour requires Im kappa < 0");
  }
  const HPReal e(eps, prec);
  const HPReal growth = HPReal(Rational(N) + sum_inv_p(loop), prec) * e / HPReal(2, prec);
  DecayCertificate cert;
  cert.amplitude = HPReal::pow2(n, prec) * exp(growth) *
                   pow_si(HPReal(2, prec) * sinh(e / HPReal(2, prec)), 1 - n) *
                   exp(-kappa.im * e * e / pi8p);
  cert.rate = rate;
  cert.linear = HPReal(2, prec) * abs(kappa.re) * e / pi8p;
  cert.s_min = 0.0;
  return cert;
}

struct QuadSum {
  HPComplex value;
  HPReal err;
};

// E(kappa) times the y-plane integral along the tilted line of direction
// theta, with the prefactor folded into the returned error bound.
QuadSum tilted_sum(const SeifertLoop& loop, long N, const HPComplex& kappa,
                   double theta, mpfr_prec_t prec,
                   const ResummationOptions& opts) {
  const double phi = std::numbers::pi / 4 + theta / 2;
  const double pole_dist = 2 * std::numbers::pi * std::abs(std::cos(phi));
  const double guard = std::numbers::pi * std::sin(opts.delta / 2);
  if (pole_dist < guard) {
    throw std::domain_error(
        "integration contour inside the pole-distance guard around 2 pi i Z");
  }
  const DecayCertificate cert = tilted_certificate(loop, N, kappa, phi, prec);
  const HPReal phi_hp(phi, prec);
  const HPComplex dir(cos(phi_hp), sin(phi_hp));
  const Contour contour = Contour::line(HPComplex(prec), dir, cert);
  const QuadratureResult q =
      contour_integrate(make_integrand(loop, N, kappa, prec), contour,
                        quadrature_tolerance(prec, pole_dist), prec);
  const Rational cN = loop_constants(loop, prec).c(N);
  const HPComplex pref = e_prefactor(loop, cN, kappa, prec);
  return {pref * q.value, abs(pref) * q.err_bound};
}

// Full principal part of the right-side continuation of I_B at
// omega_m = pi i m^2/(2P).  With v = xi - omega = (y - y0)(y + y0)/(8 pi i P)
// and H(y0 + u) = u^{-r} T(u), T = 8 pi i P reg(u)/(y0 + u), the coefficient
// of v^{-k} is the u-residue of u^{-r} T(u) v(u)^{k-1} v'(u), i.e. the
// u^{r-k} coefficient of T(u) (u + 2 y0)^{k-1} (2u + 2 y0) / (8 pi i P)^k.
SingularityDatum singularity_at(const SeifertLoop& loop, long N, long m,
                                mpfr_prec_t prec) {
  const long P = loop.P();
  const HPReal pi = HPReal::pi(prec);
  const HPComplex y0(HPReal(0, prec), HPReal(2 * m, prec) * pi);
  const LocalFactorization local = F_local(loop, N, m, loop.n() + 2, prec);
  const int r = local.pole_order;

  const HPComplex eight_pi_i_p(HPReal(0, prec), HPReal(8 * P, prec) * pi);
  TaylorSeries lin;
  lin.c = {y0, HPComplex(1, prec)};
  TaylorSeries T = ts_scale(ts_mul(local.reg, ts_invert(lin, r), r), eight_pi_i_p);

  const HPComplex two_y0 = y0 * HPReal(2, prec);
  TaylorSeries lin1;  // u + 2 y0
  lin1.c = {two_y0, HPComplex(1, prec)};
  TaylorSeries mult;  // (u + 2 y0)^{k-1} (2u + 2 y0), k = 1 to start
  mult.c = {two_y0, HPComplex(2, prec)};

  SingularityDatum d;
  d.m = m;
  d.omega = HPComplex(HPReal(0, prec),
                      pi * HPReal(m, prec) * HPReal(m, prec) / HPReal(2 * P, prec));
  d.y_order = r;
  d.principal.location = d.omega;
  d.principal.order = r;
  d.principal.c.assign(r, HPComplex(prec));
  for (int k = 1; k <= r; ++k) {
    const TaylorSeries prod = ts_mul(T, mult, r);
    d.principal.c[r - k] = prod.c[r - k] * pow_si(eight_pi_i_p, -k);
    if (k < r) mult = ts_mul(mult, lin1, r);
  }
  return d;
}

// 2 pi i times the residue of e^{-kappa xi} against the principal part:
// Res_{xi=omega} e^{-kappa xi} (xi-omega)^{-j} = e^{-kappa omega}
// (-kappa)^{j-1}/(j-1)!.
HPComplex alien_term(const SingularityDatum& d, const HPComplex& kappa,
                     mpfr_prec_t prec) {
  const HPComplex two_pi_i(HPReal(0, prec), HPReal(2, prec) * HPReal::pi(prec));
  HPComplex inner(prec);
  HPComplex pw(1, prec);
  for (int j = 1; j <= d.principal.order; ++j) {
    inner += d.principal.c[d.principal.order - j] * pw;
    pw = pw * (-kappa) / HPComplex(j, prec);
  }
  return two_pi_i * exp(-(kappa * d.omega)) * inner;
}

// Lattice cutoff making the omitted q-series tail negligible against the
// verification tolerance: rate per lattice unit is |Re log q| / (4P).
long long phi_cutoff_for(const SeifertLoop& loop, const HPComplex& log_q,
                         mpfr_prec_t prec) {
  const double rate = -log_q.re.to_double();
  const double bits = static_cast<double>(prec) / 4.0 + 64.0;
  const double units = 4.0 * static_cast<double>(loop.P()) * bits *
                       std::numbers::ln2 / rate;
  return static_cast<long long>(units) + 8 * loop.P();
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::vector<HPComplex> i_pert(const SeifertLoop& loop, long N, int M,
                              mpfr_prec_t prec) {
  if (M < 0) throw std::invalid_argument("i_pert requires M >= 0");
  const RationalSeries F = F_taylor(loop, N, 2L * M);
  const HPReal pi = HPReal::pi(prec);
  const HPReal eight_pi_p = HPReal(8 * loop.P(), prec) * pi;
  std::vector<HPComplex> out;
  out.reserve(M + 1);
  for (int m = 0; m <= M; ++m) {
    const long j = 2L * m - F.shift;
    Rational f(0);
    if (j >= 0 && j < static_cast<long>(F.c.size())) f = F.c[j];
    // Tilted Gaussian moment e^{i pi/4} i^m (8 pi P)^{m+1/2} Gamma(m+1/2).
    const HPComplex phase = exp_i_pi(Rational(2L * m + 1, 4), prec);
    const HPReal mag = pow_si(eight_pi_p, m) * sqrt(eight_pi_p) *
                       gamma(HPReal(Rational(2L * m + 1, 2), prec));
    out.push_back(phase * HPComplex(f, prec) * mag);
  }
  return out;
}

PerturbativeSeries z_pert(const SeifertLoop& loop, long N, int M,
                          mpfr_prec_t prec) {
  if (M < 0) throw std::invalid_argument("z_pert requires M >= 0");
  PerturbativeSeries out;
  out.i_factor = i_pert(loop, N, M, prec);

  const Rational cN = loop_constants(loop, prec).c(N);
  const HPReal pi = HPReal::pi(prec);
  const HPComplex two_pi_i(HPReal(0, prec), HPReal(2, prec) * pi);
  const HPComplex lam(HPReal(0, prec), -(pi * HPReal(cN, prec)) / HPReal(2, prec));
  out.e_factor.assign(M + 1, HPComplex(prec));
  out.e_factor[0] = loop_B(loop, prec) / two_pi_i;
  for (int j = 1; j <= M; ++j) {
    out.e_factor[j] = out.e_factor[j - 1] * lam / HPComplex(j, prec);
  }

  out.a.assign(M + 1, HPComplex(prec));
  for (int m = 0; m <= M; ++m) {
    HPComplex acc(prec);
    for (int j = 0; j <= m; ++j) acc += out.e_factor[j] * out.i_factor[m - j];
    out.a[m] = acc;
  }

  out.borel.assign(M + 1, HPComplex(prec));
  for (int m = 0; m <= M; ++m) {
    const HPReal g = gamma(HPReal(Rational(2L * m + 1, 2), prec));
    out.borel[m] = out.a[m] / HPComplex(g, HPReal(0, prec));
  }
  return out;
}

HPComplex borel_I_closed(const SeifertLoop& loop, long N, const HPComplex& xi) {
  const mpfr_prec_t prec = xi.prec();
  if (xi.is_zero()) {
    throw std::domain_error("Borel transform has a branch point at xi = 0");
  }
  const HPReal pi = HPReal::pi(prec);
  const HPComplex w = i_unit(prec) * xi * (HPReal(8 * loop.P(), prec) * pi);
  const HPComplex y = sqrt(w);  // cut along the positive imaginary xi-axis
  const HPComplex four_pi_i_p(HPReal(0, prec), HPReal(4 * loop.P(), prec) * pi);
  const HPComplex t1 = four_pi_i_p * F_eval(loop, N, y) / y;
  const HPComplex t2 = four_pi_i_p * F_eval(loop, N, -y) / (-y);
  return t1 - t2;
}

std::vector<SingularityDatum> singularities(const SeifertLoop& loop, long N,
                                            long m_max, mpfr_prec_t prec) {
  if (m_max < 1) throw std::invalid_argument("singularities requires m_max >= 1");
  std::vector<SingularityDatum> out;
  for (long m = 1; m <= m_max; ++m) {
    if (F_pole_order(loop, m) >= 1) out.push_back(singularity_at(loop, N, m, prec));
  }
  return out;
}

HPComplex directional_sum(const SeifertLoop& loop, long N,
                          const HPComplex& kappa, double theta,
                          mpfr_prec_t prec, const ResummationOptions& opts) {
  return tilted_sum(loop, N, kappa, theta, prec, opts).value;
}

MedianPair median_sum(const SeifertLoop& loop, long N, const HPComplex& kappa,
                      mpfr_prec_t prec, const ResummationOptions& opts) {
  if (!(kappa.im.sign() < 0)) {
    throw std::domain_error("median sum requires Im kappa < 0");
  }
  const double theta0 = std::numbers::pi / 2;
  const HPComplex s_plus = directional_sum(loop, N, kappa, theta0 + opts.delta, prec, opts);
  const HPComplex s_minus = directional_sum(loop, N, kappa, theta0 - opts.delta, prec, opts);

  MedianPair out;
  out.via_average = (s_plus + s_minus) / HPComplex(2, prec);

  const DecayCertificate cert =
      vertical_certificate(loop, N, kappa, opts.epsilon, prec);
  const HPComplex anchor(HPReal(opts.epsilon, prec), HPReal(0, prec));
  const Contour contour = Contour::line(anchor, i_unit(prec), cert);
  const QuadratureResult q = contour_integrate(
      make_integrand(loop, N, kappa, prec), contour,
      quadrature_tolerance(prec, std::min(opts.epsilon, 1.0)), prec);
  const Rational cN = loop_constants(loop, prec).c(N);
  out.via_vertical = e_prefactor(loop, cN, kappa, prec) * q.value;
  return out;
}

StokesJump stokes_jump(const SeifertLoop& loop, long N, const HPComplex& kappa,
                       long m_max, mpfr_prec_t prec,
                       const ResummationOptions& opts) {
  if (!(kappa.im.sign() < 0)) {
    throw std::domain_error("Stokes jump requires Im kappa < 0");
  }
  if (m_max < 1) throw std::invalid_argument("stokes_jump requires m_max >= 1");
  const double theta0 = std::numbers::pi / 2;

  StokesJump out{HPComplex(prec), HPComplex(prec), HPReal(0, prec)};
  out.lhs = directional_sum(loop, N, kappa, theta0 - opts.delta, prec, opts) -
            directional_sum(loop, N, kappa, theta0 + opts.delta, prec, opts);

  const Rational cN = loop_constants(loop, prec).c(N);
  const HPComplex E = e_prefactor(loop, cN, kappa, prec);
  HPComplex sum(prec);
  for (const auto& d : singularities(loop, N, m_max, prec)) {
    sum += alien_term(d, kappa, prec);
  }
  out.rhs = E * sum;

  // Omitted m > m_max: one full period m_max+1..m_max+2P is computed
  // explicitly; the remaining periods are closed geometrically.  Shifting m
  // by 2P multiplies |e^{-kappa omega_m}| by e^{2 pi (m+P) Im kappa} (it
  // decreases in m) while the trigonometric content of the principal
  // coefficients is 2P-periodic and their y0-power growth is at most
  // ((m+2P)/m)^n, largest at m = m_max+1.
  const long P = loop.P();
  HPReal period(0, prec);
  for (long m = m_max + 1; m <= m_max + 2 * P; ++m) {
    if (F_pole_order(loop, m) < 1) continue;
    period = period + abs(alien_term(singularity_at(loop, N, m, prec), kappa, prec));
  }
  period = period * abs(E);
  const HPReal growth =
      pow_si(HPReal(m_max + 1 + 2 * P, prec) / HPReal(m_max + 1, prec), loop.n());
  const HPReal rho =
      growth * exp(HPReal(2, prec) * HPReal::pi(prec) *
                   HPReal(m_max + 1 + P, prec) * kappa.im);
  if (rho < HPReal(1, prec)) {
    out.truncation_bound = period / (HPReal(1, prec) - rho);
  } else {
    mpfr_set_inf(out.truncation_bound.raw(), 1);
  }
  return out;
}

LaurentPart blr_principal(const SeifertLoop& loop, long N, long K, long m,
                          mpfr_prec_t prec) {
  if (K < 2) throw std::invalid_argument("K must be >= 2");
  const int n = loop.n();
  const long P = loop.P();
  const HPReal pi = HPReal::pi(prec);
  const HPComplex y0(HPReal(0, prec), HPReal(2 * m, prec) * pi);
  const HPComplex gam =
      i_unit(prec) * (HPReal(K, prec) / (HPReal(8 * P, prec) * pi));

  const SeriesFactory num = [loop, N, y0, gam, prec](int order) {
    TaylorSeries s = ts_exp_quadratic(gam, y0, order, prec);
    s = ts_mul(s, ts_two_sinh(HPComplex(Rational(N, 2), prec), y0, order, prec),
               order);
    for (const auto& f : loop.fibers()) {
      s = ts_mul(s, ts_two_sinh(HPComplex(Rational(1, 2 * f.p), prec), y0, order, prec),
                 order);
    }
    return s;
  };
  const SeriesFactory den = [n, K, y0, prec](int order) {
    TaylorSeries s = ts_constant(HPComplex(1, prec), order);
    const TaylorSeries half =
        ts_two_sinh(HPComplex(Rational(1, 2), prec), y0, order, prec);
    for (int j = 0; j + 1 < n; ++j) s = ts_mul(s, half, order);
    TaylorSeries e = ts_exp_linear(HPComplex(-K, prec), y0, order, prec);
    e = ts_scale(e, HPComplex(-1, prec));
    e.c[0] += HPComplex(1, prec);  // 1 - e^{-K y}
    return ts_mul(s, e, order);
  };
  return laurent_principal(num, den, y0, n);
}

BLRDecomposition blr_decompose(const SeifertLoop& loop, long N, long K,
                               mpfr_prec_t prec) {
  if (K < 2) throw std::invalid_argument("K must be >= 2");
  const HPComplex kappa(HPReal(K, prec), HPReal(0, prec));
  const QuadSum zt = tilted_sum(loop, N, kappa, 0.0, prec, ResummationOptions{});

  BLRDecomposition out{zt.value, HPComplex(prec), HPComplex(prec), zt.err};
  HPComplex acc(prec);
  for (long m = 1; m <= 2 * loop.P() - 1; ++m) {
    acc += blr_principal(loop, N, K, m, prec).residue();
  }
  const Rational cN = loop_constants(loop, prec).c(N);
  const HPComplex pref =
      -(loop_B(loop, prec) * exp_i_pi(-(cN / Rational(2 * K)), prec));
  out.residue_sum = pref * acc;
  out.total = out.z_triv + out.residue_sum;
  return out;
}

VerificationReport median_report(const SeifertLoop& loop, long N,
                                 const HPComplex& kappa, mpfr_prec_t prec,
                                 const ResummationOptions& opts) {
  VerificationReport report;
  report.command = "median";
  report.inputs["loop"] = loop.str();
  report.inputs["N"] = std::to_string(N);
  report.inputs["kappa"] = fmt(kappa);
  report.inputs["delta"] = fmt_double(opts.delta);
  report.inputs["epsilon"] = fmt_double(opts.epsilon);
  report.inputs["precision_bits"] = std::to_string(prec);

  const MedianPair mp = median_sum(loop, N, kappa, prec, opts);
  const HPReal tol = HPReal::pow2(tolerance_exponent(prec), prec);

  {
    const HPReal residual = abs(mp.via_average - mp.via_vertical);
    ClaimRow row;
    row.name = "average-equals-vertical";
    row.pass = residual <= tol;
    row.detail = "lateral average folds onto the vertical contour";
    row.values["kappa"] = fmt(kappa);
    row.values["lhs"] = fmt(mp.via_average);
    row.values["rhs"] = fmt(mp.via_vertical);
    row.values["residual"] = fmt(residual);
    row.values["tolerance"] = fmt(tol);
    report.claims.push_back(row);
  }
  {
    const HPComplex log_q =
        HPComplex(HPReal(0, prec), HPReal(2, prec) * HPReal::pi(prec)) / kappa;
    const long long cutoff = phi_cutoff_for(loop, log_q, prec);
    const QSeriesEval phi = phi_eval(loop, N, log_q, cutoff);
    const HPComplex g0 = g0_factor(kappa);
    const HPComplex rhs = phi.value / g0;
    const HPReal residual = abs(mp.via_vertical - rhs);
    const HPReal tol_row = tol + phi.tail_bound / abs(g0);
    ClaimRow row;
    row.name = "median-equals-phi-over-g0";
    row.pass = residual <= tol_row;
    row.detail = "median sum reproduces the invariant inside the disk";
    row.values["kappa"] = fmt(kappa);
    row.values["lhs"] = fmt(mp.via_vertical);
    row.values["rhs"] = fmt(rhs);
    row.values["residual"] = fmt(residual);
    row.values["tolerance"] = fmt(tol_row);
    report.claims.push_back(row);
  }
  return report;
}

VerificationReport stokes_report(const SeifertLoop& loop, long N,
                                 const HPComplex& kappa, long m_max,
                                 mpfr_prec_t prec,
                                 const ResummationOptions& opts) {
  VerificationReport report;
  report.command = "stokes";
  report.inputs["loop"] = loop.str();
  report.inputs["N"] = std::to_string(N);
  report.inputs["kappa"] = fmt(kappa);
  report.inputs["m_max"] = std::to_string(m_max);
  report.inputs["delta"] = fmt_double(opts.delta);
  report.inputs["precision_bits"] = std::to_string(prec);

  const StokesJump jump = stokes_jump(loop, N, kappa, m_max, prec, opts);
  const HPReal tol =
      HPReal::pow2(tolerance_exponent(prec), prec) + jump.truncation_bound;
  const HPReal residual = abs(jump.lhs - jump.rhs);
  {
    ClaimRow row;
    row.name = "jump-matches-alien-sum";
    row.pass = residual <= tol;
    row.detail = "lateral Borel sums differ by the singularity residues";
    row.values["kappa"] = fmt(kappa);
    row.values["lhs"] = fmt(jump.lhs);
    row.values["rhs"] = fmt(jump.rhs);
    row.values["residual"] = fmt(residual);
    row.values["tolerance"] = fmt(tol);
    row.values["truncation_bound"] = fmt(jump.truncation_bound);
    report.claims.push_back(row);
  }

  std::string higher;
  for (const auto& d : singularities(loop, N, m_max, prec)) {
    if (d.y_order > 1) {
      if (!higher.empty()) higher += ",";
      higher += "m=" + std::to_string(d.m) + ":order=" + std::to_string(d.y_order);
    }
  }
  if (!higher.empty()) {
    ClaimRow row;
    row.name = "higher-order-poles";
    row.pass = true;
    row.detail = "full principal parts used beyond the simple-pole residue formula";
    row.values["poles"] = higher;
    report.claims.push_back(row);
  }
  return report;
}

VerificationReport blr_report(const SeifertLoop& loop, long N, long K,
                              mpfr_prec_t prec) {
  VerificationReport report;
  report.command = "blr";
  report.inputs["loop"] = loop.str();
  report.inputs["N"] = std::to_string(N);
  report.inputs["K"] = std::to_string(K);
  report.inputs["precision_bits"] = std::to_string(prec);

  const BLRDecomposition d = blr_decompose(loop, N, K, prec);
  const HPComplex z = z_norm(loop, K, N, prec);
  const HPReal residual = abs(d.total - z);
  const HPReal tol = HPReal::pow2(tolerance_exponent(prec), prec) + d.quadrature_err;
  ClaimRow row;
  row.name = "integral-plus-residues-equals-z";
  row.pass = residual <= tol;
  row.detail = "trivial-connection integral plus lattice residues";
  row.values["K"] = std::to_string(K);
  row.values["lhs"] = fmt(d.total);
  row.values["rhs"] = fmt(z);
  row.values["residual"] = fmt(residual);
  row.values["tolerance"] = fmt(tol);
  row.values["z_triv"] = fmt(d.z_triv);
  row.values["residue_sum"] = fmt(d.residue_sum);
  report.claims.push_back(row);
  return report;
}

}  // namespace swrt
