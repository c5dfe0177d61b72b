// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/wrt_qseries.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "seifertwrt/extrapolate.hpp"
#include "seifertwrt/precision.hpp"

namespace swrt {

namespace {

// One (l, eps) branch of the quadruple sum with its lattice residue a_{l,eps}.
struct Branch {
  int parity;  // eps_1 ... eps_n
  long a;
};

// Branches for the given l values in deterministic order: l as listed, then
// the sign mask (bit j set means eps_j = -1).
std::vector<Branch> branches_for(const SeifertLoop& loop,
                                 const std::vector<Rational>& ells) {
  const int n = loop.n();
  std::vector<Branch> out;
  out.reserve(ells.size() << n);
  for (const Rational& ell : ells) {
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      std::vector<int> eps(static_cast<std::size_t>(n), 1);
      int parity = 1;
      for (int j = 0; j < n; ++j) {
        if ((mask >> j) & 1ul) {
          eps[static_cast<std::size_t>(j)] = -1;
          parity = -parity;
        }
      }
      out.push_back({parity, a_coeff(loop, ell, eps)});
    }
  }
  return out;
}

// The color-N l values: half-integers with |2l| <= N-1, ascending.
std::vector<Rational> color_ells(long N) {
  std::vector<Rational> ells;
  ells.reserve(static_cast<std::size_t>(N));
  for (long two_ell = -(N - 1); two_ell <= N - 1; two_ell += 2)
    ells.emplace_back(two_ell, 2);
  return ells;
}

std::vector<Branch> branches(const SeifertLoop& loop, long N) {
  return branches_for(loop, color_ells(N));
}

// C(m+n-3, n-3), with the degenerate convention for n <= 2: the m-sum
// collapses to the single term m = 0.
BigInt phi_binomial(long m, int n) {
  if (n <= 2) return BigInt(m == 0 ? 1 : 0);
  return binomial(m + n - 3, n - 3);
}

void require_level(long K, const char* where) {
  if (K < 2) throw std::invalid_argument(std::string(where) + ": K must be >= 2");
}

void require_color(long N, const char* where) {
  if (N < 1) throw std::invalid_argument(std::string(where) + ": N must be >= 1");
}

}  // namespace

QSeries dr_series(const SeifertLoop& loop, long prefactor_color,
                  const std::vector<Rational>& ells, long long cutoff) {
  require_color(prefactor_color, "dr_series");
  if (cutoff < 0) throw std::invalid_argument("dr_series: cutoff must be >= 0");
  const int n = loop.n();
  const long P = loop.P();
  const long lat = 4 * P;
  const LoopConstants lc = loop_constants(loop);

  // Base exponent 1/2 - c(M)/4 in lattice units: 2P - P c(M), an integer
  // because P theta0 and P(M^2-1)P are.
  const Rational base_r = Rational(2 * P) - Rational(P) * lc.c(prefactor_color);
  if (!base_r.is_integer())
    throw std::logic_error("dr_series: base exponent off the (1/4P) lattice");
  if (!base_r.num().fits_slong_p())
    throw std::overflow_error("dr_series: base exponent out of range");
  const long long base = base_r.num().get_si();

  // Global coefficient (-1)^n * (-1/2) from the prefactor expansion.
  const Rational global(n % 2 == 0 ? -1 : 1, 2);

  std::map<long long, Rational> terms;
  BigInt a_max(0);
  for (const Branch& br : branches_for(loop, ells)) {
    const BigInt abs_a = abs(BigInt(br.a));
    if (abs_a > a_max) a_max = abs_a;
    for (long m = 0;; ++m) {
      const long long b = 2LL * P * m + br.a;
      const long long e0 = base + b * b;
      if (b > 0 && e0 > cutoff) break;
      if (n <= 2 && m > 0) break;
      if (e0 > cutoff) continue;
      const Rational w = global * Rational(br.parity) * Rational(phi_binomial(m, n));
      for (long long e = e0; e <= cutoff; e += lat) terms[e] += w;
    }
  }
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);

  TailCertificate cert;
  cert.P = P;
  cert.n = n;
  cert.scale = Rational(static_cast<long>(ells.size())) * Rational(1L << (n - 1));
  cert.s0 = lc.c(prefactor_color) / Rational(4) - Rational(1, 2);
  cert.a_max = a_max;

  QSeries qs;
  qs.lattice_den = lat;
  qs.terms = std::move(terms);
  qs.cutoff = cutoff;
  qs.tail = cert;
  return qs;
}

PhiSeries phi_series(const SeifertLoop& loop, long N, long long cutoff) {
  require_color(N, "phi_series");
  return PhiSeries{loop, N, dr_series(loop, N, color_ells(N), cutoff)};
}

QSeriesEval phi_eval(const SeifertLoop& loop, long N, const HPComplex& log_q,
                     long long cutoff) {
  if (!(log_q.re.sign() < 0))
    throw std::domain_error("phi_eval: q must lie strictly inside the unit disk");
  return qs_eval(phi_series(loop, N, cutoff).series, log_q);
}

PhiKResult phi_k(const SeifertLoop& loop, long N, long K, const HPComplex& t,
                 int k) {
  require_level(K, "phi_k");
  require_color(N, "phi_k");
  if (k != 1 && k != 2) throw std::invalid_argument("phi_k: k must be 1 or 2");
  if (!(t.re.sign() > 0)) throw std::domain_error("phi_k: Re t must be positive");
  const mpfr_prec_t prec = t.prec();
  const int n = loop.n();
  const long P = loop.P();
  const BigInt den_2KP = BigInt(2) * K * P;
  const HPReal floor_tol = HPReal::pow2(-(prec + 16), prec);
  const int global_sign = n % 2 == 0 ? 1 : -1;

  HPComplex sum(prec);
  HPReal tail(0L, prec);
  for (const Branch& br : branches(loop, N)) {
    for (long m = 0;; ++m) {
      if (n <= 2 && m > 0) break;  // degenerate binomial: exact truncation
      const long long b = 2LL * P * m + br.a;
      const long long bk = k == 1 ? b : b * b;
      const BigInt sq = to_bigint(b) * to_bigint(b);
      const HPComplex phase = exp_i_pi(Rational(sq, den_2KP), prec);
      const HPComplex decay = exp(t * HPReal(to_bigint(-bk), prec));
      const BigInt coeff = BigInt(global_sign * br.parity) * phi_binomial(m, n);
      sum += phase * decay * HPReal(coeff, prec);
      if (b <= 0) continue;
      if (m > 4000000)
        throw std::runtime_error("phi_k: m-truncation budget exhausted");
      // Term-ratio bound, valid for all later m: the binomial ratio
      // (m+n-2)/(m+1) decreases and the decay gap (b+2P)^k - b^k grows.
      const long long b2 = b + 2 * P;
      const long long gap = (k == 1 ? b2 : b2 * b2) - bk;
      const HPReal rho = mul_up(
          div_up(HPReal(m + n - 2, prec), HPReal(m + 1, prec)),
          exp_up(mul_up(t.re, HPReal(to_bigint(-gap), prec))));
      if (!(rho < HPReal(1L, prec))) continue;
      const HPReal mag = mul_up(HPReal(abs(coeff), prec),
                                exp_up(mul_up(t.re, HPReal(to_bigint(-bk), prec))));
      const HPReal bound =
          mul_up(mag, div_up(rho, sub_down(HPReal(1L, prec), rho)));
      if (bound <= floor_tol) {
        tail = add_up(tail, bound);
        break;
      }
    }
  }
  return PhiKResult{sum, tail};
}

HPComplex phi_eval_direct(const SeifertLoop& loop, long N, long K,
                          const HPReal& t) {
  require_level(K, "phi_eval_direct");
  require_color(N, "phi_eval_direct");
  if (!(t.sign() > 0))
    throw std::domain_error("phi_eval_direct: t must be positive");
  const mpfr_prec_t prec = t.prec();
  const long P = loop.P();
  const Rational c = loop_constants(loop, prec).c(N);

  const HPComplex s(t * HPReal(Rational(1, 4 * P), prec), HPReal(0L, prec));
  const HPComplex phi2 = phi_k(loop, N, K, s, 2).value;

  // 2 (q^{1/2} - q^{-1/2}) q^{c/4} at log q = 2 pi i/K - t, with the root of
  // unity split off exactly.
  const HPComplex log_q(-t, HPReal(2L, prec) * HPReal::pi(prec) / HPReal(K, prec));
  const HPComplex half_diff = two_sinh(log_q * HPReal(Rational(1, 2), prec));
  const HPComplex qc4 = exp_i_pi(c / Rational(2 * K), prec) *
                        exp(t * HPReal(c / Rational(-4), prec));
  return phi2 / (half_diff * qc4 * HPReal(2L, prec));
}

std::pair<HPComplex, HPComplex> phi_AB(const SeifertLoop& loop, long N, long K,
                                       const HPReal& t) {
  require_level(K, "phi_AB");
  require_color(N, "phi_AB");
  if (!(t.sign() > 0)) throw std::domain_error("phi_AB: t must be positive");
  const mpfr_prec_t prec = t.prec();
  const int n = loop.n();
  const long P = loop.P();
  const auto brs = branches(loop, N);

  std::vector<HPReal> damp;  // eps_1...eps_n e^{-a t} per branch
  damp.reserve(brs.size());
  for (const Branch& br : brs)
    damp.push_back(exp(t * HPReal(-br.a, prec)) * HPReal(br.parity, prec));

  const HPComplex norm = HPComplex(n % 2 == 0 ? 1L : -1L, prec) /
                         gauss_G(K, P, prec).closed_form;
  const HPReal e2Pt = exp(t * HPReal(-2L * P, prec));

  HPComplex a_part(prec);
  for (long k = 0; k < 2 * K * P; ++k) {
    if (k % K == 0) continue;
    const HPComplex geo = pow_si(
        HPComplex(1L, prec) - exp_i_pi(Rational(2 * k, K), prec) * e2Pt,
        -(n - 2));
    HPComplex inner(prec);
    for (std::size_t i = 0; i < brs.size(); ++i) {
      const long long num = -static_cast<long long>(k) * k + 2LL * k * brs[i].a;
      inner += exp_i_pi(Rational(to_bigint(num), BigInt(2) * K * P), prec) * damp[i];
    }
    a_part += inner * geo;
  }
  a_part = a_part * norm;

  HPComplex b_part(prec);
  for (long m = 0; m < 2 * P; ++m) {
    HPComplex inner(prec);
    for (std::size_t i = 0; i < brs.size(); ++i) {
      const long long num = -static_cast<long long>(K) * m * m + 2LL * m * brs[i].a;
      inner += exp_i_pi(Rational(to_bigint(num), BigInt(2) * P), prec) * damp[i];
    }
    b_part += inner;
  }
  const HPComplex geo0 = pow_si(
      HPComplex(HPReal(1L, prec) - e2Pt, HPReal(0L, prec)), -(n - 2));
  b_part = b_part * (norm * geo0);
  return {a_part, b_part};
}

VerificationReport radial_limit(const SeifertLoop& loop, long N, long K,
                                const Rational& t0, int levels, int degree,
                                double tol, mpfr_prec_t prec) {
  require_level(K, "radial_limit");
  require_color(N, "radial_limit");
  if (!(t0.sign() > 0))
    throw std::invalid_argument("radial_limit: t0 must be positive");
  if (degree < 0 || levels < degree + 1)
    throw std::invalid_argument("radial_limit: need levels >= degree + 1 >= 1");

  std::vector<HPReal> ts;
  std::vector<HPComplex> vs;
  ts.reserve(static_cast<std::size_t>(levels));
  vs.reserve(static_cast<std::size_t>(levels));
  Rational tj = t0;
  for (int j = 0; j < levels; ++j) {
    const HPReal tr(tj, prec);
    ts.push_back(tr);
    vs.push_back(phi_eval_direct(loop, N, K, tr));
    tj = tj / Rational(2);
  }
  const Extrapolation ex = extrapolate_to_zero(ts, vs, degree);
  const HPComplex target = tau(loop, K, N, prec);
  const HPReal residual = abs(ex.value - target);
  const HPReal tol_hp(tol, prec);

  VerificationReport rep;
  rep.command = "radial";
  rep.inputs = {{"loop", loop.str()},
                {"N", std::to_string(N)},
                {"K", std::to_string(K)},
                {"t0", t0.str()},
                {"levels", std::to_string(levels)},
                {"degree", std::to_string(degree)},
                {"tol", fmt(tol_hp, 6)}};
  ClaimRow row;
  row.name = "radial-limit-matches-tau";
  row.pass = residual <= tol_hp;
  row.detail = "extrapolated radial limit of Phi against tau(K; N)";
  row.values = {{"limit", fmt(ex.value)},
                {"tau", fmt(target)},
                {"residual", fmt(residual)},
                {"spread", fmt(ex.spread)}};
  rep.claims.push_back(std::move(row));
  return rep;
}

}  // namespace swrt
