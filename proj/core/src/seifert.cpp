// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/seifert.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace swrt {

namespace {

// (2 sinh(alpha u)) / u as a unit series: c_{2k} = 2 alpha^{2k+1} / (2k+1)!.
TaylorSeries ts_sinh_over_u(const HPComplex& alpha, int order, mpfr_prec_t prec) {
  TaylorSeries s;
  s.c.assign(static_cast<size_t>(order) + 1, HPComplex(prec));
  HPComplex term = alpha * HPReal(2, prec);
  for (int k = 0; k <= order; k += 2) {
    s.c[static_cast<size_t>(k)] = term;
    term = term * alpha * alpha * HPComplex(Rational(1, (k + 2) * (k + 3)), prec);
  }
  return s;
}

// 2 sinh(pi i r + a u) expanded in u, the half-period shift r reduced exactly:
// c_k = (e^{i pi r} a^k - e^{-i pi r} (-a)^k) / k!.
TaylorSeries ts_two_sinh_shifted(const Rational& r, const HPComplex& a, int order,
                                 mpfr_prec_t prec) {
  const HPComplex ep = exp_i_pi(r, prec);
  const HPComplex em = exp_i_pi(-r, prec);
  TaylorSeries s;
  s.c.reserve(static_cast<size_t>(order) + 1);
  HPComplex ap = HPComplex(1, prec);
  HPComplex an = HPComplex(1, prec);
  Rational inv_fact(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      ap = ap * a;
      an = an * (-a);
      inv_fact /= Rational(k);
    }
    s.c.push_back((ep * ap - em * an) * HPReal(inv_fact, prec));
  }
  return s;
}

}  // namespace

SeifertLoop::SeifertLoop(std::vector<ExceptionalFiber> fibers)
    : fibers_(std::move(fibers)) {
  if (fibers_.empty()) throw std::invalid_argument("loop needs at least one fiber");
  BigInt big_p(1);
  for (const auto& f : fibers_) {
    if (f.p < 2) throw std::invalid_argument("fiber order p must be at least 2");
    if (std::gcd(f.p, std::abs(f.q)) != 1) {
      throw std::invalid_argument("fiber p/q must be in lowest terms with gcd(p, q) = 1");
    }
    big_p *= f.p;
  }
  for (size_t i = 0; i < fibers_.size(); ++i) {
    for (size_t j = i + 1; j < fibers_.size(); ++j) {
      if (std::gcd(fibers_[i].p, fibers_[j].p) != 1) {
        throw std::invalid_argument("fiber orders must be pairwise coprime");
      }
    }
  }
  if (!big_p.fits_slong_p()) throw std::invalid_argument("product of fiber orders overflows");
  P_ = big_p.get_si();
  BigInt homology(0);
  for (const auto& f : fibers_) homology += BigInt(f.q) * (P_ / f.p);
  if (homology != 1) {
    throw std::invalid_argument("framings must satisfy sum_j q_j P / p_j = 1");
  }
}

SeifertLoop SeifertLoop::parse(const std::string& text) {
  std::vector<ExceptionalFiber> fibers;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto slash = token.find('/');
    if (slash == std::string::npos) {
      throw std::invalid_argument("fiber must be written p/q: " + token);
    }
    try {
      size_t used_p = 0, used_q = 0;
      const long p = std::stol(token.substr(0, slash), &used_p);
      const std::string qs = token.substr(slash + 1);
      const long q = std::stol(qs, &used_q);
      if (used_p != slash || used_q != qs.size()) {
        throw std::invalid_argument("trailing characters");
      }
      fibers.push_back(ExceptionalFiber{p, q});
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("fiber must be written p/q: " + token);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("fiber entry out of range: " + token);
    }
  }
  return SeifertLoop(std::move(fibers));
}

std::string SeifertLoop::str() const {
  std::ostringstream os;
  for (size_t j = 0; j < fibers_.size(); ++j) {
    if (j) os << ',';
    os << fibers_[j].p << '/' << fibers_[j].q;
  }
  return os.str();
}

Rational dedekind_sum(long q, long p, mpfr_prec_t prec) {
  if (p < 1) throw std::invalid_argument("dedekind_sum requires p >= 1");
  if (std::gcd(p, std::abs(q)) != 1) {
    throw std::invalid_argument("dedekind_sum requires gcd(q, p) = 1");
  }
  const mpfr_prec_t work = prec + 64;
  const HPReal pi = HPReal::pi(work);
  HPReal sum(0, work);
  HPReal c1(work), c2(work);
  for (long l = 1; l < p; ++l) {
    const long r = mod_nonneg(BigInt(l) * q, BigInt(p)).get_si();
    mpfr_cot(c1.raw(), (pi * HPReal(Rational(l, p), work)).raw(), MPFR_RNDN);
    mpfr_cot(c2.raw(), (pi * HPReal(Rational(r, p), work)).raw(), MPFR_RNDN);
    sum += c1 * c2;
  }
  // 6 p s(q, p) = (3/2) sum is an integer; snap and check the distance.
  const HPReal snapped = sum * HPReal(Rational(3, 2), work);
  HPReal rounded(work);
  mpfr_round(rounded.raw(), snapped.raw());
  if (!(abs(snapped - rounded) < HPReal::pow2(-static_cast<long>(prec) / 2, work))) {
    throw std::logic_error("dedekind_sum: cotangent sum failed to snap to Z/6p");
  }
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), rounded.raw(), MPFR_RNDN);
  return Rational(z, BigInt(6 * p));
}

Rational LoopConstants::c(long N) const {
  return theta0 + Rational(BigInt(N) * N - 1) * Rational(P);
}

LoopConstants loop_constants(const SeifertLoop& loop, mpfr_prec_t prec) {
  LoopConstants k;
  k.P = loop.P();
  Rational s_total(0);
  for (const auto& f : loop.fibers()) {
    k.dedekind.push_back(dedekind_sum(f.q, f.p, prec));
    s_total += k.dedekind.back();
  }
  k.theta0 = Rational(3) - Rational(1, k.P) + Rational(12) * s_total;
  if (!(k.theta0 * Rational(k.P)).is_integer()) {
    throw std::logic_error("loop_constants: P theta0 must be integral");
  }
  return k;
}

HPComplex loop_B(const SeifertLoop& loop, mpfr_prec_t prec) {
  const HPReal scale =
      HPReal(-1, prec) / (HPReal(4, prec) * sqrt(HPReal(loop.P(), prec)));
  return exp_i_pi(Rational(3, 4), prec) * scale;
}

HPComplex g0_factor(const HPComplex& kappa) {
  const mpfr_prec_t prec = kappa.prec();
  const HPComplex pi_c(HPReal::pi(prec), HPReal(0, prec));
  const HPComplex s = sin(pi_c / kappa);
  if (abs(s) < HPReal::pow2(-static_cast<long>(prec) / 2, prec)) {
    throw std::domain_error("g0_factor: sin(pi/kappa) vanishes");
  }
  return sqrt(kappa * HPReal(Rational(1, 2), prec)) / s;
}

long a_coeff(const SeifertLoop& loop, const Rational& ell, const std::vector<int>& eps) {
  const int n = loop.n();
  if (static_cast<int>(eps.size()) != n) {
    throw std::invalid_argument("a_coeff: need one sign per fiber");
  }
  const Rational two_ell = Rational(2) * ell;
  if (!two_ell.is_integer()) throw std::invalid_argument("a_coeff: 2 l must be an integer");
  long a = loop.P() * (two_ell.num().get_si() + n - 2);
  for (int j = 0; j < n; ++j) {
    if (eps[j] != 1 && eps[j] != -1) throw std::invalid_argument("a_coeff: signs must be +-1");
    a += eps[j] * (loop.P() / loop.fibers()[j].p);
  }
  return a;
}

int F_pole_order(const SeifertLoop& loop, long m) {
  int divisors = 0;
  for (const auto& f : loop.fibers()) {
    if (m % f.p == 0) ++divisors;
  }
  return loop.n() - 2 - divisors;
}

LocalFactorization F_local(const SeifertLoop& loop, long N, long m, int order,
                           mpfr_prec_t prec) {
  const int n = loop.n();
  LocalFactorization out;
  out.pole_order = F_pole_order(loop, m);

  // Factor 2 sinh(N y / 2): vanishes at every center, sign (-1)^{N m}.
  TaylorSeries num = ts_sinh_over_u(HPComplex(Rational(N, 2), prec), order, prec);
  if (((N % 2) * (m % 2)) % 2 != 0) num = ts_scale(num, HPComplex(-1, prec));

  for (const auto& f : loop.fibers()) {
    const HPComplex alpha(Rational(1, 2 * f.p), prec);
    TaylorSeries factor;
    if (m % f.p == 0) {
      factor = ts_sinh_over_u(alpha, order, prec);
      if ((m / f.p) % 2 != 0) factor = ts_scale(factor, HPComplex(-1, prec));
    } else {
      factor = ts_two_sinh_shifted(Rational(m, f.p), alpha, order, prec);
    }
    num = ts_mul(num, factor, order);
  }

  TaylorSeries den_unit = ts_sinh_over_u(HPComplex(Rational(1, 2), prec), order, prec);
  if (m % 2 != 0) den_unit = ts_scale(den_unit, HPComplex(-1, prec));
  TaylorSeries den = ts_constant(HPComplex(1, prec), order);
  for (int j = 0; j + 1 < n; ++j) den = ts_mul(den, den_unit, order);

  out.reg = ts_mul(num, ts_invert(den, order), order);
  return out;
}

HPComplex F_eval(const SeifertLoop& loop, long N, const HPComplex& y) {
  if (N < 1) throw std::invalid_argument("F_eval requires N >= 1");
  const mpfr_prec_t prec = y.prec();
  const int n = loop.n();

  // Candidate nearest center 2 pi i m; only small neighborhoods need care.
  const double im = y.im.to_double();
  const double re = y.re.to_double();
  if (std::abs(re) < 0.5 && std::abs(im) < 1e15) {
    const long m = std::lround(im / 6.283185307179586);
    const HPComplex center(HPReal(0, prec),
                           HPReal(2 * m, prec) * HPReal::pi(prec));
    const HPComplex u = y - center;
    if (abs(u) < HPReal::pow2(-static_cast<long>(prec) / 4, prec)) {
      const LocalFactorization local = F_local(loop, N, m, 16, prec);
      if (local.pole_order > 0 &&
          abs(u) < HPReal::pow2(-static_cast<long>(prec) / 2, prec)) {
        throw std::domain_error("F_eval: y is at a pole of F_N");
      }
      return ts_eval(local.reg, u) * pow_si(u, -local.pole_order);
    }
  }

  HPComplex num = two_sinh(y * HPReal(Rational(N, 2), prec));
  for (const auto& f : loop.fibers()) {
    num = num * two_sinh(y * HPReal(Rational(1, 2 * f.p), prec));
  }
  const HPComplex den = pow_si(two_sinh(y * HPReal(Rational(1, 2), prec)), n - 1);
  return num / den;
}

RationalSeries F_taylor(const SeifertLoop& loop, long N, long order) {
  if (N < 1) throw std::invalid_argument("F_taylor requires N >= 1");
  const long slack = order + loop.n() + 3;
  RationalSeries num = rs_normalize(rs_two_sinh(Rational(N, 2), slack));
  for (const auto& f : loop.fibers()) {
    num = rs_mul(num, rs_normalize(rs_two_sinh(Rational(1, 2 * f.p), slack)), slack);
  }
  RationalSeries den_unit = rs_normalize(rs_two_sinh(Rational(1, 2), slack));
  RationalSeries den{0, {Rational(1)}};
  for (int j = 0; j + 1 < loop.n(); ++j) den = rs_mul(den, den_unit, slack);
  return rs_div(num, den, order);
}

}  // namespace swrt
