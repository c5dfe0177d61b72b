// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/qdifference.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>

namespace swrt {

namespace {

struct EpsBranch {
  int parity;
  std::vector<int> eps;
};

std::vector<EpsBranch> eps_branches(int n) {
  std::vector<EpsBranch> out;
  out.reserve(1ul << n);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    EpsBranch b{1, std::vector<int>(static_cast<std::size_t>(n), 1)};
    for (int j = 0; j < n; ++j) {
      if ((mask >> j) & 1ul) {
        b.eps[static_cast<std::size_t>(j)] = -1;
        b.parity = -b.parity;
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

BigInt qd_binomial(long m, int n) {
  if (n <= 2) return BigInt(m == 0 ? 1 : 0);
  return binomial(m + n - 3, n - 3);
}

// Rational lattice shift in units of 1/den; throws when off the lattice.
long long lattice_units(const Rational& x, long den, const char* where) {
  const Rational u = x * Rational(den);
  if (!u.is_integer())
    throw std::invalid_argument(std::string(where) + ": exponent leaves the (1/4P) lattice");
  if (!u.num().fits_slong_p())
    throw std::overflow_error(std::string(where) + ": exponent out of range");
  return u.num().get_si();
}

// Detects the (2, 2k+1) family; returns k, or nullopt for other loops.
std::optional<long> degenerate_k(const SeifertLoop& loop) {
  if (loop.n() != 2) return std::nullopt;
  const long p1 = loop.fibers()[0].p, p2 = loop.fibers()[1].p;
  if (p1 != 2 && p2 != 2) return std::nullopt;
  return ((p1 == 2 ? p2 : p1) - 1) / 2;
}

Rational rational_pow(const Rational& base, long e) {
  if (e >= 0) return base.pow(static_cast<unsigned long>(e));
  if (base.is_zero())
    throw std::domain_error("rational_pow: negative power of zero");
  return Rational(1) / base.pow(static_cast<unsigned long>(-e));
}

std::string mismatch_detail(const std::optional<std::pair<long long, Rational>>& mm,
                            long lattice_den) {
  if (!mm) return "no mismatching term";
  return "first mismatch at exponent " + std::to_string(mm->first) + "/" +
         std::to_string(lattice_den) + " with residual " + mm->second.str();
}

}  // namespace

bool QDiffOperator::Key::operator<(const Key& o) const {
  if (m_pow != o.m_pow) return m_pow < o.m_pow;
  if (l_pow != o.l_pow) return l_pow < o.l_pow;
  return q_exp < o.q_exp;
}

QDiffOperator QDiffOperator::monomial(const Rational& coeff, const Rational& q_exp,
                                      const Rational& m_pow, long l_pow) {
  if (l_pow < 0)
    throw std::invalid_argument("QDiffOperator: shift power must be >= 0");
  QDiffOperator op;
  if (!coeff.is_zero()) op.terms_.emplace(Key{m_pow, l_pow, q_exp}, coeff);
  return op;
}

std::vector<QDiffMonomial> QDiffOperator::monomials() const {
  std::vector<QDiffMonomial> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_)
    out.push_back(QDiffMonomial{c, k.q_exp, k.m_pow, k.l_pow});
  return out;
}

QDiffOperator& QDiffOperator::operator+=(const QDiffOperator& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

QDiffOperator& QDiffOperator::operator-=(const QDiffOperator& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

QDiffOperator& QDiffOperator::operator*=(const QDiffOperator& o) {
  // l^b m^c = q^{bc/2} m^c l^b moves the right factor's weight power through
  // the left factor's shift power.
  std::map<Key, Rational> prod;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      const Rational q_exp =
          ka.q_exp + kb.q_exp + Rational(ka.l_pow) * kb.m_pow / Rational(2);
      const Key k{ka.m_pow + kb.m_pow, ka.l_pow + kb.l_pow, q_exp};
      auto [it, inserted] = prod.emplace(k, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) prod.erase(it);
      }
    }
  }
  terms_ = std::move(prod);
  return *this;
}

std::string QDiffOperator::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : terms_) {
    nlohmann::json m;
    m["coeff"] = c.str();
    m["q_exp"] = k.q_exp.str();
    m["m_pow"] = k.m_pow.str();
    m["l_pow"] = k.l_pow;
    arr.push_back(std::move(m));
  }
  return arr.dump(2);
}

QSeries apply_operator(const QDiffOperator& op, const PhiFamily& family,
                       long N, long long cutoff) {
  const auto monos = op.monomials();
  if (monos.empty())
    throw std::invalid_argument("apply_operator: empty operator");
  std::optional<QSeries> acc;
  for (const QDiffMonomial& mo : monos) {
    const PhiSeries ps = family(N + mo.l_pow);
    const Rational shift = mo.q_exp + mo.m_pow * Rational(N) / Rational(2);
    const long long units =
        lattice_units(shift, ps.series.lattice_den, "apply_operator");
    QSeries shifted = qs_shift_scale(ps.series, units, mo.coeff);
    acc = acc ? qs_combine(*acc, shifted, QSeriesOp::Add) : std::move(shifted);
  }
  if (acc->cutoff < cutoff)
    throw std::invalid_argument(
        "apply_operator: family truncations cannot certify the requested cutoff");
  return qs_truncate(*acc, cutoff);
}

QSeries d_series(const SeifertLoop& loop, long N, long long cutoff) {
  if (N < 1) throw std::invalid_argument("d_series: N must be >= 1");
  if (cutoff < 0) throw std::invalid_argument("d_series: cutoff must be >= 0");
  const int n = loop.n();
  const long P = loop.P();
  const long lat = 4 * P;
  const Rational c = loop_constants(loop).c(N);
  const long long base =
      lattice_units(Rational(1, 2) - c / Rational(4), lat, "d_series");
  const Rational global(n % 2 == 0 ? -1 : 1, 2);

  QSeries qs = qs_zero(lat);
  for (long long e = base; e <= cutoff; e += lat) qs.terms.emplace(e, global);
  qs.cutoff = cutoff;
  TailCertificate cert;
  cert.P = P;
  cert.n = 2;  // one unit-coefficient term per window in the k ladder
  cert.scale = Rational(1, 2);
  cert.s0 = c / Rational(4) - Rational(1, 2);
  cert.a_max = BigInt(0);
  qs.tail = cert;
  return qs;
}

QSeries r_series(const SeifertLoop& loop, const Rational& ell, long long cutoff) {
  if (cutoff < 0) throw std::invalid_argument("r_series: cutoff must be >= 0");
  const int n = loop.n();
  const long P = loop.P();
  QSeries qs = qs_zero(4 * P);
  BigInt a_max(0);
  for (const EpsBranch& br : eps_branches(n)) {
    const long a = a_coeff(loop, ell, br.eps);
    const BigInt abs_a = abs(BigInt(a));
    if (abs_a > a_max) a_max = abs_a;
    for (long m = 0;; ++m) {
      const long long b = 2LL * P * m + a;
      const long long e = b * b;
      if (b > 0 && e > cutoff) break;
      if (n <= 2 && m > 0) break;
      if (e <= cutoff) {
        const Rational w = Rational(br.parity) * Rational(qd_binomial(m, n));
        auto [it, inserted] = qs.terms.emplace(e, w);
        if (!inserted) it->second += w;
      }
    }
  }
  for (auto it = qs.terms.begin(); it != qs.terms.end();)
    it = it->second.is_zero() ? qs.terms.erase(it) : std::next(it);
  qs.cutoff = cutoff;
  TailCertificate cert;
  cert.P = P;
  cert.n = n;
  cert.scale = Rational(1L << n);
  cert.s0 = Rational(0);
  cert.a_max = a_max;
  qs.tail = cert;
  return qs;
}

QSeries c_tilde_series(const SeifertLoop& loop, long N, long long cutoff) {
  if (N < 1) throw std::invalid_argument("c_tilde_series: N must be >= 1");
  return dr_series(loop, N + 2, {Rational(N + 1, 2), Rational(-(N + 1), 2)},
                   cutoff);
}

CBivariate c_bivariate(const SeifertLoop& loop, long a_bound) {
  if (a_bound < 0) throw std::invalid_argument("c_bivariate: bound must be >= 0");
  const int n = loop.n();
  const long P = loop.P();
  CBivariate out;
  out.P = P;
  out.n = n;
  out.a_bound = a_bound;
  for (const EpsBranch& br : eps_branches(n)) {
    for (long m = 0;; ++m) {
      const long a = a_coeff(loop, Rational(m), br.eps);
      if (a > a_bound) break;
      const long key = a < 0 ? -a : a;
      if (key <= a_bound) {
        const Rational w = Rational(br.parity) * Rational(qd_binomial(m, n));
        auto [it, inserted] = out.coeff.emplace(key, w);
        if (!inserted) it->second += w;
      }
      if (n <= 2) break;
    }
  }
  for (auto it = out.coeff.begin(); it != out.coeff.end();)
    it = it->second.is_zero() ? out.coeff.erase(it) : std::next(it);
  return out;
}

namespace {

// Smallest key bound certifying the w = q^s substitution to the cutoff:
// omitted keys |a| > bound have exponents > cutoff.
long specialize_bound(long P, long two_s, long long cutoff) {
  const long abs_s = two_s < 0 ? -two_s : two_s;
  const BigInt inner = to_bigint(cutoff) + BigInt(P) * P * abs_s * abs_s;
  const BigInt bound = BigInt(P) * abs_s + (inner > 0 ? sqrt(inner) : BigInt(0)) + 2;
  if (!bound.fits_slong_p())
    throw std::overflow_error("specialize_bound: key bound out of range");
  return bound.get_si();
}

}  // namespace

QSeries c_specialize(const SeifertLoop& loop, const CBivariate& c,
                     const Rational& s, long long cutoff) {
  if (cutoff < 0) throw std::invalid_argument("c_specialize: cutoff must be >= 0");
  const Rational two_s_r = Rational(2) * s;
  if (!two_s_r.is_integer() || !two_s_r.num().fits_slong_p())
    throw std::invalid_argument("c_specialize: s must be a half-integer");
  const long two_s = two_s_r.num().get_si();
  const long P = c.P;
  if (c.a_bound < specialize_bound(P, two_s, cutoff))
    throw std::invalid_argument(
        "c_specialize: key bound cannot certify the requested cutoff");

  QSeries qs = qs_zero(4 * P);
  for (const auto& [a, co] : c.coeff) {
    for (int sign : {1, -1}) {
      // w^{+-a} at w = q^s: lattice exponent a^2 +- 2 P a (2s).
      const long long e = static_cast<long long>(a) * a +
                          static_cast<long long>(sign) * 2 * P * a * two_s;
      if (e > cutoff) continue;
      auto [it, inserted] = qs.terms.emplace(e, co);
      if (!inserted) it->second += co;
    }
  }
  for (auto it = qs.terms.begin(); it != qs.terms.end();)
    it = it->second.is_zero() ? qs.terms.erase(it) : std::next(it);
  qs.cutoff = cutoff;

  // Omitted terms are (2Pm + a_{l',eps})^2/(4P) - P s^2 over l' = +-s.
  BigInt a_max(0);
  for (const EpsBranch& br : eps_branches(c.n)) {
    for (const Rational& ell : {s, -s}) {
      const BigInt abs_a = abs(BigInt(a_coeff(loop, ell, br.eps)));
      if (abs_a > a_max) a_max = abs_a;
    }
  }
  TailCertificate cert;
  cert.P = P;
  cert.n = c.n;
  cert.scale = Rational(1L << (c.n + 1));
  cert.s0 = Rational(BigInt(P) * two_s * two_s, BigInt(4));
  cert.a_max = a_max;
  qs.tail = cert;
  return qs;
}

StructureSeries structure_series(const SeifertLoop& loop, long N,
                                 long long cutoff) {
  if (N < 1) throw std::invalid_argument("structure_series: N must be >= 1");
  const long bound = specialize_bound(loop.P(), N + 2, cutoff);
  return StructureSeries{d_series(loop, N, cutoff),
                         r_series(loop, Rational(N + 1, 2), cutoff),
                         r_series(loop, Rational(-(N + 1), 2), cutoff),
                         c_tilde_series(loop, N, cutoff),
                         c_bivariate(loop, bound)};
}

VerificationReport verify_inhomogeneous(const SeifertLoop& loop, long N,
                                        long long cutoff) {
  if (N < 1) throw std::invalid_argument("verify_inhomogeneous: N must be >= 1");
  if (cutoff < 0)
    throw std::invalid_argument("verify_inhomogeneous: cutoff must be >= 0");
  const long P = loop.P();
  const long lat = 4 * P;

  VerificationReport rep;
  rep.command = "qdiff-inhomogeneous";
  rep.inputs = {{"loop", loop.str()},
                {"N", std::to_string(N)},
                {"cutoff", std::to_string(cutoff)}};

  {
    const long long shift = -4LL * P * P * (N + 1);  // q^{-P(N+1)}
    const QSeries lhs = phi_series(loop, N + 2, cutoff).series;
    const QSeries rhs = qs_combine(
        qs_shift_scale(phi_series(loop, N, cutoff - shift).series, shift,
                       Rational(1)),
        c_tilde_series(loop, N, cutoff), QSeriesOp::Add);
    const auto mm = qs_first_mismatch(lhs, rhs, cutoff);
    ClaimRow row;
    row.name = "inhomogeneous-exact";
    row.pass = !mm.has_value();
    row.detail = mismatch_detail(mm, lat);
    row.values = {{"terms_lhs", std::to_string(lhs.terms.size())},
                  {"terms_rhs", std::to_string(rhs.terms.size())}};
    rep.claims.push_back(std::move(row));
  }

  if (const auto k = degenerate_k(loop)) {
    // Phi(M) = -q^{(k+1/2)(1-2M)} Phi(M-1) + q^{(k+1/2)(1-M)} [2M-1]_q.
    const long M = N + 1;
    const Rational half_odd(2 * *k + 1, 2);
    const long long sh =
        lattice_units(half_odd * Rational(1 - 2 * M), lat, "verify_inhomogeneous");
    const QSeries lhs = phi_series(loop, M, cutoff).series;
    const QSeries shifted = qs_shift_scale(
        phi_series(loop, M - 1, cutoff - sh).series, sh, Rational(-1));

    QSeries qint = qs_zero(lat);
    const long long qbase =
        lattice_units(half_odd * Rational(1 - M), lat, "verify_inhomogeneous");
    for (long i = 0; i <= 2 * M - 2; ++i)
      qint.terms.emplace(qbase + static_cast<long long>(lat) * (M - 1 - i),
                         Rational(1));

    const QSeries rhs = qs_combine(shifted, qint, QSeriesOp::Add);
    const auto mm = qs_first_mismatch(lhs, rhs, cutoff);
    ClaimRow row;
    row.name = "degenerate-first-order";
    row.pass = !mm.has_value();
    row.detail = mismatch_detail(mm, lat);
    row.values = {{"color", std::to_string(M)}, {"k", std::to_string(*k)}};
    rep.claims.push_back(std::move(row));
  }
  return rep;
}

VerificationReport verify_third_order(const SeifertLoop& loop, long N,
                                      long long cutoff, mpfr_prec_t prec) {
  if (N < 1) throw std::invalid_argument("verify_third_order: N must be >= 1");
  if (cutoff < 0)
    throw std::invalid_argument("verify_third_order: cutoff must be >= 0");
  const long P = loop.P();
  const long lat = 4 * P;

  VerificationReport rep;
  rep.command = "qdiff-third-order";
  rep.inputs = {{"loop", loop.str()},
                {"N", std::to_string(N)},
                {"cutoff", std::to_string(cutoff)}};

  {
    // Exact product form; widen the working cutoff until both sides are
    // certified to the comparison cutoff (negative minimal exponents eat
    // into product cutoffs).
    const long long s1 = -4LL * P * P * (N + 1), s2 = -4LL * P * P * (N + 2);
    long long work = cutoff + 4LL * P * P * (N + 3);
    std::optional<std::pair<long long, Rational>> mm;
    bool certified = false;
    for (int attempt = 0; attempt < 6 && !certified; ++attempt) {
      const QSeries ct0 = c_tilde_series(loop, N, work);
      const QSeries ct1 = c_tilde_series(loop, N + 1, work);
      const QSeries p0 = phi_series(loop, N, work).series;
      const QSeries p1 = phi_series(loop, N + 1, work).series;
      const QSeries p2 = phi_series(loop, N + 2, work).series;
      const QSeries p3 = phi_series(loop, N + 3, work).series;
      const QSeries lhs = qs_combine(
          qs_combine(ct1, p2, QSeriesOp::Mul),
          qs_shift_scale(qs_combine(ct0, p3, QSeriesOp::Mul), 0, Rational(-1)),
          QSeriesOp::Add);
      const QSeries rhs = qs_combine(
          qs_shift_scale(qs_combine(ct1, p0, QSeriesOp::Mul), s1, Rational(1)),
          qs_shift_scale(qs_combine(ct0, p1, QSeriesOp::Mul), s2, Rational(-1)),
          QSeriesOp::Add);
      const long long have = std::min(lhs.cutoff, rhs.cutoff);
      if (have >= cutoff) {
        mm = qs_first_mismatch(lhs, rhs, cutoff);
        certified = true;
      } else {
        work += cutoff - have + lat;
      }
    }
    ClaimRow row;
    row.name = "third-order-exact";
    row.pass = certified && !mm.has_value();
    row.detail = certified ? mismatch_detail(mm, lat)
                           : "could not certify the comparison cutoff";
    row.values = {{"work_cutoff", std::to_string(work)}};
    rep.claims.push_back(std::move(row));
  }

  {
    // Ratio form at q = 3/10: C~(N+1)/C~(N) vs q^{-P/2} C(q w)/C(q^{1/2} w)
    // at w = q^{N/2}; tolerance propagated from the evaluation tails.
    const HPReal lq = log(HPReal(Rational(3, 10), prec));
    const HPComplex log_q(lq, HPReal(0L, prec));
    const QSeriesEval e0 = qs_eval(c_tilde_series(loop, N, cutoff), log_q);
    const QSeriesEval e1 = qs_eval(c_tilde_series(loop, N + 1, cutoff), log_q);
    const CBivariate cb =
        c_bivariate(loop, specialize_bound(P, N + 2, cutoff));
    const QSeriesEval sp1 =
        qs_eval(c_specialize(loop, cb, Rational(N + 1, 2), cutoff), log_q);
    const QSeriesEval sp2 =
        qs_eval(c_specialize(loop, cb, Rational(N + 2, 2), cutoff), log_q);

    ClaimRow row;
    row.name = "c-tilde-ratio-numeric";
    const HPReal den0 = abs(e0.value), den1 = abs(sp1.value);
    if (den0 <= e0.tail_bound + e0.tail_bound ||
        den1 <= sp1.tail_bound + sp1.tail_bound) {
      row.pass = false;
      row.detail = "denominator not resolved at this cutoff";
    } else {
      const HPReal qfac = exp(lq * HPReal(Rational(-P, 2), prec));
      const HPComplex lhs = e1.value / e0.value;
      const HPComplex rhs = qfac * (sp2.value / sp1.value);
      const HPReal err_lhs =
          (e1.tail_bound + abs(lhs) * e0.tail_bound) / (den0 - e0.tail_bound);
      // The q^{-P/2} prefactor amplifies the specialized-series tails.
      const HPReal err_rhs = qfac *
                             (sp2.tail_bound + abs(sp2.value / sp1.value) *
                                                   sp1.tail_bound) /
                             (den1 - sp1.tail_bound);
      // Truncation tails plus summation roundoff, which scales with the
      // evaluated magnitudes (the series have large negative exponents).
      const HPReal tol =
          (err_lhs + err_rhs) * HPReal(8L, prec) +
          (abs(lhs) + abs(rhs) + HPReal(1, prec)) *
              HPReal::pow2(vanishing_exponent(prec), prec);
      const HPReal delta = abs(lhs - rhs);
      row.pass = delta <= tol;
      row.detail = "ratio of inhomogeneous terms against the weight-variable form";
      row.values = {{"delta", fmt(delta)}, {"tol", fmt(tol)}};
    }
    rep.claims.push_back(std::move(row));
  }

  if (const auto k = degenerate_k(loop)) {
    // Second-order form at q = 1/5 with C'(w) = w - w^{-1} at w = q^{N/2}.
    const HPReal lq = log(HPReal(Rational(1, 5), prec));
    const HPComplex log_q(lq, HPReal(0L, prec));
    const auto qpow = [&](const Rational& e) {
      return exp(lq * HPReal(e, prec));
    };
    const QSeriesEval f0 = phi_eval(loop, N, log_q, cutoff);
    const QSeriesEval f1 = phi_eval(loop, N + 1, log_q, cutoff);
    const QSeriesEval f2 = phi_eval(loop, N + 2, log_q, cutoff);

    // Eliminating the inhomogeneity between colors N+1 and N+2 gives
    //   Phi(N+2) + a Phi(N+1) - b Phi(N) = 0,
    //   a = q^{-(k+1/2)(2N+3)} - q^{-(k+1/2)} [2N+3]_q / [2N+1]_q,
    //   b = q^{-(2k+1)(N+1)} [2N+3]_q / [2N+1]_q,
    // the q-deformation of l^2 + (w^{-2(2k+1)} - 1) l - w^{-2(2k+1)} with
    // C'(w) = w - w^{-1}.
    const Rational half_odd(2 * *k + 1, 2);
    const HPReal rn = qpow(Rational(3, 2) + Rational(N)) -
                      qpow(Rational(-3, 2) - Rational(N));
    const HPReal rd = qpow(Rational(1, 2) + Rational(N)) -
                      qpow(Rational(-1, 2) - Rational(N));
    const HPReal ratio = rn / rd;
    const HPReal a = qpow(Rational(-3) * half_odd) * qpow(Rational(-N * (2 * *k + 1))) -
                     qpow(-half_odd) * ratio;
    const HPReal b = qpow(Rational(-(N + 1) * (2 * *k + 1))) * ratio;

    const HPReal residual = abs(f2.value + f1.value * a - f0.value * b);
    const HPReal scale = abs(f2.value) + abs(a) * abs(f1.value) +
                         abs(b) * abs(f0.value) + HPReal(1, prec);
    const HPReal tol =
        (f2.tail_bound + abs(a) * f1.tail_bound + abs(b) * f0.tail_bound) *
            HPReal(8L, prec) +
        scale * HPReal::pow2(vanishing_exponent(prec), prec);
    ClaimRow row;
    row.name = "degenerate-second-order-numeric";
    row.pass = residual <= tol;
    row.detail = "second-order equation with the degenerate weight ratio";
    row.values = {{"residual", fmt(residual)}, {"tol", fmt(tol)}};
    rep.claims.push_back(std::move(row));
  }
  return rep;
}

LaurentPoly2 lp2_monomial(long w_exp, long l_exp, const Rational& c) {
  LaurentPoly2 p;
  if (!c.is_zero()) p.coeff.emplace(std::make_pair(w_exp, l_exp), c);
  return p;
}

LaurentPoly2 lp2_add(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r = a;
  for (const auto& [k, c] : b.coeff) {
    auto [it, inserted] = r.coeff.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.coeff.erase(it);
    }
  }
  return r;
}

LaurentPoly2 lp2_sub(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 neg;
  for (const auto& [k, c] : b.coeff) neg.coeff.emplace(k, -c);
  return lp2_add(a, neg);
}

LaurentPoly2 lp2_mul(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r;
  for (const auto& [ka, ca] : a.coeff) {
    for (const auto& [kb, cb] : b.coeff) {
      const auto k = std::make_pair(ka.first + kb.first, ka.second + kb.second);
      auto [it, inserted] = r.coeff.emplace(k, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) r.coeff.erase(it);
      }
    }
  }
  return r;
}

Rational lp2_eval(const LaurentPoly2& p, const Rational& w, const Rational& l) {
  Rational acc;
  for (const auto& [k, c] : p.coeff)
    acc += c * rational_pow(w, k.first) * rational_pow(l, k.second);
  return acc;
}

bool lp2_equal(const LaurentPoly2& a, const LaurentPoly2& b) {
  return a.coeff == b.coeff;
}

ClassicalLimit classical_limit(const SeifertLoop& loop) {
  const long P = loop.P();
  const auto k = degenerate_k(loop);

  ClassicalLimit out;
  if (!k) {
    out.expanded = lp2_add(
        lp2_add(lp2_monomial(0, 3, Rational(1)), lp2_monomial(0, 2, Rational(-1))),
        lp2_add(lp2_monomial(-2 * P, 1, Rational(-1)),
                lp2_monomial(-2 * P, 0, Rational(1))));
    out.factors = {
        lp2_sub(lp2_monomial(0, 1, Rational(1)), lp2_monomial(0, 0, Rational(1))),
        lp2_sub(lp2_monomial(0, 1, Rational(1)), lp2_monomial(-P, 0, Rational(1))),
        lp2_add(lp2_monomial(0, 1, Rational(1)), lp2_monomial(-P, 0, Rational(1)))};
  } else {
    const long ew = 2 * (2 * *k + 1);
    out.expanded = lp2_add(
        lp2_add(lp2_monomial(0, 2, Rational(1)), lp2_monomial(-ew, 1, Rational(1))),
        lp2_add(lp2_monomial(0, 1, Rational(-1)),
                lp2_monomial(-ew, 0, Rational(-1))));
    out.factors = {
        lp2_sub(lp2_monomial(0, 1, Rational(1)), lp2_monomial(0, 0, Rational(1))),
        lp2_add(lp2_monomial(0, 1, Rational(1)), lp2_monomial(-ew, 0, Rational(1)))};
  }

  LaurentPoly2 prod = lp2_monomial(0, 0, Rational(1));
  for (const LaurentPoly2& f : out.factors) prod = lp2_mul(prod, f);

  VerificationReport rep;
  rep.command = "classical-limit";
  rep.inputs = {{"loop", loop.str()}, {"form", k ? "quadratic" : "cubic"}};
  {
    ClaimRow row;
    row.name = "expansion-matches-product";
    row.pass = lp2_equal(out.expanded, prod);
    row.detail = "expanded polynomial against the product of factors";
    rep.claims.push_back(std::move(row));
  }
  {
    // Every stated root: l = 1 at any weight, and l = +-w^{-P} (degenerate:
    // l = -w^{-2(2k+1)}) at w = 2.
    const Rational w(2);
    std::vector<Rational> roots{Rational(1)};
    if (!k) {
      roots.push_back(rational_pow(w, -P));
      roots.push_back(-rational_pow(w, -P));
    } else {
      roots.push_back(-rational_pow(w, -2 * (2 * *k + 1)));
    }
    bool all_zero = true;
    for (const Rational& l : roots)
      all_zero = all_zero && lp2_eval(out.expanded, w, l).is_zero();
    ClaimRow row;
    row.name = "roots-annihilate";
    row.pass = all_zero;
    row.detail = "stated zero locus points annihilate the polynomial";
    row.values = {{"roots", std::to_string(roots.size())}};
    rep.claims.push_back(std::move(row));
  }
  out.report = std::move(rep);
  return out;
}

}  // namespace swrt
