// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace swrt {

namespace {

constexpr long long kComplete = QSeries::kComplete;

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("QSeries: exponent overflow");
  return r;
}

// Saturating shift of a cutoff: a complete series stays complete.
long long sat_add(long long cutoff, long long shift) {
  return cutoff == kComplete ? kComplete : checked_add(cutoff, shift);
}

void require_same_lattice(const QSeries& a, const QSeries& b) {
  if (a.lattice_den != b.lattice_den)
    throw std::invalid_argument("qs_combine: lattice denominators differ");
}

void insert_term(std::map<long long, Rational>& m, long long e, const Rational& c) {
  auto [it, fresh] = m.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  } else if (c.is_zero()) {
    m.erase(it);
  }
}

}  // namespace

// Largest admissible binomial index m for a window at level x (rounded up),
// or -1 when the window is empty.
static long window_m(const TailCertificate& tc, const HPReal& x) {
  mpfr_prec_t p = x.prec();
  HPReal arg = add_up(add_up(x, HPReal(1L, p)), HPReal(tc.s0, p));
  arg = mul_up(arg, HPReal(4 * tc.P, p));
  if (arg.sign() < 0) return -1;
  HPReal sq(p);
  mpfr_sqrt(sq.raw(), arg.raw(), MPFR_RNDU);
  HPReal m_real = div_up(add_up(sq, HPReal(tc.a_max, p)), HPReal(2 * tc.P, p));
  if (m_real.sign() < 0) return -1;
  HPReal m_floor(p);
  mpfr_floor(m_floor.raw(), m_real.raw());
  return m_floor.to_long();
}

HPReal TailCertificate::mass_bound(const HPReal& x) const {
  // All operations round up so the result is a true upper bound.
  mpfr_prec_t p = x.prec();
  long M = window_m(*this, x);
  if (M < 0) return HPReal(p);  // no admissible m: zero mass
  BigInt count = n >= 3 ? binomial(M + n - 2, n - 2) : BigInt(1);
  return mul_up(HPReal(scale, p), HPReal(count, p));
}

QSeries qs_zero(long lattice_den) {
  QSeries s;
  s.lattice_den = lattice_den;
  return s;
}

QSeries qs_monomial(long lattice_den, long long index, const Rational& coeff) {
  QSeries s = qs_zero(lattice_den);
  if (!coeff.is_zero()) s.terms.emplace(index, coeff);
  return s;
}

QSeries qs_combine(const QSeries& a, const QSeries& b, QSeriesOp op) {
  require_same_lattice(a, b);
  QSeries r = qs_zero(a.lattice_den);
  if (op == QSeriesOp::Add) {
    r.cutoff = std::min(a.cutoff, b.cutoff);
    r.terms = a.terms;
    for (const auto& [e, c] : b.terms) insert_term(r.terms, e, c);
    r.terms.erase(r.terms.upper_bound(r.cutoff), r.terms.end());
    // The omitted set matches the certified operand when the other is exact.
    if (a.complete() && !b.complete()) r.tail = b.tail;
    if (b.complete() && !a.complete()) r.tail = a.tail;
    return r;
  }
  // Multiplication.  An exactly-zero complete factor gives an exact zero.
  if ((a.complete() && a.terms.empty()) || (b.complete() && b.terms.empty())) return r;
  r.cutoff = std::min(sat_add(a.cutoff, b.min_exp()), sat_add(b.cutoff, a.min_exp()));
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      long long e = checked_add(ea, eb);
      if (r.cutoff != kComplete && e > r.cutoff) continue;
      insert_term(r.terms, e, ca * cb);
    }
  }
  return r;
}

QSeries qs_shift_scale(const QSeries& s, long long shift, const Rational& c) {
  QSeries r = qs_zero(s.lattice_den);
  if (c.is_zero()) return r;
  r.cutoff = sat_add(s.cutoff, shift);
  for (const auto& [e, coeff] : s.terms) r.terms.emplace(checked_add(e, shift), coeff * c);
  if (s.tail) {
    TailCertificate t = *s.tail;
    t.s0 -= Rational(to_bigint(shift), BigInt(s.lattice_den));
    Rational mag = c.sign() < 0 ? -c : c;
    t.scale *= mag;
    r.tail = t;
  }
  return r;
}

QSeries qs_truncate(const QSeries& s, long long new_cutoff) {
  QSeries r = s;
  if (new_cutoff < r.cutoff || r.cutoff == kComplete) r.cutoff = new_cutoff;
  r.terms.erase(r.terms.upper_bound(r.cutoff), r.terms.end());
  if (s.complete()) r.tail.reset();  // dropped terms are no longer accounted for
  return r;
}

std::optional<std::pair<long long, Rational>> qs_first_mismatch(
    const QSeries& a, const QSeries& b, long long upto) {
  require_same_lattice(a, b);
  if (a.cutoff < upto || b.cutoff < upto)
    throw std::invalid_argument(
        "qs_first_mismatch: operands not certified to the comparison cutoff");
  auto ia = a.terms.begin(), ib = b.terms.begin();
  while (true) {
    bool ea = ia == a.terms.end() || ia->first > upto;
    bool eb = ib == b.terms.end() || ib->first > upto;
    if (ea && eb) return std::nullopt;
    if (eb || (!ea && ia->first < ib->first))
      return std::make_pair(ia->first, ia->second);
    if (ea || ib->first < ia->first)
      return std::make_pair(ib->first, -ib->second);
    if (ia->second != ib->second)
      return std::make_pair(ia->first, ia->second - ib->second);
    ++ia;
    ++ib;
  }
}

bool qs_equal_upto(const QSeries& a, const QSeries& b, long long upto) {
  return !qs_first_mismatch(a, b, upto).has_value();
}

QSeriesEval qs_eval(const QSeries& s, const HPComplex& log_q) {
  mpfr_prec_t p = std::max<mpfr_prec_t>(log_q.prec(), kDefaultPrecision);
  if (log_q.re.sign() >= 0) throw std::invalid_argument("qs_eval: requires |q| < 1");
  QSeriesEval out;
  out.value = HPComplex(p);
  out.tail_bound = HPReal(p);
  for (const auto& [e, c] : s.terms) {
    HPReal x(s.exponent(e), p);
    out.value += HPReal(c, p) * exp(HPComplex(x * log_q.re, x * log_q.im));
  }
  if (s.complete()) return out;
  if (!s.tail)
    throw std::invalid_argument("qs_eval: truncated series carries no tail certificate");

  // Certified tail: sum upper bounds over unit exponent windows [X+j, X+j+1)
  // and close with a geometric remainder once the window-to-window ratio is
  // provably below one.  Directed rounding keeps every step an upper bound.
  const TailCertificate& tc = *s.tail;
  HPReal u = -log_q.re;  // > 0
  HPReal x_lo(p), x_hi(p);
  mpfr_set_q(x_lo.raw(), Rational(to_bigint(s.cutoff), BigInt(s.lattice_den)).raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(x_hi.raw(), Rational(to_bigint(s.cutoff), BigInt(s.lattice_den)).raw().get_mpq_t(), MPFR_RNDU);
  HPReal q_ratio(p);
  {
    HPReal mu = -u;
    mpfr_exp(q_ratio.raw(), mu.raw(), MPFR_RNDU);
  }
  HPReal total(p);
  for (long j = 0;; ++j) {
    if (j > 1000000) throw std::runtime_error("qs_eval: tail bound failed to converge");
    HPReal mass = tc.mass_bound(x_hi);
    HPReal t(p);
    mpfr_mul(t.raw(), u.raw(), x_lo.raw(), MPFR_RNDD);
    mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);  // exact
    HPReal decay(p);
    mpfr_exp(decay.raw(), t.raw(), MPFR_RNDU);
    HPReal term = mul_up(mass, decay);
    total = add_up(total, term);
    // Geometric closure: once x+1+s0 >= 1 the admissible index M advances by
    // at most one per window, so every later window ratio is bounded by
    // q_ratio * (M+n-1)/(M+1), which is nonincreasing in M.
    HPReal guard(p);
    mpfr_add_q(guard.raw(), x_lo.raw(), tc.s0.raw().get_mpq_t(), MPFR_RNDD);
    long M = window_m(tc, x_hi);
    if (j >= 1 && guard.sign() >= 0 && M >= 0 && mass.sign() > 0) {
      HPReal rho = tc.n >= 3
                       ? mul_up(q_ratio, div_up(HPReal(M + tc.n - 1, p), HPReal(M + 1, p)))
                       : q_ratio;
      if (rho < HPReal(1L, p)) {
        HPReal rem = div_up(mul_up(term, rho), sub_down(HPReal(1L, p), rho));
        total = add_up(total, rem);
        break;
      }
    }
    x_lo += HPReal(1L, p);
    x_hi = add_up(x_hi, HPReal(1L, p));
  }
  out.tail_bound = total;
  return out;
}

std::string qs_to_csv(const QSeries& s) {
  std::ostringstream os;
  for (const auto& [e, c] : s.terms) {
    Rational x = s.exponent(e);
    os << x.num() << ',' << x.den() << ',' << c.num() << ',' << c.den() << '\n';
  }
  return os.str();
}

}  // namespace swrt
