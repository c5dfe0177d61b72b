// SPDX-License-Identifier: Apache-2.0
// Colored WRT function tests: exact term generation against an independent
// enumeration, the two-fiber q-integer identity, certified evaluation, the
// theta-sum bridge, the root-of-unity split, and the radial limit.

#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "seifertwrt/exact_sums.hpp"
#include "seifertwrt/extrapolate.hpp"
#include "seifertwrt/wrt_qseries.hpp"

namespace {

using namespace swrt;

// Independent enumeration of Phi(q; N) straight from the quadruple sum, with
// the prefactor expanded as (-1)^{n+1} (1/2) sum_{k>=0} q^{k+1/2} and every
// exponent mapped to the (1/4P) lattice.
QSeries enumerate_phi(const SeifertLoop& loop, long N, long long cutoff) {
  const long P = loop.P();
  const int n = loop.n();
  const LoopConstants lc = loop_constants(loop);
  const Rational shift_exp = Rational(-P) * lc.c(N);
  REQUIRE(shift_exp.is_integer());
  const BigInt base_shift = shift_exp.num();
  const Rational global(n % 2 ? 1 : -1, 2);
  const BigInt cut(static_cast<long>(cutoff));

  QSeries s = qs_zero(4 * P);
  s.cutoff = cutoff;
  for (long two_l = -(N - 1); two_l <= N - 1; two_l += 2) {
    const Rational ell(two_l, 2);
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> eps(n);
      int parity = 1;
      for (int j = 0; j < n; ++j) {
        eps[j] = (mask >> j) & 1 ? -1 : 1;
        parity *= eps[j];
      }
      const long a = a_coeff(loop, ell, eps);
      for (long m = 0;; ++m) {
        const BigInt row = BigInt(2) * P * m + a;
        const BigInt k0 = row * row + base_shift + 2 * P;
        if (row > 0 && k0 > cut) break;
        if (n <= 2 && m > 0) break;
        const Rational coeff =
            global * Rational(parity) *
            (n <= 2 ? Rational(1) : Rational(binomial(m + n - 3, n - 3)));
        for (BigInt idx = k0; idx <= cut; idx += 4 * P) {
          const long long e = idx.get_si();
          auto [it, fresh] = s.terms.emplace(e, coeff);
          if (!fresh) it->second += coeff;
        }
      }
    }
  }
  for (auto it = s.terms.begin(); it != s.terms.end();) {
    it = it->second.is_zero() ? s.terms.erase(it) : std::next(it);
  }
  return s;
}

// Finite two-fiber comparison series: Phi (q^{1/2} - q^{-1/2}) equals
// q^{p1 p2 (1 - N^2)/4} sum over 2l = -(N-1)..N-1 of
// q^{p1 p2 l^2 - (p1+p2) l + 1/2} - q^{p1 p2 l^2 - (p1-p2) l - 1/2}.
QSeries torus_rhs(const SeifertLoop& loop, long N) {
  const long p1 = loop.fibers()[0].p;
  const long p2 = loop.fibers()[1].p;
  const long D = 4 * p1 * p2;
  QSeries s = qs_zero(D);
  auto add = [&](const Rational& e, const Rational& c) {
    const Rational idx = e * Rational(D);
    REQUIRE(idx.is_integer());
    auto [it, fresh] = s.terms.emplace(idx.num().get_si(), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) s.terms.erase(it);
    }
  };
  const Rational pre(p1 * p2 * (1 - N * N), 4);
  for (long two_l = -(N - 1); two_l <= N - 1; two_l += 2) {
    const Rational ell(two_l, 2);
    const Rational sq = Rational(p1 * p2) * ell * ell;
    add(pre + sq - Rational(p1 + p2) * ell + Rational(1, 2), Rational(1));
    add(pre + sq - Rational(p1 - p2) * ell - Rational(1, 2), Rational(-1));
  }
  return s;
}

}  // namespace

TEST_CASE("exact term generation") {
  SUBCASE("trefoil is identically one at N = 1") {
    const SeifertLoop trefoil = SeifertLoop::parse("2/1,3/-1");
    const PhiSeries phi = phi_series(trefoil, 1, 400);
    CHECK(phi.series.lattice_den == 24);
    CHECK(qs_equal_upto(phi.series, qs_monomial(24, 0, Rational(1)), 400));
    CHECK(qs_equal_upto(enumerate_phi(trefoil, 1, 400), phi.series, 400));
  }

  SUBCASE("trefoil N = 2 pin") {
    const SeifertLoop trefoil = SeifertLoop::parse("2/1,3/-1");
    const PhiSeries phi = phi_series(trefoil, 2, 240);
    QSeries expected = qs_zero(24);
    expected.terms = {{-108, Rational(-1)}, {-60, Rational(1)},
                      {-36, Rational(1)}, {-12, Rational(1)}};
    CHECK(qs_equal_upto(phi.series, expected, 240));
  }

  SUBCASE("independent enumeration agrees on three fibers") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    for (long N : {1L, 2L}) {
      const PhiSeries phi = phi_series(loop, N, 600);
      const QSeries oracle = enumerate_phi(loop, N, 600);
      const auto mm = qs_first_mismatch(oracle, phi.series, 600);
      CHECK(!mm.has_value());
    }
  }

  SUBCASE("independent enumeration agrees on four fibers") {
    const SeifertLoop loop = SeifertLoop::parse("2/-1,3/-2,5/3,7/4");
    const PhiSeries phi = phi_series(loop, 2, 2000);
    CHECK(phi.series.lattice_den == 840);
    CHECK(!qs_first_mismatch(enumerate_phi(loop, 2, 2000), phi.series, 2000).has_value());
  }

  SUBCASE("structural shape matches dr_series") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    const std::vector<Rational> ells{Rational(-1), Rational(0), Rational(1)};
    CHECK(qs_equal_upto(dr_series(loop, 3, ells, 500), phi_series(loop, 3, 500).series,
                        500));
  }

  SUBCASE("inadmissible arguments are rejected") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    CHECK_THROWS_AS(phi_series(loop, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(dr_series(loop, 1, {Rational(0)}, -1), std::invalid_argument);
  }
}

TEST_CASE("two-fiber loops reduce to q-integer times colored Jones") {
  SUBCASE("trefoil colors") {
    const SeifertLoop trefoil = SeifertLoop::parse("2/1,3/-1");
    const QSeries bracket =
        qs_combine(qs_monomial(24, 12, Rational(1)),
                   qs_monomial(24, -12, Rational(-1)), QSeriesOp::Add);
    for (long N = 1; N <= 5; ++N) {
      const PhiSeries phi = phi_series(trefoil, N, 720);
      const QSeries lhs = qs_combine(phi.series, bracket, QSeriesOp::Mul);
      CHECK(!qs_first_mismatch(lhs, torus_rhs(trefoil, N), lhs.cutoff).has_value());
    }
  }

  SUBCASE("(2,5) colors") {
    const SeifertLoop cinq = SeifertLoop::parse("2/1,5/-2");
    const QSeries bracket =
        qs_combine(qs_monomial(40, 20, Rational(1)),
                   qs_monomial(40, -20, Rational(-1)), QSeriesOp::Add);
    for (long N = 1; N <= 3; ++N) {
      const PhiSeries phi = phi_series(cinq, N, 1200);
      const QSeries lhs = qs_combine(phi.series, bracket, QSeriesOp::Mul);
      CHECK(!qs_first_mismatch(lhs, torus_rhs(cinq, N), lhs.cutoff).has_value());
    }
  }
}

TEST_CASE("certified evaluation inside the disk") {
  const mpfr_prec_t prec = 256;

  SUBCASE("trefoil evaluates to one") {
    const SeifertLoop trefoil = SeifertLoop::parse("2/1,3/-1");
    const HPComplex log_q(HPReal(-4, prec), HPReal(prec));
    const QSeriesEval ev = phi_eval(trefoil, 1, log_q, 200);
    CHECK(abs(ev.value - HPComplex(1, prec)) <= ev.tail_bound);
    CHECK(ev.tail_bound < HPReal::parse("1e-10", prec));
  }

  SUBCASE("longer truncations stay inside the shorter certificate") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    const HPComplex log_q(HPReal(-2, prec), HPReal(Rational(1, 3), prec));
    const QSeriesEval coarse = phi_eval(loop, 1, log_q, 400);
    const QSeriesEval fine = phi_eval(loop, 1, log_q, 1200);
    CHECK(abs(coarse.value - fine.value) <= coarse.tail_bound + fine.tail_bound);
    CHECK(fine.tail_bound < coarse.tail_bound);
  }

  SUBCASE("the boundary is rejected") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    CHECK_THROWS_AS(phi_eval(loop, 1, HPComplex(prec), 100), std::domain_error);
    CHECK_THROWS_AS(phi_eval(loop, 1, HPComplex(HPReal(prec), HPReal(1, prec)), 100),
                    std::domain_error);
  }
}

TEST_CASE("theta-sum bridge near a root of unity") {
  const mpfr_prec_t prec = kDefaultPrecision;

  SUBCASE("series route matches the theta route") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    const long K = 5;
    const long N = 2;
    const Rational t(1, 8);
    const HPReal t_r(t, prec);
    const HPComplex log_q =
        exp_i_pi(Rational(1, 2), prec) * (HPReal(2, prec) * HPReal::pi(prec) / HPReal(K, prec)) -
        HPComplex(t, prec);
    const QSeriesEval series_side = phi_eval(loop, N, log_q, 40000);

    const LoopConstants lc = loop_constants(loop);
    const HPComplex half = exp(log_q * HPReal(Rational(1, 2), prec));
    const HPComplex bracket = (half - HPComplex(1, prec) / half) * HPReal(2, prec);
    const HPComplex weight = bracket * exp(log_q * HPReal(lc.c(N) * Rational(1, 4), prec));

    const HPComplex t_scaled(HPReal(t / Rational(4 * loop.P()), prec), HPReal(prec));
    const PhiKResult theta_side = phi_k(loop, N, K, t_scaled, 2);

    const HPReal budget = abs(weight) * series_side.tail_bound + theta_side.tail_bound +
                          HPReal::pow2(-180, prec);
    CHECK(abs(weight * series_side.value - theta_side.value) <= budget);
    CHECK(budget < HPReal::parse("1e-10", prec));

    // The packaged evaluator takes the same bridge.
    const HPComplex direct = phi_eval_direct(loop, N, K, t_r);
    CHECK(abs(direct - series_side.value) <=
          series_side.tail_bound + HPReal::parse("1e-30", prec));
  }

  SUBCASE("domain errors") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    CHECK_THROWS_AS(phi_k(loop, 1, 5, HPComplex(Rational(1, 8), prec), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(phi_k(loop, 1, 5, HPComplex(prec), 2), std::domain_error);
    CHECK_THROWS_AS(phi_eval_direct(loop, 1, 5, HPReal(prec)), std::domain_error);
  }
}

TEST_CASE("root-of-unity split of the linear theta sum") {
  const mpfr_prec_t prec = kDefaultPrecision;
  const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");

  SUBCASE("the two parts reassemble the full sum") {
    for (long N : {1L, 2L}) {
      const HPReal t(Rational(1, 16), prec);
      const auto [part_a, part_b] = phi_AB(loop, N, 5, t);
      const PhiKResult full = phi_k(loop, N, 5, HPComplex(t, HPReal(prec)), 1);
      CHECK(abs(part_a + part_b - full.value) <=
            full.tail_bound + HPReal::pow2(-180, prec));
    }
  }

  SUBCASE("divisible part extrapolates to zero") {
    const long N = 1;
    std::vector<HPReal> ts;
    std::vector<HPComplex> vs;
    for (int j = 0; j < 8; ++j) {
      const HPReal t(Rational(1, 1024L << j), prec);
      ts.push_back(t);
      vs.push_back(phi_AB(loop, N, 5, t).second);
    }
    const Extrapolation ex = extrapolate_to_zero(ts, vs, 6);
    CHECK(abs(ex.value) < HPReal::parse("1e-6", prec));
  }

  SUBCASE("non-divisible part tends to the finite boundary sum") {
    // Oracle: the k-not-divisible sum with the e^{pi i/4}/sqrt(2KP)
    // normalization equals 2 (e^{pi i/K} - e^{-pi i/K}) e^{pi i c(N)/(2K)} tau.
    const LoopConstants lc = loop_constants(loop);
    const long P = loop.P();
    for (const auto& [K, N] : std::vector<std::pair<long, long>>{{5, 1}, {5, 2}, {7, 1}}) {
      HPComplex acc(prec);
      for (long k = 0; k < 2 * P * K; ++k) {
        if (k % K == 0) continue;
        HPComplex term = exp_i_pi(Rational(-k * k, 2 * K * P), prec);
        const HPComplex den = exp_i_pi(Rational(k, K), prec) - exp_i_pi(Rational(-k, K), prec);
        term *= exp_i_pi(Rational(N * k, K), prec) - exp_i_pi(Rational(-N * k, K), prec);
        for (const auto& f : loop.fibers()) {
          term *= exp_i_pi(Rational(k, K * f.p), prec) - exp_i_pi(Rational(-k, K * f.p), prec);
        }
        term = term / pow_si(den, loop.n() - 1);
        acc += term;
      }
      const HPComplex b0_sum =
          acc * (exp_i_pi(Rational(1, 4), prec) *
                 (HPReal(1, prec) / sqrt(HPReal(2 * K * P, prec))));
      const HPComplex b0_tau = (exp_i_pi(Rational(1, K), prec) - exp_i_pi(Rational(-1, K), prec)) *
                               HPReal(2, prec) * exp_i_pi(lc.c(N) * Rational(1, 2 * K), prec) *
                               tau(loop, K, N, prec);
      CHECK(abs(b0_sum - b0_tau) < HPReal::pow2(-200, prec));
    }
  }
}

TEST_CASE("radial limit against tau") {
  SUBCASE("trefoil limit is sharp") {
    const SeifertLoop trefoil = SeifertLoop::parse("2/1,3/-1");
    const VerificationReport rep =
        radial_limit(trefoil, 1, 5, Rational(1, 1024), 8, 6, 1e-20);
    CHECK(rep.all_pass());
  }

  SUBCASE("three-fiber grid points pass at defaults") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    CHECK(radial_limit(loop, 1, 5).all_pass());
    CHECK(radial_limit(loop, 2, 3).all_pass());
  }

  SUBCASE("inadmissible arguments are rejected") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    CHECK_THROWS_AS(radial_limit(loop, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(radial_limit(loop, 1, 5, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(radial_limit(loop, 1, 5, Rational(1, 1024), 3, 6), std::invalid_argument);
  }
}
