// SPDX-License-Identifier: Apache-2.0
// Seifert loop data tests: fiber validation, Dedekind sums, exact constants,
// lattice residues, and the meromorphic kernel F_N.

#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "seifertwrt/seifert.hpp"

namespace {

using namespace swrt;

const char* kPoincare = "2/1,3/1,5/-4";
const char* kTrefoil = "2/1,3/-1";

}  // namespace

TEST_CASE("loop parsing and validation") {
  SUBCASE("admissible data round-trips") {
    const SeifertLoop loop = SeifertLoop::parse(kPoincare);
    CHECK(loop.n() == 3);
    CHECK(loop.P() == 30);
    CHECK(loop.fibers()[0].p == 2);
    CHECK(loop.fibers()[2].q == -4);
    CHECK(SeifertLoop::parse(loop.str()).P() == 30);
    CHECK(SeifertLoop::parse(kTrefoil).P() == 6);
    CHECK(SeifertLoop::parse("3/2,4/3,5/-7").P() == 60);
    CHECK(SeifertLoop::parse("2/-1,3/-2,5/3,7/4").P() == 210);
  }

  SUBCASE("inadmissible data is rejected") {
    CHECK_THROWS_AS(SeifertLoop::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(SeifertLoop::parse("2/1,3/1"), std::invalid_argument);     // homology
    CHECK_THROWS_AS(SeifertLoop::parse("2/1,3/1,5/4"), std::invalid_argument); // homology
    CHECK_THROWS_AS(SeifertLoop::parse("4/1,6/1,5/1"), std::invalid_argument); // coprimality
    CHECK_THROWS_AS(SeifertLoop::parse("2/2,3/1,5/1"), std::invalid_argument); // gcd(p, q)
    CHECK_THROWS_AS(SeifertLoop::parse("1/1,3/1,5/1"), std::invalid_argument); // p >= 2
    CHECK_THROWS_AS(SeifertLoop::parse("2/1,x/1"), std::invalid_argument);
    CHECK_THROWS_AS(SeifertLoop::parse("2/1,3/-1,"), std::invalid_argument);
  }
}

TEST_CASE("Dedekind sums") {
  SUBCASE("pinned values") {
    CHECK(dedekind_sum(1, 2) == Rational(0));
    CHECK(dedekind_sum(1, 3) == Rational(1, 18));
    CHECK(dedekind_sum(-4, 5) == Rational(1, 5));
    CHECK(dedekind_sum(0, 1) == Rational(0));
  }

  SUBCASE("closed form at q = 1") {
    // s(1, p) = (p - 1)(p - 2) / (12 p).
    for (long p = 2; p <= 40; ++p) {
      CHECK(dedekind_sum(1, p) == Rational((p - 1) * (p - 2), 12 * p));
    }
  }

  SUBCASE("periodicity and oddness") {
    for (long p : {5L, 7L, 12L, 25L}) {
      for (long q = 1; q < p; ++q) {
        if (std::gcd(q, p) != 1) continue;
        CHECK(dedekind_sum(q + p, p) == dedekind_sum(q, p));
        CHECK(dedekind_sum(-q, p) == -dedekind_sum(q, p));
      }
    }
  }

  SUBCASE("reciprocity") {
    // s(q, p) + s(p, q) = -1/4 + (p/q + q/p + 1/(pq)) / 12 for coprime p, q.
    for (long p = 2; p <= 30; ++p) {
      for (long q = 1; q < p; ++q) {
        if (std::gcd(q, p) != 1) continue;
        const Rational lhs = dedekind_sum(q, p) + dedekind_sum(p, q);
        const Rational rhs = Rational(-1, 4) +
                             (Rational(p, q) + Rational(q, p) + Rational(1, p * q)) *
                                 Rational(1, 12);
        CHECK(lhs == rhs);
      }
    }
  }

  SUBCASE("shared factors are rejected") {
    CHECK_THROWS_AS(dedekind_sum(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(dedekind_sum(3, 0), std::invalid_argument);
  }
}

TEST_CASE("loop constants") {
  SUBCASE("Poincare-sphere values") {
    const SeifertLoop loop = SeifertLoop::parse(kPoincare);
    const LoopConstants lc = loop_constants(loop);
    CHECK(lc.P == 30);
    REQUIRE(lc.dedekind.size() == 3);
    CHECK(lc.dedekind[0] == Rational(0));
    CHECK(lc.dedekind[1] == Rational(1, 18));
    CHECK(lc.dedekind[2] == Rational(1, 5));
    CHECK(lc.theta0 == Rational(181, 30));
    CHECK(lc.c(1) == lc.theta0);
    CHECK(lc.c(3) == Rational(181, 30) + Rational(240));
  }

  SUBCASE("trefoil values") {
    const LoopConstants lc = loop_constants(SeifertLoop::parse(kTrefoil));
    CHECK(lc.theta0 == Rational(13, 6));
    CHECK(lc.c(2) == Rational(13, 6) + Rational(18));
  }

  SUBCASE("P theta0 is integral across a family") {
    for (const char* text : {kPoincare, kTrefoil, "2/1,3/-1,7/-1", "2/1,3/1,11/-9",
                             "3/2,4/3,5/-7", "2/-1,3/-2,5/3,7/4", "2/1,5/-2"}) {
      const SeifertLoop loop = SeifertLoop::parse(text);
      const LoopConstants lc = loop_constants(loop);
      CHECK((lc.theta0 * Rational(lc.P)).is_integer());
    }
  }

  SUBCASE("normalization constant") {
    const mpfr_prec_t prec = 256;
    const SeifertLoop loop = SeifertLoop::parse(kPoincare);
    const HPComplex b = loop_B(loop, prec);
    const HPReal quarter_root = HPReal(1, prec) / (HPReal(4, prec) * sqrt(HPReal(30, prec)));
    const HPComplex expected = -(exp_i_pi(Rational(3, 4), prec) * quarter_root);
    CHECK(abs(b - expected) < HPReal::pow2(-240, prec));
  }
}

TEST_CASE("resummation prefactor g0") {
  const mpfr_prec_t prec = 256;
  const HPReal tiny = HPReal::pow2(-200, prec);
  CHECK(abs(g0_factor(HPComplex(2, prec)) - HPComplex(1, prec)) < tiny);
  CHECK(abs(g0_factor(HPComplex(4, prec)) - HPComplex(2, prec)) < tiny);
  const HPComplex g6 = g0_factor(HPComplex(6, prec));
  const HPComplex target(HPReal(2, prec) * sqrt(HPReal(3, prec)), HPReal(prec));
  CHECK(abs(g6 - target) < tiny);
  // Defining property at a complex argument.
  const HPComplex kappa(HPReal(6, prec), HPReal(-2, prec));
  const HPComplex g = g0_factor(kappa);
  const HPComplex pi_over_kappa = HPComplex(HPReal::pi(prec), HPReal(prec)) / kappa;
  const HPComplex half_kappa = kappa * HPReal(Rational(1, 2), prec);
  CHECK(abs(g * g * sin(pi_over_kappa) * sin(pi_over_kappa) - half_kappa) < tiny);
  CHECK(g.re.sign() > 0);
  CHECK_THROWS_AS(g0_factor(HPComplex(1, prec)), std::domain_error);
}

TEST_CASE("lattice residues") {
  const SeifertLoop loop = SeifertLoop::parse(kPoincare);
  SUBCASE("pinned values") {
    CHECK(a_coeff(loop, Rational(0), {1, 1, 1}) == 61);
    CHECK(a_coeff(loop, Rational(0), {-1, -1, -1}) == -1);
    CHECK(a_coeff(loop, Rational(1, 2), {1, 1, 1}) == 91);
    CHECK(a_coeff(loop, Rational(-1, 2), {1, -1, 1}) == 11);
  }

  SUBCASE("sign flip negates together with l -> -l - (n - 2)") {
    // a_{l,eps} is odd under the lattice involution.
    for (long two_ell = -3; two_ell <= 3; ++two_ell) {
      const Rational ell(two_ell, 2);
      const Rational mirrored = -ell - Rational(1);
      for (int mask = 0; mask < 8; ++mask) {
        const std::vector<int> eps{(mask & 1) ? 1 : -1, (mask & 2) ? 1 : -1,
                                   (mask & 4) ? 1 : -1};
        const std::vector<int> neg{-eps[0], -eps[1], -eps[2]};
        CHECK(a_coeff(loop, ell, eps) == -a_coeff(loop, mirrored, neg));
      }
    }
  }

  SUBCASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(a_coeff(loop, Rational(1, 4), {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(a_coeff(loop, Rational(0), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(a_coeff(loop, Rational(0), {1, 0, 1}), std::invalid_argument);
  }
}

TEST_CASE("meromorphic kernel F_N") {
  const mpfr_prec_t prec = 256;
  const SeifertLoop loop = SeifertLoop::parse(kPoincare);
  const SeifertLoop trefoil = SeifertLoop::parse(kTrefoil);

  SUBCASE("even under y -> -y") {
    const HPComplex y(HPReal(Rational(1, 3), prec), HPReal(Rational(2, 7), prec));
    for (long N : {1L, 2L, 5L}) {
      CHECK(abs(F_eval(loop, N, y) - F_eval(loop, N, -y)) < HPReal::pow2(-220, prec));
    }
  }

  SUBCASE("exact expansion at the origin") {
    for (long N : {1L, 4L}) {
      const RationalSeries rs = F_taylor(loop, N, 12);
      CHECK(rs.shift == 2);
      CHECK(rs.c[0] == Rational(N, 30));
      for (std::size_t j = 1; j < rs.c.size(); j += 2) CHECK(rs.c[j] == Rational(0));
    }
  }

  SUBCASE("expansion matches direct evaluation") {
    const RationalSeries rs = F_taylor(loop, 2, 24);
    const HPReal y(Rational(1, 16), prec);
    HPReal sum(prec);
    HPReal power = pow_si(y, rs.shift);
    for (const Rational& c : rs.c) {
      sum += HPReal(c, prec) * power;
      power *= y;
    }
    const HPComplex direct = F_eval(loop, 2, HPComplex(y, HPReal(prec)));
    CHECK(abs(direct - HPComplex(sum, HPReal(prec))) < HPReal::parse("1e-30", prec));
  }

  SUBCASE("pole orders on the center lattice") {
    CHECK(F_pole_order(loop, 0) == -2);
    CHECK(F_pole_order(loop, 1) == 1);
    CHECK(F_pole_order(loop, 2) == 0);
    CHECK(F_pole_order(loop, 6) == -1);
    CHECK(F_pole_order(loop, 30) == -2);
    CHECK(F_pole_order(trefoil, 1) == 0);
    CHECK(F_pole_order(trefoil, 2) == -1);
    CHECK(F_pole_order(SeifertLoop::parse("2/-1,3/-2,5/3,7/4"), 1) == 2);
  }

  SUBCASE("true poles throw, removable points evaluate") {
    const HPReal two_pi = HPReal(2, prec) * HPReal::pi(prec);
    const HPComplex pole(HPReal(prec), two_pi);
    CHECK_THROWS_AS(F_eval(loop, 1, pole), std::domain_error);
    // Trefoil: center m = 1 is removable; value agrees with the local unit.
    const LocalFactorization lf = F_local(trefoil, 2, 1, 6, prec);
    CHECK(lf.pole_order == 0);
    const HPComplex at_center = F_eval(trefoil, 2, pole);
    CHECK(abs(at_center - lf.reg.c[0]) < HPReal::pow2(-200, prec));
    // Zero of order 2 at m = 6: the value vanishes.
    const HPComplex far(HPReal(prec), HPReal(6, prec) * two_pi);
    CHECK(abs(F_eval(trefoil, 2, far)) < HPReal::pow2(-200, prec));
  }

  SUBCASE("local factorization starts with a unit") {
    for (long m : {1L, 2L, 6L}) {
      const LocalFactorization lf = F_local(loop, 2, m, 5, prec);
      CHECK(lf.pole_order == F_pole_order(loop, m));
      CHECK(abs(lf.reg.c[0]).sign() > 0);
    }
  }

  SUBCASE("precision tracks the argument") {
    const HPComplex lo(HPReal(Rational(1, 3), 128), HPReal(Rational(1, 7), 128));
    const HPComplex hi(HPReal(Rational(1, 3), 320), HPReal(Rational(1, 7), 320));
    const HPComplex a = F_eval(loop, 3, lo);
    const HPComplex b = F_eval(loop, 3, hi);
    CHECK(abs(a - b) < HPReal::pow2(-110, 320));
  }
}
