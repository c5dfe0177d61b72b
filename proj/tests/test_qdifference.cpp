// SPDX-License-Identifier: Apache-2.0
// Difference-structure tests: the normal-ordered operator algebra, the exact
// action on color families, the structure series behind the color recursion,
// the inhomogeneous and homogeneous equations, and the classical limit.

#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "seifertwrt/qdifference.hpp"

namespace {

using namespace swrt;

QDiffOperator weight_op() { return QDiffOperator::monomial(Rational(1), Rational(0), Rational(1), 0); }
QDiffOperator shift_op() { return QDiffOperator::monomial(Rational(1), Rational(0), Rational(0), 1); }

QDiffOperator random_word(std::mt19937& rng, int length) {
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<long> lp(0, 2);
  QDiffOperator acc = QDiffOperator::monomial(Rational(1), Rational(0), Rational(0), 0);
  for (int j = 0; j < length; ++j) {
    long num = small(rng);
    if (num == 0) num = 1;
    acc *= QDiffOperator::monomial(Rational(num, den(rng)), Rational(small(rng), 2),
                                   Rational(small(rng), 2), lp(rng));
  }
  return acc;
}

// Brute-force framings q_j with sum_j q_j P/p_j = 1 for given fiber orders.
SeifertLoop find_loop(std::vector<long> orders) {
  long P = 1;
  for (long p : orders) P *= p;
  const int n = static_cast<int>(orders.size());
  std::vector<long> q(n, 0);
  std::function<bool(int, long)> search = [&](int j, long acc) {
    if (j == n - 1) {
      const long v = P / orders[j];
      const long rem = 1 - acc;
      if (rem % v != 0) return false;
      q[j] = rem / v;
      return q[j] != 0 && std::gcd(std::abs(q[j]), orders[j]) == 1;
    }
    for (long c = -orders[j]; c <= orders[j]; ++c) {
      if (c == 0 || std::gcd(std::abs(c), orders[j]) != 1) continue;
      q[j] = c;
      if (search(j + 1, acc + c * (P / orders[j]))) return true;
    }
    return false;
  };
  REQUIRE(search(0, 0));
  std::vector<ExceptionalFiber> fibers;
  for (int j = 0; j < n; ++j) fibers.push_back({orders[j], q[j]});
  return SeifertLoop(fibers);
}

LaurentPoly2 cubic_expected(long P) {
  LaurentPoly2 p = lp2_monomial(0, 3, Rational(1));
  p = lp2_add(p, lp2_monomial(0, 2, Rational(-1)));
  p = lp2_add(p, lp2_monomial(-2 * P, 1, Rational(-1)));
  return lp2_add(p, lp2_monomial(-2 * P, 0, Rational(1)));
}

LaurentPoly2 quadratic_expected(long e) {
  LaurentPoly2 p = lp2_monomial(0, 2, Rational(1));
  p = lp2_add(p, lp2_monomial(-e, 1, Rational(1)));
  p = lp2_add(p, lp2_monomial(0, 1, Rational(-1)));
  return lp2_add(p, lp2_monomial(-e, 0, Rational(-1)));
}

}  // namespace

TEST_CASE("normal-ordered operator algebra") {
  SUBCASE("defining relation") {
    const QDiffOperator lm = shift_op() * weight_op();
    const QDiffOperator expected =
        QDiffOperator::monomial(Rational(1), Rational(1, 2), Rational(1), 1);
    CHECK(lm == expected);
    // The opposite order stays normal with no q-power.
    CHECK(weight_op() * shift_op() ==
          QDiffOperator::monomial(Rational(1), Rational(0), Rational(1), 1));
  }

  SUBCASE("squared mixed word") {
    const QDiffOperator ml = weight_op() * shift_op();
    CHECK(ml * ml == QDiffOperator::monomial(Rational(1), Rational(1, 2), Rational(2), 2));
  }

  SUBCASE("associativity and distributivity on random words") {
    std::mt19937 rng(977u);
    for (int trial = 0; trial < 12; ++trial) {
      const QDiffOperator a = random_word(rng, 2);
      const QDiffOperator b = random_word(rng, 2);
      const QDiffOperator c = random_word(rng, 2);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a - a == QDiffOperator());
      CHECK((a - a).is_zero());
    }
  }

  SUBCASE("serialization is populated") {
    const QDiffOperator op = weight_op() + shift_op();
    CHECK(op.monomials().size() == 2);
    CHECK(op.to_json().find("m_pow") != std::string::npos);
  }
}

TEST_CASE("operator action on color families") {
  const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
  const long P = loop.P();
  const long long cutoff = 500;
  const auto family = [&](long M) { return phi_series(loop, M, cutoff + 4 * P * M + 200); };

  SUBCASE("weight operator multiplies by q^{N/2}") {
    for (long N : {1L, 2L}) {
      const QSeries got = apply_operator(weight_op(), family, N, cutoff);
      const QSeries expected =
          qs_truncate(qs_shift_scale(family(N).series, 2 * P * N, Rational(1)), cutoff);
      CHECK(qs_equal_upto(got, expected, cutoff));
    }
  }

  SUBCASE("shift operator advances the color") {
    const QSeries got = apply_operator(shift_op(), family, 1, cutoff);
    CHECK(qs_equal_upto(got, qs_truncate(family(2).series, cutoff), cutoff));
  }

  SUBCASE("composite matches hand application") {
    // (l m) Phi at N is q^{(N+1)/2} Phi(N+1).
    const long N = 1;
    const QSeries got = apply_operator(shift_op() * weight_op(), family, N, cutoff);
    const QSeries expected = qs_truncate(
        qs_shift_scale(family(N + 1).series, 2 * P * (N + 1), Rational(1)), cutoff);
    CHECK(qs_equal_upto(got, expected, cutoff));
  }

  SUBCASE("linearity") {
    const QDiffOperator a = weight_op() * weight_op();
    const QDiffOperator b = shift_op();
    const QSeries sum = apply_operator(a + b, family, 1, cutoff);
    const QSeries parts = qs_combine(apply_operator(a, family, 1, cutoff),
                                     apply_operator(b, family, 1, cutoff), QSeriesOp::Add);
    CHECK(qs_equal_upto(sum, parts, cutoff));
  }

  SUBCASE("empty operators and starved families are rejected") {
    CHECK_THROWS_AS(apply_operator(QDiffOperator(), family, 1, cutoff),
                    std::invalid_argument);
    const auto starved = [&](long M) { return phi_series(loop, M, 10); };
    CHECK_THROWS_AS(apply_operator(shift_op(), starved, 1, cutoff), std::invalid_argument);
  }
}

TEST_CASE("structure series of the color recursion") {
  const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
  const long P = loop.P();
  const long long cutoff = 1500;

  SUBCASE("prefactor series has the geometric comb shape") {
    const long N = 2;
    const LoopConstants lc = loop_constants(loop);
    const Rational shift_exp = Rational(-P) * lc.c(N);
    REQUIRE(shift_exp.is_integer());
    QSeries expected = qs_zero(4 * P);
    expected.cutoff = cutoff;
    const long long base = shift_exp.num().get_si() + 2 * P;
    const Rational coeff(loop.n() % 2 ? 1 : -1, 2);
    for (long long e = base; e <= cutoff; e += 4 * P) expected.terms.emplace(e, coeff);
    CHECK(qs_equal_upto(d_series(loop, N, cutoff), expected, cutoff));
  }

  SUBCASE("color shift of the prefactor is the exact monomial q^{-P(N+1)}") {
    const long N = 1;
    const QSeries lhs = d_series(loop, N + 2, cutoff);
    const QSeries rhs =
        qs_shift_scale(d_series(loop, N, cutoff + 4 * P * P * (N + 1)),
                       -4 * P * P * (N + 1), Rational(1));
    CHECK(qs_equal_upto(lhs, rhs, cutoff));
  }

  SUBCASE("paired lattice sums specialize the bivariate series") {
    // R((N+1)/2) + R(-(N+1)/2) = q^{P(N+1)^2/4} C(q^{(N+1)/2}).
    for (long N : {1L, 2L}) {
      const StructureSeries ss = structure_series(loop, N, cutoff);
      const QSeries paired = qs_combine(ss.r_plus, ss.r_minus, QSeriesOp::Add);
      // The bivariate bound for N + 2 dominates the N + 1 substitution here.
      const QSeries spec = c_specialize(loop, ss.c, Rational(N + 1, 2), cutoff);
      const long long shift = P * P * (N + 1) * (N + 1);
      const QSeries lifted = qs_shift_scale(spec, shift, Rational(1));
      CHECK(qs_equal_upto(paired, lifted, paired.cutoff));
    }
  }

  SUBCASE("inhomogeneous term is the prefactored pair") {
    // C~(N) multiplies the prefactor at color N + 2 against the paired sum.
    const long N = 1;
    const QSeries d2 = d_series(loop, N + 2, cutoff + 200);
    const long long pair_cutoff = cutoff - d2.min_exp() + 100;
    const QSeries paired =
        qs_combine(r_series(loop, Rational(N + 1, 2), pair_cutoff),
                   r_series(loop, Rational(-(N + 1), 2), pair_cutoff), QSeriesOp::Add);
    const QSeries prod = qs_combine(d2, paired, QSeriesOp::Mul);
    REQUIRE(prod.cutoff >= cutoff);
    CHECK(qs_equal_upto(c_tilde_series(loop, N, cutoff), prod, cutoff));
  }
}

TEST_CASE("inhomogeneous color recursion") {
  SUBCASE("identity holds exactly and tampering is detected") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    const long P = loop.P();
    const long N = 1;
    const long long cutoff = 600;
    const long long shift = 4 * P * P * (N + 1);
    const QSeries shifted = qs_shift_scale(phi_series(loop, N, cutoff + shift).series,
                                           -shift, Rational(1));
    const QSeries rhs =
        qs_combine(shifted, c_tilde_series(loop, N, cutoff), QSeriesOp::Add);
    const QSeries lhs = phi_series(loop, N + 2, cutoff).series;
    CHECK(qs_equal_upto(lhs, rhs, cutoff));

    const QSeries tampered =
        qs_combine(rhs, qs_monomial(4 * P, 137, Rational(1)), QSeriesOp::Add);
    const auto mm = qs_first_mismatch(lhs, tampered, cutoff);
    REQUIRE(mm.has_value());
    CHECK(mm->first == 137);
    CHECK(mm->second == Rational(-1));
  }

  SUBCASE("packaged verification passes") {
    CHECK(verify_inhomogeneous(SeifertLoop::parse("2/1,3/1,5/-4"), 1, 2000).all_pass());
    CHECK(verify_inhomogeneous(SeifertLoop::parse("2/1,3/-1"), 1, 2000).all_pass());
    CHECK(verify_inhomogeneous(SeifertLoop::parse("2/1,5/-2"), 2, 2000).all_pass());
  }
}

TEST_CASE("homogeneous equation") {
  SUBCASE("three-fiber loops") {
    CHECK(verify_third_order(SeifertLoop::parse("2/1,3/1,5/-4"), 1, 2000).all_pass());
    CHECK(verify_third_order(SeifertLoop::parse("2/1,3/-1,7/-1"), 2, 2000).all_pass());
  }

  SUBCASE("two-fiber loops include the second-order reduction") {
    const VerificationReport trefoil =
        verify_third_order(SeifertLoop::parse("2/1,3/-1"), 1, 2000);
    CHECK(trefoil.all_pass());
    CHECK(verify_third_order(SeifertLoop::parse("2/1,5/-2"), 1, 2000).all_pass());
  }
}

TEST_CASE("classical limit") {
  SUBCASE("generic cubic factorization") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    const ClassicalLimit cl = classical_limit(loop);
    CHECK(cl.report.all_pass());
    CHECK(lp2_equal(cl.expanded, cubic_expected(loop.P())));
    REQUIRE(cl.factors.size() == 3);
    LaurentPoly2 prod = cl.factors[0];
    for (std::size_t j = 1; j < cl.factors.size(); ++j) prod = lp2_mul(prod, cl.factors[j]);
    CHECK(lp2_equal(prod, cl.expanded));
    // Roots l = 1, l = w^{-P}, l = -w^{-P} annihilate the cubic at w = 2.
    const Rational w(2);
    const Rational root = Rational(1, 2).pow(30);
    CHECK(lp2_eval(cl.expanded, w, Rational(1)) == Rational(0));
    CHECK(lp2_eval(cl.expanded, w, root) == Rational(0));
    CHECK(lp2_eval(cl.expanded, w, -root) == Rational(0));
    CHECK(lp2_eval(cl.expanded, w, Rational(2)) != Rational(0));
  }

  SUBCASE("degenerate quadratic factorization") {
    const SeifertLoop cinq = SeifertLoop::parse("2/1,5/-2");
    const ClassicalLimit cl = classical_limit(cinq);
    CHECK(cl.report.all_pass());
    CHECK(lp2_equal(cl.expanded, quadratic_expected(10)));
    REQUIRE(cl.factors.size() == 2);
    CHECK(lp2_equal(lp2_mul(cl.factors[0], cl.factors[1]), cl.expanded));
    const Rational w(3);
    const Rational root = -Rational(1, 3).pow(10);
    CHECK(lp2_eval(cl.expanded, w, Rational(1)) == Rational(0));
    CHECK(lp2_eval(cl.expanded, w, root) == Rational(0));
  }

  SUBCASE("family sweep") {
    const std::vector<std::vector<long>> generic{
        {2, 3, 5}, {2, 3, 7}, {2, 3, 11}, {2, 3, 13}, {2, 5, 7},
        {2, 5, 9}, {3, 4, 5}, {3, 5, 7}, {2, 7, 9}, {4, 5, 7},
        {3, 4, 7}, {2, 3, 25}, {5, 6, 7}, {2, 3, 5, 7}, {2, 3, 5, 11}};
    for (const auto& orders : generic) {
      const SeifertLoop loop = find_loop(orders);
      const ClassicalLimit cl = classical_limit(loop);
      CHECK(cl.report.all_pass());
      CHECK(lp2_equal(cl.expanded, cubic_expected(loop.P())));
    }
    for (long k = 1; k <= 5; ++k) {
      const SeifertLoop loop = find_loop({2, 2 * k + 1});
      const ClassicalLimit cl = classical_limit(loop);
      CHECK(cl.report.all_pass());
      CHECK(lp2_equal(cl.expanded, quadratic_expected(2 * (2 * k + 1))));
    }
  }

  SUBCASE("lp2 helper algebra") {
    const LaurentPoly2 a = lp2_add(lp2_monomial(1, 0, Rational(2)),
                                   lp2_monomial(0, -1, Rational(-1)));
    const LaurentPoly2 b = lp2_monomial(-1, 1, Rational(3));
    const LaurentPoly2 ab = lp2_mul(a, b);
    CHECK(lp2_eval(ab, Rational(2), Rational(5)) ==
          lp2_eval(a, Rational(2), Rational(5)) * lp2_eval(b, Rational(2), Rational(5)));
    CHECK(lp2_equal(lp2_sub(ab, ab), LaurentPoly2{}));
  }
}
