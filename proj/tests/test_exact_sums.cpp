// SPDX-License-Identifier: Apache-2.0
// Root-of-unity sum tests: tau and its normalization, Gauss sums and
// reciprocity, sign-flip pairing, K-factorization, and exact vanishing.

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "seifertwrt/exact_sums.hpp"
#include "seifertwrt/rational.hpp"

namespace {

using namespace swrt;

Rational brute_epsilon_sum(const SeifertLoop& loop, int s) {
  Rational total;
  for (int mask = 0; mask < (1 << loop.n()); ++mask) {
    Rational inner;
    int parity = 1;
    for (int j = 0; j < loop.n(); ++j) {
      const int sign = (mask >> j) & 1 ? -1 : 1;
      inner += Rational(sign, loop.fibers()[j].p);
      parity *= sign;
    }
    total += Rational(parity) * inner.pow(static_cast<unsigned long>(s));
  }
  return total;
}

BigInt lattice_square(long P, long m, long a) {
  const BigInt base = BigInt(2) * P * m + a;
  return base * base;
}

}  // namespace

TEST_CASE("tau at roots of unity") {
  const mpfr_prec_t prec = 256;
  const HPReal tiny = HPReal::pow2(-200, prec);

  SUBCASE("two-fiber loops have trivial tau at N = 1") {
    // For n = 2 the colored series is a unit times a q-integer, so tau
    // collapses to 1 at every admissible level.
    const SeifertLoop trefoil = SeifertLoop::parse("2/1,3/-1");
    for (long K = 2; K <= 12; ++K) {
      CHECK(abs(tau(trefoil, K, 1, prec) - HPComplex(1, prec)) < tiny);
    }
    const SeifertLoop cinq = SeifertLoop::parse("2/1,5/-2");
    for (long K = 2; K <= 8; ++K) {
      CHECK(abs(tau(cinq, K, 1, prec) - HPComplex(1, prec)) < tiny);
    }
  }

  SUBCASE("summands are 2PK-periodic in k") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    const long K = 7;
    const long period = 2 * loop.P() * K;
    for (long k : {1L, 8L, 13L}) {
      const RootOfUnityTerm a = tau_term(loop, K, 2, k, prec);
      const RootOfUnityTerm b = tau_term(loop, K, 2, k + period, prec);
      CHECK(a.numerator_exponent == b.numerator_exponent);
      CHECK(abs(a.weight - b.weight) < HPReal::pow2(-240, prec));
    }
    CHECK_THROWS_AS(tau_term(loop, K, 2, 14, prec), std::invalid_argument);
  }

  SUBCASE("value is precision-stable") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    const HPComplex lo = tau(loop, 3, 1, 256);
    const HPComplex hi = tau(loop, 3, 1, 512);
    CHECK(abs(lo - hi) < HPReal::pow2(-240, 512));
    CHECK(abs(hi).sign() > 0);
  }

  SUBCASE("normalized form divides out g0") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    for (long K : {2L, 5L}) {
      const HPComplex lhs = z_norm(loop, K, 2, prec) * g0_factor(HPComplex(K, prec));
      CHECK(abs(lhs - tau(loop, K, 2, prec)) < tiny);
    }
  }

  SUBCASE("inadmissible arguments are rejected") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    CHECK_THROWS_AS(tau(loop, 1, 1, prec), std::invalid_argument);
    CHECK_THROWS_AS(tau(loop, 5, 0, prec), std::invalid_argument);
  }
}

TEST_CASE("quadratic Gauss sums") {
  const mpfr_prec_t prec = 256;
  const HPReal tol = HPReal::pow2(-200, prec);

  SUBCASE("smallest case is 1 - i") {
    const GaussSumPair g = gauss_G(1, 1, prec);
    const HPComplex expected(HPReal(1, prec), HPReal(-1, prec));
    CHECK(abs(g.sum - expected) < tol);
    CHECK(abs(g.closed_form - expected) < tol);
  }

  SUBCASE("sum matches closed form on sample moduli") {
    for (auto [K, P] : {std::pair<long, long>{1, 30}, {2, 15}, {3, 10}, {5, 6},
                        {7, 6}, {4, 25}, {9, 11}, {30, 10}, {1, 1}, {2, 1}}) {
      const GaussSumPair g = gauss_G(K, P, prec);
      CHECK(abs(g.sum - g.closed_form) < tol);
    }
  }

  SUBCASE("reciprocity specializes to the Gauss evaluation") {
    // M1 = 2KP, M2 = -1, L = 0 reproduces G(KP) against its closed form.
    const GaussSumPair g = gauss_G(1, 30, prec);
    const ReciprocityPair r = reciprocity(60, -1, Rational(0), prec);
    CHECK(abs(r.lhs - g.sum) < tol);
    CHECK(abs(r.rhs - g.closed_form) < tol);
  }

  SUBCASE("tiny reciprocity instance vanishes on both sides") {
    const ReciprocityPair r = reciprocity(2, 2, Rational(0), prec);
    CHECK(abs(r.lhs) < tol);
    CHECK(abs(r.rhs) < tol);
  }

  SUBCASE("random admissible triples balance") {
    std::mt19937 rng(424243u);
    std::uniform_int_distribution<long> mod_dist(1, 50);
    std::uniform_int_distribution<long> shift_dist(-6, 6);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    for (int trial = 0; trial < 25; ++trial) {
      long M1 = mod_dist(rng);
      long M2 = (sign_dist(rng) ? 1 : -1) * mod_dist(rng);
      if ((M1 * M2) % 2 != 0) M2 *= 2;
      if (std::abs(M2) > 50) M2 /= 2;
      if ((M1 * M2) % 2 != 0) M1 *= 2;
      const Rational L(shift_dist(rng), M1);
      const ReciprocityPair r = reciprocity(M1, M2, L, prec);
      CHECK(abs(r.lhs - r.rhs) < tol);
    }
  }

  SUBCASE("inadmissible triples are rejected") {
    CHECK_THROWS_AS(reciprocity(3, 1, Rational(0), prec), std::invalid_argument);
    CHECK_THROWS_AS(reciprocity(4, 2, Rational(1, 3), prec), std::invalid_argument);
    CHECK_THROWS_AS(reciprocity(0, 2, Rational(0), prec), std::invalid_argument);
    CHECK_THROWS_AS(gauss_G(0, 5, prec), std::invalid_argument);
  }
}

TEST_CASE("epsilon sums") {
  const SeifertLoop poincare = SeifertLoop::parse("2/1,3/1,5/-4");
  const SeifertLoop septim = SeifertLoop::parse("2/1,3/-1,7/-1");
  const SeifertLoop four = SeifertLoop::parse("2/-1,3/-2,5/3,7/4");

  SUBCASE("vanishing below the fiber count") {
    for (int s = 0; s <= 2; ++s) {
      CHECK(epsilon_sum(poincare, s) == Rational(0));
      CHECK(epsilon_sum(septim, s) == Rational(0));
    }
    for (int s = 0; s <= 3; ++s) CHECK(epsilon_sum(four, s) == Rational(0));
  }

  SUBCASE("first nonzero value at s = n") {
    CHECK(epsilon_sum(poincare, 3) == Rational(8, 5));
    CHECK(epsilon_sum(poincare, 3) == brute_epsilon_sum(poincare, 3));
    CHECK(epsilon_sum(four, 4) == brute_epsilon_sum(four, 4));
    CHECK(epsilon_sum(four, 4) != Rational(0));
  }

  SUBCASE("agrees with brute force above n") {
    for (int s = 4; s <= 7; ++s) {
      CHECK(epsilon_sum(poincare, s) == brute_epsilon_sum(poincare, s));
    }
    CHECK_THROWS_AS(epsilon_sum(poincare, -1), std::invalid_argument);
  }
}

TEST_CASE("K-factorization") {
  const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");

  SUBCASE("pinned splits") {
    const KFactorization a = factor_k(7, loop);
    CHECK(a.K1 == 7);
    CHECK(a.K2 == 1);
    const KFactorization b = factor_k(6, loop);
    CHECK(b.K1 == 3);
    CHECK(b.K2 == 2);
    const KFactorization c = factor_k(30, loop);
    CHECK(c.K1 * c.K2 == 30);
  }

  SUBCASE("postconditions across levels") {
    const long tail = loop.P() / loop.fibers()[0].p;
    for (long K = 2; K <= 60; ++K) {
      const KFactorization f = factor_k(K, loop);
      CHECK(f.K1 * f.K2 == K);
      CHECK(std::gcd(f.K1, f.K2) == 1);
      CHECK(std::gcd(f.K1, loop.fibers()[0].p) == 1);
      CHECK(std::gcd(f.K2, tail) == 1);
    }
    CHECK_THROWS_AS(factor_k(0, loop), std::invalid_argument);
  }
}

TEST_CASE("sign-flip pairing") {
  const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
  const Rational ell(1, 2);

  SUBCASE("identity signs fix every m") {
    const std::vector<int> eps{1, -1, 1};
    for (long m = 0; m < 7; ++m) {
      CHECK(crt_pair(loop, 7, ell, eps, eps, m) == m);
    }
  }

  SUBCASE("pairing satisfies the lattice congruence and is a bijection") {
    const std::vector<int> eps{1, 1, 1};
    for (long K : {5L, 6L, 7L}) {
      for (int mask = 0; mask < 8; ++mask) {
        const std::vector<int> eps_tilde{(mask & 1) ? 1 : -1, (mask & 2) ? 1 : -1,
                                         (mask & 4) ? 1 : -1};
        std::set<long> image;
        for (long m = 0; m < K; ++m) {
          const long mt = crt_pair(loop, K, ell, eps, eps_tilde, m);
          CHECK(mt >= 0);
          CHECK(mt < K);
          const BigInt lhs = lattice_square(loop.P(), m, a_coeff(loop, ell, eps));
          const BigInt rhs = lattice_square(loop.P(), mt, a_coeff(loop, ell, eps_tilde));
          CHECK(mod_nonneg(lhs - rhs, BigInt(4 * K) * loop.P()) == 0);
          image.insert(mt);
        }
        CHECK(image.size() == static_cast<std::size_t>(K));
      }
    }
  }

  SUBCASE("out-of-range arguments are rejected") {
    const std::vector<int> eps{1, 1, 1};
    CHECK_THROWS_AS(crt_pair(loop, 7, ell, eps, eps, 7), std::invalid_argument);
    CHECK_THROWS_AS(crt_pair(loop, 7, ell, eps, {1, 1}, 0), std::invalid_argument);
  }
}

TEST_CASE("exact vanishing of the paired sums") {
  const mpfr_prec_t prec = 256;

  SUBCASE("all claims pass below the fiber count") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    for (int s = 0; s <= 2; ++s) {
      const VerificationReport rep = vanishing_check(loop, 5, Rational(1, 2), s, prec);
      CHECK(rep.all_pass());
      CHECK(!rep.claims.empty());
    }
  }

  SUBCASE("s = n is out of contract") {
    const SeifertLoop loop = SeifertLoop::parse("2/1,3/1,5/-4");
    CHECK_THROWS_AS(vanishing_check(loop, 5, Rational(1, 2), 3, prec),
                    std::invalid_argument);
  }
}
