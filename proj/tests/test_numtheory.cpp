#include "doctest.h"
#include "rforge/numtheory.hpp"
#include "testutil.hpp"

#include <cmath>
#include <random>

using namespace rforge;

namespace {

const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};

// Legendre symbol via Euler's criterion, odd prime p.
int legendre(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long long r = 1, b = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : (r == p - 1 ? -1 : 0);
}

// Brute Kronecker oracle for n >= 1: factor n, multiply per-prime symbols.
int kron_oracle(long long k, long long n) {
  int s = 1;
  while (n % 2 == 0) {
    s *= tab2[((k % 8) + 8) % 8];
    n /= 2;
  }
  for (long long p = 3; p * p <= n; p += 2)
    while (n % p == 0) {
      s *= legendre(k, p);
      n /= p;
    }
  if (n > 1) s *= legendre(k, n);
  return s;
}

}  // namespace

TEST_SUITE("numtheory") {

TEST_CASE("kronecker spec values") {
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(-8, 3) == 1);
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(5, 0) == 0);
  CHECK(kronecker(-7, -1) == -1);
  CHECK(kronecker(7, -1) == 1);
}

TEST_CASE("kronecker matches the factored Legendre oracle") {
  for (long long k = -24; k <= 24; ++k) {
    if (k == 0) continue;
    for (long long n = 1; n <= 100; ++n) {
      INFO("k=" << k << " n=" << n);
      CHECK(kronecker(k, n) == kron_oracle(k, n));
    }
  }
}

TEST_CASE("kronecker is completely multiplicative in n") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long long> dk(-60, 60), dn(1, 1000);
  for (int i = 0; i < 1000; ++i) {
    long long k = dk(rng);
    if (k == 0) k = 7;
    long long m = dn(rng), n = dn(rng);
    CHECK(kronecker(k, m * n) == kronecker(k, m) * kronecker(k, n));
  }
}

TEST_CASE("sigma3 small values") {
  CHECK(sigma3(1) == 1);
  CHECK(sigma3(4) == 73);
  CHECK(sigma3(6) == 252);
  CHECK(sigma3(12) == 2044);
}

TEST_CASE("bernoulli numbers are exact") {
  CHECK(bernoulli_exact(0) == mpq_class(1));
  CHECK(bernoulli_exact(1) == mpq_class(-1, 2));
  CHECK(bernoulli_exact(2) == mpq_class(1, 6));
  CHECK(bernoulli_exact(3) == 0);
  CHECK(bernoulli_exact(12) == mpq_class(-691, 2730));
  PrecisionContext ctx(60);
  TU_CLOSE(bernoulli(12, ctx), real_from(mpq_class(-691, 2730), ctx.bits()), 70);
}

TEST_CASE("hurwitz_zeta closed forms") {
  PrecisionContext ctx(60);
  mpfr_prec_t p = ctx.bits();
  Real pi = const_pi(ctx);
  Real two = real_from(2L, p), three = real_from(3L, p), one = real_from(1L, p);
  TU_CLOSE(hurwitz_zeta(two, one, ctx), pi * pi / 6, 70);
  TU_CLOSE(hurwitz_zeta(two, one / 2, ctx), pi * pi / 2, 70);
  TU_CLOSE(hurwitz_zeta(three, one, ctx), const_zeta3(ctx), 70);
  CHECK_THROWS_AS((void)hurwitz_zeta(one, one, ctx), std::domain_error);
  CHECK_THROWS_AS((void)hurwitz_zeta(two, two, ctx), std::domain_error);
}

TEST_CASE("hurwitz_zeta(2,1/2) against the brute partial sum") {
  // sum_{n<10^6} (n+1/2)^{-2} + integral tail + half-term correction
  const long N = 1000000;
  double brute = 0;
  for (long n = N - 1; n >= 0; --n) brute += 1.0 / ((n + 0.5) * (n + 0.5));
  brute += 1.0 / (N + 0.5) + 0.5 / ((N + 0.5) * (N + 0.5));
  PrecisionContext ctx(60);
  Real hz = hurwitz_zeta(real_from(2L, ctx.bits()), real_from(0.5, ctx.bits()), ctx);
  CHECK(std::abs(to_double(hz) - brute) < 1e-10);
}

TEST_CASE("Euler-Maclaurin cutoff doubling is stable") {
  PrecisionContext ctx(60);
  mpfr_prec_t p = ctx.bits();
  for (double tv : {2.0, 3.0, 3.5}) {
    for (double av : {1.0 / 3, 1.0}) {
      Real t = real_from(tv, p), a = real_from(av, p);
      Real base = hurwitz_zeta_em(t, a, ctx.digits, ctx.digits, ctx);
      Real dbl = hurwitz_zeta_em(t, a, 2 * ctx.digits, 2 * ctx.digits, ctx);
      TU_CLOSE(base, dbl, 60);
    }
  }
}

TEST_CASE("dirichlet_L closed forms") {
  PrecisionContext ctx(60);
  mpfr_prec_t p = ctx.bits();
  Real two = real_from(2L, p);
  Real pi = const_pi(ctx);
  TU_CLOSE_STR(dirichlet_L(-4, two, ctx),
               "0.915965594177219015054603514932384110774149374281672134266498", 58);
  TU_CLOSE(dirichlet_L(1, two, ctx), pi * pi / 6, 70);
  TU_CLOSE(dirichlet_L(12, two, ctx), pi * pi / (6 * sqrt(real_from(3L, p))), 70);
  CHECK_THROWS_AS((void)dirichlet_L(0, two, ctx), std::domain_error);
}

TEST_CASE("dirichlet_L agrees with truncated character sums") {
  PrecisionContext ctx(60);
  Real two = real_from(2L, ctx.bits());
  const long N = 100000;
  for (long k : {-3L, -4L, -7L, -8L, -11L, -15L, -20L, -24L, 5L, 12L, 13L}) {
    double direct = 0;
    for (long n = N; n >= 1; --n) {
      int chi = kronecker(k, n);
      if (chi) direct += chi / (static_cast<double>(n) * n);
    }
    // partial character sums are bounded by |k|, so the tail is < |k|/N^2 + 1/N
    double got = to_double(dirichlet_L(k, two, ctx));
    INFO("k=" << k);
    CHECK(std::abs(got - direct) < 2e-5);
  }
}

}  // TEST_SUITE
