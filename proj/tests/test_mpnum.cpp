#include "doctest.h"
#include "rforge/mpnum.hpp"
#include "testutil.hpp"

using namespace rforge;

namespace {

// Independent pi oracle: Machin's 16*atan(1/5) - 4*atan(1/239), each arctan
// summed as sum_{j>=0} (-1)^j / ((2j+1) k^{2j+1}) in raw mpfr ops.
Real machin_pi(mpfr_prec_t p) {
  auto atan_inv = [p](unsigned long k) {
    Real acc(p), pw(p);
    mpfr_set_zero(acc.get(), 1);
    mpfr_set_ui(pw.get(), 1, MPFR_RNDN);
    mpfr_div_ui(pw.get(), pw.get(), k, MPFR_RNDN);  // 1/k
    unsigned long k2 = k * k;
    Real term(p);
    for (long j = 0;; ++j) {
      mpfr_div_ui(term.get(), pw.get(), 2 * j + 1, MPFR_RNDN);
      if ((j & 1) == 0)
        mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
      else
        mpfr_sub(acc.get(), acc.get(), term.get(), MPFR_RNDN);
      if (mpfr_get_exp(term.get()) < -(p + 10)) break;
      mpfr_div_ui(pw.get(), pw.get(), k2, MPFR_RNDN);
    }
    return acc;
  };
  return atan_inv(5) * 16 - atan_inv(239) * 4;
}

// Independent zeta(3) oracle: direct sum to N plus Euler-Maclaurin tail
//   zeta(3) = sum_{n<N} n^{-3} + 1/(2N^2) + 1/(2N^3)
//           + sum_j B_{2j}(2j+1)/2 * N^{-2j-2}
// with exact Bernoulli numbers hardcoded through B_20.
Real em_zeta3(mpfr_prec_t p) {
  const long N = 2000;
  Real acc(p), t(p);
  mpfr_set_zero(acc.get(), 1);
  for (long n = 1; n < N; ++n) {
    mpfr_set_ui(t.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_pow_ui(t.get(), t.get(), 3, MPFR_RNDN);
    mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
  }
  Real nn = real_from(N, p);
  acc += 1 / (nn * nn * 2) + 1 / (nn * nn * nn * 2);
  static const long bnum[] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867, -174611};
  static const long bden[] = {6, 30, 42, 30, 66, 2730, 6, 510, 798, 330};
  for (int j = 1; j <= 10; ++j) {
    Real term = real_from(bnum[j - 1] * (2 * j + 1), p) / (bden[j - 1] * 2);
    term /= pow_si(nn, 2 * j + 2);
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_SUITE("mpnum") {

TEST_CASE("const_pi matches the Machin arctan oracle") {
  PrecisionContext ctx(60);
  Real pi = const_pi(ctx);
  TU_CLOSE(pi, machin_pi(ctx.bits()), 70);
  TU_CLOSE_STR(pi,
      "3.141592653589793238462643383279502884197169399375105820974944592307816406286209",
      70);
}

TEST_CASE("const_pi precision monotonicity") {
  Real p30 = const_pi(PrecisionContext(30));
  Real p60 = const_pi(PrecisionContext(60));
  TU_CLOSE(p30, p60, 40);
}

TEST_CASE("const_zeta3 agrees with the Euler-Maclaurin oracle and bracket") {
  PrecisionContext ctx(60);
  Real z3 = const_zeta3(ctx);
  TU_CLOSE(z3, em_zeta3(ctx.bits()), 70);
  TU_CLOSE_STR(z3,
      "1.2020569031595942853997381615114499907649862923404988817922715553418382057863131",
      70);
  CHECK(z3 > real_from(mpq_class(12, 10), 64));
  CHECK(z3 < real_from(mpq_class(121, 100), 64));
}

TEST_CASE("complex principal branches") {
  PrecisionContext ctx(60);
  mpfr_prec_t p = ctx.bits();
  Real pi = const_pi(ctx);

  Complex minus_one = complex_from(-1, 0, p);
  Complex lg = log(minus_one);
  CHECK(lg.re.is_zero());
  TU_CLOSE(lg.im, pi, 70);

  Complex r = sqrt(complex_from(-4, 0, p));
  CHECK(r.re.is_zero());
  TU_CLOSE(r.im, real_from(2L, p), 70);

  // arg lands in (-pi, pi]: the negative real axis maps to +pi.
  CHECK(arg(complex_from(-2, 0, p)) > 0L);
}

TEST_CASE("exp(log w) round trip") {
  PrecisionContext ctx(60);
  mpfr_prec_t p = ctx.bits();
  const double pts[][2] = {{0.3, 0.4}, {-1.25, 0.7}, {2.0, -3.5}, {-0.01, -4.0}, {7.5, 0.1}};
  for (auto& c : pts) {
    Complex w(real_from(c[0], p), real_from(c[1], p));
    TU_CLOSE(exp(log(w)), w, 58);
  }
}

TEST_CASE("pow uses exp(x log w)") {
  PrecisionContext ctx(60);
  mpfr_prec_t p = ctx.bits();
  Complex w(real_from(0.3, p), real_from(0.4, p));
  Complex sq = pow(w, complex_from(2, 0, p));
  TU_CLOSE(sq, w * w, 58);
}

TEST_CASE("tau carries the non-principal nome branch") {
  PrecisionContext ctx(60);
  // tau = 9/16 + i*sqrt(15)/16: arg(log q) keeps 9*pi/8 > pi.
  Tau tau(mpq_class(9, 16), sqrt(real_from(15L, ctx.bits())) / 16);
  Complex lq = log_q(tau, ctx);
  Real pi = const_pi(ctx);
  TU_CLOSE(lq.im, pi * 9 / 8, 70);
  TU_CLOSE(lq.re, -(pi * 2) * sqrt(real_from(15L, ctx.bits())) / 16, 70);

  // q = exp(log q) matches nome()
  TU_CLOSE(nome(tau, ctx), exp(lq), 68);

  // half-integer x gives an exactly real negative nome
  Tau tau2(mpq_class(1, 2), real_from(1L, ctx.bits()) / 2);
  Complex q2 = nome(tau2, ctx);
  CHECK(q2.im.is_zero());
  CHECK(q2.re.sign() < 0);
  TU_CLOSE(q2.re, -exp(-const_pi(ctx)), 70);
}

TEST_CASE("string round trips") {
  mpfr_prec_t p = PrecisionContext(60).bits();
  Real x = real_from_str("-1.25e-3", p);
  TU_CLOSE(x, real_from(mpq_class(-125, 100000), p), 70);
  CHECK(to_string(real_from(2L, p), 6) == "2.00000e+00");
  CHECK_THROWS_AS((void)real_from_str("zzz", p), std::invalid_argument);
}

}  // TEST_SUITE
