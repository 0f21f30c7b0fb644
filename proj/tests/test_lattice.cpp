#include "rforge/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rforge/numtheory.hpp"
#include "rforge/series.hpp"
#include "rforge/stats.hpp"
#include "testutil.hpp"

using namespace rforge;

namespace {

const PrecisionContext ctx{60};
const mpfr_prec_t P = ctx.bits();

Real sfast(const QuadraticForm& f) { return epstein_fast(f, ctx); }

Real sbrute(const QuadraticForm& f, long t, long radius) {
  return epstein_brute(f, real_from(t, P), radius, ctx);
}

bool same_form(const QuadraticForm& f, long a, long b, long c) {
  return f.A == a && f.B == b && f.C == c;
}

// Im F(e^{2 pi i tau}) as a raw double sum,
//   T(x,y) = sum_{n != 0, k} (k+nx)((k+nx)^2 + 3n^2y^2)
//                            / (n^3 ((k+nx)^2 + n^2y^2)^2),
// scaled by 60/pi^2.  The (n,k) <-> (-n,-k) terms coincide, so fold onto
// n >= 1 and double.  Each row converges only conditionally: pair +-k and
// append the first-order tail sum_{k>K} -2nx/(k^2 - (nx)^2) ~ -2x/(n^2 K).
double im_f_brute(double x, double y, long nmax, long kmax) {
  double total = 0.0;
  for (long n = 1; n <= nmax; ++n) {
    double nx = n * x;
    double w = (double)n * n * y * y;
    double n3 = (double)n * n * n;
    auto f = [&](double k) {
      double u = k + nx;
      double d = u * u + w;
      return u * (u * u + 3.0 * w) / (n3 * d * d);
    };
    double row = f(0.0);
    for (long k = 1; k <= kmax; ++k) row += f((double)k) + f((double)-k);
    row += -2.0 * x / ((double)n * n * kmax);
    total += row;
  }
  return 60.0 / (M_PI * M_PI) * 2.0 * total;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("reduction reaches the standard domain") {
  CHECK(same_form(reduce_form(QuadraticForm{3, 4, 4}), 3, 2, 3));
  CHECK(same_form(reduce_form(QuadraticForm{1, 2, 2}), 1, 0, 1));
  CHECK(same_form(reduce_form(QuadraticForm{2, 2, 3}), 2, 2, 3));
  CHECK(same_form(reduce_form(QuadraticForm{36, 50, 31}), 17, -12, 31));
  // boundary conventions: B >= 0 when A = C or |B| = A
  CHECK(same_form(reduce_form(QuadraticForm{3, -2, 3}), 3, 2, 3));
  CHECK(same_form(reduce_form(QuadraticForm{5, -5, 8}), 5, 5, 8));
}

TEST_CASE("reduction rejects bad input") {
  CHECK_THROWS_AS(reduce_form(QuadraticForm{mpq_class(1, 2), 0, 1}),
                  std::domain_error);
  CHECK_THROWS_AS(reduce_form(QuadraticForm{1, 3, 1}), std::domain_error);
  CHECK_THROWS_AS(reduce_form(QuadraticForm{0, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(reduce_form(QuadraticForm{-1, 0, -1}), std::domain_error);
}

TEST_CASE("brute sum hits the classical square lattice value") {
  Real t2 = real_from(2L, P);
  Real want = dirichlet_L(1, t2, ctx) * dirichlet_L(-4, t2, ctx) * 4L;
  Real got = sbrute(QuadraticForm{1, 0, 1}, 2, 2000);
  INFO("got ", to_string(got, 30));
  CHECK(abs(got - want) < pow10(-5, P));
}

TEST_CASE("brute truncation scales like radius^(2-2t)") {
  QuadraticForm f{1, 0, 1};
  Real s10 = sbrute(f, 2, 10), s20 = sbrute(f, 2, 20), s40 = sbrute(f, 2, 40);
  Real d1 = abs(s10 - s20), d2 = abs(s20 - s40);
  CHECK(d1 < real_from(mpq_class(4, 100), P));
  Real ratio = d1 / d2;
  INFO("ratio ", to_string(ratio, 10));
  CHECK(ratio > 2L);
  CHECK(ratio < 6L);
}

TEST_CASE("equivalent forms agree within truncation") {
  TU_CLOSE(sbrute(QuadraticForm{3, 4, 4}, 2, 500),
           sbrute(QuadraticForm{3, 2, 3}, 2, 500), 4);
  TU_CLOSE(sbrute(QuadraticForm{1, 2, 2}, 2, 500),
           sbrute(QuadraticForm{1, 0, 1}, 2, 500), 4);
}

TEST_CASE("swap and sign symmetries are exact") {
  // (n,m) -> (m,n) and (n,m) -> (n,-m) permute the same truncated terms
  TU_CLOSE(sbrute(QuadraticForm{1, 2, 3}, 2, 60),
           sbrute(QuadraticForm{3, 2, 1}, 2, 60), 15);
  TU_CLOSE(sbrute(QuadraticForm{17, -12, 31}, 2, 60),
           sbrute(QuadraticForm{17, 12, 31}, 2, 60), 15);
}

TEST_CASE("integer scaling is exact on the fast path") {
  // terms of S(2,0,2) are exactly 1/4 of S(1,0,1): identical bits after *4
  Real a = sbrute(QuadraticForm{2, 0, 2}, 2, 80) * 4L;
  Real b = sbrute(QuadraticForm{1, 0, 1}, 2, 80);
  CHECK((a - b).is_zero());
}

TEST_CASE("rational forms run the exact path and match") {
  QuadraticForm hf{mpq_class(1, 2), 0, mpq_class(1, 2)};
  TU_CLOSE(sbrute(hf, 2, 60) / 4L, sbrute(QuadraticForm{1, 0, 1}, 2, 60), 15);
  // non-integer exponent goes the same way
  Real t = real_from(mpq_class(5, 2), P);
  Real s = epstein_brute(QuadraticForm{1, 0, 1}, t, 80, ctx);
  // 4 zeta(5/2) beta(5/2), the two-squares factorization
  TU_CLOSE_STR(s, "5.09025823366548294565740153194", 5);
}

TEST_CASE("brute rejects out-of-domain requests") {
  QuadraticForm f{1, 0, 1};
  CHECK_THROWS_AS(epstein_brute(f, real_from(mpq_class(6, 5), P), 100, ctx),
                  std::domain_error);
  CHECK_THROWS_AS(epstein_brute(f, real_from(2L, P), 9, ctx),
                  std::domain_error);
  CHECK_THROWS_AS(epstein_brute(QuadraticForm{1, 3, 1}, real_from(2L, P), 100, ctx),
                  std::domain_error);
}

TEST_CASE("deterministic summation") {
  Real a = sbrute(QuadraticForm{2, 1, 3}, 2, 50);
  Real b = sbrute(QuadraticForm{2, 1, 3}, 2, 50);
  CHECK((a - b).is_zero());
  Real c = epstein_brute(QuadraticForm{2, 1, 3}, real_from(mpq_class(5, 2), P), 15, ctx);
  Real d = epstein_brute(QuadraticForm{2, 1, 3}, real_from(mpq_class(5, 2), P), 15, ctx);
  CHECK((c - d).is_zero());
}

TEST_CASE("fast route matches the brute sums") {
  const long forms[10][3] = {{1, 0, 8}, {3, 2, 3},  {1, 1, 4}, {2, 1, 2},
                             {1, 0, 36}, {4, 0, 9}, {1, 0, 20}, {4, 0, 5},
                             {1, 0, 52}, {4, 0, 13}};
  for (auto& f : forms) {
    QuadraticForm q{f[0], f[1], f[2]};
    CAPTURE(f[0]);
    CAPTURE(f[1]);
    CAPTURE(f[2]);
    Real diff = abs(sfast(q) - sbrute(q, 2, 3000));
    INFO("diff ", to_string(diff, 6));
    CHECK(diff < pow10(-5, P));
  }
}

TEST_CASE("fast route is invariant under reduction") {
  for (auto& f : {QuadraticForm{3, 4, 4}, QuadraticForm{1, 2, 2},
                  QuadraticForm{4, 6, 5}, QuadraticForm{36, 50, 31}}) {
    TU_CLOSE(sfast(f), sfast(reduce_form(f)), 55);
  }
}

TEST_CASE("fast route picks the orientation inside the series radius") {
  // S(A,B,C;2) = S(C,B,A;2), and only the (52,0,1) orientation converges
  TU_CLOSE(sfast(QuadraticForm{1, 0, mpq_class(1, 52)}),
           sfast(QuadraticForm{52, 0, 1}) * (52L * 52L), 54);
  // y = 1/6 sits exactly on the series boundary until the swap
  CHECK_NOTHROW(sfast(QuadraticForm{1, 1, mpq_class(5, 18)}));
  try {
    sfast(QuadraticForm{1, mpq_class(199, 100), 1});
    FAIL("expected a domain error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("reduce_form") != std::string::npos);
  }
}

TEST_CASE("scaled-form linear combinations") {
  // S(1,1,1/4+y^2;2) = -S(1,0,y^2;2) + 18 S(1,0,4y^2;2) - 16 S(1,0,16y^2;2)
  for (long d : {36L, 20L, 52L}) {
    mpq_class y2(1, d);
    CAPTURE(d);
    Real lhs = sfast(QuadraticForm{1, 1, mpq_class(1, 4) + y2});
    Real rhs = -sfast(QuadraticForm{1, 0, y2}) +
               sfast(QuadraticForm{1, 0, 4 * y2}) * 18L -
               sfast(QuadraticForm{1, 0, 16 * y2}) * 16L;
    TU_CLOSE(lhs, rhs, 52);
  }
}

TEST_CASE("genus identities at t = 2") {
  Real t2 = real_from(2L, P);
  auto L = [&](long k) { return dirichlet_L(k, t2, ctx); };
  Real c1 = real_from(mpq_class(7, 8), P);    // 1 - 2^-t + 2^{1-2t}
  Real c2 = real_from(mpq_class(11, 8), P);   // 1 + 2^-t + 2^{1-2t}
  Real c3 = real_from(mpq_class(28, 27), P);  // 1 + 3^{1-2t}

  TU_CLOSE(sfast(QuadraticForm{1, 0, 36}) + sfast(QuadraticForm{4, 0, 9}),
           c1 * c3 * L(1) * L(-4) + c2 * L(-3) * L(12), 52);
  TU_CLOSE(sfast(QuadraticForm{1, 0, 9}), c3 * L(1) * L(-4) + L(-3) * L(12), 52);
  TU_CLOSE(sfast(QuadraticForm{4, 0, 5}) + sfast(QuadraticForm{1, 0, 20}),
           c1 * L(1) * L(-20) + c2 * L(-4) * L(5), 52);
  TU_CLOSE(sfast(QuadraticForm{1, 0, 5}), L(1) * L(-20) + L(-4) * L(5), 52);
  TU_CLOSE(sfast(QuadraticForm{1, 0, 52}) + sfast(QuadraticForm{4, 0, 13}),
           c1 * L(1) * L(-52) + c2 * L(-4) * L(13), 52);
  TU_CLOSE(sfast(QuadraticForm{1, 0, 13}), L(1) * L(-52) + L(-4) * L(13), 52);
}

TEST_CASE("genus identities at t = 3") {
  Real t3 = real_from(3L, P);
  auto L = [&](long k) { return dirichlet_L(k, t3, ctx); };
  auto S = [&](long a, long b, long c) {
    return sbrute(QuadraticForm{a, b, c}, 3, 1200);
  };
  Real c1 = real_from(mpq_class(29, 32), P);    // 1 - 2^-t + 2^{1-2t}
  Real c2 = real_from(mpq_class(37, 32), P);    // 1 + 2^-t + 2^{1-2t}
  Real c3 = real_from(mpq_class(244, 243), P);  // 1 + 3^{1-2t}
  Real tol = pow10(-12, P);  // truncation at radius 1200 is ~1e-13

  CHECK(abs(S(1, 0, 36) + S(4, 0, 9) -
            (c1 * c3 * L(1) * L(-4) + c2 * L(-3) * L(12))) < tol);
  CHECK(abs(S(1, 0, 9) - (c3 * L(1) * L(-4) + L(-3) * L(12))) < tol);
  CHECK(abs(S(4, 0, 5) + S(1, 0, 20) -
            (c1 * L(1) * L(-20) + c2 * L(-4) * L(5))) < tol);
  CHECK(abs(S(1, 0, 5) - (L(1) * L(-20) + L(-4) * L(5))) < tol);
  CHECK(abs(S(1, 0, 52) + S(4, 0, 13) -
            (c1 * L(1) * L(-52) + c2 * L(-4) * L(13))) < tol);
  CHECK(abs(S(1, 0, 13) - (L(1) * L(-52) + L(-4) * L(13))) < tol);
}

TEST_CASE("imaginary correction closed form") {
  // x = 0 and the hexagonal point both sit on zeros
  CHECK(abs(imag_correction(Tau(0, real_from(1L, P)), ctx)) < pow10(-55, P));
  Real y_hex = sqrt(real_from(3L, P)) / 2L;
  CHECK(abs(imag_correction(Tau(mpq_class(1, 2), y_hex), ctx)) < pow10(-55, P));
  // 2x/(x^2+y^2) must be an integer
  CHECK_THROWS_AS(imag_correction(Tau(mpq_class(1, 3), real_from(1L, P)), ctx),
                  std::domain_error);

  // x = 9/16, y = sqrt(15)/16 has ratio 3; check the double sum and the
  // series imaginary part against the closed form
  Tau tau(mpq_class(9, 16), sqrt(real_from(15L, P)) / 16L);
  Real corr = imag_correction(tau, ctx);
  double brute = im_f_brute(9.0 / 16.0, std::sqrt(15.0) / 16.0, 400, 50000);
  CHECK(std::fabs(to_double(corr) - brute) < 1e-4);
  TU_CLOSE(big_F(tau, ctx).im, corr, 50);

  // second integer-ratio point, x = 1/4, y = sqrt(7)/4
  Tau tau2(mpq_class(1, 4), sqrt(real_from(7L, P)) / 4L);
  TU_CLOSE(big_F(tau2, ctx).im, imag_correction(tau2, ctx), 50);
}

TEST_CASE("engine counters separate the two routes") {
  auto& c = stats::counters();
  c.reset();
  (void)sbrute(QuadraticForm{1, 0, 1}, 2, 10);
  CHECK(c.lattice.load() == 1);
  CHECK(c.f_series.load() == 0);
  (void)sfast(QuadraticForm{1, 0, 1});
  CHECK(c.f_series.load() == 1);
  CHECK(c.lattice.load() == 1);
  c.reset();
}

}  // TEST_SUITE
