#include <rforge/lattice.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include <rforge/series.hpp>
#include <rforge/stats.hpp>

namespace rforge {

namespace {

void require_positive_definite(const QuadraticForm& f, const char* who) {
  if (f.A <= 0 || f.B * f.B - 4 * f.A * f.C >= 0)
    throw std::domain_error(std::string(who) + ": form is not positive definite");
}

bool is_integer_form(const QuadraticForm& f) {
  return f.A.get_den() == 1 && f.B.get_den() == 1 && f.C.get_den() == 1;
}

// floor of an exact rational
mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Compensated (Neumaier) accumulator: the correction term keeps the sum of
// tens of millions of doubles accurate to ~2 ulp of the total.
struct KahanSum {
  double s = 0.0;
  double c = 0.0;
  void add(double v) {
    double t = s + v;
    if (std::fabs(s) >= std::fabs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
};

}  // namespace

QuadraticForm reduce_form(const QuadraticForm& f) {
  require_positive_definite(f, "reduce_form");
  if (!is_integer_form(f))
    throw std::domain_error("reduce_form: integer coefficients required");
  mpz_class a = f.A.get_num(), b = f.B.get_num(), c = f.C.get_num();
  for (;;) {
    // translate: n -> n - k m with k = round(B / 2A), so |B| <= A
    mpq_class k_q(b, mpz_class(2 * a));
    k_q.canonicalize();
    mpz_class k = floor_q(k_q + mpq_class(1, 2));
    c += a * k * k - b * k;
    b -= 2 * a * k;
    if (c < a) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    break;
  }
  if (b < 0 && (a == c || b == -a)) b = -b;
  return QuadraticForm{mpq_class(a), mpq_class(b), mpq_class(c)};
}

Real epstein_brute(const QuadraticForm& f, const Real& t, long radius,
                   const PrecisionContext& ctx) {
  require_positive_definite(f, "epstein_brute");
  const mpfr_prec_t p = ctx.bits();
  if (!(t >= real_from(mpq_class(3, 2), p)))
    throw std::domain_error("epstein_brute: need t >= 3/2");
  if (radius < 10) throw std::domain_error("epstein_brute: need radius >= 10");
  stats::counters().lattice.fetch_add(1, std::memory_order_relaxed);

  // Fast path: integer form, t in {2, 3}, Q^t within 64/128-bit range.  The
  // form value is exact in integers and each term costs one rounding, so the
  // compensated total carries ~1e-16 relative noise, far below the
  // O(radius^{2-2t}) truncation.
  long ia = 0, ib = 0, ic = 0;
  bool small_ints = is_integer_form(f) && f.A.get_num().fits_slong_p() &&
                    f.B.get_num().fits_slong_p() && f.C.get_num().fits_slong_p();
  if (small_ints) {
    ia = f.A.get_num().get_si();
    ib = f.B.get_num().get_si();
    ic = f.C.get_num().get_si();
  }
  long bound = (std::abs(ia) + std::abs(ib) + std::abs(ic)) * radius * radius;
  bool exponent_2 = t == 2L, exponent_3 = t == 3L;
  if (small_ints && (exponent_2 || exponent_3) && bound < (1L << 31)) {
    KahanSum acc;
    for (long r = 1; r <= radius; ++r) {
      for (long n = -r; n <= r; ++n) {
        long long qn = (long long)ia * n * n;
        long long bn = (long long)ib * n;
        auto visit = [&](long m) {
          long long q = qn + bn * m + (long long)ic * m * m;
          double term;
          if (exponent_2) {
            term = 1.0 / (double)((unsigned long long)q * (unsigned long long)q);
          } else {
            unsigned __int128 q3 = (unsigned __int128)q * (unsigned long long)q;
            q3 *= (unsigned long long)q;
            term = 1.0 / (double)q3;
          }
          acc.add(term);
        };
        if (n == -r || n == r) {
          for (long m = -r; m <= r; ++m) visit(m);
        } else {
          visit(-r);
          visit(r);
        }
      }
    }
    return real_from(acc.s, p) + real_from(acc.c, p);
  }

  // General path: exact rational form values, powered at working precision.
  Real acc = real_from(0L, p);
  Real mt = -t;
  for (long r = 1; r <= radius; ++r) {
    for (long n = -r; n <= r; ++n) {
      auto visit = [&](long m) {
        mpq_class q = f.A * n * n + f.B * n * m + f.C * m * m;
        acc += pow(real_from(q, p), mt);
      };
      if (n == -r || n == r) {
        for (long m = -r; m <= r; ++m) visit(m);
      } else {
        visit(-r);
        visit(r);
      }
    }
  }
  return acc;
}

Real epstein_fast(const QuadraticForm& f, const PrecisionContext& ctx) {
  require_positive_definite(f, "epstein_fast");
  const mpfr_prec_t p = ctx.bits();

  // y^2 = |D| / (4A^2), so the orientation with the smaller leading
  // coefficient has the larger y and the smaller nome.
  mpq_class lead = f.A, mid = f.B, tail = f.C;
  if (tail < lead) std::swap(lead, tail);
  mpq_class disc = 4 * lead * tail - mid * mid;  // = |D| > 0
  mpq_class y2 = disc / (4 * lead * lead);

  // The F series needs |q| = e^{-2 pi y} <= e^{-pi/3}, i.e. y >= 1/6.
  if (y2 < mpq_class(1, 36))
    throw std::domain_error(
        "epstein_fast: nome outside the F-series radius in either "
        "orientation; pass the form through reduce_form first");

  Tau tau(mid / (2 * lead), sqrt(real_from(y2, p)));
  Complex F = big_F(tau, ctx);
  Real y3 = tau.y * tau.y * tau.y;
  Real pi = const_pi(ctx);
  return pi * pi * F.re / (real_from(lead * lead, p) * 120L * y3);
}

Real imag_correction(const Tau& tau, const PrecisionContext& ctx) {
  const mpfr_prec_t p = ctx.bits();
  Real x = real_from(tau.x, p);
  Real r2 = x * x + tau.y * tau.y;
  Real ratio = (x + x) / r2;
  Real nearest = floor_r(ratio + real_from(mpq_class(1, 2), p));
  if (!(abs(ratio - nearest) <= pow10(-(ctx.digits - 10), p)))
    throw std::domain_error("imag_correction: 2x/(x^2+y^2) must be an integer");
  Real pi = const_pi(ctx);
  Real s3 = x * x + tau.y * tau.y * 3L;
  Real value = x * (s3 / (r2 * r2) + s3 - 5L) * pi * pi * 4L / 3L;
  return value;
}

}  // namespace rforge
