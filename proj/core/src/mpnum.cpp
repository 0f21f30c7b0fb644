#include "rforge/mpnum.hpp"

#include <cstdio>
#include <vector>

namespace rforge {

Real real_from_str(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.get(), s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("real_from_str: cannot parse \"" + s + "\"");
  return r;
}

Real at_prec(const Real& x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow10(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.get(), 10, MPFR_RNDN);
  mpfr_pow_si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

std::string to_string(const Real& x, int digits) {
  if (x.is_nan()) return "nan";
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, x.get());
  return std::string(buf.data());
}

Real const_pi(const PrecisionContext& ctx) {
  Real r(ctx.bits());
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real const_zeta3(const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.bits() + 16;
  // Terms decay like 4^{-n}; run until past the precision with margin.
  long nmax = static_cast<long>(p) / 2 + 8;
  Real acc(p);
  mpfr_set_zero(acc.get(), 1);
  Real term(p);
  mpz_class bin;
  for (long n = 1; n <= nmax; ++n) {
    mpz_bin_uiui(bin.get_mpz_t(), 2 * static_cast<unsigned long>(n),
                 static_cast<unsigned long>(n));
    bin *= n * n * n;
    mpfr_set_z(term.get(), bin.get_mpz_t(), MPFR_RNDN);
    mpfr_si_div(term.get(), (n & 1) ? 1 : -1, term.get(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
  }
  mpfr_mul_ui(acc.get(), acc.get(), 5, MPFR_RNDN);
  mpfr_div_ui(acc.get(), acc.get(), 2, MPFR_RNDN);
  Real out(ctx.bits());
  mpfr_set(out.get(), acc.get(), MPFR_RNDN);
  return out;
}

Real arg(const Complex& a) {
  if (a.im.is_zero() && a.re.sign() < 0) {
    // Fold the -0 imaginary side of the cut up to +pi.
    Real r(a.prec());
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
  }
  return atan2(a.im, a.re);
}

Complex exp(const Complex& a) {
  Real m = exp(a.re);
  Real c(a.prec()), s(a.prec());
  mpfr_sin_cos(s.get(), c.get(), a.im.get(), MPFR_RNDN);
  return Complex(m * c, m * s);
}

Complex log(const Complex& a) {
  if (a.is_zero()) throw std::domain_error("log: zero argument");
  return Complex(log(abs(a)), arg(a));
}

Complex sin(const Complex& a) {
  Real c(a.prec()), s(a.prec()), ch(a.prec()), sh(a.prec());
  mpfr_sin_cos(s.get(), c.get(), a.re.get(), MPFR_RNDN);
  mpfr_sinh_cosh(sh.get(), ch.get(), a.im.get(), MPFR_RNDN);
  return Complex(s * ch, c * sh);
}

Complex cos(const Complex& a) {
  Real c(a.prec()), s(a.prec()), ch(a.prec()), sh(a.prec());
  mpfr_sin_cos(s.get(), c.get(), a.re.get(), MPFR_RNDN);
  mpfr_sinh_cosh(sh.get(), ch.get(), a.im.get(), MPFR_RNDN);
  return Complex(c * ch, -(s * sh));
}

Complex sqrt(const Complex& a) {
  if (a.is_zero()) return Complex(a.prec());
  Real r = abs(a);
  // t = sqrt((r+|re|)/2); the half with the larger magnitude is computed
  // first and the other recovered from im/(2t), which is exact on the axes.
  Real t = sqrt((r + abs(a.re)) / 2);
  if (a.re.sign() >= 0) return Complex(t, a.im / (t * 2));
  Real u = abs(a.im) / (t * 2);
  Real v = (a.im.sign() >= 0 || (a.im.is_zero() && mpfr_signbit(a.im.get()) == 0)) ? t : -t;
  return Complex(u, v);
}

Complex pow_si(const Complex& a, long e) {
  if (e == 0) return complex_from(1, 0, a.prec());
  Complex base = e > 0 ? a : complex_from(1, 0, a.prec()) / a;
  unsigned long k = e > 0 ? static_cast<unsigned long>(e) : 0UL - static_cast<unsigned long>(e);
  Complex acc = complex_from(1, 0, a.prec());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Complex pow(const Complex& base, const Complex& expo) {
  return exp(expo * log(base));
}

std::string to_string(const Complex& x, int digits) {
  std::string s = to_string(x.re, digits);
  std::string t = to_string(abs(x.im), digits);
  return s + (x.im.sign() < 0 ? " - " : " + ") + t + "*i";
}

Complex log_q(const Tau& tau, const PrecisionContext& ctx) {
  Real pi = const_pi(ctx);
  Real two_pi = pi * 2;
  Real re = -(two_pi * tau.y);
  Real xr = real_from(tau.x, ctx.bits());
  return Complex(re, two_pi * xr);
}

Complex nome(const Tau& tau, const PrecisionContext& ctx) {
  Real pi = const_pi(ctx);
  Real mag = exp(-(pi * 2 * tau.y));
  // Reduce x mod 1 exactly; quarter-integer phases come out exact.
  mpq_class xm = tau.x;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), xm.get_num_mpz_t(), xm.get_den_mpz_t());
  xm -= fl;  // xm in [0,1)
  mpfr_prec_t p = ctx.bits();
  if (xm == 0) return Complex(mag, real_from(0L, p));
  if (xm == mpq_class(1, 2)) return Complex(-mag, real_from(0L, p));
  if (xm == mpq_class(1, 4)) return Complex(real_from(0L, p), mag);
  if (xm == mpq_class(3, 4)) return Complex(real_from(0L, p), -mag);
  Real phase = pi * 2 * real_from(xm, p);
  Real c(p), s(p);
  mpfr_sin_cos(s.get(), c.get(), phase.get(), MPFR_RNDN);
  return Complex(mag * c, mag * s);
}

}  // namespace rforge
