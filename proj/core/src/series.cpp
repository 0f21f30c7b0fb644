#include <rforge/series.hpp>

#include <rforge/numtheory.hpp>
#include <rforge/stats.hpp>

#include <stdexcept>

namespace rforge {

namespace {

// Largest admissible |q| for F and phi: e^{-pi/3}, with a hair of slack so a
// nome computed at working precision is not rejected for its last ulp.
Real f_radius(const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.bits();
  Real r = const_pi(ctx) / 3;
  mpfr_neg(r.get(), r.get(), MPFR_RNDN);
  mpfr_exp(r.get(), r.get(), MPFR_RNDN);
  return r * (real_from(1L, p) + pow10(-20, p));
}

}  // namespace

Complex polylog(int order, const Complex& w, const PrecisionContext& ctx) {
  if (order != 2 && order != 3)
    throw std::domain_error("polylog: order must be 2 or 3");
  mpfr_prec_t p = ctx.bits();
  Real aw = abs(w);
  if (aw > real_from(mpq_class(99, 100), p))
    throw std::domain_error("polylog: |w| exceeds 0.99");
  Complex sum(p);
  if (w.re.is_zero() && w.im.is_zero()) return sum;

  // tail bound after term n: |w|^{n+1}/(1-|w|), always within 100x of the
  // next term, so cut against 10^{-digits-7} * |partial|
  Real one_minus = real_from(1L, p) - aw;
  Real small = pow10(-(long)ctx.digits - 7, p);
  Complex wn = w;  // w^n
  long n = 1;
  Real scale = real_from(1L, p);
  while (true) {
    long nk = (order == 2) ? n * n : n * n * n;
    sum += wn / nk;
    wn *= w;
    ++n;
    if (n > 2 && (n & 7) == 0) scale = abs(sum) + real_from(1L, p) / 4;
    Real bound = abs(wn) / one_minus;
    if (bound < small * scale) break;
    if (n > 2000000) throw std::runtime_error("polylog: no convergence");
  }
  return sum;
}

Complex sigma3_q_sum(const Complex& q, const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.bits();
  Complex sum(p);
  Real aq = abs(q);
  if (aq.is_zero()) return sum;
  // sigma_3(n)/n^3 = sum_{d|n} 1/d^3 < zeta(3), so terms die like |q|^n
  Real small = pow10(-(long)ctx.digits - 7, p);
  Complex qn = q;
  for (long n = 1;; ++n) {
    sum += (qn * sigma3(n)) / (n * n * n);
    qn *= q;
    if (abs(qn) * 2 < small) break;
    if (n > 200000) throw std::runtime_error("sigma3_q_sum: no convergence");
  }
  return sum;
}

Complex big_F(const Complex& q, const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.bits();
  Real aq = abs(q);
  stats::counters().f_series++;
  if (aq.is_zero()) throw std::domain_error("big_F: q must be nonzero");
  if (aq > f_radius(ctx)) throw std::domain_error("big_F: |q| exceeds e^{-pi/3}");

  Real pi = const_pi(ctx);
  Real lq = log(aq);  // negative
  Real alq = -lq;

  Complex acc(p);
  Real small = pow10(-(long)ctx.digits - 5, p);
  Complex qj = q;
  for (long j = 1;; ++j) {
    acc += polylog(3, qj, ctx) - (lq * j) * polylog(2, qj, ctx);
    qj *= q;
    if (abs(qj) * (real_from(1L, p) + alq * (j + 1)) < small) break;
    if (j > 100000) throw std::runtime_error("big_F: no convergence");
  }

  Real head = -(lq * lq * lq) / (pi * 3) + (const_zeta3(ctx) * 120) / pi;
  return acc * (real_from(240L, p) / pi) + head;
}

Complex big_F(const Tau& tau, const PrecisionContext& ctx) {
  return big_F(nome(tau, ctx), ctx);
}

Complex phi(int i, const mpq_class& s, const Tau& tau, const PrecisionContext& ctx) {
  if (i < 1 || i > 3) throw std::domain_error("phi: index must be 1, 2, or 3");
  if (s == mpq_class(1, 6))
    throw std::domain_error(
        "phi: s = 1/6 unsupported; the signature-6 theory gives no usable "
        "q-expansion for the cubic q-derivative relation that determines phi_3");
  int denom;
  if (s == mpq_class(1, 2)) denom = 2;
  else if (s == mpq_class(1, 3)) denom = 3;
  else if (s == mpq_class(1, 4)) denom = 4;
  else throw std::domain_error("phi: s must be 1/2, 1/3, or 1/4");

  mpfr_prec_t p = ctx.bits();
  Complex q = nome(tau, ctx);
  if (abs(q) > f_radius(ctx)) throw std::domain_error("phi: |q| exceeds e^{-pi/3}");

  Complex lq = log_q(tau, ctx);
  if (i == 1) return lq;

  Real pi = const_pi(ctx);
  Real pi2 = pi * pi;
  // additive constant in phi_2: pi^2/2, 2 pi^2/3, pi^2
  Real c2(p);
  switch (denom) {
    case 2: c2 = pi2 / 2; break;
    case 3: c2 = (pi2 * 2) / 3; break;
    default: c2 = pi2; break;
  }
  if (i == 2) return (lq * lq) / 2 + c2;

  long zeta_mult, q_mult, qm_mult, m;
  switch (denom) {
    case 2: zeta_mult = 6; q_mult = 16; qm_mult = 4; m = 4; break;
    case 3: zeta_mult = 10; q_mult = 30; qm_mult = 10; m = 3; break;
    default: zeta_mult = 20; q_mult = 80; qm_mult = 40; m = 2; break;
  }
  Complex lq3 = (lq * lq * lq) / 6;
  Complex out = lq3 + lq * c2 - Complex(const_zeta3(ctx) * zeta_mult);
  out -= sigma3_q_sum(q, ctx) * q_mult;
  out += sigma3_q_sum(pow_si(q, m), ctx) * qm_mult;
  return out;
}

}  // namespace rforge
