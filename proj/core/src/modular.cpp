#include <rforge/modular.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace rforge {

namespace {

void check_radius(const Real& aq) {
  if (mpfr_cmp_d(aq.get(), 0.9) > 0)
    throw std::domain_error("theta: |q| exceeds 0.9");
}

// Shared series kernel: fills t3, t4 and optionally sum n^2 q^{n^2}.
// q^{(n+1)^2} = q^{n^2} * q^{2n+1} keeps everything multiplicative.
void theta34(const Complex& q, const PrecisionContext& ctx, Complex& t3,
             Complex& t4, Complex* n2sum) {
  mpfr_prec_t p = ctx.bits();
  t3 = complex_from(1, 0, p);
  t4 = complex_from(1, 0, p);
  if (n2sum) *n2sum = Complex(p);
  if (q.re.is_zero() && q.im.is_zero()) return;

  Real small = pow10(-(long)ctx.digits - 5, p);
  Complex q2 = q * q;
  Complex cur = q;        // q^{n^2}
  Complex step = q * q2;  // q^{2n+1}
  for (long n = 1;; ++n) {
    Complex two_cur = cur * 2;
    t3 += two_cur;
    if (n & 1) t4 -= two_cur;
    else t4 += two_cur;
    if (n2sum) *n2sum += cur * (n * n);
    if (abs(cur) < small) break;
    cur *= step;
    step *= q2;
    if (n > 100000) throw std::runtime_error("theta: no convergence");
  }
}

// 2 * sum_{n>=0} q^{n(n+1)}; multiply by q^{1/4} to get theta_2.
Complex theta2_body(const Complex& q, const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.bits();
  Complex sum = complex_from(1, 0, p);
  if (!(q.re.is_zero() && q.im.is_zero())) {
    Real small = pow10(-(long)ctx.digits - 5, p);
    Complex q2 = q * q;
    Complex cur = q2;       // q^{n(n+1)}, n = 1
    Complex step = q2 * q2; // q^{2(n+1)}
    for (long n = 1;; ++n) {
      sum += cur;
      if (abs(cur) < small) break;
      cur *= step;
      step *= q2;
      if (n > 100000) throw std::runtime_error("theta: no convergence");
    }
  }
  return sum * 2;
}

ThetaValue theta_with_quarter(const Complex& q, const Complex& q_quarter,
                              const PrecisionContext& ctx) {
  ThetaValue tv;
  tv.q = q;
  theta34(q, ctx, tv.t3, tv.t4, nullptr);
  tv.t2 = q_quarter * theta2_body(q, ctx);
  return tv;
}

}  // namespace

ThetaValue theta(const Complex& q, const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.bits();
  Real aq = abs(q);
  check_radius(aq);
  Complex quarter(p);
  if (q.re.is_zero() && q.im.is_zero()) {
    quarter = Complex(p);  // theta_2(0) = 0; the quarter power is moot
  } else {
    quarter = exp(log(q) / 4);
  }
  return theta_with_quarter(q, quarter, ctx);
}

ThetaValue theta(const Tau& tau, const PrecisionContext& ctx) {
  Complex q = nome(tau, ctx);
  check_radius(abs(q));
  // q^{1/4} under the tau convention is the nome of tau/4
  Tau quarter_tau(tau.x / 4, tau.y / 4);
  return theta_with_quarter(q, nome(quarter_tau, ctx), ctx);
}

AbzValues abz_half(const Tau& tau, const PrecisionContext& ctx) {
  mpfr_prec_t p = ctx.bits();
  Complex q = nome(tau, ctx);
  check_radius(abs(q));

  Complex t3, t4, n2sum;
  theta34(q, ctx, t3, t4, &n2sum);

  Real pi = const_pi(ctx);
  Real lnabsq = -(pi * 2) * tau.y;

  Complex t3_4 = pow_si(t3, 4);
  Complex R = pow_si(t4, 4) / t3_4;

  AbzValues v{Complex(p), Complex(p), Complex(p)};
  v.z = (R * 4) * (complex_from(1, 0, p) - R);
  v.a = (complex_from(1, 0, p) + (n2sum * (lnabsq * 8)) / t3) / (t3_4 * pi);
  v.b = (complex_from(1, 0, p) - R * 2) * (lnabsq / pi);
  return v;
}


namespace {

long kappa_of(const mpq_class& s) {
  if (s == mpq_class(1, 2)) return 64;
  if (s == mpq_class(1, 3)) return 108;
  if (s == mpq_class(1, 4)) return 256;
  throw std::domain_error("nome map: s must be 1/2, 1/3 or 1/4");
}

struct NomeKey {
  long num, den;
  mpfr_prec_t prec;
  bool operator<(const NomeKey& o) const {
    return std::tie(num, den, prec) < std::tie(o.num, o.den, o.prec);
  }
};

struct NomeSeries {
  std::vector<Real> a;  // 3F2(s, 1/2, 1-s; 1, 1; .) coefficients
  std::vector<Real> e;  // sqrt(1-t) coefficients
  std::vector<Real> b;  // Cauchy product a * e
  std::vector<Real> g;  // reciprocal of b
};

// g_n with sum g_n t^n = 1 / (y_0(t) sqrt(1-t)); extended on demand and
// cached per (s, precision).  Returned by value: the cache entry may grow.
std::vector<Real> g_coeffs(const mpq_class& s, size_t count, mpfr_prec_t p) {
  static std::map<NomeKey, NomeSeries> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  NomeKey key{s.get_num().get_si(), s.get_den().get_si(), p};
  NomeSeries& ns = cache[key];
  Real one = real_from(1L, p);
  if (ns.g.empty()) {
    ns.a.push_back(one);
    ns.e.push_back(one);
    ns.b.push_back(one);
    ns.g.push_back(one);
  }
  Real sr = real_from(s, p);
  Real half = real_from(mpq_class(1, 2), p);
  Real three_half = real_from(mpq_class(3, 2), p);
  while (ns.g.size() <= count) {
    long n = static_cast<long>(ns.g.size());
    Real nr = real_from(n, p);
    ns.a.push_back(ns.a.back() * (sr + (n - 1)) * (nr - half) *
                   ((1L - sr) + (n - 1)) / (nr * nr * nr));
    ns.e.push_back(ns.e.back() * (nr - three_half) / nr);
    Real bn = real_from(0L, p);
    for (long k = 0; k <= n; ++k)
      bn += ns.a[static_cast<size_t>(k)] * ns.e[static_cast<size_t>(n - k)];
    ns.b.push_back(bn);
    Real gn = real_from(0L, p);
    for (long k = 1; k <= n; ++k)
      gn -= ns.b[static_cast<size_t>(k)] * ns.g[static_cast<size_t>(n - k)];
    ns.g.push_back(gn);
  }
  return std::vector<Real>(ns.g.begin(), ns.g.begin() + count + 1);
}

// y_0 by direct summation, for the Newton derivative below
Complex y0_series_local(const Real& sr, const Complex& z, mpfr_prec_t p,
                        long digits) {
  Complex term = complex_from(1, 0, p), acc = complex_from(1, 0, p);
  Real half = real_from(mpq_class(1, 2), p);
  Real tol = pow10(-digits - 8, p);
  int run = 0;
  for (long n = 0; n < 200000; ++n) {
    Real num = (sr + n) * (half + n) * ((1L - sr) + n);
    Real den = real_from(n + 1, p);
    term = term * Complex(num / (den * den * den)) * z;
    acc += term;
    if (abs(term) <= tol * (abs(acc) + 1L)) {
      if (++run == 3) return acc;
    } else {
      run = 0;
    }
  }
  throw std::runtime_error("z_from_nome: y0 series did not converge");
}

}  // namespace

Complex lnq_from_z(const mpq_class& s, const Complex& z,
                   const PrecisionContext& ctx) {
  long kappa = kappa_of(s);
  mpfr_prec_t p = ctx.bits() + 32;
  Complex zz = at_prec(z, p);
  Real az = abs(zz);
  if (az.is_zero()) throw std::domain_error("lnq_from_z: z must be nonzero");
  if (az > real_from(mpq_class(85, 100), p))
    throw std::domain_error("lnq_from_z: |z| exceeds 0.85");

  Real tol = pow10(-ctx.digits - 8, p);
  size_t count = 64;
  std::vector<Real> g = g_coeffs(s, count, p);
  Complex sum(p);
  Complex zn = complex_from(1, 0, p);
  int run = 0;
  for (size_t n = 1;; ++n) {
    if (n >= g.size()) {
      count *= 2;
      if (count > (1u << 15))
        throw std::runtime_error("lnq_from_z: series did not converge");
      g = g_coeffs(s, count, p);
    }
    zn *= zz;
    Complex term = zn * Complex(g[n] / static_cast<long>(n));
    sum += term;
    if (abs(term) <= tol * (abs(sum) + 1L)) {
      if (++run == 3) break;
    } else {
      run = 0;
    }
  }
  Complex lnq = log(zz) - Complex(log(real_from(kappa, p))) + sum;
  return at_prec(lnq, ctx.bits());
}

Complex z_from_nome(const mpq_class& s, const Complex& q,
                    const PrecisionContext& ctx) {
  long kappa = kappa_of(s);
  mpfr_prec_t p = ctx.bits() + 32;
  Complex qq = at_prec(q, p);
  Real aq = abs(qq);
  if (aq.is_zero()) throw std::domain_error("z_from_nome: q must be nonzero");
  if (aq * kappa > real_from(mpq_class(9, 10), p))
    throw std::domain_error("z_from_nome: kappa_s |q| exceeds 0.9");

  Complex target = log(qq);
  Real sr = real_from(s, p);
  Real clamp = real_from(mpq_class(82, 100), p);
  Complex zz = qq * kappa;
  Real az = abs(zz);
  if (az > clamp) zz = zz * Complex(clamp / az);

  Real tol = pow10(-ctx.digits - 6, p);
  Complex c_one = complex_from(1, 0, p);
  // the residual must be resolved below tol, so the forward map runs deeper
  const PrecisionContext deep(ctx.digits + 12);
  // real q must stay on the real axis: a rounding-level drift below it would
  // flip the principal branch of log z for z < 0
  const bool q_real = qq.im.is_zero();
  for (int it = 0; it < 80; ++it) {
    Complex f = lnq_from_z(s, zz, deep) - target;
    // d(log q)/dz = 1 / (z sqrt(1-z) y_0(z))
    Complex dz = f * zz * sqrt(c_one - zz) * y0_series_local(sr, zz, p, ctx.digits);
    zz -= dz;
    if (q_real) zz = Complex(zz.re);
    az = abs(zz);
    if (az > real_from(mpq_class(84, 100), p)) zz = zz * Complex(clamp / az);
    if (abs(dz) <= tol * (az + 1L)) return at_prec(zz, ctx.bits());
  }
  throw std::runtime_error("z_from_nome: Newton iteration did not converge");
}

}  // namespace rforge

