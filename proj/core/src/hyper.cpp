#include <rforge/hyper.hpp>

#include <rforge/stats.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rforge {

namespace {

Real pi_at(mpfr_prec_t p) {
  Real r(p);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

bool nonpositive_integer(const Complex& w) {
  if (!w.im.is_zero()) return false;
  return w.re.sign() <= 0 && floor_r(w.re) == w.re;
}

// ---- Spouge expansion for Gamma ------------------------------------------

struct SpougeTable {
  long a = 0;
  mpfr_prec_t prec = 0;
  std::vector<Real> c;  // c_1 .. c_{a-1}
  Real sqrt2pi;
};

// Tables are built once per (a, precision) pair and shared; map nodes are
// stable so returned references survive later insertions.
const SpougeTable& spouge_table(const PrecisionContext& ctx) {
  static std::map<std::pair<long, mpfr_prec_t>, SpougeTable> cache;
  static std::mutex mu;
  long a = static_cast<long>(std::ceil(1.2533 * (ctx.digits + 20))) + 2;
  mpfr_prec_t wp = ctx.bits() + static_cast<mpfr_prec_t>(a) + 32;

  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(a, wp);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  SpougeTable t;
  t.a = a;
  t.prec = wp;
  t.sqrt2pi = sqrt(pi_at(wp) * 2);
  Real fact = real_from(1L, wp);  // (k-1)!
  Real half = real_from(mpq_class(1, 2), wp);
  for (long k = 1; k < a; ++k) {
    if (k > 1) fact *= real_from(k - 1, wp);
    Real ak = real_from(a - k, wp);
    Real ck = pow(ak, real_from(k, wp) - half) * exp(ak) / fact;
    t.c.push_back(k % 2 == 0 ? -ck : ck);
  }
  return cache.emplace(key, std::move(t)).first->second;
}

// Gamma(w) for Re w >= 1/2, at the table's working precision.
Complex spouge_eval(const Complex& w, const SpougeTable& t) {
  mpfr_prec_t wp = t.prec;
  Complex z = at_prec(w, wp) - 1L;
  Complex acc(wp);
  acc.re = t.sqrt2pi;
  for (long k = 1; k < t.a; ++k)
    acc += Complex(t.c[static_cast<size_t>(k) - 1]) / (z + k);
  Complex za = z + t.a;
  Complex zh = z + real_from(mpq_class(1, 2), wp);
  return exp(zh * log(za) - za) * acc;
}

// ---- small exact-integer combinatorics ------------------------------------
//
// ODE order stays <= 6 and Taylor indices below ~10^3, so falling factorials
// and binomials fit comfortably in long.

long ffac_l(long t, long m) {
  long r = 1;
  for (long i = 0; i < m; ++i) r *= t - i;
  return r;
}

long binom_l(long n, long k) {
  if (k < 0 || k > n) return 0;
  long den = 1;
  for (long i = 2; i <= k; ++i) den *= i;
  return ffac_l(n, k) / den;
}

// Stirling numbers of the second kind, S[k][m] for k, m <= n.
std::vector<std::vector<long>> stirling2(long n) {
  std::vector<std::vector<long>> S(n + 1, std::vector<long>(n + 1, 0));
  S[0][0] = 1;
  for (long k = 1; k <= n; ++k)
    for (long m = 1; m <= k; ++m) S[k][m] = m * S[k - 1][m] + S[k - 1][m - 1];
  return S;
}

// multiply a coefficient vector by (t + c)
std::vector<Complex> polymul1(const std::vector<Complex>& a, const Complex& c) {
  mpfr_prec_t wp = c.prec();
  std::vector<Complex> r(a.size() + 1, Complex(wp));
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i] * c;
    r[i + 1] += a[i];
  }
  return r;
}

// ---- holonomic continuation ------------------------------------------------

double seg_dist(double ax, double ay, double bx, double by, double px,
                double py) {
  double vx = bx - ax, vy = by - ay;
  double wx = px - ax, wy = py - ay;
  double l2 = vx * vx + vy * vy;
  double t = l2 > 0 ? std::clamp((wx * vx + wy * vy) / l2, 0.0, 1.0) : 0.0;
  return std::hypot(wx - t * vx, wy - t * vy);
}

struct Engine {
  mpfr_prec_t wp;
  long N;         // ODE order = #upper
  long digits;
  long ncap;      // cap on the local Taylor order
  Real eps;       // tail target for local series
  std::vector<Complex> up, lo;
  std::vector<Complex> Pm, Qm;  // theta-polynomial in w^m D^m form

  Engine(const HypergeometricSpec& spec, const PrecisionContext& ctx) {
    wp = ctx.bits() + 64;
    digits = ctx.digits;
    N = static_cast<long>(spec.upper.size());
    ncap = 4 * digits + 100;
    eps = pow10(-digits - 10, wp);
    for (const Complex& v : spec.upper) up.push_back(at_prec(v, wp));
    for (const Complex& v : spec.lower) lo.push_back(at_prec(v, wp));

    // P(t) = t prod_j (t + b_j - 1), Q(t) = prod_i (t + a_i); then
    // P(theta) = sum_m Pm[m] w^m D^m via theta^k = sum_m S(k,m) w^m D^m.
    std::vector<Complex> P{Complex(wp), complex_from(1, 0, wp)};
    for (const Complex& b : lo) P = polymul1(P, b - 1L);
    std::vector<Complex> Q{complex_from(1, 0, wp)};
    for (const Complex& a : up) Q = polymul1(Q, a);
    auto S = stirling2(N);
    Pm.assign(N + 1, Complex(wp));
    Qm.assign(N + 1, Complex(wp));
    for (long m = 0; m <= N; ++m) {
      for (long k = m; k < static_cast<long>(P.size()); ++k)
        Pm[m] += P[static_cast<size_t>(k)] * S[k][m];
      for (long k = m; k < static_cast<long>(Q.size()); ++k)
        Qm[m] += Q[static_cast<size_t>(k)] * S[k][m];
    }
  }

  // Taylor data c_m = f^{(m)}(w0)/m! for m < N, from the defining series.
  std::vector<Complex> seed(const Complex& w0) const {
    std::vector<Complex> derivs(static_cast<size_t>(N), Complex(wp));
    Complex t = complex_from(1, 0, wp);  // t_k w0^k
    Real eps_seed = pow10(-digits - 14, wp);
    long nmin = 2 * digits;
    int run = 0;
    long k = 0;
    for (;; ++k) {
      for (long m = 0; m < N && m <= k; ++m)
        derivs[static_cast<size_t>(m)] += t * ffac_l(k, m);
      Complex ratio = complex_from(1, 0, wp);
      for (const Complex& a : up) ratio *= (a + k);
      for (const Complex& b : lo) ratio = ratio / (b + k);
      t = t * ratio * w0 / (k + 1);
      Real scale = real_from(1L, wp);
      for (const Complex& d : derivs) scale += abs(d);
      Real mag = abs(t) * pow_si(real_from(k + 2, wp), N);
      if (k >= nmin && mag < eps_seed * scale) {
        if (++run == 3) break;
      } else {
        run = 0;
      }
      if (k > 40 * digits + 400)
        throw std::runtime_error("pfq_continue: seed series stalled");
    }
    std::vector<Complex> c(static_cast<size_t>(N), Complex(wp));
    Complex winv = complex_from(1, 0, wp) / w0;
    Complex wim = complex_from(1, 0, wp);
    long mfact = 1;
    for (long m = 0; m < N; ++m) {
      if (m > 0) {
        wim = wim * winv;
        mfact *= m;
      }
      c[static_cast<size_t>(m)] = derivs[static_cast<size_t>(m)] * wim / mfact;
    }
    return c;
  }

  // Re-expand: given c_m at u, return the Taylor data at u + h.
  std::vector<Complex> advance(const Complex& u,
                               const std::vector<Complex>& c0,
                               const Complex& h) const {
    // alpha[m][r]: the ODE at expansion point u, org coordinates w = u + v
    std::vector<Complex> upow(static_cast<size_t>(N) + 2);
    upow[0] = complex_from(1, 0, wp);
    for (long e = 1; e <= N + 1; ++e)
      upow[static_cast<size_t>(e)] = upow[static_cast<size_t>(e) - 1] * u;
    std::vector<std::vector<Complex>> al(static_cast<size_t>(N) + 1);
    for (long m = 0; m <= N; ++m) {
      al[static_cast<size_t>(m)].assign(static_cast<size_t>(m) + 2,
                                        Complex(wp));
      for (long r = 0; r <= m + 1; ++r) {
        Complex v(wp);
        if (r <= m)
          v += Pm[static_cast<size_t>(m)] * binom_l(m, r) *
               upow[static_cast<size_t>(m - r)];
        v -= Qm[static_cast<size_t>(m)] * binom_l(m + 1, r) *
             upow[static_cast<size_t>(m + 1 - r)];
        al[static_cast<size_t>(m)][static_cast<size_t>(r)] = v;
      }
    }

    std::vector<Complex> c = c0;
    Real ah = abs(h);
    Real hn = pow_si(ah, N);  // |h|^K for the newest index K
    Real scale = abs(c[0]) + abs(c[1 < N ? 1 : 0]) * ah + 1L;
    int good = 0;
    for (long T = 0;; ++T) {
      Complex acc(wp);
      for (long m = 0; m <= N; ++m) {
        for (long r = 0; r <= m + 1; ++r) {
          if (m == N && r == 0) continue;
          long tt = T + m - r;
          if (tt < 0) continue;
          long ff = ffac_l(tt, m);
          if (ff == 0) continue;
          acc += al[static_cast<size_t>(m)][static_cast<size_t>(r)] *
                 c[static_cast<size_t>(tt)] * ff;
        }
      }
      long K = T + N;
      Complex denom = al[static_cast<size_t>(N)][0] * ffac_l(K, N);
      c.push_back(-acc / denom);
      Real tail = abs(c.back()) * hn * pow_si(real_from(K + 1, wp), N);
      if (tail < eps * scale) {
        if (++good == 3) break;
      } else {
        good = 0;
      }
      if (K >= ncap)
        throw std::runtime_error(
            "pfq_continue: local Taylor expansion did not converge");
      hn *= ah;
    }

    // c'[m] = sum_{n>=m} C(n,m) c[n] h^{n-m}, Horner from the top
    std::vector<Complex> out(static_cast<size_t>(N), Complex(wp));
    long K = static_cast<long>(c.size()) - 1;
    for (long m = 0; m < N; ++m) {
      Complex acc(wp);
      for (long n = K; n >= m; --n)
        acc = acc * h + c[static_cast<size_t>(n)] * binom_l(n, m);
      out[static_cast<size_t>(m)] = acc;
    }
    return out;
  }

  Complex run(const Complex& target, const ContinuationPath& path) const {
    // seed toward the first anchor
    const bool autopath = path.waypoints.empty();
    Complex dir = autopath ? target : at_prec(path.waypoints.front(), wp);
    Complex w0 = dir * Complex(real_from(mpq_class(3, 10), wp) / abs(dir));

    std::vector<Complex> nodes;
    if (autopath) {
      // dodge w = 1 when the straight segment brushes it
      if (seg_dist(to_double(w0.re), to_double(w0.im), to_double(target.re),
                   to_double(target.im), 1.0, 0.0) < 0.2) {
        Real quart = real_from(mpq_class(3, 4), wp);
        nodes.push_back(Complex(
            real_from(1L, wp),
            path.side == CutSide::below ? -quart : quart));
      }
    } else {
      for (const Complex& v : path.waypoints) nodes.push_back(at_prec(v, wp));
    }
    nodes.push_back(target);

    Real rat = real_from(path.step_ratio, wp);
    Real tiny = pow10(-digits - 30, wp);
    Complex one = complex_from(1, 0, wp);
    std::vector<Complex> c = seed(w0);
    Complex u = w0;
    long steps = 0;
    for (const Complex& node : nodes) {
      for (;;) {
        if (++steps > 20000)
          throw std::runtime_error("pfq_continue: path needs too many steps");
        Complex rem = node - u;
        Real drem = abs(rem);
        if (drem.is_zero()) break;
        Real d0 = abs(u), d1 = abs(u - one);
        Real trust = (d0 < d1 ? d0 : d1) * rat;
        if (trust >= drem) {
          c = advance(u, c, rem);
          u = node;
          break;
        }
        Complex h = rem * Complex(trust / drem);
        if (abs(h) < tiny * (abs(u) + 1L))
          throw std::runtime_error(
              "pfq_continue: step underflow near a singular point");
        c = advance(u, c, h);
        u = u + h;
      }
    }
    return c[0];
  }
};

// series when the argument is comfortably inside the disk, else continuation
Complex route_pfq(const HypergeometricSpec& spec, const Complex& w,
                  const PrecisionContext& ctx) {
  if (to_double(abs(w)) <= 0.7) return pfq_series(spec, w, ctx);
  return pfq_continue(spec, w, ContinuationPath{}, ctx);
}

void check_s(const mpq_class& s, const char* who) {
  if (s <= 0 || s >= 1)
    throw std::domain_error(std::string(who) + ": s must lie in (0, 1)");
}

}  // namespace

Complex cgamma(const Complex& w, const PrecisionContext& ctx) {
  if (nonpositive_integer(w))
    throw std::domain_error("cgamma: pole at a non-positive integer");
  const SpougeTable& t = spouge_table(ctx);
  Complex ww = at_prec(w, t.prec);
  Complex g(t.prec);
  if (mpfr_cmp_d(w.re.get(), 0.5) >= 0) {
    g = spouge_eval(ww, t);
  } else {
    // Gamma(w) Gamma(1-w) = pi / sin(pi w)
    Real pi = pi_at(t.prec);
    Complex one = complex_from(1, 0, t.prec);
    g = Complex(pi) / (sin(Complex(pi) * ww) * spouge_eval(one - ww, t));
  }
  return at_prec(g, ctx.bits());
}

Complex pochhammer_x(const Complex& c, const Complex& x,
                     const PrecisionContext& ctx) {
  if (x.is_zero()) return complex_from(1, 0, ctx.bits());
  return cgamma(c + x, ctx) / cgamma(c, ctx);
}

Complex pfq_series(const HypergeometricSpec& spec, const Complex& w,
                   const PrecisionContext& ctx) {
  stats::counters().hyper++;
  const size_t p = spec.upper.size(), q = spec.lower.size();
  if (p > q + 1) throw std::domain_error("pfq_series: requires p <= q+1");
  for (const Complex& b : spec.lower)
    if (nonpositive_integer(b))
      throw std::domain_error("pfq_series: non-positive integer lower parameter");
  mpfr_prec_t wp = ctx.bits() + 32;
  Complex wv = at_prec(w, wp);
  if (p == q + 1 && abs(wv) > real_from(mpq_class(3, 4), wp))
    throw std::domain_error("pfq_series: |w| > 3/4 is outside the direct regime");

  std::vector<Complex> up, lo;
  for (const Complex& v : spec.upper) up.push_back(at_prec(v, wp));
  for (const Complex& v : spec.lower) lo.push_back(at_prec(v, wp));
  Complex term = complex_from(1, 0, wp), acc = complex_from(1, 0, wp);
  Real tol = pow10(-ctx.digits - 5, wp);
  int run = 0;
  for (long n = 0; n < 200000; ++n) {
    Complex ratio = complex_from(1, 0, wp);
    for (const Complex& a : up) ratio *= (a + n);
    for (const Complex& b : lo) ratio = ratio / (b + n);
    term = term * ratio * wv / (n + 1);
    acc += term;
    if (abs(term) <= tol * (abs(acc) + 1L)) {
      if (++run == 3) return at_prec(acc, ctx.bits());
    } else {
      run = 0;
    }
  }
  throw std::runtime_error("pfq_series: series did not converge");
}

Complex pfq_continue(const HypergeometricSpec& spec, const Complex& w,
                     const ContinuationPath& path,
                     const PrecisionContext& ctx) {
  const size_t p = spec.upper.size(), q = spec.lower.size();
  for (const Complex& b : spec.lower)
    if (nonpositive_integer(b))
      throw std::domain_error(
          "pfq_continue: non-positive integer lower parameter");
  if (p <= q) return pfq_series(spec, w, ctx);  // entire, nothing to continue
  if (p > q + 1) throw std::domain_error("pfq_continue: requires p <= q+1");
  stats::counters().hyper++;

  if (w.is_zero()) throw std::domain_error("pfq_continue: w = 0 is excluded");
  if (w.im.is_zero() && w.re == 1L)
    throw std::domain_error("pfq_continue: w = 1 is singular");
  if (path.step_ratio <= 0 || path.step_ratio >= 1)
    throw std::domain_error("pfq_continue: step_ratio must lie in (0, 1)");
  for (const Complex& v : path.waypoints) {
    double dx0 = to_double(abs(v));
    double dx1 = to_double(abs(v - 1L));
    if (dx0 < 0.05 || dx1 < 0.05)
      throw std::domain_error(
          "pfq_continue: waypoint within 0.05 of a singular point");
  }

  Engine eng(spec, ctx);
  return at_prec(eng.run(at_prec(w, eng.wp), path), ctx.bits());
}

Complex y0(const mpq_class& s, const Complex& z, const PrecisionContext& ctx) {
  check_s(s, "y0");
  mpfr_prec_t p = ctx.bits();
  Real sr = real_from(s, p);
  Complex c_one = complex_from(1, 0, p);
  HypergeometricSpec spec{{Complex(sr), Complex(real_from(mpq_class(1, 2), p)),
                           Complex(1L - sr)},
                          {c_one, c_one}};
  return route_pfq(spec, at_prec(z, p), ctx);
}

Complex yx(const mpq_class& s, const Complex& x, const Complex& z,
           const PrecisionContext& ctx) {
  check_s(s, "yx");
  if (x.is_zero()) return y0(s, z, ctx);
  mpfr_prec_t p = ctx.bits();
  Real sr = real_from(s, p);
  Real half = real_from(mpq_class(1, 2), p);
  Complex xx = at_prec(x, p), zz = at_prec(z, p);
  Complex c_one = complex_from(1, 0, p);

  HypergeometricSpec spec{
      {c_one, xx + half, xx + (1L - sr), xx + sr},
      {c_one + xx, c_one + xx, c_one + xx}};
  Complex F = route_pfq(spec, zz, ctx);
  Complex g1x = cgamma(c_one + xx, ctx);
  Complex pref = pow(zz, xx) * pochhammer_x(Complex(half), xx, ctx) *
                 pochhammer_x(Complex(1L - sr), xx, ctx) *
                 pochhammer_x(Complex(sr), xx, ctx) / (g1x * g1x * g1x);
  return pref * F;
}

Complex Yx_completed(const mpq_class& s, const Complex& x, const Complex& z,
                     const PrecisionContext& ctx) {
  check_s(s, "Yx_completed");
  if (z.im.is_zero())
    throw std::domain_error("Yx_completed: z must be off the real axis");
  if (x.is_zero()) return y0(s, z, ctx);
  mpfr_prec_t p = ctx.bits();

  // the Gamma quotients in the reflected half have poles at x = s, 1/2,
  // 1-s (mod 1); refuse clearly instead of dividing by a huge value
  if (x.im.is_zero()) {
    Real f = x.re - floor_r(x.re);
    const mpq_class poles[] = {s, mpq_class(1, 2), mpq_class(1 - s)};
    for (const mpq_class& d : poles) {
      if (to_double(abs(f - real_from(d, p))) < 1e-12)
        throw std::domain_error("Yx_completed: x lies on the pole set");
    }
  }

  Real sr = real_from(s, p);
  Complex xx = at_prec(x, p), zz = at_prec(z, p);
  Complex c_one = complex_from(1, 0, p);
  Complex first = yx(s, x, z, ctx);

  Complex winv = c_one / zz;
  HypergeometricSpec spec{
      {c_one, c_one - xx, c_one - xx, c_one - xx},
      {Complex(real_from(mpq_class(3, 2), p)) - xx,
       Complex(real_from(2 - s, p)) - xx,
       Complex(real_from(1 + s, p)) - xx}};
  Complex F2 = route_pfq(spec, winv, ctx);

  Complex g1x = cgamma(c_one + xx, ctx);
  Complex pref = (xx * xx * xx) * pow(zz, xx - 1L) * 2L /
                 Complex(sr * (1L - sr)) *
                 pochhammer_x(Complex(real_from(mpq_class(-1, 2), p)), xx, ctx) *
                 pochhammer_x(Complex(real_from(s - 1, p)), xx, ctx) *
                 pochhammer_x(Complex(real_from(-s, p)), xx, ctx) /
                 (g1x * g1x * g1x);
  return first - pref * F2;
}

Complex companion_sum(const CompanionSpec& cs, const PrecisionContext& ctx) {
  check_s(cs.s, "companion_sum");
  mpfr_prec_t p = ctx.bits() + 32;
  Complex a = at_prec(cs.a, p), b = at_prec(cs.b, p), z = at_prec(cs.z, p);
  Complex c_one = complex_from(1, 0, p);
  if (z.is_zero() || (z.im.is_zero() && z.re == 1L))
    throw std::domain_error("companion_sum: z must avoid 0 and 1");
  Real sr = real_from(cs.s, p);
  Real half = real_from(mpq_class(1, 2), p);
  Complex winv = c_one / z;
  Real awinv = abs(winv);

  if (awinv <= half) {
    // direct: the weight n!^3 / ((s)_n (1/2)_n (1-s)_n) grows multiplicatively
    Complex acc(p);
    Real coeff = real_from(1L, p);
    Complex zpow = c_one;
    Real tol = pow10(-ctx.digits - 5, p);
    int run = 0;
    for (long n = 1; n < 400000; ++n) {
      Real nr = real_from(n, p);
      coeff *= nr * nr * nr /
               ((sr + (n - 1)) * (nr - half) * ((1L - sr) + (n - 1)));
      zpow *= winv;
      Complex term = (a - b * nr) * zpow * Complex(coeff / (nr * nr * nr));
      acc += term;
      if (abs(term) <= tol * (abs(acc) + 1L)) {
        if (++run == 3) return at_prec(acc, ctx.bits());
      } else {
        run = 0;
      }
    }
    throw std::runtime_error("companion_sum: series did not converge");
  }

  Complex scale2 = c_one * 2L / (Complex(sr * (1L - sr)) * z);
  if (b.is_zero()) {
    HypergeometricSpec spec{
        {c_one, c_one, c_one, c_one},
        {Complex(real_from(mpq_class(3, 2), p)),
         Complex(real_from(2 - cs.s, p)), Complex(real_from(1 + cs.s, p))}};
    Complex F = route_pfq(spec, winv, ctx);
    return at_prec(a * scale2 * F, ctx.bits());
  }

  Complex qab = a / b;
  if (nonpositive_integer(c_one - qab))
    throw std::domain_error(
        "companion_sum: a/b - 1 is a non-negative integer");
  HypergeometricSpec spec{
      {c_one, c_one, c_one, c_one, complex_from(2, 0, p) - qab},
      {Complex(real_from(mpq_class(3, 2), p)),
       Complex(real_from(1 + cs.s, p)), Complex(real_from(2 - cs.s, p)),
       c_one - qab}};
  Complex F = route_pfq(spec, winv, ctx);
  return at_prec((a - b) * scale2 * F, ctx.bits());
}

Complex ramanujan_sum(const CompanionSpec& cs, const PrecisionContext& ctx) {
  check_s(cs.s, "ramanujan_sum");
  mpfr_prec_t p = ctx.bits() + 32;
  Complex a = at_prec(cs.a, p), b = at_prec(cs.b, p), z = at_prec(cs.z, p);
  Complex c_one = complex_from(1, 0, p);
  if (z.is_zero()) return at_prec(a, ctx.bits());  // only the n = 0 term
  if (z.im.is_zero() && z.re == 1L)
    throw std::domain_error("ramanujan_sum: z = 1 is singular");
  Real sr = real_from(cs.s, p);
  Real half = real_from(mpq_class(1, 2), p);

  if (abs(z) <= half) {
    Complex acc = a;
    Real coeff = real_from(1L, p);
    Complex zpow = c_one;
    Real tol = pow10(-ctx.digits - 5, p);
    int run = 0;
    for (long n = 1; n < 400000; ++n) {
      Real nr = real_from(n, p);
      coeff *= (sr + (n - 1)) * (nr - half) * ((1L - sr) + (n - 1)) /
               (nr * nr * nr);
      zpow *= z;
      Complex term = (a + b * nr) * zpow * Complex(coeff);
      acc += term;
      if (abs(term) <= tol * (abs(acc) + 1L)) {
        if (++run == 3) return at_prec(acc, ctx.bits());
      } else {
        run = 0;
      }
    }
    throw std::runtime_error("ramanujan_sum: series did not converge");
  }

  if (b.is_zero()) return at_prec(a * y0(cs.s, cs.z, ctx), ctx.bits());

  Complex qab = a / b;
  if (nonpositive_integer(qab))
    throw std::domain_error("ramanujan_sum: a/b is a non-positive integer");
  HypergeometricSpec spec{{Complex(sr), Complex(half), Complex(1L - sr),
                           c_one + qab},
                          {c_one, c_one, qab}};
  Complex F = route_pfq(spec, z, ctx);
  return at_prec(a * F, ctx.bits());
}

}  // namespace rforge
