#include "rforge/numtheory.hpp"

#include <mutex>
#include <vector>

namespace rforge {

int kronecker(long long k, long long n) {
  // (2/a) for odd a, indexed by a mod 8
  static const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (n == 0) return (k == 1 || k == -1) ? 1 : 0;
  if ((k & 1) == 0 && (n & 1) == 0) return 0;
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  int r = 1;
  if (v & 1) r = tab2[((k % 8) + 8) % 8];
  if (n < 0) {
    n = -n;
    if (k < 0) r = -r;
  }
  k %= n;
  if (k < 0) k += n;
  // reciprocity loop on odd positive n
  while (k != 0) {
    v = 0;
    while ((k & 1) == 0) {
      k >>= 1;
      ++v;
    }
    if (v & 1) r *= tab2[n % 8];
    if (k & n & 2) r = -r;  // both = 3 mod 4
    long long t = k;
    k = n % t;
    n = t;
  }
  return (n == 1) ? r : 0;
}

long long sigma3(long n) {
  if (n < 1) throw std::domain_error("sigma3: n must be positive");
  long long s = 0;
  for (long d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d) continue;
    long long e = n / d;
    s += static_cast<long long>(d) * d * d;
    if (e != d) s += e * e * e;
  }
  return s;
}

mpq_class bernoulli_exact(unsigned m) {
  static std::vector<mpq_class> cache{mpq_class(1), mpq_class(-1, 2)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= m) {
    unsigned j = cache.size();
    // B_j = -(1/(j+1)) sum_{i<j} C(j+1, i) B_i
    mpq_class acc(0);
    mpz_class bin;
    for (unsigned i = 0; i < j; ++i) {
      if (i > 1 && (i & 1)) continue;  // odd B_i vanish past B_1
      mpz_bin_uiui(bin.get_mpz_t(), j + 1, i);
      acc += bin * cache[i];
    }
    acc /= -mpz_class(j + 1);
    acc.canonicalize();
    cache.push_back(acc);
  }
  return cache[m];
}

Real bernoulli(unsigned m, const PrecisionContext& ctx) {
  return real_from(bernoulli_exact(m), ctx.bits());
}

Real hurwitz_zeta_em(const Real& t, const Real& a, long N, long M,
                     const PrecisionContext& ctx) {
  if (!(t > 1L)) throw std::domain_error("hurwitz_zeta: t must be > 1");
  if (!(a > 0L) || a > 1L) throw std::domain_error("hurwitz_zeta: a must lie in (0,1]");
  mpfr_prec_t p = ctx.bits();
  Real tw(p);
  mpfr_set(tw.get(), t.get(), MPFR_RNDN);
  Real acc(p);
  mpfr_set_zero(acc.get(), 1);
  Real base(p);
  for (long n = 0; n < N; ++n) {
    mpfr_add_si(base.get(), a.get(), n, MPFR_RNDN);
    acc += pow(base, -tw);
  }
  Real w = a + N;
  acc += pow(w, 1 - tw) / (tw - 1);
  Real wimt = pow(w, -tw);  // running w^{-t-2j+1} below
  acc += wimt / 2;
  wimt /= w;
  Real winv2 = 1 / (w * w);
  Real poch = tw;  // (t)_{2j-1}
  mpz_class fac(2);
  for (long j = 1; j <= M; ++j) {
    mpq_class coef = bernoulli_exact(static_cast<unsigned>(2 * j)) / mpq_class(fac);
    acc += real_from(coef, p) * poch * wimt;
    // advance (t)_{2j-1} -> (t)_{2j+1}, (2j)! -> (2j+2)!, w exponent by -2
    poch *= (tw + (2 * j - 1)) * (tw + 2 * j);
    fac *= (2 * j + 1) * (2 * j + 2);
    wimt *= winv2;
  }
  return acc;
}

Real hurwitz_zeta(const Real& t, const Real& a, const PrecisionContext& ctx) {
  return hurwitz_zeta_em(t, a, ctx.digits, ctx.digits, ctx);
}

Real dirichlet_L(long k, const Real& t, const PrecisionContext& ctx) {
  if (k == 0) throw std::domain_error("dirichlet_L: k must be nonzero");
  if (!(t > 1L)) throw std::domain_error("dirichlet_L: t must be > 1");
  mpfr_prec_t p = ctx.bits();
  Real one = real_from(1L, p);
  if (k == 1) return hurwitz_zeta(t, one, ctx);
  long m = k < 0 ? -k : k;
  Real acc(p);
  mpfr_set_zero(acc.get(), 1);
  for (long r = 1; r <= m; ++r) {
    int chi = kronecker(k, r);
    if (chi == 0) continue;
    Real z = hurwitz_zeta(t, real_from(mpq_class(r, m), p), ctx);
    if (chi > 0)
      acc += z;
    else
      acc -= z;
  }
  return acc * pow(real_from(m, p), -t);
}

}  // namespace rforge
