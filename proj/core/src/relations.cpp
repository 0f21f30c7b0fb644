#include <rforge/relations.hpp>

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace rforge {

namespace {

mpz_class nearest_int(const Real& v) {
  mpz_class r;
  mpfr_get_z(r.get_mpz_t(), v.get(), MPFR_RNDN);
  return r;
}

Real from_z(const mpz_class& z, mpfr_prec_t p) {
  return real_from(mpq_class(z), p);
}

}  // namespace

std::optional<Relation> pslq(const std::vector<Real>& xs, long maxsteps,
                             const PrecisionContext& ctx) {
  const long n = (long)xs.size();
  if (n < 2) throw std::domain_error("pslq: need at least two inputs");
  const mpfr_prec_t p = ctx.bits();  // PrecisionContext enforces >= 30 digits

  const Real tol = pow10(-ctx.digits / 2, p);
  mpz_class maxcoeff;
  mpz_ui_pow_ui(maxcoeff.get_mpz_t(), 10, (unsigned long)(ctx.digits / 3));
  const Real maxcoeff_r = from_z(maxcoeff, p);

  // an exact zero input is already a unit relation (and would break the
  // partial-norm ratios below)
  for (long i = 0; i < n; ++i) {
    if (xs[i].is_zero()) {
      std::vector<mpz_class> c(n, 0);
      c[i] = 1;
      return Relation{std::move(c), real_from(0L, p)};
    }
  }

  Real norm = real_from(0L, p);
  for (auto& x : xs) norm += x * x;
  norm = sqrt(norm);
  if (norm.is_zero()) throw std::domain_error("pslq: all inputs are zero");

  std::vector<Real> y;
  y.reserve(n);
  for (auto& x : xs) y.push_back(x / norm);

  auto finish = [&](long idx, std::vector<std::vector<mpz_class>>& B)
      -> std::optional<Relation> {
    std::vector<mpz_class> c(n);
    bool nonzero = false;
    for (long k = 0; k < n; ++k) {
      c[k] = B[k][idx];
      if (c[k] != 0) nonzero = true;
      mpz_class a = abs(c[k]);
      if (a > maxcoeff) return std::nullopt;
    }
    if (!nonzero) return std::nullopt;
    Real res = real_from(0L, p);
    for (long k = 0; k < n; ++k) res += from_z(c[k], p) * xs[k];
    res = abs(res);
    if (!(res < tol)) return std::nullopt;
    return Relation{std::move(c), res};
  };

  // partial norms s_j = sqrt(sum_{k >= j} y_k^2)
  std::vector<Real> s(n, real_from(0L, p));
  {
    Real acc = real_from(0L, p);
    for (long j = n - 1; j >= 0; --j) {
      acc += y[j] * y[j];
      s[j] = sqrt(acc);
    }
  }

  std::vector<std::vector<Real>> H(n, std::vector<Real>(n - 1, real_from(0L, p)));
  for (long j = 0; j < n - 1; ++j) {
    H[j][j] = s[j + 1] / s[j];
    for (long i = j + 1; i < n; ++i) H[i][j] = -y[i] * y[j] / (s[j] * s[j + 1]);
  }

  std::vector<std::vector<mpz_class>> A(n, std::vector<mpz_class>(n, 0));
  std::vector<std::vector<mpz_class>> B(n, std::vector<mpz_class>(n, 0));
  for (long i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;

  auto reduce = [&]() -> bool {
    for (long i = 1; i < n; ++i) {
      for (long j = i - 1; j >= 0; --j) {
        if (H[j][j].is_zero()) return false;  // precision exhausted
        mpz_class t = nearest_int(H[i][j] / H[j][j]);
        if (t == 0) continue;
        Real tr = from_z(t, p);
        y[j] += tr * y[i];
        for (long k = 0; k <= j; ++k) H[i][k] -= tr * H[j][k];
        for (long k = 0; k < n; ++k) {
          A[i][k] -= t * A[j][k];
          B[k][j] += t * B[k][i];
        }
      }
    }
    return true;
  };
  if (!reduce()) return std::nullopt;

  std::vector<Real> gpow;
  gpow.reserve(n - 1);
  Real gamma = sqrt(real_from(4L, p) / 3L);
  Real g = real_from(1L, p);
  for (long i = 0; i < n - 1; ++i) {
    gpow.push_back(g);
    g *= gamma;
  }

  for (long step = 0; step < maxsteps; ++step) {
    // row with the largest gamma^i |H_ii| moves down
    long m = 0;
    Real best = real_from(-1L, p);
    for (long i = 0; i < n - 1; ++i) {
      Real v = gpow[i] * abs(H[i][i]);
      if (v > best) {
        best = v;
        m = i;
      }
    }

    std::swap(y[m], y[m + 1]);
    std::swap(H[m], H[m + 1]);
    std::swap(A[m], A[m + 1]);
    for (long k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);

    if (m < n - 2) {
      Real t0 = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
      if (t0.is_zero()) return std::nullopt;
      Real c = H[m][m] / t0, d = H[m][m + 1] / t0;
      for (long i = m; i < n; ++i) {
        Real u = H[i][m], v = H[i][m + 1];
        H[i][m] = c * u + d * v;
        H[i][m + 1] = c * v - d * u;
      }
    }

    if (!reduce()) return std::nullopt;

    long idx = 0;
    Real ymin = abs(y[0]);
    for (long i = 1; i < n; ++i) {
      Real a = abs(y[i]);
      if (a < ymin) {
        ymin = a;
        idx = i;
      }
    }
    if (ymin < tol) {
      auto rel = finish(idx, B);
      if (rel) return rel;
    }

    // no relation with norm below 1/max|H_jj| exists
    Real hmax = real_from(0L, p);
    for (long j = 0; j < n - 1; ++j) {
      Real a = abs(H[j][j]);
      if (a > hmax) hmax = a;
    }
    if (hmax.is_zero() || real_from(1L, p) / hmax > maxcoeff_r)
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<MinPoly> minpoly(const Complex& alpha, int maxdeg,
                               const PrecisionContext& ctx) {
  if (maxdeg < 1 || maxdeg > 8)
    throw std::domain_error("minpoly: maxdeg must be between 1 and 8");
  const mpfr_prec_t p = ctx.bits();
  Real tiny = pow10(-(ctx.digits - 10), p);
  bool real_axis = abs(alpha.im) <= tiny * (abs(alpha.re) + 1L);
  bool imag_axis = abs(alpha.re) <= tiny * (abs(alpha.im) + 1L);
  if (!real_axis && !imag_axis)
    throw std::domain_error("minpoly: value must lie on the real or imaginary axis");
  Real t = real_axis ? alpha.re : alpha.im;  // imaginary alpha: t = alpha/i

  for (int d = 1; d <= maxdeg; ++d) {
    std::vector<Real> xs;
    xs.reserve(d + 1);
    Real tp = real_from(1L, p);
    for (int k = 0; k <= d; ++k) {
      xs.push_back(tp);
      tp *= t;
    }
    auto rel = pslq(xs, 4000, ctx);
    if (!rel) continue;
    std::vector<mpz_class> c = rel->coefficients;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.size() < 2) continue;  // constants cannot vanish
    mpz_class g = 0;
    for (auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (auto& v : c) v /= g;
    if (c.back() < 0)
      for (auto& v : c) v = -v;
    return MinPoly{std::move(c), !real_axis};
  }
  return std::nullopt;
}

}  // namespace rforge
