#pragma once
// Arbitrary-precision real and complex arithmetic on top of MPFR.
//
// Precision model: a PrecisionContext asks for `digits` decimal digits and
// carries `guard` extra digits (default 15); context-aware functions run at
// bits(digits + guard) and MPFR's 1-ulp rounding applies per operation.
// Binary operators produce results at the wider of the two operand
// precisions, so precision flows through expressions without threading a
// context everywhere.  Assignment adopts the source's precision (a Real is
// its value plus its precision).
//
// Branch conventions: complex log/sqrt/pow/arg are principal with
// arg in (-pi, pi].  The nome is the one exception: log q := 2*pi*i*tau
// whenever a Tau is supplied (see log_q), so arguments beyond pi survive,
// e.g. tau = 9/16 + iy keeps arg q = 9*pi/8 instead of folding to -7*pi/8.

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace rforge {

struct PrecisionContext {
  int digits;
  int guard;

  explicit PrecisionContext(int digits_, int guard_ = 15)
      : digits(digits_), guard(guard_) {
    if (digits < 30) throw std::domain_error("PrecisionContext: digits must be >= 30");
    if (guard < 0) throw std::domain_error("PrecisionContext: guard must be >= 0");
  }

  // Working mantissa bits: ceil((digits+guard)*log2(10)).
  mpfr_prec_t bits() const {
    return static_cast<mpfr_prec_t>(std::ceil((digits + guard) * 3.3219280948873626));
  }
};

class Real {
 public:
  Real() { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_set_nan(v_); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_nan(v_); }
  Real(const Real& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  ~Real() { mpfr_clear(v_); }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

// ---- factories ------------------------------------------------------------

inline Real real_from(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.get(), v, MPFR_RNDN);
  return r;
}

inline Real real_from(const mpq_class& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

inline Real real_from(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.get(), v, MPFR_RNDN);
  return r;
}

// Decimal string, round-to-nearest at `prec` bits.
Real real_from_str(const std::string& s, mpfr_prec_t prec);

// Round (or zero-pad) to exactly prec bits.
Real at_prec(const Real& x, mpfr_prec_t prec);

// 10^e, exactly representable products of 10.
Real pow10(long e, mpfr_prec_t prec);

// ---- arithmetic -----------------------------------------------------------

inline mpfr_prec_t join_prec(const Real& a, const Real& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}

inline Real operator+(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator/(const Real& a, const Real& b) {
  Real r(join_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

inline Real operator+(const Real& a, long b) {
  Real r(a.prec());
  mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator-(const Real& a, long b) {
  Real r(a.prec());
  mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
inline Real operator-(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
inline Real operator/(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

inline Real& operator+=(Real& a, const Real& b) {
  mpfr_add(a.get(), a.get(), b.get(), MPFR_RNDN);
  return a;
}
inline Real& operator-=(Real& a, const Real& b) {
  mpfr_sub(a.get(), a.get(), b.get(), MPFR_RNDN);
  return a;
}
inline Real& operator*=(Real& a, const Real& b) {
  mpfr_mul(a.get(), a.get(), b.get(), MPFR_RNDN);
  return a;
}
inline Real& operator/=(Real& a, const Real& b) {
  mpfr_div(a.get(), a.get(), b.get(), MPFR_RNDN);
  return a;
}

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) >= 0; }
inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) == 0; }

// ---- elementary functions -------------------------------------------------

#define RFORGE_REAL_UNARY(name, mpfr_fn)        \
  inline Real name(const Real& a) {             \
    Real r(a.prec());                           \
    mpfr_fn(r.get(), a.get(), MPFR_RNDN);       \
    return r;                                   \
  }

RFORGE_REAL_UNARY(abs, mpfr_abs)
RFORGE_REAL_UNARY(exp, mpfr_exp)
RFORGE_REAL_UNARY(sin, mpfr_sin)
RFORGE_REAL_UNARY(cos, mpfr_cos)
RFORGE_REAL_UNARY(atan, mpfr_atan)

#undef RFORGE_REAL_UNARY

inline Real floor_r(const Real& a) {
  Real r(a.prec());
  mpfr_rint(r.get(), a.get(), MPFR_RNDD);
  return r;
}

inline Real sqrt(const Real& a) {
  if (a.sign() < 0) throw std::domain_error("sqrt: negative real argument");
  Real r(a.prec());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}

inline Real log(const Real& a) {
  if (a.sign() <= 0 || a.is_nan()) throw std::domain_error("log: argument must be positive");
  Real r(a.prec());
  mpfr_log(r.get(), a.get(), MPFR_RNDN);
  return r;
}

inline Real atan2(const Real& y, const Real& x) {
  Real r(join_prec(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real pow(const Real& base, const Real& expo) {
  Real r(join_prec(base, expo));
  mpfr_pow(r.get(), base.get(), expo.get(), MPFR_RNDN);
  return r;
}

inline Real pow_si(const Real& base, long e) {
  Real r(base.prec());
  mpfr_pow_si(r.get(), base.get(), e, MPFR_RNDN);
  return r;
}

inline Real root_n(const Real& a, unsigned long n) {
  if (a.sign() < 0) throw std::domain_error("root_n: negative real argument");
  Real r(a.prec());
  mpfr_rootn_ui(r.get(), a.get(), n, MPFR_RNDN);
  return r;
}

inline double to_double(const Real& a) { return mpfr_get_d(a.get(), MPFR_RNDN); }

inline long to_long(const Real& a) { return mpfr_get_si(a.get(), MPFR_RNDN); }

// Base-2 exponent of |a| (log2-magnitude); very negative for zero.
inline long exp2_of(const Real& a) {
  if (a.is_zero() || a.is_nan()) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(a.get()));
}

// Scientific decimal rendering with `digits` significant digits.
std::string to_string(const Real& x, int digits);

// ---- constants ------------------------------------------------------------

Real const_pi(const PrecisionContext& ctx);

// zeta(3) via the accelerated central-binomial series
// (5/2)*sum_{n>=1} (-1)^{n-1} / (n^3 binom(2n,n)).
Real const_zeta3(const PrecisionContext& ctx);

// ---- complex --------------------------------------------------------------

struct Complex {
  Real re, im;

  Complex() = default;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {
    mpfr_set_zero(re.get(), 1);
    mpfr_set_zero(im.get(), 1);
  }
  Complex(Real re_, Real im_) : re(std::move(re_)), im(std::move(im_)) {}
  explicit Complex(const Real& re_) : re(re_), im(re_.prec()) {
    mpfr_set_zero(im.get(), 1);
  }

  mpfr_prec_t prec() const { return join_prec(re, im); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline Complex complex_from(long re, long im, mpfr_prec_t prec) {
  return Complex(real_from(re, prec), real_from(im, prec));
}

inline Complex operator+(const Complex& a, const Complex& b) {
  return Complex(a.re + b.re, a.im + b.im);
}
inline Complex operator-(const Complex& a, const Complex& b) {
  return Complex(a.re - b.re, a.im - b.im);
}
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline Complex operator*(const Complex& a, const Real& b) {
  return Complex(a.re * b, a.im * b);
}
inline Complex operator*(const Real& a, const Complex& b) { return b * a; }
inline Complex operator*(const Complex& a, long b) { return Complex(a.re * b, a.im * b); }
inline Complex operator*(long a, const Complex& b) { return b * a; }
inline Complex operator/(const Complex& a, const Complex& b) {
  Real q = b.re * b.re + b.im * b.im;
  return Complex((a.re * b.re + a.im * b.im) / q, (a.im * b.re - a.re * b.im) / q);
}
inline Complex operator/(const Complex& a, const Real& b) {
  return Complex(a.re / b, a.im / b);
}
inline Complex operator/(const Complex& a, long b) { return Complex(a.re / b, a.im / b); }
inline Complex operator+(const Complex& a, const Real& b) { return Complex(a.re + b, a.im); }
inline Complex operator+(const Real& a, const Complex& b) { return b + a; }
inline Complex operator-(const Complex& a, const Real& b) { return Complex(a.re - b, a.im); }
inline Complex operator+(const Complex& a, long b) { return Complex(a.re + b, a.im); }
inline Complex operator-(const Complex& a, long b) { return Complex(a.re - b, a.im); }
inline Complex operator-(long a, const Complex& b) { return Complex(a - b.re, -b.im); }

inline Complex& operator+=(Complex& a, const Complex& b) {
  a.re += b.re;
  a.im += b.im;
  return a;
}
inline Complex& operator-=(Complex& a, const Complex& b) {
  a.re -= b.re;
  a.im -= b.im;
  return a;
}
inline Complex& operator*=(Complex& a, const Complex& b) {
  a = a * b;
  return a;
}

inline Complex conj(const Complex& a) { return Complex(a.re, -a.im); }
inline Complex mul_i(const Complex& a) { return Complex(-a.im, a.re); }
inline Complex at_prec(const Complex& a, mpfr_prec_t prec) {
  return Complex(at_prec(a.re, prec), at_prec(a.im, prec));
}

inline Real abs(const Complex& a) {
  Real r(a.prec());
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN);
  return r;
}

inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }

// Principal argument in (-pi, pi]: negative-real-axis inputs with a
// negatively signed zero imaginary part are folded up to +pi.
Real arg(const Complex& a);

Complex exp(const Complex& a);
Complex log(const Complex& a);   // principal branch
Complex sin(const Complex& a);
Complex cos(const Complex& a);
Complex sqrt(const Complex& a);  // principal branch
Complex pow_si(const Complex& a, long e);
Complex pow(const Complex& base, const Complex& expo);  // exp(expo*log base)

std::string to_string(const Complex& x, int digits);

// ---- nome carrier ----------------------------------------------------------

// A point tau = x + iy in the upper half-plane with exact rational x.
// Carries the convention log q := 2*pi*i*tau (not the principal branch).
struct Tau {
  mpq_class x;
  Real y;

  Tau(mpq_class x_, Real y_) : x(std::move(x_)), y(std::move(y_)) {
    if (!(y.sign() > 0)) throw std::domain_error("Tau: y must be positive");
  }
};

// log q = 2*pi*i*(x+iy) = -2*pi*y + 2*pi*x*i, at context precision.
Complex log_q(const Tau& tau, const PrecisionContext& ctx);

// q = e^{2*pi*i*tau}.  Quarter-integer x is special-cased so real/imaginary
// axis nomes come out exact.
Complex nome(const Tau& tau, const PrecisionContext& ctx);

}  // namespace rforge
