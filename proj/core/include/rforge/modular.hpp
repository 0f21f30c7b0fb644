#pragma once

// Jacobi theta functions and the explicit (a,b,z) parameterization attached
// to the nome when s = 1/2:
//
//   z = 4 R (1 - R),                     R = theta_3^4(-q) / theta_3^4(q)
//   a = (1/(pi theta_3^4(q))) (1 + (8 log|q| / theta_3(q)) sum n^2 q^{n^2})
//   b = (log|q|/pi) (1 - 2 R)
//
// with q = e^{2 pi i tau}, log|q| = -2 pi y.  No closed parameterization is
// carried for s = 1/3 or 1/4; those (a,b,z) values come from the registry.

#include <rforge/mpnum.hpp>

namespace rforge {

struct ThetaValue {
  Complex q;
  Complex t2, t3, t4;  // theta_2(q), theta_3(q), theta_4(q) = theta_3(-q)
};

// theta_3 = 1 + 2 sum q^{n^2}; theta_2 = 2 sum q^{(n+1/2)^2}.  The q^{1/4}
// inside theta_2 is principal for the Complex overload and e^{(2 pi i tau)/4}
// for the Tau overload.  |q| <= 0.9.
ThetaValue theta(const Complex& q, const PrecisionContext& ctx);
ThetaValue theta(const Tau& tau, const PrecisionContext& ctx);

struct AbzValues {
  Complex a, b, z;
};

AbzValues abz_half(const Tau& tau, const PrecisionContext& ctx);

// Local inversion of the nome map near z = 0, valid for s in {1/2, 1/3, 1/4}:
//
//   log q = log(z / kappa_s) + sum_{n>=1} g_n z^n / n,
//   sum g_n t^n = 1 / (y_0(t) sqrt(1-t)),    kappa_s = 64, 108, 256
//
// where y_0 is the 3F2(s, 1/2, 1-s; 1, 1; .) series.  lnq_from_z requires
// |z| <= 0.85; z_from_nome inverts it by Newton iteration and requires
// kappa_s |q| <= 0.9.  That bound is necessary, not sufficient: toward the
// negative real q axis the image z grows faster than kappa_s q and can leave
// the series disk first, in which case the iteration reports failure.  The
// log is principal, so real q < 0 pairs with Im log q = pi (x = 1/2 in Tau
// terms).
Complex lnq_from_z(const mpq_class& s, const Complex& z, const PrecisionContext& ctx);
Complex z_from_nome(const mpq_class& s, const Complex& q, const PrecisionContext& ctx);

}  // namespace rforge
