#pragma once

// Integer-relation detection and minimal-polynomial recovery.
//
// pslq is the standard Ferguson-Bailey algorithm with gamma = sqrt(4/3).
// A returned relation satisfies |sum_i c_i x_i| < 10^{-digits/2}; candidates
// whose coefficients exceed 10^{digits/3} are rejected as spurious, and the
// search reports failure once the norm bound proves nothing smaller exists.
//
// minpoly drives pslq over {1, t, t^2, ...} with increasing degree, so the
// first hit has minimal degree.  Targets must lie on the real or imaginary
// axis; for purely imaginary alpha the recovered polynomial is in t =
// alpha/i, which turns back into a polynomial in alpha with alternating
// real/imaginary coefficients.

#include <optional>
#include <vector>

#include <rforge/mpnum.hpp>

namespace rforge {

struct Relation {
  std::vector<mpz_class> coefficients;  // not all zero
  Real residual;                        // |sum c_i x_i| over the inputs
};

std::optional<Relation> pslq(const std::vector<Real>& xs, long maxsteps,
                             const PrecisionContext& ctx);

struct MinPoly {
  std::vector<mpz_class> coeffs;  // ascending powers, content 1, leading > 0
  bool imaginary_axis;            // variable is alpha/i rather than alpha
};

std::optional<MinPoly> minpoly(const Complex& alpha, int maxdeg,
                               const PrecisionContext& ctx);

}  // namespace rforge
