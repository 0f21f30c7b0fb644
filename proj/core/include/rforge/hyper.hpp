#pragma once

// Generalized hypergeometric machinery: direct series summation, analytic
// continuation of p = q+1 functions along paths in the cut plane, the
// two-sided completion Y_x, and the two weighted-sum evaluators built on the
// (s, 1/2, 1-s) parameter triple.
//
// Continuation model: f = pFq with p = q+1 satisfies the order-p ODE
//
//   [ theta prod_j (theta + b_j - 1) - w prod_i (theta + a_i) ] f = 0,
//   theta = w d/dw,
//
// whose only finite singular points are w = 0 and w = 1.  The solver seeds
// the Taylor data at |w0| = 0.3 from the term-wise differentiated series and
// re-expands step by step, each step capped at half the distance to {0, 1}.
// A real target w >= 1 lies on the branch cut; `side` selects the limit from
// below (default, the -i delta convention) or above.

#include <rforge/mpnum.hpp>

#include <gmpxx.h>

#include <vector>

namespace rforge {

struct HypergeometricSpec {
  std::vector<Complex> upper;
  std::vector<Complex> lower;
};

enum class CutSide { below, above };

struct ContinuationPath {
  std::vector<Complex> waypoints;  // intermediate anchors, walked in order
  CutSide side = CutSide::below;
  // Step cap as a fraction of the distance to the nearest singular point;
  // exposed so stability under step refinement is testable.
  mpq_class step_ratio = mpq_class(1, 2);
};

struct CompanionSpec {
  mpq_class s;      // in (0, 1)
  Complex a, b, z;
};

// Gamma on the complex plane (Spouge expansion, reflection for Re w < 1/2).
// Throws std::domain_error at the poles 0, -1, -2, ...
Complex cgamma(const Complex& w, const PrecisionContext& ctx);

// (c)_x = Gamma(c + x) / Gamma(c).
Complex pochhammer_x(const Complex& c, const Complex& x,
                     const PrecisionContext& ctx);

// Direct summation.  Requires p <= q+1; when p = q+1 also |w| <= 3/4.
Complex pfq_series(const HypergeometricSpec& spec, const Complex& w,
                   const PrecisionContext& ctx);

// Value of the continued function at w (outside {0, 1}), along the given
// path.  With no waypoints the path is the straight segment from the seed,
// detouring past w = 1 on the chosen side when the segment brushes it.
Complex pfq_continue(const HypergeometricSpec& spec, const Complex& w,
                     const ContinuationPath& path, const PrecisionContext& ctx);
inline Complex pfq_continue(const HypergeometricSpec& spec, const Complex& w,
                            const PrecisionContext& ctx) {
  return pfq_continue(spec, w, ContinuationPath{}, ctx);
}

// y_0(z) = 3F2(s, 1/2, 1-s; 1, 1; z), continued when |z| is large.
Complex y0(const mpq_class& s, const Complex& z, const PrecisionContext& ctx);

// y_x(z) = z^x [(1/2)_x (1-s)_x (s)_x / (1)_x^3]
//              4F3(1, 1/2+x, 1-s+x, s+x; 1+x, 1+x, 1+x; z).
Complex yx(const mpq_class& s, const Complex& x, const Complex& z,
           const PrecisionContext& ctx);

// Two-sided completion of y_x: the z^x series plus the matching z^{-x}
// branch, packaged as y_x minus a reflected 4F3 in 1/z.  Requires z off the
// real axis and x away from the pole set {s, 1/2, 1-s} mod 1.
Complex Yx_completed(const mpq_class& s, const Complex& x, const Complex& z,
                     const PrecisionContext& ctx);

// sum_{n>=1} [ n!^3 / ((s)_n (1/2)_n (1-s)_n) ] (a - b n) z^{-n} / n^3.
// Direct when |1/z| <= 1/2, otherwise re-expressed through a 5F4 (4F3 when
// b = 0) evaluated at 1/z from below the cut.
Complex companion_sum(const CompanionSpec& cs, const PrecisionContext& ctx);

// sum_{n>=0} [ (s)_n (1/2)_n (1-s)_n / n!^3 ] (a + b n) z^n.
// Direct when |z| <= 1/2, otherwise a 4F3 (a y_0 when b = 0).
Complex ramanujan_sum(const CompanionSpec& cs, const PrecisionContext& ctx);

}  // namespace rforge
