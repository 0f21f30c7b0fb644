#pragma once

// Positive definite binary quadratic forms and the lattice sums
//
//   S(A,B,C;t) = sum_{(n,m) != (0,0)} (A n^2 + B n m + C m^2)^{-t}.
//
// epstein_brute truncates the sum to the square 0 < max(|n|,|m|) <= radius
// in a fixed shell-then-lexicographic order, so results are reproducible
// bit for bit; the truncation error is O(radius^{2-2t}).  epstein_fast
// handles t = 2 through the real part of the F series,
//
//   S(A,B,C;2) = A^{-2} pi^2 / (120 y^3) Re F(e^{2 pi i tau}),
//   tau = B/(2A) + i sqrt(C/A - B^2/(4A^2)),
//
// using the n <-> m swap symmetry S(A,B,C;t) = S(C,B,A;t) to pick the
// orientation with the smaller nome.  imag_correction supplies Im F at the
// same tau under the arithmetic condition 2x/(x^2+y^2) in Z.

#include <rforge/mpnum.hpp>

namespace rforge {

struct QuadraticForm {
  mpq_class A, B, C;  // A > 0 and B^2 - 4AC < 0
};

// Standard SL2(Z) reduction for integer forms: translate B into [-A, A],
// swap while C < A, and normalize B >= 0 on the boundary A = |B| or A = C.
QuadraticForm reduce_form(const QuadraticForm& f);

// Requires t >= 3/2 and radius >= 10.  Integer forms at t in {2, 3} run on
// a fixed-point fast path with compensated double accumulation (noise well
// under the truncation error); everything else sums term by term at the
// working precision.
Real epstein_brute(const QuadraticForm& f, const Real& t, long radius,
                   const PrecisionContext& ctx);

// t = 2 only.  Rejects forms whose nome lies outside the F-series radius in
// both orientations (reduce_form first; reduction always brings an integer
// form into range).
Real epstein_fast(const QuadraticForm& f, const PrecisionContext& ctx);

// (4 pi^2 / 3) x ((x^2 + 3y^2)/(x^2 + y^2)^2 + x^2 + 3y^2 - 5), the value
// of Im F(e^{2 pi i tau}) when 2x/(x^2+y^2) is an integer (checked to
// 10^{10-digits}); throws otherwise.
Real imag_correction(const Tau& tau, const PrecisionContext& ctx);

}  // namespace rforge
