#pragma once
// Integer kernels and Dirichlet L-values: Kronecker-symbol characters,
// divisor sums, exact Bernoulli numbers, Hurwitz zeta via Euler-Maclaurin,
// and L_k(t) through the Hurwitz decomposition
//
//   L_k(t) = |k|^{-t} * sum_{r=1}^{|k|} chi_k(r) * zeta(t, r/|k|),
//
// exact because chi_k(n) = (k/n) is periodic with period dividing |k| for
// the fundamental-discriminant subscripts in play (k = 1 falls back to
// plain zeta).

#include "rforge/mpnum.hpp"

namespace rforge {

// Kronecker symbol (k/n) with the full extension: (k/0) = [|k|=1],
// (k/-1) = sign of k, factor-of-2 handled by the mod-8 table.
int kronecker(long long k, long long n);

// Sum of the cubes of the divisors of n.
long long sigma3(long n);

// Exact Bernoulli number B_m (B_1 = -1/2 convention); cached, thread-safe.
mpq_class bernoulli_exact(unsigned m);

// B_m rendered at context precision.
Real bernoulli(unsigned m, const PrecisionContext& ctx);

// zeta(t, a) = sum_{n>=0} (n+a)^{-t} for t > 1 and 0 < a <= 1, with
// explicit Euler-Maclaurin cutoffs: N direct terms, Bernoulli order M.
Real hurwitz_zeta_em(const Real& t, const Real& a, long N, long M,
                     const PrecisionContext& ctx);

// Same with the default cutoffs N = M = digits.
Real hurwitz_zeta(const Real& t, const Real& a, const PrecisionContext& ctx);

// L_k(t) = sum_{n>=1} chi_k(n)/n^t for real t > 1.
Real dirichlet_L(long k, const Real& t, const PrecisionContext& ctx);

}  // namespace rforge
