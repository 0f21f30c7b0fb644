#pragma once

// Trilogarithmic accelerator F(q) and the nome-side expansion coefficients
// phi_1..phi_3.
//
// F(q) = -log^3|q|/(3 pi) + (120/pi) zeta(3)
//        + (240/pi) sum_{j>=1} [ Li_3(q^j) - log|q^j| Li_2(q^j) ],
// defined for 0 < |q| <= e^{-pi/3}.  Only log|q| enters, so F itself is
// branch-free; the Tau overload exists to build the nome exactly from a
// rational phase.
//
// phi_i(q) is the coefficient of x^i in the Maclaurin expansion of
// y_x(z)/y_0(z) around x = 0, with z the modular parameter attached to the
// nome.  Closed forms are only known for s in {1/2, 1/3, 1/4}.

#include <gmpxx.h>

#include <rforge/mpnum.hpp>

namespace rforge {

// Li_order(w) by direct summation.  order must be 2 or 3, |w| <= 0.99.
Complex polylog(int order, const Complex& w, const PrecisionContext& ctx);

// sum_{n>=1} sigma_3(n) q^n / n^3.  Lambert-type weight appearing in the
// x^3 coefficient; equals sum_{j>=1} Li_3(q^j).
Complex sigma3_q_sum(const Complex& q, const PrecisionContext& ctx);

Complex big_F(const Complex& q, const PrecisionContext& ctx);
Complex big_F(const Tau& tau, const PrecisionContext& ctx);

// i in {1,2,3}; s in {1/2, 1/3, 1/4}; ln q := 2*pi*i*tau throughout.
Complex phi(int i, const mpq_class& s, const Tau& tau, const PrecisionContext& ctx);

}  // namespace rforge
