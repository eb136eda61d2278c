#ifndef APERY8_FRICKE_HPP
#define APERY8_FRICKE_HPP

#include <vector>

#include "apery8/apfloat.hpp"
#include "apery8/check.hpp"

namespace apery8 {

// Numeric verification of the Fricke involution w8: tau -> -1/(8 tau) acting
// on t, Y, g8 and the Eichler companion, plus the resulting period
// polynomial and its restriction to the imaginary-axis geodesic. Residuals
// are absolute and held to default_tolerance(prec).
struct FrickeConfig {
    long prec = 50;
    std::vector<APComplex> samples;

    // prec plus the standard sample set
    //   i/2, i, 0.3 + 0.7i, 0.2 + 0.6i, tau*, (1 + 3i)/4,
    // where tau* = i/(2 sqrt 2) is the w8 fixed point.
    static FrickeConfig defaults(long prec);
};

APComplex fricke_image(const APComplex& tau, long prec);
APComplex tau_star(long prec);
APReal default_tolerance(long prec); // 10^{-(prec-10)}

// t(w8 tau) = t(tau) at every sample.
CheckResult check_t_invariance(const FrickeConfig& cfg);

// Y(w8 tau) = -8 tau^2 Y(tau) (weight 2, multiplier -1).
CheckResult check_y_fricke(const FrickeConfig& cfg);

// g8(w8 tau) = -(8 tau^2)^2 / 64 * g8(tau), phrased as
// 64 (8 tau)^{-4} g8(w8 tau) + g8(tau) = 0.
CheckResult check_g8_fricke(const FrickeConfig& cfg);

// 8 tau^2 E(w8 tau) + E(tau) = (7/32) zeta(3) (8 tau^2 + 1).
CheckResult check_period_polynomial(const FrickeConfig& cfg);

// F(y) - y^2 F(1/y) = (7/32) zeta(3) (1 - y^2) at y in
// {1/3, 1/2, 1, 2, 3, 5}, plus antisymmetry r(1/y) = -r(y)/y^2 of the
// residual on the pairs inside the set.
CheckResult check_f_functional(long prec);

// At the fixed point tau*:
//   E(tau*) + E'(tau*) / (2 i sqrt 2) = (7/32) zeta(3),
//   Y'(tau*) = 2 i sqrt 2 Y(tau*),  and  E(tau*) is real.
CheckResult check_derivative_identities(long prec);

// t(tau*) = (3 - 2 sqrt 2)/4.
CheckResult check_t_fixed_point(long prec);

// E restricted to tau = i y / (2 sqrt 2) agrees with the real series F(y).
CheckResult check_geodesic_consistency(long prec);

// (1 - x)(1 - 4x)(1 - 16x) = 1 - 21x + 84x^2 - 64x^3 exactly, with the
// rational spot values the L-computation rests on.
CheckResult check_euler_factor_polynomial();

// L(g8, s) = zeta(s) zeta(s-3) (1 - 2^{-s})(1 - 2^{2-s})(1 - 2^{4-s}):
//   s=3 -> (7/32) zeta(3),  s=2 -> 0,  s=1 -> (7/2) zeta'(-2) = -7 zeta(3)/(8 pi^2),
// the last using zeta'(-2) = -zeta(3)/(4 pi^2) as an input identity.
CheckResult check_l_values(long prec);

} // namespace apery8

#endif
