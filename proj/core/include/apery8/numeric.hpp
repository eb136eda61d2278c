#ifndef APERY8_NUMERIC_HPP
#define APERY8_NUMERIC_HPP

#include <vector>

#include "apery8/apfloat.hpp"
#include "apery8/eta.hpp"

namespace apery8 {

// Numeric evaluation of the modular objects on the upper half-plane, all to
// a requested decimal precision. Series are truncated by the uniform rule
// below, which dominates every coefficient family in use (bounded by n^3 up
// to a moderate constant); evaluations refuse Im tau < 1/20, where the
// needed term counts explode.

// Smallest M such that n^3 |q|^n < 10^{-(digits+5)} for all n >= M.
// Requires |q| < 1.
int truncation_length(const APReal& abs_q, long digits);

// Dedekind eta as the convergent product
//   eta(tau) = e^{2 pi i tau / 24} prod_{n>=1} (1 - q^n),  q = e^{2 pi i tau},
// the prefactor evaluated as a function of tau itself.
APComplex eta_numeric(const APComplex& tau, long prec);

// prod_m eta(m tau)^{e_m}.
APComplex eta_quotient_numeric(const EtaQuotient& f, const APComplex& tau, long prec);

APComplex t_numeric(const APComplex& tau, long prec);
APComplex y_numeric(const APComplex& tau, long prec);

// E4 = 1 + 240 sum sigma_3(n) q^n.
APComplex e4_numeric(const APComplex& tau, long prec);

// g8 by its sigma_3 coefficient formula, and independently by the
// Eisenstein combination (E4(tau) - 21 E4(2tau) + 84 E4(4tau) - 64 E4(8tau))/240.
APComplex g8_numeric(const APComplex& tau, long prec);
APComplex g8_numeric_eisenstein(const APComplex& tau, long prec);

// The Eichler companion E = sum a_n / n^3 q^n and its tau-derivative
// dE/dtau = 2 pi i sum a_n / n^2 q^n, summed term-wise (no differencing).
APComplex eichler_numeric(const APComplex& tau, long prec);
APComplex eichler_deriv_numeric(const APComplex& tau, long prec);

// dY/dtau = 2 pi i sum n y_n q^n from the exact expansion coefficients y_n.
APComplex y_deriv_numeric(const APComplex& tau, long prec);

// F(y) = sum a_n / n^3 e^{-pi n y / sqrt 2}, the period-polynomial residual
// restricted to the geodesic tau = i y / (2 sqrt 2); y > 0.
APReal f_eval(const APReal& y, long prec);

} // namespace apery8

#endif
