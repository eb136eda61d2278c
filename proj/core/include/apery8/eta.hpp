#ifndef APERY8_ETA_HPP
#define APERY8_ETA_HPP

#include <array>
#include <string>
#include <vector>

#include "apery8/bigrat.hpp"
#include "apery8/check.hpp"
#include "apery8/qseries.hpp"

namespace apery8 {

// Eta quotient prod_{m | 8} eta(m tau)^{e_m} on Gamma_0(8). The level is
// fixed at 8 throughout the library; exponents are listed for m = 1, 2, 4, 8.
struct EtaQuotient {
    std::array<int, 4> exponents{}; // e_1, e_2, e_4, e_8

    static constexpr std::array<int, 4> divisors{1, 2, 4, 8};

    int exponent_sum() const { return exponents[0] + exponents[1] + exponents[2] + exponents[3]; }
    // Twice the modular weight (sum of exponents is always even here).
    BigRat weight() const { return make_rat(exponent_sum(), 2); }
    // Leading q-exponent (1/24) sum m e_m of the quotient's expansion.
    BigRat leading_exponent() const;
    std::string str() const;
};

// The hauptmodul t = eta(tau)^8 eta(8tau)^8 / (eta(2tau)^8 eta(4tau)^8).
inline constexpr EtaQuotient kQuotientT{{8, -8, -8, 8}};
// The weight-2 form Y = eta(2tau)^6 eta(4tau)^6 / (eta(tau)^4 eta(8tau)^4).
inline constexpr EtaQuotient kQuotientY{{-4, 6, 6, -4}};

// Cusps of Gamma_0(8) in the fixed order (oo, 0, 1/2, 1/4), identified by
// their denominators.
struct Cusp {
    int denominator;
    const char* label;
};
inline constexpr std::array<Cusp, 4> kCusps{{{8, "oo"}, {1, "0"}, {2, "1/2"}, {4, "1/4"}}};

// Width of the cusp with the given denominator on Gamma_0(8).
int cusp_width(int denominator);

// Euler factor prod_{n>=1} (1 - q^{mn}) truncated below order, computed by
// the pentagonal number expansion.
QSeries euler_factor(int m, int order);

// q-expansion of an eta quotient. The q^{1/24} prefactors combine to
// q^{leading_exponent}; FractionalExponentError if that is not a nonnegative
// integer, since only genuine q-series are exposed.
QSeries eta_qexp(const EtaQuotient& f, int order);

// Order of vanishing at each cusp (kCusps order), in the local parameter on
// X_0(8): ord_{a/c} = (N/24) sum_m gcd(c,m)^2 e_m / (gcd(c, N/c) c m).
std::array<BigRat, 4> ligozat_orders(const EtaQuotient& f);

// floor(k * [SL2(Z) : Gamma_0(level)] / 12) with the index computed exactly.
long sturm_bound(long level, long weight);

// sigma_3(n) for n < order (entry 0 unused).
std::vector<BigInt> sigma3_table(int order);

// Coefficients a_n of the weight-4 form g8 = sum a_n q^n:
//   a_n = sigma_3(n) - 21 sigma_3(n/2) + 84 sigma_3(n/4) - 64 sigma_3(n/8),
// cross-checked internally against the Eisenstein combination
// (E4(tau) - 21 E4(2tau) + 84 E4(4tau) - 64 E4(8tau)) / 240.
std::vector<BigInt> g8_coefficients(int order);
QSeries g8_qexp(int order);

// E4 = 1 + 240 sum sigma_3(n) q^n.
QSeries e4_qexp(int order);

// The Eichler companion E = sum a_n / n^3 q^n.
QSeries eichler_qexp(int order);

QSeries t_qexp(int order);
QSeries y_qexp(int order);

// (Dt/t)^2 = Y^2 (1 - 24t + 16t^2) as exact q-series.
CheckResult check_wronskian(int order);

// Phi built by variation of constants equals Y * Dt and equals g8:
//   (Dt/t)^3 * t / (Y (1 - 24t + 16t^2)) = Y * Dt = g8.
CheckResult check_phi(int order);

// The power series A and B of the sequence module, composed with t(q),
// reproduce Y(q) and E(q) Y(q).
CheckResult check_parametrizations(int order);

// Cusp-order vectors for t and Y against their published values, plus the
// valence-formula consistency of both.
CheckResult check_cusp_orders();

// Sturm bounds for the (level, weight) pairs the derivation leans on.
CheckResult check_sturm_bound();

} // namespace apery8

#endif
