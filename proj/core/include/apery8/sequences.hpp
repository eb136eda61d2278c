#ifndef APERY8_SEQUENCES_HPP
#define APERY8_SEQUENCES_HPP

#include <vector>

#include "apery8/apfloat.hpp"
#include "apery8/bigrat.hpp"
#include "apery8/check.hpp"
#include "apery8/qseries.hpp"
#include "apery8/quadrat.hpp"

namespace apery8 {

// The integral solution s_n and rational companion B_n of the cubic
// recurrence
//   (n+1)^3 u_{n+1} = (2n+1)(12n^2 + 12n + 4) u_n - 16 n^3 u_{n-1},
// with s_0 = 1, s_1 = 4 and B_0 = 0, B_1 = 1.
struct SeqTable {
    int n_max = 0;              // inclusive
    std::vector<BigInt> s;      // s_0 .. s_{n_max}
    std::vector<BigRat> B;      // B_0 .. B_{n_max}
    std::vector<BigInt> scaled; // scaled[n] = n!^3 B_n / 4^{n-1}, an integer for n >= 1
};

// Direct binomial form sum_k C(n,k)^2 C(2k,n)^2.
BigInt s_binomial(int n);

// Fill the table by the recurrence; s is cross-checked against s_binomial
// for n <= binomial_check_limit, and the scaled integer companion is
// maintained alongside and reconciled with B at every step.
// IntegralityError if the s-step division by (n+1)^3 leaves a remainder.
SeqTable extend_table(int n_max, int binomial_check_limit = 200);

// A(z) = sum s_n z^n and B(z) = sum B_n z^n as truncated series.
QSeries a_series(const SeqTable& table, int order);
QSeries b_series(const SeqTable& table, int order);

// theta-form operator theta^3 - 4z(2 theta + 1)(3 theta^2 + 3 theta + 1)
//                       + 16 z^2 (theta + 1)^3  annihilates A; applied to B
// it yields exactly z.
CheckResult check_theta_ode(int order);

// Ordinary form z^2(16z^2-24z+1) y''' + 3z(32z^2-36z+1) y''
//               + (112z^2-80z+1) y' + 4(4z-1) y = 0 for y = A.
CheckResult check_ordinary_ode(int order);

// Indicial data of the ordinary ODE at the singular point
// t0 = (3 - 2 sqrt(2))/4, computed in exact Q(sqrt(2)) arithmetic by
// substituting z = t0 (1 - eps), y = eps^r and extracting the eps^{r-2}
// coefficient as a polynomial in r.
struct IndicialData {
    std::vector<QuadRat> poly;  // coefficients of r^0 .. r^3
    std::vector<BigRat> roots;  // {0, 1/2, 1}
    bool matches_reference;     // poly == -8 sqrt(2) r (2r - 1)(r - 1)
};
IndicialData indicial_at_t0();
QuadRat indicial_eval(const BigRat& r);
CheckResult check_indicial();

// Exact ratio B_n / s_n.
BigRat apery_ratio(const SeqTable& table, int n);

// Numeric growth diagnostics at the configured precision: the ratio
// s_{n+1}/s_n against 1/t0 = 12 + 8 sqrt(2), the amplitude s_n t0^n n^{3/2},
// and successive-error ratios of the Apery ratio against 17 - 12 sqrt(2).
struct GrowthDiagnostics {
    int n_max = 0;
    long prec = 0;
    APReal ratio_last;          // s_{n_max} / s_{n_max - 1}
    APReal ratio_target;        // 12 + 8 sqrt(2)
    APReal ratio_gap;           // |ratio_last - ratio_target|
    APReal amplitude_mid;       // s_n t0^n n^{3/2} at n_max/2
    APReal amplitude_last;      // ... at n_max
    APReal error_ratio_first;   // e_{n+1}/e_n at the window start
    APReal error_ratio_last;    // ... at the window end
    APReal error_ratio_target;  // 17 - 12 sqrt(2)
    APReal error_ratio_max_dev; // max |ratio/target - 1| over the window
    int window_lo = 0, window_hi = 0;
};
GrowthDiagnostics growth_diagnostics(const SeqTable& table, long prec);

} // namespace apery8

#endif
