#ifndef APERY8_PCF_HPP
#define APERY8_PCF_HPP

#include <vector>

#include "apery8/apfloat.hpp"
#include "apery8/bigrat.hpp"
#include "apery8/check.hpp"
#include "apery8/sequences.hpp"

namespace apery8 {

// The polynomial continued fraction a0 + K(b_n / a_n) in the convention
//   PCF(a_n, b_n) = a0 + b1/(a1 + b2/(a2 + ...)),
// with integer polynomial partial quantities.
struct PCFSpec {
    BigInt a0;
    std::vector<BigInt> a_coeffs; // a(n) for n >= 1, constant term first
    std::vector<BigInt> b_coeffs; // b(n) for n >= 1, constant term first

    BigInt a_at(long n) const;
    BigInt b_at(long n) const;

    // a0 = 1, a(n) = (2n+1)(3n^2+3n+1), b(n) = -n^6.
    static PCFSpec apery8();
};

// Numerator/denominator continuants P_n, Q_n for n = -1 .. n_max, stored at
// index n + 1. Seeds P_{-1} = 1, P_0 = a0, Q_{-1} = 0, Q_0 = 1.
struct ContinuantPair {
    int n_max = 0;
    std::vector<BigInt> P, Q;

    const BigInt& p_at(int n) const { return P[static_cast<size_t>(n + 1)]; }
    const BigInt& q_at(int n) const { return Q[static_cast<size_t>(n + 1)]; }
};

// Forward recurrence U_n = a_n U_{n-1} + b_n U_{n-2}. Every step re-checks
// the determinant P_n Q_{n-1} - Q_n P_{n-1} against its closed product form
// -prod_{k<=n} (-b_k); DeterminantMismatch on violation.
ContinuantPair build_continuants(const PCFSpec& spec, int n_max);

// For the apery8 instance the determinant collapses to -(n!)^6, constant
// sign; verified against an independently accumulated factorial power.
CheckResult check_determinant(int n_max);

// 4^{n+1} P_n = (n+1)!^3 s_{n+1} and 4^n Q_n = (n+1)!^3 B_{n+1}, the second
// phrased against the integer companion track of the sequence table.
CheckResult check_closed_forms(const ContinuantPair& pair, const SeqTable& table, int n_max);

// Convergent identity P_n / Q_n = s_{n+1} / (4 B_{n+1}) in exact rationals.
CheckResult check_convergents(const ContinuantPair& pair, const SeqTable& table, int n_max);

// P_n / Q_n as one arbitrary-precision division; ZeroDenominator if Q_n = 0.
APReal pcf_value(const ContinuantPair& pair, int n, long prec);

// (2n+1)(3n^2+3n+1) = 6n^3 + 9n^2 + 5n + 1 with spot values p(0) = 1,
// p(2) = 95, matching the partial-numerator polynomial of the instance.
CheckResult check_bo_polynomial();

} // namespace apery8

#endif
