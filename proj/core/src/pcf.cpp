#include "apery8/pcf.hpp"

#include <stdexcept>

#include "apery8/errors.hpp"

namespace apery8 {

namespace {

BigInt poly_at(const std::vector<BigInt>& coeffs, long n) {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
    return acc;
}

} // namespace

BigInt PCFSpec::a_at(long n) const { return poly_at(a_coeffs, n); }
BigInt PCFSpec::b_at(long n) const { return poly_at(b_coeffs, n); }

PCFSpec PCFSpec::apery8() {
    PCFSpec s;
    s.a0 = 1;
    s.a_coeffs = {BigInt(1), BigInt(5), BigInt(9), BigInt(6)};
    s.b_coeffs = {BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(-1)};
    return s;
}

ContinuantPair build_continuants(const PCFSpec& spec, int n_max) {
    if (n_max < 0) throw std::invalid_argument("build_continuants: n_max >= 0 required");
    ContinuantPair pair;
    pair.n_max = n_max;
    pair.P = {BigInt(1), spec.a0};
    pair.Q = {BigInt(0), BigInt(1)};
    pair.P.reserve(static_cast<size_t>(n_max) + 2);
    pair.Q.reserve(static_cast<size_t>(n_max) + 2);
    BigInt expected_det = -1; // P_0 Q_{-1} - Q_0 P_{-1}
    for (long n = 1; n <= n_max; ++n) {
        BigInt an = spec.a_at(n);
        BigInt bn = spec.b_at(n);
        size_t i = static_cast<size_t>(n);
        pair.P.push_back(an * pair.P[i] + bn * pair.P[i - 1]);
        pair.Q.push_back(an * pair.Q[i] + bn * pair.Q[i - 1]);
        expected_det *= -bn;
        if (pair.P[i + 1] * pair.Q[i] - pair.Q[i + 1] * pair.P[i] != expected_det)
            throw DeterminantMismatch("continuant determinant violated at n = " +
                                      std::to_string(n));
    }
    return pair;
}

CheckResult check_determinant(int n_max) {
    const std::string name = "continuant_determinant";
    const std::string anchor =
        "Eq. (59): U_n = a_n U_{n-1} + b_n U_{n-2}; determinant P_n Q_{n-1} - Q_n P_{n-1} = -(n!)^6";
    std::string params = "n_max=" + std::to_string(n_max);
    ContinuantPair pair;
    try {
        pair = build_continuants(PCFSpec::apery8(), n_max);
    } catch (const DeterminantMismatch& e) {
        return CheckResult::exact_fail(name, anchor, params, e.what());
    }
    BigInt fact = 1;
    for (long n = 1; n <= n_max; ++n) {
        fact *= n;
        BigInt det = pair.p_at(static_cast<int>(n)) * pair.q_at(static_cast<int>(n - 1)) -
                     pair.q_at(static_cast<int>(n)) * pair.p_at(static_cast<int>(n - 1));
        if (det != -pow_int(fact, 6))
            return CheckResult::exact_fail(name, anchor, params,
                                           "determinant differs from -(n!)^6 at n = " +
                                               std::to_string(n));
    }
    CheckResult r = CheckResult::exact_pass(name, anchor, params);
    r.detail = "constant sign: the determinant is -(n!)^6 for every n";
    return r;
}

CheckResult check_closed_forms(const ContinuantPair& pair, const SeqTable& table, int n_max) {
    const std::string name = "continuant_closed_forms";
    const std::string anchor = "Prop. continuants, Eq. (60): P_n = ((n+1)!^3 / 4^{n+1}) s_{n+1}, "
                               "Q_n = ((n+1)!^3 / 4^n) B_{n+1}";
    std::string params = "n_max=" + std::to_string(n_max);
    if (pair.n_max < n_max || table.n_max < n_max + 1)
        throw std::invalid_argument("check_closed_forms: inputs shorter than n_max");
    BigInt fact_cubed = 1; // (n+1)!^3
    BigInt pow4 = 4;       // 4^{n+1}
    for (int n = 0; n <= n_max; ++n) {
        BigInt m(n + 1);
        fact_cubed *= m * m * m;
        if (pow4 * pair.p_at(n) != fact_cubed * table.s[static_cast<size_t>(n + 1)])
            return CheckResult::exact_fail(name, anchor, params,
                                           "P-side mismatch at n = " + std::to_string(n));
        // 4^n Q_n = (n+1)!^3 B_{n+1} is exactly the scaled companion entry
        if (pair.q_at(n) != table.scaled[static_cast<size_t>(n + 1)])
            return CheckResult::exact_fail(name, anchor, params,
                                           "Q-side mismatch at n = " + std::to_string(n));
        pow4 *= 4;
    }
    return CheckResult::exact_pass(name, anchor, params);
}

CheckResult check_convergents(const ContinuantPair& pair, const SeqTable& table, int n_max) {
    const std::string name = "convergent_identity";
    const std::string anchor = "Eq. (61): P_n / Q_n = s_{n+1} / (4 B_{n+1}) -> 8 / (7 zeta(3))";
    std::string params = "n_max=" + std::to_string(n_max);
    if (pair.n_max < n_max || table.n_max < n_max + 1)
        throw std::invalid_argument("check_convergents: inputs shorter than n_max");
    for (int n = 0; n <= n_max; ++n) {
        BigRat lhs = make_rat(pair.p_at(n), pair.q_at(n));
        BigRat rhs = BigRat(table.B[static_cast<size_t>(n + 1)] * 4);
        rhs = BigRat(BigRat(table.s[static_cast<size_t>(n + 1)]) / rhs);
        if (lhs != rhs)
            return CheckResult::exact_fail(name, anchor, params,
                                           "convergent differs at n = " + std::to_string(n));
    }
    return CheckResult::exact_pass(name, anchor, params);
}

APReal pcf_value(const ContinuantPair& pair, int n, long prec) {
    if (n < -1 || n > pair.n_max) throw std::invalid_argument("pcf_value: n out of range");
    const BigInt& q = pair.q_at(n);
    if (q == 0) throw ZeroDenominator("pcf_value: Q_" + std::to_string(n) + " = 0");
    return APReal(pair.p_at(n), prec) / APReal(q, prec);
}

CheckResult check_bo_polynomial() {
    const std::string name = "bo_polynomial";
    const std::string anchor =
        "Sec. 1 and Sec. 6: p(n) = 6n^3 + 9n^2 + 5n + 1 = (2n+1)(3n^2+3n+1)";
    // expand (2n+1)(3n^2+3n+1) independently of the stored instance
    const std::vector<BigInt> lin = {BigInt(1), BigInt(2)};
    const std::vector<BigInt> quad = {BigInt(1), BigInt(3), BigInt(3)};
    std::vector<BigInt> prod(lin.size() + quad.size() - 1);
    for (size_t i = 0; i < lin.size(); ++i)
        for (size_t j = 0; j < quad.size(); ++j) prod[i + j] += lin[i] * quad[j];

    PCFSpec spec = PCFSpec::apery8();
    if (prod != spec.a_coeffs)
        return CheckResult::exact_fail(name, anchor, "", "expanded coefficients differ");
    if (spec.a_at(0) != spec.a0)
        return CheckResult::exact_fail(name, anchor, "", "p(0) != a0");
    if (spec.a_at(2) != 95 || spec.b_at(2) != -64)
        return CheckResult::exact_fail(name, anchor, "", "spot values p(2), b(2) off");
    CheckResult r = CheckResult::exact_pass(name, anchor, "");
    r.detail = "coefficients (1, 5, 9, 6); p(2) = 95, b(2) = -64";
    return r;
}

} // namespace apery8
