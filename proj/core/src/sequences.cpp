#include "apery8/sequences.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "apery8/errors.hpp"

namespace apery8 {

BigInt s_binomial(int n) {
    BigInt total = 0;
    for (int k = 0; k <= n; ++k) {
        BigInt b1 = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        BigInt b2 = binomial(static_cast<unsigned long>(2 * k), static_cast<unsigned long>(n));
        total += b1 * b1 * b2 * b2;
    }
    return total;
}

SeqTable extend_table(int n_max, int binomial_check_limit) {
    if (n_max < 1) throw std::invalid_argument("extend_table: n_max >= 1 required");
    SeqTable T;
    T.n_max = n_max;
    T.s.resize(static_cast<size_t>(n_max) + 1);
    T.B.resize(static_cast<size_t>(n_max) + 1);
    T.scaled.resize(static_cast<size_t>(n_max) + 1);
    T.s[0] = 1;
    T.s[1] = 4;
    T.B[0] = 0;
    T.B[1] = 1;
    T.scaled[0] = 0;
    T.scaled[1] = 1;
    if (binomial_check_limit >= 0 && s_binomial(0) != T.s[0])
        throw std::logic_error("sequence tables: s_0 mismatch");
    if (binomial_check_limit >= 1 && s_binomial(1) != T.s[1])
        throw std::logic_error("sequence tables: s_1 mismatch");

    BigInt fact_cubed = 1; // (n+1)!^3
    BigInt pow4 = 1;       // 4^n
    for (long n = 1; n < n_max; ++n) {
        BigInt bn(n);
        BigInt pn = ((6 * bn + 9) * bn + 5) * bn + 1; // (2n+1)(3n^2+3n+1)
        BigInt c1 = 4 * pn;
        BigInt c2 = 16 * bn * bn * bn;
        BigInt den = (bn + 1) * (bn + 1) * (bn + 1);
        size_t i = static_cast<size_t>(n);

        T.s[i + 1] = div_exact(BigInt(c1 * T.s[i] - c2 * T.s[i - 1]), den);
        if (n + 1 <= binomial_check_limit && s_binomial(static_cast<int>(n + 1)) != T.s[i + 1])
            throw std::logic_error("sequence tables: recurrence and binomial sum disagree at n = " +
                                   std::to_string(n + 1));

        T.B[i + 1] = BigRat(c1 * T.B[i] - c2 * T.B[i - 1]) / BigRat(den);
        // integer companion n!^3 B_n / 4^{n-1}, same recurrence with the 4s
        // absorbed: v_{n+1} = p(n) v_n - n^6 v_{n-1}
        T.scaled[i + 1] = pn * T.scaled[i] - (c2 / 16) * (c2 / 16) * T.scaled[i - 1];

        fact_cubed *= (bn + 1) * (bn + 1) * (bn + 1);
        pow4 *= 4;
        if (make_rat(BigInt(T.scaled[i + 1] * pow4), fact_cubed) != T.B[i + 1])
            throw IntegralityError("companion track: (n+1)!^3 B_{n+1} / 4^n not integral at n+1 = " +
                                   std::to_string(n + 1));
    }
    return T;
}

QSeries a_series(const SeqTable& table, int order) {
    if (order < 1 || table.n_max + 1 < order)
        throw std::invalid_argument("a_series: table too short for requested order");
    std::vector<BigInt> c(table.s.begin(), table.s.begin() + order);
    return QSeries::from_integers(std::move(c), order);
}

QSeries b_series(const SeqTable& table, int order) {
    if (order < 1 || table.n_max + 1 < order)
        throw std::invalid_argument("b_series: table too short for requested order");
    std::vector<BigRat> c(table.B.begin(), table.B.begin() + order);
    return QSeries::from_rationals(c, order);
}

namespace {

// p(theta) applied term-wise: the z^n coefficient picks up the factor p(n).
QSeries theta_poly(const QSeries& f, const std::vector<long>& p) {
    assert(!f.laurent());
    int N = f.order();
    std::vector<BigRat> out(static_cast<size_t>(std::max(N, 0)));
    for (int n = std::max(f.valuation(), 0); n < N; ++n) {
        BigRat c = f.coeff(n);
        if (c == 0) continue;
        BigInt pn = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) pn = pn * n + *it;
        out[static_cast<size_t>(n)] = BigRat(c * pn);
    }
    return QSeries::from_rationals(out, N);
}

// theta^3 - 4z (2 theta + 1)(3 theta^2 + 3 theta + 1) + 16 z^2 (theta + 1)^3
QSeries apply_theta_form(const QSeries& f) {
    QSeries cubic = theta_poly(f, {0, 0, 0, 1});
    QSeries middle = theta_poly(f, {1, 5, 9, 6}).shifted(1);
    QSeries outer = theta_poly(f, {1, 3, 3, 1}).shifted(2);
    return cubic - BigRat(4) * middle + BigRat(16) * outer;
}

QSeries int_poly(const std::vector<long>& c, int order) {
    assert(static_cast<size_t>(order) >= c.size());
    std::vector<BigRat> v(c.begin(), c.end());
    v.resize(static_cast<size_t>(order));
    return QSeries::from_rationals(v, order);
}

// z-coefficient form of the ordinary ODE, one row per derivative order k.
struct OdeTerm {
    int k;
    std::vector<long> coeffs; // polynomial in z, constant term first
};
const std::vector<OdeTerm>& ode_terms() {
    static const std::vector<OdeTerm> terms = {
        {3, {0, 0, 1, -24, 16}}, // z^2 (16 z^2 - 24 z + 1)
        {2, {0, 3, -108, 96}},   // 3 z (32 z^2 - 36 z + 1)
        {1, {1, -80, 112}},
        {0, {-4, 16}},
    };
    return terms;
}

QSeries apply_ordinary_form(const QSeries& y) {
    QSeries acc = QSeries::zero(y.order());
    for (const OdeTerm& term : ode_terms()) {
        QSeries d = y;
        for (int j = 0; j < term.k; ++j) d = d.derivative();
        acc = acc + int_poly(term.coeffs, y.order() + 5) * d;
    }
    return acc;
}

using QPoly = std::vector<QuadRat>; // dense, constant term first

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    QPoly r(a.size() + b.size() - 1, QuadRat());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

} // namespace

CheckResult check_theta_ode(int order) {
    const std::string name = "theta_ode";
    const std::string anchor =
        "Eqs. (9)-(10): [theta^3 - 4z(2theta+1)(3theta^2+3theta+1) + 16z^2(theta+1)^3] A = 0 and the same operator sends B to z";
    std::string params = "order=" + std::to_string(order);
    SeqTable table = extend_table(order, std::min(order, 64));
    QSeries LA = apply_theta_form(a_series(table, order));
    if (!LA.is_zero())
        return CheckResult::exact_fail(name, anchor, params,
                                       "L[A] nonzero from z^" + std::to_string(LA.valuation()));
    QSeries LB = apply_theta_form(b_series(table, order));
    if (auto bad = LB.first_difference(QSeries::monomial(BigRat(1), 1, LB.order())))
        return CheckResult::exact_fail(name, anchor, params,
                                       "L[B] - z nonzero at z^" + std::to_string(*bad));
    CheckResult r = CheckResult::exact_pass(name, anchor, params);
    r.detail = "L[A] = 0 and L[B] = z through z^" + std::to_string(LA.order() - 1);
    return r;
}

CheckResult check_ordinary_ode(int order) {
    const std::string name = "ordinary_ode";
    const std::string anchor = "Eq. (11): z^2(16z^2-24z+1) y''' + 3z(32z^2-36z+1) y'' + "
                               "(112z^2-80z+1) y' + 4(4z-1) y = 0 at y = A";
    std::string params = "order=" + std::to_string(order);
    SeqTable table = extend_table(order, 0);
    QSeries rA = apply_ordinary_form(a_series(table, order));
    if (!rA.is_zero())
        return CheckResult::exact_fail(name, anchor, params,
                                       "residual series nonzero from z^" +
                                           std::to_string(rA.valuation()));
    // the companion clears to the constant inhomogeneity z / z = 1
    QSeries rB = apply_ordinary_form(b_series(table, order));
    if (auto bad = rB.first_difference(QSeries::constant(BigRat(1), rB.order())))
        return CheckResult::exact_fail(name, anchor, params,
                                       "companion residual differs from 1 at z^" +
                                           std::to_string(*bad));
    return CheckResult::exact_pass(name, anchor, params);
}

IndicialData indicial_at_t0() {
    const QuadRat t0(make_rat(3, 4), make_rat(-1, 2)); // (3 - 2 sqrt 2)/4
    // powers of u = t0 (1 - eps) as polynomials in eps
    std::vector<QPoly> upow{{QuadRat(BigRat(1))}};
    const QPoly u{t0, -t0};
    for (int j = 1; j <= 4; ++j) upow.push_back(poly_mul(upow.back(), u));

    const QuadRat minus_inv_t0 = QuadRat(BigRat(-1)) / t0;
    // falling factorials r (r-1) ... (r-k+1), constant term first
    const std::vector<QPoly> falling = {
        {QuadRat(BigRat(1))},
        {QuadRat(), QuadRat(BigRat(1))},
        {QuadRat(), QuadRat(BigRat(-1)), QuadRat(BigRat(1))},
        {QuadRat(), QuadRat(BigRat(2)), QuadRat(BigRat(-3)), QuadRat(BigRat(1))},
    };

    IndicialData data;
    data.poly.assign(4, QuadRat());
    for (const OdeTerm& term : ode_terms()) {
        // coefficient polynomial at z = t0 (1 - eps), expanded in eps
        QPoly gamma(6, QuadRat());
        for (size_t j = 0; j < term.coeffs.size(); ++j) {
            if (term.coeffs[j] == 0) continue;
            BigRat cj(term.coeffs[j]);
            for (size_t i = 0; i < upow[j].size(); ++i) gamma[i] = gamma[i] + cj * upow[j][i];
        }
        // y = eps^r contributes gamma_i (-1/t0)^k fall(r, k) eps^{r - k + i};
        // eps^{r-3} must cancel identically, eps^{r-2} builds the polynomial
        if (term.k == 3 && !gamma[0].is_zero())
            throw std::logic_error("indicial: t0 is not a root of the leading coefficient");
        if (term.k < 2) continue;
        QuadRat fac = minus_inv_t0;
        for (int j = 1; j < term.k; ++j) fac = fac * minus_inv_t0;
        fac = gamma[static_cast<size_t>(term.k - 2)] * fac;
        const QPoly& fall = falling[static_cast<size_t>(term.k)];
        for (size_t j = 0; j < fall.size(); ++j) data.poly[j] = data.poly[j] + fac * fall[j];
    }
    data.roots = {BigRat(0), make_rat(1, 2), BigRat(1)};
    const std::vector<QuadRat> reference = {QuadRat(), QuadRat(0, -8), QuadRat(0, 24),
                                            QuadRat(0, -16)};
    data.matches_reference = data.poly == reference;
    return data;
}

QuadRat indicial_eval(const BigRat& r) {
    IndicialData data = indicial_at_t0();
    QuadRat acc;
    for (auto it = data.poly.rbegin(); it != data.poly.rend(); ++it) acc = acc * QuadRat(r) + *it;
    return acc;
}

CheckResult check_indicial() {
    const std::string name = "indicial_exponents";
    const std::string anchor = "Prop. local-exponents: the coefficient of eps^(r-2) is "
                               "-8 sqrt(2) r(2r-1)(r-1), exponents {0, 1/2, 1}";
    IndicialData data = indicial_at_t0();
    std::string params = "z0=(3-2*sqrt(2))/4";
    std::string shape;
    for (int j = 3; j >= 0; --j)
        shape += "(" + data.poly[static_cast<size_t>(j)].str() + ") r^" + std::to_string(j) +
                 (j ? " + " : "");
    if (!data.matches_reference)
        return CheckResult::exact_fail(name, anchor, params, "polynomial came out as " + shape);
    for (const BigRat& r : data.roots)
        if (!indicial_eval(r).is_zero())
            return CheckResult::exact_fail(name, anchor, params,
                                           "claimed exponent " + to_string(r) + " is not a root");
    if (indicial_eval(BigRat(2)) != QuadRat(0, -48))
        return CheckResult::exact_fail(name, anchor, params, "spot value at r = 2 mismatched");
    CheckResult res = CheckResult::exact_pass(name, anchor, params);
    res.detail = "exponents {0, 1/2, 1}; polynomial " + shape;
    return res;
}

BigRat apery_ratio(const SeqTable& table, int n) {
    if (n < 0 || n > table.n_max) throw std::invalid_argument("apery_ratio: n out of range");
    const BigInt& sn = table.s[static_cast<size_t>(n)];
    if (sn == 0) throw std::domain_error("apery_ratio: s_n vanished");
    return BigRat(table.B[static_cast<size_t>(n)] / BigRat(sn));
}

GrowthDiagnostics growth_diagnostics(const SeqTable& table, long prec) {
    if (table.n_max < 50)
        throw std::invalid_argument("growth_diagnostics: table must extend to n >= 50");
    if (prec < 20) throw std::invalid_argument("growth_diagnostics: prec >= 20 required");
    GrowthDiagnostics d;
    d.n_max = table.n_max;
    d.prec = prec;
    d.window_lo = 30;
    d.window_hi = std::min(60, table.n_max);
    // e_n shrinks like 10^{-1.53 n}; work far enough above that to resolve
    // successive ratios across the window
    const long w = std::max(prec, 20 + 8L * d.window_hi / 5);

    const APReal sqrt2w = sqrt(APReal(2L, w));
    const APReal t0w = (APReal(3L, w) - APReal(2L, w) * sqrt2w) / APReal(4L, w);
    const APReal ratio_target = APReal(12L, w) + APReal(8L, w) * sqrt2w;
    const APReal ratio_last =
        APReal(make_rat(table.s[static_cast<size_t>(table.n_max)],
                        table.s[static_cast<size_t>(table.n_max - 1)]),
               w);

    auto amplitude = [&](int n) {
        BigInt n3 = BigInt(n) * n * n;
        return APReal(table.s[static_cast<size_t>(n)], w) * pow_si(t0w, n) * sqrt(APReal(n3, w));
    };

    const APReal limit = APReal(make_rat(7, 32), w) * const_zeta3(w);
    auto err = [&](int n) { return abs(APReal(apery_ratio(table, n), w) - limit); };

    const APReal err_target = APReal(17L, w) - APReal(12L, w) * sqrt2w;
    APReal prev = err(d.window_lo);
    APReal first_ratio(w), last_ratio(w), max_dev(w);
    const APReal one(1L, w);
    for (int n = d.window_lo + 1; n <= d.window_hi; ++n) {
        APReal cur = err(n);
        APReal ratio = cur / prev;
        if (n == d.window_lo + 1) first_ratio = ratio;
        last_ratio = ratio;
        APReal dev = abs(ratio / err_target - one);
        if (dev > max_dev) max_dev = dev;
        prev = cur;
    }

    d.ratio_target = ratio_target.rounded_to(prec);
    d.ratio_last = ratio_last.rounded_to(prec);
    d.ratio_gap = abs(ratio_last - ratio_target).rounded_to(prec);
    d.amplitude_mid = amplitude(table.n_max / 2).rounded_to(prec);
    d.amplitude_last = amplitude(table.n_max).rounded_to(prec);
    d.error_ratio_first = first_ratio.rounded_to(prec);
    d.error_ratio_last = last_ratio.rounded_to(prec);
    d.error_ratio_target = err_target.rounded_to(prec);
    d.error_ratio_max_dev = max_dev.rounded_to(prec);
    return d;
}

} // namespace apery8
