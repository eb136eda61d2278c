#include "apery8/eta.hpp"

#include <cassert>
#include <numeric>
#include <sstream>

#include "apery8/errors.hpp"
#include "apery8/sequences.hpp"

namespace apery8 {

BigRat EtaQuotient::leading_exponent() const {
    long s = 0;
    for (size_t i = 0; i < divisors.size(); ++i) s += divisors[i] * exponents[i];
    return make_rat(s, 24);
}

std::string EtaQuotient::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < divisors.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!first) os << " * ";
        first = false;
        os << "eta(" << divisors[i] << "tau)^" << exponents[i];
    }
    return first ? "1" : os.str();
}

int cusp_width(int denominator) {
    long c2 = static_cast<long>(denominator) * denominator;
    return static_cast<int>(8 / std::gcd(c2, 8L));
}

QSeries euler_factor(int m, int order) {
    assert(m >= 1);
    // Pentagonal number theorem: prod (1 - x^n) = 1 + sum_{k>=1} (-1)^k
    // (x^{k(3k-1)/2} + x^{k(3k+1)/2}), evaluated at x = q^m.
    std::vector<BigInt> c(static_cast<size_t>(std::max(order, 0)));
    if (order <= 0) return QSeries::zero(order);
    c[0] = 1;
    for (long k = 1;; ++k) {
        long e1 = m * (k * (3 * k - 1) / 2);
        long e2 = m * (k * (3 * k + 1) / 2);
        if (e1 >= order) break;
        int sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<size_t>(e1)] += sign;
        if (e2 < order) c[static_cast<size_t>(e2)] += sign;
    }
    return QSeries::from_integers(std::move(c), order);
}

QSeries eta_qexp(const EtaQuotient& f, int order) {
    BigRat delta = f.leading_exponent();
    if (!is_integer(delta) || delta < 0)
        throw FractionalExponentError("eta quotient " + f.str() + " has prefactor exponent " +
                                      to_string(delta) + ", not a nonnegative integer");
    int d = static_cast<int>(delta.get_num().get_si());
    int inner_order = order - d;
    if (inner_order <= 0) return QSeries::zero(order);
    QSeries u = QSeries::constant(BigRat(1), inner_order);
    for (size_t i = 0; i < EtaQuotient::divisors.size(); ++i) {
        int e = f.exponents[i];
        if (e == 0) continue;
        u = u * euler_factor(EtaQuotient::divisors[i], inner_order).pow(e);
    }
    return u.shifted(d);
}

std::array<BigRat, 4> ligozat_orders(const EtaQuotient& f) {
    constexpr long N = 8;
    std::array<BigRat, 4> out;
    for (size_t ci = 0; ci < kCusps.size(); ++ci) {
        long c = kCusps[ci].denominator;
        BigRat sum = 0;
        for (size_t i = 0; i < EtaQuotient::divisors.size(); ++i) {
            long m = EtaQuotient::divisors[i];
            long g = std::gcd(c, m);
            sum += make_rat(g * g * f.exponents[i], std::gcd(c, N / c) * c * m);
        }
        out[ci] = BigRat(sum * make_rat(N, 24));
    }
    return out;
}

long sturm_bound(long level, long weight) {
    if (level < 1 || weight < 0)
        throw std::invalid_argument("sturm_bound: level >= 1 and weight >= 0 required");
    // index of Gamma_0(level) in SL2(Z): level * prod_{p | level} (1 + 1/p)
    long index = level;
    long n = level;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        index = index / p * (p + 1);
        while (n % p == 0) n /= p;
    }
    if (n > 1) index = index / n * (n + 1);
    return (weight * index) / 12;
}

std::vector<BigInt> sigma3_table(int order) {
    std::vector<BigInt> sig(static_cast<size_t>(std::max(order, 0)));
    for (long d = 1; d < order; ++d) {
        BigInt d3 = BigInt(d) * d * d;
        for (long n = d; n < order; n += d) sig[static_cast<size_t>(n)] += d3;
    }
    return sig;
}

namespace {

// E4(m tau) as a q-series: 1 + 240 sum_k sigma_3(k) q^{mk}.
QSeries e4_rescaled(int m, int order, const std::vector<BigInt>& sig) {
    std::vector<BigInt> c(static_cast<size_t>(std::max(order, 0)));
    if (order > 0) c[0] = 1;
    for (long k = 1; m * k < order; ++k)
        c[static_cast<size_t>(m * k)] = 240 * sig[static_cast<size_t>(k)];
    return QSeries::from_integers(std::move(c), order);
}

} // namespace

QSeries e4_qexp(int order) {
    return e4_rescaled(1, order, sigma3_table(order));
}

std::vector<BigInt> g8_coefficients(int order) {
    std::vector<BigInt> sig = sigma3_table(order);
    std::vector<BigInt> a(static_cast<size_t>(std::max(order, 0)));
    for (long n = 1; n < order; ++n) {
        BigInt v = sig[static_cast<size_t>(n)];
        if (n % 2 == 0) v -= 21 * sig[static_cast<size_t>(n / 2)];
        if (n % 4 == 0) v += 84 * sig[static_cast<size_t>(n / 4)];
        if (n % 8 == 0) v -= 64 * sig[static_cast<size_t>(n / 8)];
        a[static_cast<size_t>(n)] = v;
    }
    // independent route through the Eisenstein combination
    QSeries comb = e4_rescaled(1, order, sig) - BigRat(21) * e4_rescaled(2, order, sig) +
                   BigRat(84) * e4_rescaled(4, order, sig) - BigRat(64) * e4_rescaled(8, order, sig);
    QSeries byeis = comb * make_rat(1, 240);
    QSeries direct = QSeries::from_integers(a, order);
    if (auto bad = direct.first_difference(byeis))
        throw std::logic_error("g8 coefficient routes disagree first at q^" + std::to_string(*bad));
    return a;
}

QSeries g8_qexp(int order) { return QSeries::from_integers(g8_coefficients(order), order); }

QSeries eichler_qexp(int order) {
    std::vector<BigInt> a = g8_coefficients(order);
    std::vector<BigRat> c(static_cast<size_t>(std::max(order, 0)));
    for (long n = 1; n < order; ++n)
        c[static_cast<size_t>(n)] = make_rat(a[static_cast<size_t>(n)], BigInt(n) * n * n);
    return QSeries::from_rationals(c, order);
}

QSeries t_qexp(int order) { return eta_qexp(kQuotientT, order); }
QSeries y_qexp(int order) { return eta_qexp(kQuotientY, order); }

// 1 - 24 t + 16 t^2 evaluated as a q-series.
static QSeries quadratic_in_t(const QSeries& t) {
    QSeries one = QSeries::constant(BigRat(1), t.order());
    return one - BigRat(24) * t + BigRat(16) * (t * t);
}

CheckResult check_wronskian(int order) {
    const std::string name = "wronskian";
    const std::string anchor = "Eq. (19): (Dt/t)^2 = Y^2 (1 - 24t + 16t^2)";
    std::string params = "order=" + std::to_string(order);
    QSeries t = t_qexp(order);
    QSeries Y = y_qexp(order);
    QSeries dlog = t.theta() / t;
    QSeries lhs = dlog * dlog;
    QSeries rhs = (Y * Y) * quadratic_in_t(t);
    if (auto bad = lhs.first_difference(rhs))
        return CheckResult::exact_fail(name, anchor, params,
                                       "first mismatch at q^" + std::to_string(*bad));
    CheckResult r = CheckResult::exact_pass(name, anchor, params);
    r.detail = "both sides = " + lhs.truncated(5).str();
    return r;
}

CheckResult check_phi(int order) {
    const std::string name = "phi_is_g8";
    const std::string anchor =
        "Eqs. (18), (20), (27): (Dt/t)^3 t / (Y (1 - 24t + 16t^2)) = Y Dt = g8";
    std::string params = "order=" + std::to_string(order);
    QSeries t = t_qexp(order);
    QSeries Y = y_qexp(order);
    QSeries dt = t.theta();
    QSeries dlog = dt / t;
    QSeries phi_voc = dlog.pow(3) * t / (Y * quadratic_in_t(t));
    QSeries phi_wron = Y * dt;
    QSeries g8 = g8_qexp(order);
    if (auto bad = phi_voc.first_difference(phi_wron))
        return CheckResult::exact_fail(
            name, anchor, params,
            "variation-of-constants form differs from Y*Dt first at q^" + std::to_string(*bad));
    if (auto bad = phi_wron.first_difference(g8))
        return CheckResult::exact_fail(name, anchor, params,
                                       "Y*Dt differs from g8 first at q^" + std::to_string(*bad));
    CheckResult r = CheckResult::exact_pass(name, anchor, params);
    r.detail = "agreement depth far exceeds the Sturm bound " +
               std::to_string(sturm_bound(8, 4)) + " for weight 4 on Gamma_0(8)";
    return r;
}

CheckResult check_parametrizations(int order) {
    const std::string name = "modular_parametrization";
    const std::string anchor = "Eqs. (12), (31): A(t(q)) = Y(q) and B(t(q)) = E(q) Y(q)";
    std::string params = "order=" + std::to_string(order);
    SeqTable table = extend_table(order, 0);
    QSeries t = t_qexp(order);
    QSeries Y = y_qexp(order);
    QSeries a_of_t = a_series(table, order).compose(t);
    if (auto bad = a_of_t.first_difference(Y))
        return CheckResult::exact_fail(name, anchor, params,
                                       "A(t) vs Y first mismatch at q^" + std::to_string(*bad));
    QSeries b_of_t = b_series(table, order).compose(t);
    QSeries ey = eichler_qexp(order) * Y;
    if (auto bad = b_of_t.first_difference(ey))
        return CheckResult::exact_fail(name, anchor, params,
                                       "B(t) vs E*Y first mismatch at q^" + std::to_string(*bad));
    return CheckResult::exact_pass(name, anchor, params);
}

CheckResult check_cusp_orders() {
    const std::string name = "cusp_orders";
    const std::string anchor =
        "Prop. hauptmodul: ord(t) = (1,1,-1,-1) and ord(Y) = (0,0,1,1) at cusps (oo, 0, 1/2, 1/4)";
    auto fmt = [](const std::array<BigRat, 4>& v) {
        std::string s = "(";
        for (size_t i = 0; i < v.size(); ++i) s += to_string(v[i]) + (i + 1 < v.size() ? "," : ")");
        return s;
    };
    std::array<BigRat, 4> ot = ligozat_orders(kQuotientT);
    std::array<BigRat, 4> oy = ligozat_orders(kQuotientY);
    std::array<BigRat, 4> expect_t{BigRat(1), BigRat(1), BigRat(-1), BigRat(-1)};
    std::array<BigRat, 4> expect_y{BigRat(0), BigRat(0), BigRat(1), BigRat(1)};
    std::string params = "t -> " + fmt(ot) + ", Y -> " + fmt(oy);
    if (ot != expect_t || oy != expect_y)
        return CheckResult::exact_fail(name, anchor, params, "order vector mismatch");
    // valence: sum of local-parameter orders = weight * index / 12 with index 12
    BigRat sum_t = ot[0] + ot[1] + ot[2] + ot[3];
    BigRat sum_y = oy[0] + oy[1] + oy[2] + oy[3];
    if (sum_t != 0 || sum_y != 2)
        return CheckResult::exact_fail(name, anchor, params, "valence sum mismatch");
    // the oo-entry must match the leading exponent of the q-expansion
    if (ot[0] != kQuotientT.leading_exponent() || oy[0] != kQuotientY.leading_exponent())
        return CheckResult::exact_fail(name, anchor, params,
                                       "cusp oo order differs from leading q-exponent");
    CheckResult r = CheckResult::exact_pass(name, anchor, params);
    r.detail = "orders in the local parameter on X_0(8); valence sums 0 and 2 consistent";
    return r;
}

CheckResult check_sturm_bound() {
    const std::string name = "sturm_bound";
    const std::string anchor =
        "Sec. 3, Sturm bound in weight 4: floor(k [SL2(Z):Gamma_0(N)] / 12)";
    long b84 = sturm_bound(8, 4);
    long b112 = sturm_bound(1, 12);
    long b82 = sturm_bound(8, 2);
    std::string params = "(8,4)->" + std::to_string(b84) + " (1,12)->" + std::to_string(b112) +
                         " (8,2)->" + std::to_string(b82);
    if (b84 != 4 || b112 != 1 || b82 != 2)
        return CheckResult::exact_fail(name, anchor, params, "bound mismatch");
    return CheckResult::exact_pass(name, anchor, params);
}

} // namespace apery8
