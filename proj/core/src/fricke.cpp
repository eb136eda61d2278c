#include "apery8/fricke.hpp"

#include <utility>

#include "apery8/errors.hpp"
#include "apery8/numeric.hpp"
#include "apery8/qseries.hpp"

namespace apery8 {

APComplex fricke_image(const APComplex& tau, long prec) {
    APComplex denom = tau * APReal(8L, prec);
    return -(APComplex(APReal(1L, prec)) / denom);
}

APComplex tau_star(long prec) {
    APReal half(make_rat(1, 2), prec);
    return {APReal(0L, prec), half / sqrt(APReal(2L, prec))};
}

APReal default_tolerance(long prec) { return pow10(-(prec - 10), prec); }

FrickeConfig FrickeConfig::defaults(long prec) {
    FrickeConfig cfg;
    cfg.prec = prec;
    auto pt = [prec](const BigRat& re, const BigRat& im) {
        return APComplex(APReal(re, prec), APReal(im, prec));
    };
    cfg.samples = {
        pt(BigRat(0), make_rat(1, 2)),        pt(BigRat(0), BigRat(1)),
        pt(make_rat(3, 10), make_rat(7, 10)), pt(make_rat(1, 5), make_rat(3, 5)),
        tau_star(prec),                       pt(make_rat(1, 4), make_rat(3, 4)),
    };
    return cfg;
}

namespace {

struct Worst {
    APReal value;
    std::string where;

    explicit Worst(long prec) : value(APReal(0L, prec)) {}
    void feed(const APReal& r, const std::string& w) {
        if (where.empty() || r > value) {
            value = r;
            where = w;
        }
    }
};

CheckResult finish(const std::string& name, const std::string& anchor, std::string params,
                   const Worst& worst, const APReal& tol) {
    CheckResult r = CheckResult::numeric(name, anchor, std::move(params), worst.value < tol,
                                         worst.value.to_string(3), tol.to_string(3));
    r.detail = "worst at " + worst.where;
    return r;
}

std::string sample_params(const FrickeConfig& cfg) {
    return "prec=" + std::to_string(cfg.prec) +
           ", samples=" + std::to_string(cfg.samples.size());
}

APReal zeta3_scaled(long prec) { return APReal(make_rat(7, 32), prec) * const_zeta3(prec); }

} // namespace

CheckResult check_t_invariance(const FrickeConfig& cfg) {
    Worst worst(cfg.prec);
    for (const APComplex& tau : cfg.samples) {
        APComplex lhs = t_numeric(fricke_image(tau, cfg.prec), cfg.prec);
        APComplex rhs = t_numeric(tau, cfg.prec);
        worst.feed((lhs - rhs).abs(), "tau = " + tau.to_string(6));
    }
    return finish("fricke_t_invariance", "Lemma t-Y-transform, Eq. (16): t(W8 tau) = t(tau)",
                  sample_params(cfg), worst, default_tolerance(cfg.prec));
}

CheckResult check_y_fricke(const FrickeConfig& cfg) {
    Worst worst(cfg.prec);
    const APReal eight(8L, cfg.prec);
    for (const APComplex& tau : cfg.samples) {
        APComplex lhs = y_numeric(fricke_image(tau, cfg.prec), cfg.prec);
        APComplex rhs = tau * tau * eight * y_numeric(tau, cfg.prec);
        worst.feed((lhs + rhs).abs(), "tau = " + tau.to_string(6));
    }
    return finish("fricke_y_weight2", "Eq. (17): Y(W8 tau) = -8 tau^2 Y(tau)", sample_params(cfg),
                  worst, default_tolerance(cfg.prec));
}

CheckResult check_g8_fricke(const FrickeConfig& cfg) {
    Worst worst(cfg.prec);
    const APReal c64(64L, cfg.prec);
    const APReal eight(8L, cfg.prec);
    for (const APComplex& tau : cfg.samples) {
        APComplex slash = (tau * eight).pow_si(-4) * c64;
        APComplex lhs = slash * g8_numeric(fricke_image(tau, cfg.prec), cfg.prec);
        worst.feed((lhs + g8_numeric(tau, cfg.prec)).abs(), "tau = " + tau.to_string(6));
    }
    return finish("fricke_g8_weight4", "Lemma g-transform, Eq. (32): g8|_4 W8 = -g8",
                  sample_params(cfg), worst, default_tolerance(cfg.prec));
}

CheckResult check_period_polynomial(const FrickeConfig& cfg) {
    Worst worst(cfg.prec);
    const APReal eight(8L, cfg.prec);
    const APComplex one(APReal(1L, cfg.prec));
    const APReal c = zeta3_scaled(cfg.prec);
    for (const APComplex& tau : cfg.samples) {
        APComplex eightt2 = tau * tau * eight;
        APComplex lhs = eightt2 * eichler_numeric(fricke_image(tau, cfg.prec), cfg.prec) +
                        eichler_numeric(tau, cfg.prec);
        APComplex rhs = (eightt2 + one) * c;
        worst.feed((lhs - rhs).abs(), "tau = " + tau.to_string(6));
    }
    return finish("period_polynomial",
                  "Prop. period-polynomial, Eq. (42): 8 tau^2 E(W8 tau) + E(tau) = "
                  "(7/32) zeta(3) (8 tau^2 + 1)",
                  sample_params(cfg), worst, default_tolerance(cfg.prec));
}

CheckResult check_f_functional(long prec) {
    const std::vector<BigRat> ys = {make_rat(1, 3), make_rat(1, 2), BigRat(1),
                                    BigRat(2),      BigRat(3),      BigRat(5)};
    const APReal c = zeta3_scaled(prec);
    const APReal one(1L, prec);
    std::vector<APReal> residuals;
    Worst worst(prec);
    for (const BigRat& yq : ys) {
        APReal y(yq, prec);
        APReal r = f_eval(y, prec) - y * y * f_eval(one / y, prec) - c * (one - y * y);
        residuals.push_back(r);
        worst.feed(abs(r), "y = " + to_string(yq));
    }
    // antisymmetry r(1/y) = -r(y)/y^2 on the reciprocal pairs in the set
    const std::pair<size_t, size_t> pairs[] = {{1, 3}, {0, 4}}; // (1/2, 2), (1/3, 3)
    for (auto [ir, iy] : pairs) {
        APReal y(ys[iy], prec);
        worst.feed(abs(residuals[ir] + residuals[iy] / (y * y)),
                   "antisymmetry at y = " + to_string(ys[iy]));
    }
    return finish("f_functional",
                  "Eq. (37): F(y) - y^2 F(1/y) = (7/32) zeta(3) (1 - y^2)",
                  "prec=" + std::to_string(prec) + ", y in {1/3,1/2,1,2,3,5}", worst,
                  default_tolerance(prec));
}

CheckResult check_derivative_identities(long prec) {
    const APComplex ts = tau_star(prec);
    const APReal two_sqrt2 = APReal(2L, prec) * sqrt(APReal(2L, prec));
    const APComplex i_two_sqrt2(APReal(0L, prec), two_sqrt2);
    const APReal c = zeta3_scaled(prec);

    APComplex E = eichler_numeric(ts, prec);
    APComplex Ep = eichler_deriv_numeric(ts, prec);
    APComplex Y = y_numeric(ts, prec);
    APComplex Yp = y_deriv_numeric(ts, prec);

    Worst worst(prec);
    worst.feed((E + Ep / i_two_sqrt2 - APComplex(c)).abs(), "E(tau*) + E'(tau*)/(2i sqrt 2)");
    worst.feed((Yp - i_two_sqrt2 * Y).abs(), "Y'(tau*) - 2i sqrt(2) Y(tau*)");
    worst.feed(abs(E.im()), "Im E(tau*)");
    return finish("derivative_identities",
                  "Prop. derivative-identities, Eqs. (44)-(45): E(tau*) + E'(tau*)/(2i sqrt 2) = "
                  "(7/32) zeta(3) and Y'(tau*) = 2i sqrt(2) Y(tau*)",
                  "prec=" + std::to_string(prec) + ", tau* = i/(2 sqrt 2)", worst,
                  default_tolerance(prec));
}

CheckResult check_t_fixed_point(long prec) {
    const APComplex ts = tau_star(prec);
    APComplex t = t_numeric(ts, prec);
    APReal t0 = (APReal(3L, prec) - APReal(2L, prec) * sqrt(APReal(2L, prec))) / APReal(4L, prec);
    Worst worst(prec);
    worst.feed((t - APComplex(t0)).abs(), "t(tau*) - (3 - 2 sqrt 2)/4");
    return finish("t_fixed_point", "Prop. t0-value, Eq. (48): t(tau*) = t0 = (3 - 2 sqrt 2)/4",
                  "prec=" + std::to_string(prec), worst, default_tolerance(prec));
}

CheckResult check_geodesic_consistency(long prec) {
    const std::vector<BigRat> ys = {make_rat(1, 3), make_rat(1, 2), BigRat(1),
                                    make_rat(3, 2), BigRat(2),      BigRat(3)};
    const APReal half(make_rat(1, 2), prec);
    const APReal inv2sqrt2 = half / sqrt(APReal(2L, prec));
    Worst worst(prec);
    for (const BigRat& yq : ys) {
        APReal y(yq, prec);
        APComplex tau(APReal(0L, prec), y * inv2sqrt2);
        APComplex E = eichler_numeric(tau, prec);
        worst.feed((E - APComplex(f_eval(y, prec))).abs(), "y = " + to_string(yq));
    }
    return finish("geodesic_restriction",
                  "Eq. (34): F(y) = E(tau(y)) = sum (a_n/n^3) exp(-pi n y / sqrt 2)",
                  "prec=" + std::to_string(prec) + ", y in {1/3,1/2,1,3/2,2,3}", worst,
                  default_tolerance(prec));
}

CheckResult check_euler_factor_polynomial() {
    const std::string name = "euler_factor_polynomial";
    const std::string anchor =
        "Eq. (29) (L-factor): (1 - x)(1 - 4x)(1 - 16x) = 1 - 21x + 84x^2 - 64x^3";
    auto lin = [](long c) {
        return QSeries::from_rationals({BigRat(1), BigRat(-c), BigRat(0), BigRat(0)}, 4);
    };
    QSeries prod = lin(1) * lin(4) * lin(16);
    QSeries expected = QSeries::from_integers({BigInt(1), BigInt(-21), BigInt(84), BigInt(-64)}, 4);
    if (auto bad = prod.first_difference(expected))
        return CheckResult::exact_fail(name, anchor, "", "mismatch at x^" + std::to_string(*bad));
    // rational spot values the L-computations rest on
    auto eval = [&](const BigRat& x) {
        BigRat acc = 0;
        for (int j = 3; j >= 0; --j) acc = BigRat(acc * x + prod.coeff(j));
        return acc;
    };
    if (eval(make_rat(1, 8)) != make_rat(-7, 16))
        return CheckResult::exact_fail(name, anchor, "", "value at x = 1/8 is not -7/16");
    if (eval(make_rat(1, 4)) != 0)
        return CheckResult::exact_fail(name, anchor, "", "value at x = 1/4 is not 0");
    if (eval(make_rat(1, 2)) != make_rat(7, 2))
        return CheckResult::exact_fail(name, anchor, "", "value at x = 1/2 is not 7/2");
    CheckResult r = CheckResult::exact_pass(name, anchor, "");
    r.detail = "spot values -7/16, 0, 7/2 at x = 2^{-s}, s = 3, 2, 1";
    return r;
}

CheckResult check_l_values(long prec) {
    const std::string name = "l_values";
    const std::string anchor =
        "Prop. L-function, Eq. (30): L(g8,3) = (7/32) zeta(3), L(g8,2) = 0, "
        "L(g8,1) = (7/2) zeta'(-2) = -7 zeta(3) / (8 pi^2)";
    std::string params = "prec=" + std::to_string(prec);
    // exact skeleton: zeta(0) = -1/2 times the local factor at s = 3
    BigRat skeleton = make_rat(-1, 2) * make_rat(-7, 16);
    if (skeleton != make_rat(7, 32))
        return CheckResult::exact_fail(name, anchor, params, "zeta(0) * (-7/16) is not 7/32");

    const APReal z3 = const_zeta3(prec);
    const APReal pi = APReal::pi(prec);
    Worst worst(prec);

    // s = 3: zeta(3) zeta(0) times the factored local polynomial at x = 1/8
    auto factored = [&](const BigRat& x) {
        APReal xv(x, prec);
        const APReal one(1L, prec);
        return (one - xv) * (one - APReal(4L, prec) * xv) * (one - APReal(16L, prec) * xv);
    };
    APReal l3 = z3 * APReal(make_rat(-1, 2), prec) * factored(make_rat(1, 8));
    worst.feed(abs(l3 - APReal(make_rat(7, 32), prec) * z3), "s = 3");

    // s = 2: zeta(2) zeta(-1) times a local factor that vanishes exactly
    APReal l2 = (pi * pi / APReal(6L, prec)) * APReal(make_rat(-1, 12), prec) *
                factored(make_rat(1, 4));
    worst.feed(abs(l2), "s = 2");

    // s = 1: the zeta(s) pole against the zeta(s-3) trivial zero leaves
    // (7/2) zeta'(-2); with zeta'(-2) = -zeta(3)/(4 pi^2) as input
    APReal zp2 = -(z3 / (APReal(4L, prec) * pi * pi));
    APReal l1 = APReal(make_rat(7, 2), prec) * zp2;
    APReal l1_closed = -(APReal(7L, prec) * z3 / (APReal(8L, prec) * pi * pi));
    worst.feed(abs(l1 - l1_closed), "s = 1");

    CheckResult r = finish(name, anchor, std::move(params), worst, default_tolerance(prec));
    r.detail += "; L(g8,1) = " + l1_closed.to_string(30);
    return r;
}

} // namespace apery8
