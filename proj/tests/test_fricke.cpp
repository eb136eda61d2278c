#include <doctest.h>

#include "apery8/apfloat.hpp"
#include "apery8/fricke.hpp"
#include "apery8/numeric.hpp"

using namespace apery8;

TEST_SUITE("fricke") {

TEST_CASE("default configuration") {
    FrickeConfig cfg = FrickeConfig::defaults(30);
    CHECK(cfg.prec == 30);
    REQUIRE(cfg.samples.size() == 6);
    for (const APComplex& tau : cfg.samples) CHECK(tau.im() > APReal(0L, 30));
    CHECK(compare(default_tolerance(50), pow10(-40, 50)) == 0);
}

TEST_CASE("involution fixed point") {
    long p = 40;
    APComplex ts = tau_star(p);
    CHECK((fricke_image(ts, p) - ts).abs() < pow10(-35, p));
    // tau* = i / (2 sqrt 2): 8 tau*^2 = -1
    APComplex sq = ts * ts * APReal(8L, p);
    CHECK(abs(sq.re() + APReal(1L, p)) < pow10(-35, p));
    CHECK(abs(sq.im()) < pow10(-35, p));
}

TEST_CASE("transformation checks pass at two precisions") {
    for (long p : {30L, 50L}) {
        FrickeConfig cfg = FrickeConfig::defaults(p);
        CHECK(check_t_invariance(cfg).pass);
        CHECK(check_y_fricke(cfg).pass);
        CHECK(check_g8_fricke(cfg).pass);
        CHECK(check_period_polynomial(cfg).pass);
    }
}

TEST_CASE("functional equation and derivative identities") {
    for (long p : {30L, 50L}) {
        CHECK(check_f_functional(p).pass);
        CHECK(check_derivative_identities(p).pass);
        CHECK(check_t_fixed_point(p).pass);
        CHECK(check_geodesic_consistency(p).pass);
    }
}

TEST_CASE("residuals shrink as precision grows") {
    auto residual = [](long p) {
        APComplex tau(APReal("0.3", p), APReal("0.7", p));
        APComplex w = fricke_image(tau, p);
        return (t_numeric(w, p) - t_numeric(tau, p)).abs();
    };
    CHECK(residual(30) < pow10(-19, 30));
    CHECK(residual(60) < pow10(-49, 60));
}

TEST_CASE("eichler value at the fixed point is real") {
    long p = 50;
    APComplex e = eichler_numeric(tau_star(p), p);
    APReal ref("0.0920761471751076455943260395487719883333883715", p);
    CHECK(abs(e.re() - ref) < pow10(-42, p));
    CHECK(abs(e.im()) < pow10(-42, p));
}

TEST_CASE("euler factor polynomial and L values") {
    CheckResult poly = check_euler_factor_polynomial();
    CHECK(poly.pass);
    CHECK(poly.exact);
    CHECK(check_l_values(30).pass);
    CHECK(check_l_values(60).pass);
}

} // TEST_SUITE
