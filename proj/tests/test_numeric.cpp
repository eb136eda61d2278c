#include <doctest.h>

#include "apery8/apfloat.hpp"
#include "apery8/errors.hpp"
#include "apery8/eta.hpp"
#include "apery8/numeric.hpp"
#include "apery8/qseries.hpp"

using namespace apery8;

namespace {

APComplex pt(const char* re, const char* im, long p) {
    return APComplex(APReal(re, p), APReal(im, p));
}

// q = e^{2 pi i tau}
APComplex nome(const APComplex& tau, long p) {
    APReal two_pi = APReal(2L, p) * APReal::pi(p);
    return exp(APComplex(-two_pi * tau.im(), two_pi * tau.re()));
}

// Horner evaluation of an exact q-expansion at a complex nome.
APComplex eval_series(const QSeries& f, const APComplex& q, long p) {
    APComplex acc(APReal(0L, p));
    for (int n = f.order() - 1; n >= f.valuation(); --n)
        acc = acc * q + APComplex(APReal(f.coeff(n), p));
    return acc * q.pow_si(f.valuation());
}

} // namespace

TEST_SUITE("numeric") {

TEST_CASE("truncation length grows with precision and rejects |q| >= 1") {
    APReal half("0.5", 30);
    int m20 = truncation_length(half, 20);
    int m60 = truncation_length(half, 60);
    CHECK(m20 > 10);
    CHECK(m60 > m20);
    CHECK(truncation_length(APReal("0.001", 30), 20) < m20);
    CHECK_THROWS_AS(truncation_length(APReal(1L, 30), 20), DomainError);
}

TEST_CASE("eta at the square lattice point") {
    // eta(i) = Gamma(1/4) / (2 pi^{3/4})
    APReal ref("0.768225422326056659002594179576180644517866914", 45);
    APComplex v = eta_numeric(pt("0", "1", 45), 45);
    CHECK(abs(v.re() - ref) < pow10(-40, 45));
    CHECK(abs(v.im()) < pow10(-40, 45));
}

TEST_CASE("eta picks up the 24th root phase under translation") {
    long p = 40;
    APComplex tau = pt("0.3", "0.7", p);
    APComplex ratio = eta_numeric(tau + APComplex(APReal(1L, p)), p) / eta_numeric(tau, p);
    auto [s, c] = sin_cos(APReal::pi(p) / APReal(12L, p));
    CHECK(abs(ratio.re() - c) < pow10(-34, p));
    CHECK(abs(ratio.im() - s) < pow10(-34, p));
}

TEST_CASE("eta refuses points too close to the real axis") {
    CHECK_THROWS_AS(eta_numeric(pt("0", "0.01", 30), 30), DomainError);
}

TEST_CASE("hauptmodul spot value") {
    long p = 40;
    APComplex t = t_numeric(pt("0.3", "0.7", p), p);
    APReal tre("-0.002779952710324369507834427977464251094484", p);
    APReal tim("0.01237642550916638943854753369552021786685", p);
    CHECK(abs(t.re() - tre) < pow10(-35, p));
    CHECK(abs(t.im() - tim) < pow10(-35, p));

    APComplex y = y_numeric(pt("0.3", "0.7", p), p);
    APReal yre("0.9838427044127596260084906171772965775203", p);
    APReal yim("0.04606025424812000762251747700799385035706", p);
    CHECK(abs(y.re() - yre) < pow10(-35, p));
    CHECK(abs(y.im() - yim) < pow10(-35, p));
}

TEST_CASE("eta-product route equals coefficient route") {
    long p = 40;
    APComplex tau = pt("0.3", "0.7", p);
    APComplex q = nome(tau, p);
    CHECK((t_numeric(tau, p) - eval_series(t_qexp(48), q, p)).abs() < pow10(-34, p));
    CHECK((y_numeric(tau, p) - eval_series(y_qexp(48), q, p)).abs() < pow10(-34, p));
    CHECK((g8_numeric(tau, p) - eval_series(g8_qexp(48), q, p)).abs() < pow10(-33, p));
    CHECK((eichler_numeric(tau, p) - eval_series(eichler_qexp(48), q, p)).abs() < pow10(-34, p));
}

TEST_CASE("eisenstein route to the weight-4 form") {
    long p = 35;
    APComplex tau = pt("0.2", "0.6", p);
    CHECK((g8_numeric(tau, p) - g8_numeric_eisenstein(tau, p)).abs() < pow10(-25, p));
}

TEST_CASE("e4 decays to 1 high in the upper half plane") {
    long p = 40;
    APComplex v = e4_numeric(pt("0", "10", p), p);
    APReal gap = v.re() - APReal(1L, p);
    CHECK(gap > APReal("1.1e-25", p));
    CHECK(gap < APReal("1.3e-25", p));
    CHECK(abs(v.im()) < pow10(-35, p));
}

TEST_CASE("term-wise derivatives match central differences") {
    long p = 60;
    APComplex tau = pt("0.2", "0.6", p);
    APComplex h(pow10(-12, p), APReal(0L, p));
    APComplex two_h = h + h;

    APComplex dE = (eichler_numeric(tau + h, p) - eichler_numeric(tau - h, p)) / two_h;
    CHECK((dE - eichler_deriv_numeric(tau, p)).abs() < pow10(-20, p));

    APComplex dY = (y_numeric(tau + h, p) - y_numeric(tau - h, p)) / two_h;
    CHECK((dY - y_deriv_numeric(tau, p)).abs() < pow10(-20, p));
}

TEST_CASE("geodesic series value and domain") {
    APReal ref("0.0920761471751076455943260395487719883333883715", 46);
    CHECK(abs(f_eval(APReal(1L, 46), 46) - ref) < pow10(-41, 46));
    CHECK_THROWS_AS(f_eval(APReal(0L, 30), 30), DomainError);
    CHECK_THROWS_AS(f_eval(APReal(-2L, 30), 30), DomainError);
}

} // TEST_SUITE
