#include <doctest.h>

#include <vector>

#include "apery8/errors.hpp"
#include "apery8/eta.hpp"

using namespace apery8;

namespace {

// prod (1 - q^n): exponents are pentagonal, signs alternate with k
const int kPentExp[] = {0, 1, 2, 5, 7, 12, 15};
const int kPentSign[] = {1, -1, -1, 1, 1, -1, -1};

} // namespace

TEST_SUITE("eta") {

TEST_CASE("euler factor matches the pentagonal expansion") {
    QSeries e = euler_factor(1, 16);
    std::vector<BigRat> got = e.coeff_range(0, 16);
    std::vector<BigRat> want(16, BigRat(0));
    for (size_t i = 0; i < 7; ++i) want[static_cast<size_t>(kPentExp[i])] = BigRat(kPentSign[i]);
    CHECK(got == want);

    QSeries e2 = euler_factor(2, 16);
    CHECK(e2.coeff(2) == BigRat(-1));
    CHECK(e2.coeff(1) == BigRat(0));
    CHECK(e2.coeff(4) == BigRat(-1));
    CHECK(e2.coeff(10) == BigRat(1));
}

TEST_CASE("hauptmodul expansion") {
    QSeries t = t_qexp(13);
    const long want[] = {1, -8, 28, -64, 142, -352, 792, -1536, 2917, -5744, 10868, -19200};
    CHECK(t.valuation() == 1);
    for (int n = 1; n <= 12; ++n) CHECK(t.coeff(n) == BigRat(want[n - 1]));
}

TEST_CASE("weight-2 form expansion") {
    QSeries y = y_qexp(13);
    const long want[] = {1, 4, 8, 16, 24, 24, 32, 32, 24, 52, 48, 48, 96};
    CHECK(y.valuation() == 0);
    for (int n = 0; n <= 12; ++n) CHECK(y.coeff(n) == BigRat(want[n]));
}

TEST_CASE("eta quotient metadata") {
    CHECK(kQuotientT.exponent_sum() == 0);
    CHECK(kQuotientY.exponent_sum() == 4);
    CHECK(kQuotientY.weight() == BigRat(2));
    CHECK(kQuotientT.leading_exponent() == BigRat(1));
    CHECK(kQuotientY.leading_exponent() == BigRat(0));

    // eta(tau)^2 alone has prefactor q^{1/12}, not a q-series
    EtaQuotient bad{{2, 0, 0, 0}};
    CHECK_THROWS_AS(eta_qexp(bad, 10), FractionalExponentError);
}

TEST_CASE("cusp widths partition the index") {
    int total = 0;
    for (const Cusp& c : kCusps) total += cusp_width(c.denominator);
    CHECK(total == 12);
    CHECK(cusp_width(8) == 1);
    CHECK(cusp_width(1) == 8);
    CHECK(cusp_width(2) == 2);
    CHECK(cusp_width(4) == 1);
}

TEST_CASE("cusp order vectors") {
    std::array<BigRat, 4> ot = ligozat_orders(kQuotientT);
    CHECK(ot[0] == BigRat(1));
    CHECK(ot[1] == BigRat(1));
    CHECK(ot[2] == BigRat(-1));
    CHECK(ot[3] == BigRat(-1));

    std::array<BigRat, 4> oy = ligozat_orders(kQuotientY);
    CHECK(oy[0] == BigRat(0));
    CHECK(oy[1] == BigRat(0));
    CHECK(oy[2] == BigRat(1));
    CHECK(oy[3] == BigRat(1));

    // divisor degree: plain sum of local-parameter orders = k/12 * index,
    // eta quotients having no zeros in the interior
    BigRat vt(0), vy(0);
    for (size_t i = 0; i < 4; ++i) {
        vt += ot[i];
        vy += oy[i];
    }
    CHECK(vt == BigRat(0));
    CHECK(vy == BigRat(2));
}

TEST_CASE("sturm bounds") {
    CHECK(sturm_bound(8, 4) == 4);
    CHECK(sturm_bound(1, 12) == 1);
    CHECK(sturm_bound(8, 2) == 2);
    CHECK(sturm_bound(4, 2) == 1);
    CHECK(sturm_bound(8, 6) == 6);
}

TEST_CASE("sigma_3 table and weight-4 coefficients") {
    std::vector<BigInt> sig = sigma3_table(11);
    const long want_sig[] = {0, 1, 9, 28, 73, 126, 252, 344, 585, 757, 1134};
    for (int n = 0; n <= 10; ++n) CHECK(sig[static_cast<size_t>(n)] == BigInt(want_sig[n]));

    std::vector<BigInt> a = g8_coefficients(13);
    const long want_a[] = {0, 1, -12, 28, -32, 126, -336, 344, -256, 757, -1512, 1332, -896};
    for (int n = 1; n <= 12; ++n) CHECK(a[static_cast<size_t>(n)] == BigInt(want_a[n]));

    QSeries g = g8_qexp(9);
    CHECK(g.valuation() == 1);
    CHECK(g.coeff(5) == BigRat(126));

    QSeries e4 = e4_qexp(5);
    CHECK(e4.coeff(0) == BigRat(1));
    CHECK(e4.coeff(1) == BigRat(240));
    CHECK(e4.coeff(2) == BigRat(2160));
    CHECK(e4.coeff(3) == BigRat(6720));
}

TEST_CASE("eichler companion divides by n^3") {
    QSeries e = eichler_qexp(9);
    CHECK(e.coeff(1) == BigRat(1));
    CHECK(e.coeff(2) == make_rat(-12, 8));
    CHECK(e.coeff(3) == make_rat(28, 27));
    CHECK(e.coeff(8) == make_rat(-256, 512));
}

TEST_CASE("structural identity checks pass") {
    CHECK(check_wronskian(48).pass);
    CHECK(check_phi(48).pass);
    CHECK(check_parametrizations(48).pass);
    CHECK(check_cusp_orders().pass);
    CHECK(check_sturm_bound().pass);
    CHECK(check_wronskian(48).exact);
}

} // TEST_SUITE
