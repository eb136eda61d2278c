#include <doctest.h>

#include <random>
#include <vector>

#include "apery8/errors.hpp"
#include "apery8/qseries.hpp"

using namespace apery8;

namespace {

QSeries one_minus_q(int order) {
    return QSeries::from_integers({BigInt(1), BigInt(-1)}, order);
}

QSeries random_series(std::mt19937& rng, int order, bool unit_lead = false) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<BigRat> c;
    c.reserve(static_cast<size_t>(order));
    for (int i = 0; i < order; ++i) c.push_back(make_rat(num(rng), den(rng)));
    if (unit_lead) c[0] = BigRat(1);
    return QSeries::from_rationals(c, order);
}

} // namespace

TEST_SUITE("qseries") {

TEST_CASE("constructors and coefficient access") {
    QSeries z = QSeries::zero(6);
    CHECK(z.is_zero());
    CHECK(z.order() == 6);
    CHECK(z.coeff(3) == BigRat(0));

    QSeries c = QSeries::constant(make_rat(3, 2), 10);
    CHECK(c.valuation() == 0);
    CHECK(c.coeff(0) == make_rat(3, 2));
    CHECK(c.coeff(7) == BigRat(0));

    QSeries m = QSeries::monomial(make_rat(-5, 3), 4, 12);
    CHECK(m.valuation() == 4);
    CHECK(m.coeff(4) == make_rat(-5, 3));
    CHECK(m.coeff(2) == BigRat(0));
    CHECK(m.terms() == 8); // dense window from the valuation to the order

    QSeries f = QSeries::from_rationals({BigRat(0), BigRat(2), make_rat(1, 2)}, 8);
    CHECK(f.valuation() == 1);
    CHECK(f.coeff(2) == make_rat(1, 2));
    std::vector<BigRat> r = f.coeff_range(0, 4);
    CHECK(r.size() == 4);
    CHECK(r[1] == BigRat(2));
    CHECK(r[3] == BigRat(0));
}

TEST_CASE("addition and subtraction track the shorter order") {
    QSeries a = QSeries::from_integers({BigInt(1), BigInt(2)}, 10);
    QSeries b = QSeries::from_integers({BigInt(4), BigInt(-2)}, 6);
    QSeries s = a + b;
    CHECK(s.order() == 6);
    CHECK(s.coeff(0) == BigRat(5));
    CHECK(s.coeff(1) == BigRat(0));
    CHECK((a - a).is_zero());
    CHECK((-a).coeff(1) == BigRat(-2));
}

TEST_CASE("multiplication, inverse and division") {
    int N = 16;
    QSeries g = one_minus_q(N).inverse(); // geometric series
    for (int n = 0; n < N; ++n) CHECK(g.coeff(n) == BigRat(1));

    QSeries p = one_minus_q(N) * g;
    CHECK(p.coeff(0) == BigRat(1));
    for (int n = 1; n < p.order(); ++n) CHECK(p.coeff(n) == BigRat(0));

    // (1 - q^2)/(1 - q) = 1 + q
    QSeries num = QSeries::from_integers({BigInt(1), BigInt(0), BigInt(-1)}, N);
    QSeries quot = num / one_minus_q(N);
    CHECK(quot.coeff(0) == BigRat(1));
    CHECK(quot.coeff(1) == BigRat(1));
    CHECK(quot.coeff(2) == BigRat(0));

    CHECK_THROWS_AS(QSeries::zero(5).inverse(), DivisionByZeroSeries);
}

TEST_CASE("laurent tails from division by higher valuation") {
    // 1 / (q (1 - q)) has a simple pole part q^{-1}
    QSeries den = QSeries::monomial(BigRat(1), 1, 10) - QSeries::monomial(BigRat(1), 2, 10);
    QSeries inv = den.inverse();
    CHECK(inv.laurent());
    CHECK(inv.valuation() == -1);
    CHECK(inv.coeff(-1) == BigRat(1));
    CHECK(inv.coeff(0) == BigRat(1));
}

TEST_CASE("integer powers including negative exponents") {
    int N = 12;
    QSeries b = QSeries::from_integers({BigInt(1), BigInt(1)}, N); // 1 + q
    QSeries p = b.pow(5);
    CHECK(p.coeff(0) == BigRat(1));
    CHECK(p.coeff(2) == BigRat(10));
    CHECK(p.coeff(5) == BigRat(1));
    CHECK(b.pow(0).coeff(0) == BigRat(1));
    QSeries r = b.pow(-2) * b.pow(2);
    CHECK(r.coeff(0) == BigRat(1));
    for (int n = 1; n < r.order(); ++n) CHECK(r.coeff(n) == BigRat(0));
}

TEST_CASE("theta and derivative operators") {
    QSeries f = QSeries::from_rationals({BigRat(7), make_rat(1, 3), BigRat(0), BigRat(5)}, 9);
    QSeries th = f.theta();
    CHECK(th.coeff(0) == BigRat(0));
    CHECK(th.coeff(1) == make_rat(1, 3));
    CHECK(th.coeff(3) == BigRat(15));
    QSeries d = f.derivative();
    CHECK(d.coeff(0) == make_rat(1, 3));
    CHECK(d.coeff(2) == BigRat(15));
    CHECK(d.order() == 8);
}

TEST_CASE("composition substitutes series with positive valuation") {
    int N = 10;
    QSeries geom = one_minus_q(N).inverse();
    QSeries q2 = QSeries::monomial(BigRat(1), 2, N);
    QSeries g = geom.compose(q2); // 1/(1 - q^2)
    CHECK(g.coeff(0) == BigRat(1));
    CHECK(g.coeff(1) == BigRat(0));
    CHECK(g.coeff(4) == BigRat(1));
    CHECK(g.coeff(5) == BigRat(0));

    QSeries c = QSeries::constant(BigRat(1), N);
    CHECK_THROWS_AS(geom.compose(c), CompositionValuationError);
}

TEST_CASE("agreement and first difference") {
    QSeries a = QSeries::from_integers({BigInt(1), BigInt(2), BigInt(3)}, 8);
    QSeries b = QSeries::from_integers({BigInt(1), BigInt(2), BigInt(4)}, 6);
    CHECK(!a.agrees_with(b));
    auto d = a.first_difference(b);
    REQUIRE(d.has_value());
    CHECK(*d == 2);
    CHECK(a.agrees_with(a.truncated(4)));
    CHECK(!a.first_difference(a).has_value());
}

TEST_CASE("shift and truncate bookkeeping") {
    QSeries f = QSeries::from_integers({BigInt(2), BigInt(-1)}, 6);
    QSeries s = f.shifted(3);
    CHECK(s.valuation() == 3);
    CHECK(s.order() == 9);
    CHECK(s.coeff(3) == BigRat(2));
    QSeries t = s.truncated(5);
    CHECK(t.order() == 5);
    CHECK(t.coeff(4) == BigRat(-1));
}

TEST_CASE("product rule holds for pseudo-random series") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 6; ++trial) {
        QSeries f = random_series(rng, 14);
        QSeries g = random_series(rng, 14);
        QSeries lhs = (f * g).derivative();
        QSeries rhs = f.derivative() * g + f * g.derivative();
        CHECK(lhs.agrees_with(rhs));
    }
}

TEST_CASE("inverse is a right inverse for unit-lead random series") {
    std::mt19937 rng(5081);
    for (int trial = 0; trial < 4; ++trial) {
        QSeries f = random_series(rng, 12, true);
        QSeries p = f * f.inverse();
        CHECK(p.coeff(0) == BigRat(1));
        for (int n = 1; n < p.order(); ++n) CHECK(p.coeff(n) == BigRat(0));
    }
}

TEST_CASE("string rendering") {
    QSeries f = QSeries::from_rationals({BigRat(1), BigRat(-8), make_rat(1, 2)}, 5);
    std::string s = f.str();
    CHECK(s.find("1") != std::string::npos);
    CHECK(s.find("8*q") != std::string::npos);
    CHECK(s.find("O(q^5)") != std::string::npos);
}

} // TEST_SUITE
