#include <doctest.h>

#include <string>
#include <utility>

#include "apery8/apfloat.hpp"
#include "apery8/bigrat.hpp"

using namespace apery8;

TEST_SUITE("apfloat") {

TEST_CASE("construction and exact arithmetic") {
    APReal a("1.5", 30);
    APReal b("2.5", 30);
    CHECK(compare(a + b, APReal(4L, 30)) == 0);
    CHECK(compare(a * b, APReal("3.75", 30)) == 0);
    CHECK(compare(APReal(make_rat(1, 4), 30), APReal("0.25", 30)) == 0);
    CHECK(compare(-a, APReal("-1.5", 30)) == 0);
    CHECK((a - b).sign() < 0);
    CHECK(abs(a - b).sign() > 0);
    CHECK(APReal::nan(20).is_nan());
    CHECK(!a.is_nan());
}

TEST_CASE("decimal rendering") {
    CHECK(APReal(make_rat(1, 4), 30).to_string() == "0.25");
    CHECK(APReal(7L, 25).to_string() == "7");
    std::string z = APReal(make_rat(1, 3), 30).to_string(10);
    CHECK(z.substr(0, 6) == "0.3333");
    CHECK(APReal("0.0001", 30).to_string(3) == "0.0001");
    CHECK(APReal("0.0000001", 30).to_string(3).find("e-") != std::string::npos);
}

TEST_CASE("powers of ten") {
    CHECK(compare(pow10(-5, 30), APReal(make_rat(1, 100000), 30)) == 0);
    CHECK(compare(pow10(3, 30), APReal(1000L, 30)) == 0);
}

TEST_CASE("rounding to fewer digits keeps the value nearby") {
    APReal x = const_zeta3(80);
    APReal y = x.rounded_to(30);
    CHECK(y.digits() == 30);
    CHECK(abs(x.rounded_to(80) - x) < pow10(-70, 80));
    CHECK(y.agrees_to(x.rounded_to(30), 28));
}

TEST_CASE("elementary functions cross-check") {
    long p = 40;
    APReal tol = pow10(-35, p);
    CHECK(abs(sqrt(APReal(2L, p)) * sqrt(APReal(2L, p)) - APReal(2L, p)) < tol);
    CHECK(abs(exp(log(APReal(10L, p))) - APReal(10L, p)) < tol);
    CHECK(abs(APReal(4L, p) * atan2(APReal(1L, p), APReal(1L, p)) - APReal::pi(p)) < tol);
    auto sc = sin_cos(APReal::pi(p) / APReal(6L, p));
    CHECK(abs(sc.first - APReal(make_rat(1, 2), p)) < tol);
    CHECK(abs(sc.second * sc.second - APReal(make_rat(3, 4), p)) < tol);
    CHECK(compare(pow_si(APReal(2L, p), 10), APReal(1024L, p)) == 0);
    CHECK(abs(pow_si(APReal(5L, p), -2) - APReal(make_rat(1, 25), p)) < tol);
}

TEST_CASE("agreement predicate") {
    APReal a("1.00000000012", 30);
    APReal b(1L, 30);
    CHECK(a.agrees_to(b, 8));
    CHECK(!a.agrees_to(b, 12));
}

TEST_CASE("zeta(3) against the long reference") {
    APReal lit("1.20205690315959428539973816151144999076498629234049888179227", 70);
    CHECK(const_zeta3(60).agrees_to(lit.rounded_to(60), 58));
    // independent precisions agree with each other
    CHECK(abs(const_zeta3(35) - const_zeta3(45).rounded_to(35)) < pow10(-33, 40));
}

TEST_CASE("complex arithmetic") {
    long p = 40;
    APReal tol = pow10(-35, p);
    APComplex i = APComplex::i(p);
    APComplex m1 = i * i;
    CHECK(compare(m1.re(), APReal(-1L, p)) == 0);
    CHECK(m1.im().sign() == 0);

    CHECK(abs(APComplex(APReal(3L, p), APReal(4L, p)).abs() - APReal(5L, p)) < tol);

    APComplex e = exp(i * APReal::pi(p));
    CHECK(abs(e.re() + APReal(1L, p)) < tol);
    CHECK(abs(e.im()) < tol);

    APComplex r = sqrt(APComplex(APReal(-1L, p), APReal(0L, p)));
    CHECK((r - i).abs() < tol);

    APComplex w(APReal(1L, p), APReal(1L, p));
    APComplex inv = w.pow_si(-1);
    CHECK(abs(inv.re() - APReal(make_rat(1, 2), p)) < tol);
    CHECK(abs(inv.im() + APReal(make_rat(1, 2), p)) < tol);
    CHECK((w.pow_si(-3) * w.pow_si(3) - APComplex(APReal(1L, p))).abs() < tol);

    APComplex l = log(APComplex(APReal(0L, p), APReal(2L, p)));
    CHECK(abs(l.re() - log(APReal(2L, p))) < tol);
    CHECK(abs(l.im() - APReal::pi(p) / APReal(2L, p)) < tol);

    CHECK(w.to_string(8).find('i') != std::string::npos);
    CHECK(w.conj().im().sign() < 0);
}

} // TEST_SUITE
