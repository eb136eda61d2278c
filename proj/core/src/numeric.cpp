#include "apery8/numeric.hpp"

#include <cmath>

#include "apery8/errors.hpp"

namespace apery8 {

int truncation_length(const APReal& abs_q, long digits) {
    double aq = abs_q.to_double();
    if (aq >= 1.0) throw DomainError("truncation_length: |q| < 1 required");
    if (aq <= 0.0) return 8; // |q| below double range, any tail is negligible
    double L = -std::log(aq);
    double T = static_cast<double>(digits + 5) * std::log(10.0);
    int n = std::max(4, static_cast<int>(std::ceil(3.0 / L)) + 1);
    while (static_cast<double>(n) * L - 3.0 * std::log(static_cast<double>(n)) < T) ++n;
    return n + 3;
}

namespace {

APComplex q_from_tau(const APComplex& tau, long prec) {
    if (tau.im().to_double() < 0.05)
        throw DomainError("half-plane evaluation needs Im tau >= 1/20");
    APReal tp = APReal(2L, prec) * APReal::pi(prec);
    // 2 pi i tau
    return exp(APComplex(-(tp * tau.im()), tp * tau.re()));
}

} // namespace

APComplex eta_numeric(const APComplex& tau, long prec) {
    APComplex q = q_from_tau(tau, prec);
    int M = truncation_length(q.abs(), prec);
    APReal tp24 = APReal(2L, prec) * APReal::pi(prec) * APReal(make_rat(1, 24), prec);
    APComplex pref = exp(APComplex(-(tp24 * tau.im()), tp24 * tau.re()));
    const APComplex one(APReal(1L, prec));
    APComplex prod = one;
    APComplex qn = q;
    for (int n = 1; n <= M; ++n) {
        prod = prod * (one - qn);
        qn = qn * q;
    }
    return pref * prod;
}

APComplex eta_quotient_numeric(const EtaQuotient& f, const APComplex& tau, long prec) {
    APComplex acc(APReal(1L, prec));
    for (size_t i = 0; i < EtaQuotient::divisors.size(); ++i) {
        if (f.exponents[i] == 0) continue;
        APComplex em = eta_numeric(tau * APReal(static_cast<long>(EtaQuotient::divisors[i]), prec),
                                   prec);
        acc = acc * em.pow_si(f.exponents[i]);
    }
    return acc;
}

APComplex t_numeric(const APComplex& tau, long prec) {
    return eta_quotient_numeric(kQuotientT, tau, prec);
}

APComplex y_numeric(const APComplex& tau, long prec) {
    return eta_quotient_numeric(kQuotientY, tau, prec);
}

APComplex e4_numeric(const APComplex& tau, long prec) {
    APComplex q = q_from_tau(tau, prec);
    int M = truncation_length(q.abs(), prec);
    std::vector<BigInt> sig = sigma3_table(M);
    APComplex acc(APReal(1L, prec));
    APComplex qn(APReal(1L, prec));
    for (int n = 1; n < M; ++n) {
        qn = qn * q;
        acc = acc + qn * APReal(BigInt(240 * sig[static_cast<size_t>(n)]), prec);
    }
    return acc;
}

APComplex g8_numeric(const APComplex& tau, long prec) {
    APComplex q = q_from_tau(tau, prec);
    int M = truncation_length(q.abs(), prec);
    std::vector<BigInt> a = g8_coefficients(M);
    APComplex acc(APReal(0L, prec));
    APComplex qn(APReal(1L, prec));
    for (int n = 1; n < M; ++n) {
        qn = qn * q;
        if (a[static_cast<size_t>(n)] == 0) continue;
        acc = acc + qn * APReal(a[static_cast<size_t>(n)], prec);
    }
    return acc;
}

APComplex g8_numeric_eisenstein(const APComplex& tau, long prec) {
    const APReal two(2L, prec), four(4L, prec), eight(8L, prec);
    APComplex comb = e4_numeric(tau, prec) - e4_numeric(tau * two, prec) * APReal(21L, prec) +
                     e4_numeric(tau * four, prec) * APReal(84L, prec) -
                     e4_numeric(tau * eight, prec) * APReal(64L, prec);
    return comb / APReal(240L, prec);
}

APComplex eichler_numeric(const APComplex& tau, long prec) {
    APComplex q = q_from_tau(tau, prec);
    int M = truncation_length(q.abs(), prec);
    std::vector<BigInt> a = g8_coefficients(M);
    APComplex acc(APReal(0L, prec));
    APComplex qn(APReal(1L, prec));
    for (long n = 1; n < M; ++n) {
        qn = qn * q;
        if (a[static_cast<size_t>(n)] == 0) continue;
        acc = acc + qn * APReal(make_rat(a[static_cast<size_t>(n)], BigInt(n) * n * n), prec);
    }
    return acc;
}

APComplex eichler_deriv_numeric(const APComplex& tau, long prec) {
    APComplex q = q_from_tau(tau, prec);
    int M = truncation_length(q.abs(), prec);
    std::vector<BigInt> a = g8_coefficients(M);
    APComplex acc(APReal(0L, prec));
    APComplex qn(APReal(1L, prec));
    for (long n = 1; n < M; ++n) {
        qn = qn * q;
        if (a[static_cast<size_t>(n)] == 0) continue;
        acc = acc + qn * APReal(make_rat(a[static_cast<size_t>(n)], BigInt(n) * n), prec);
    }
    APReal tp = APReal(2L, prec) * APReal::pi(prec);
    return APComplex(APReal(0L, prec), tp) * acc;
}

APComplex y_deriv_numeric(const APComplex& tau, long prec) {
    APComplex q = q_from_tau(tau, prec);
    int M = truncation_length(q.abs(), prec);
    QSeries Y = y_qexp(M);
    APComplex acc(APReal(0L, prec));
    APComplex qn(APReal(1L, prec));
    for (int n = 1; n < M; ++n) {
        qn = qn * q;
        BigRat c = Y.coeff(n);
        if (c == 0) continue;
        acc = acc + qn * APReal(BigRat(c * n), prec);
    }
    APReal tp = APReal(2L, prec) * APReal::pi(prec);
    return APComplex(APReal(0L, prec), tp) * acc;
}

APReal f_eval(const APReal& y, long prec) {
    if (y.sign() <= 0) throw DomainError("f_eval: y > 0 required");
    APReal qy = exp(-(APReal::pi(prec) * y / sqrt(APReal(2L, prec))));
    int M = truncation_length(qy, prec);
    std::vector<BigInt> a = g8_coefficients(M);
    APReal acc(0L, prec);
    APReal qn(1L, prec);
    for (long n = 1; n < M; ++n) {
        qn = qn * qy;
        if (a[static_cast<size_t>(n)] == 0) continue;
        acc += APReal(make_rat(a[static_cast<size_t>(n)], BigInt(n) * n * n), prec) * qn;
    }
    return acc;
}

} // namespace apery8
