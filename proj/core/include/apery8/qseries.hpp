#ifndef APERY8_QSERIES_HPP
#define APERY8_QSERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "apery8/bigrat.hpp"

namespace apery8 {

// Truncated power series with exact rational coefficients, the workhorse for
// every q- and z-expansion in the library.
//
// A series is a triple (valuation v, coefficients, order N) representing
//     sum_{n=v}^{N-1} c_n q^n + O(q^N),
// dense from the valuation. Coefficients are stored cleared of denominators:
// an integer numerator per exponent plus one common positive denominator,
// reduced so gcd(content, den) = 1. Convolutions therefore run in pure
// integer arithmetic; coeff() exposes canonical rationals.
//
// Binary operations propagate the order of validity: min of the operand
// orders for addition, min(Na + vb, Nb + va) for multiplication, and the
// matching rules for division and composition. The leading stored
// coefficient is nonzero unless the series is identically zero up to its
// order (then the coefficient list is empty and valuation() == order()).
//
// Negative valuations (Laurent tails) are representable so that division may
// pass through them internally; laurent() flags such a series and callers
// exposing results assert it is clear.
class QSeries {
public:
    QSeries() = default;

    static QSeries zero(int order);
    static QSeries constant(const BigRat& c, int order);
    // c * q^expo + O(q^order)
    static QSeries monomial(const BigRat& c, int expo, int order);
    // Coefficients for q^0, q^1, ... (rational or integer), given order.
    static QSeries from_rationals(const std::vector<BigRat>& coeffs, int order);
    static QSeries from_integers(std::vector<BigInt> coeffs, int order);

    int order() const { return order_; }
    int valuation() const { return val_; }
    bool is_zero() const { return num_.empty(); }
    bool laurent() const { return val_ < 0; }
    int terms() const { return static_cast<int>(num_.size()); }

    // Coefficient of q^n in lowest terms; zero outside the stored window.
    // Asking above the order is meaningless and asserts.
    BigRat coeff(int n) const;
    // Coefficients of q^from .. q^{to-1}.
    std::vector<BigRat> coeff_range(int from, int to) const;

    QSeries truncated(int new_order) const;
    QSeries shifted(int k) const; // multiply by q^k

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const BigRat& c);
    friend QSeries operator*(const BigRat& c, const QSeries& a) { return a * c; }
    friend QSeries operator/(const QSeries& a, const QSeries& b);

    // Multiplicative inverse; requires a nonzero leading coefficient
    // (DivisionByZeroSeries otherwise). Valuation negates.
    QSeries inverse() const;

    // Integer power by binary exponentiation; negative e inverts first.
    QSeries pow(long e) const;

    // Euler operator theta = q d/dq.
    QSeries theta() const;
    // Plain derivative d/dq.
    QSeries derivative() const;

    // Substitution this(inner); inner must have valuation >= 1
    // (CompositionValuationError). Horner evaluation, truncated to
    // min(inner.order, inner.valuation * this->order).
    QSeries compose(const QSeries& inner) const;

    // Equality of every coefficient through min(order) - 1.
    bool agrees_with(const QSeries& other) const;
    // Smallest exponent below min(order) where the two differ.
    std::optional<int> first_difference(const QSeries& other) const;

    std::string str(int max_terms = 12) const;

private:
    void normalize();
    static QSeries raw(std::vector<BigInt> num, BigInt den, int val, int order);

    std::vector<BigInt> num_; // numerator of coefficient of q^{val_ + i}
    BigInt den_ = 1;          // common denominator, > 0
    int val_ = 0;
    int order_ = 0; // coefficients known for exponents < order_
};

} // namespace apery8

#endif
