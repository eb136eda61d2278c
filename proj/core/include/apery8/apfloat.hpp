#ifndef APERY8_APFLOAT_HPP
#define APERY8_APFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "apery8/bigrat.hpp"

namespace apery8 {

// Arbitrary-precision real on top of MPFR.
//
// Precision contract: every value carries a nominal decimal digit count P;
// the underlying mpfr variable works at P + kGuardDigits digits so that
// results are trustworthy to the nominal P. Binary operations produce the
// larger P of their operands. to_string() rounds to the nominal digits.
inline constexpr long kGuardDigits = 15;

class APReal {
public:
    APReal() : APReal(0L, 20) {}
    explicit APReal(long digits) : APReal(0L, digits) {}
    APReal(long value, long digits);
    APReal(const BigInt& value, long digits);
    APReal(const BigRat& value, long digits);
    APReal(const char* decimal, long digits);
    APReal(double value, long digits);

    APReal(const APReal& o);
    APReal(APReal&& o) noexcept;
    APReal& operator=(APReal o) noexcept;
    ~APReal();

    long digits() const { return digits_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    static long bits_for(long digits);
    static APReal pi(long digits);
    static APReal nan(long digits);

    int sign() const { return mpfr_sgn(v_); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }

    friend APReal operator+(const APReal& a, const APReal& b);
    friend APReal operator-(const APReal& a, const APReal& b);
    friend APReal operator*(const APReal& a, const APReal& b);
    friend APReal operator/(const APReal& a, const APReal& b);
    friend APReal operator-(const APReal& a);
    APReal& operator+=(const APReal& b) { return *this = *this + b; }
    APReal& operator-=(const APReal& b) { return *this = *this - b; }
    APReal& operator*=(const APReal& b) { return *this = *this * b; }
    APReal& operator/=(const APReal& b) { return *this = *this / b; }

    friend APReal abs(const APReal& a);
    friend APReal sqrt(const APReal& a);
    friend APReal exp(const APReal& a);
    friend APReal log(const APReal& a);
    friend APReal atan2(const APReal& y, const APReal& x);
    friend std::pair<APReal, APReal> sin_cos(const APReal& a);
    friend APReal pow_si(const APReal& a, long e);
    friend int compare(const APReal& a, const APReal& b);

    friend bool operator<(const APReal& a, const APReal& b) { return compare(a, b) < 0; }
    friend bool operator>(const APReal& a, const APReal& b) { return compare(a, b) > 0; }
    friend bool operator<=(const APReal& a, const APReal& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const APReal& a, const APReal& b) { return compare(a, b) >= 0; }

    // Decimal string with the nominal digit count (or fewer on request).
    std::string to_string(long out_digits = 0) const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // The same value re-rounded to a different nominal precision.
    APReal rounded_to(long digits) const;

    // |this - other| < 10^{-decimal_digits}
    bool agrees_to(const APReal& other, long decimal_digits) const;

private:
    explicit APReal(long digits, std::nullptr_t) : digits_(digits) {
        mpfr_init2(v_, bits_for(digits_ + kGuardDigits));
    }
    static APReal blank(long digits) { return APReal(digits, nullptr); }
    static long out_digits_of(const APReal& a, const APReal& b) {
        return a.digits_ > b.digits_ ? a.digits_ : b.digits_;
    }

    mpfr_t v_;
    long digits_;
};

// 10^e at the given working digits.
APReal pow10(long e, long digits);

// zeta(3) to prec digits. Dual-sourced: the Hjortnaes-Markov series
//   (5/2) sum (-1)^{n-1} / (n^3 C(2n,n))
// is cross-checked against the Amdeberhan-Zeilberger series
//   (1/2) sum (-1)^{n-1} (205n^2 - 160n + 32) / (n^5 C(2n,n)^5)
// at the same precision; PrecisionUnreachable if they disagree beyond the
// guard digits. Terms are generated in exact rationals.
APReal const_zeta3(long prec);

// Complex value as a pair of APReals; only the operations the half-plane
// evaluations need, no attempt at a full complex library.
class APComplex {
public:
    APComplex() = default;
    APComplex(APReal re, APReal im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit APComplex(const APReal& re) : re_(re), im_(APReal(0L, re.digits())) {}
    static APComplex i(long digits) { return {APReal(0L, digits), APReal(1L, digits)}; }

    const APReal& re() const { return re_; }
    const APReal& im() const { return im_; }
    long digits() const { return re_.digits(); }

    friend APComplex operator+(const APComplex& a, const APComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend APComplex operator-(const APComplex& a, const APComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend APComplex operator-(const APComplex& a) { return {-a.re_, -a.im_}; }
    friend APComplex operator*(const APComplex& a, const APComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend APComplex operator*(const APComplex& a, const APReal& c) {
        return {a.re_ * c, a.im_ * c};
    }
    friend APComplex operator*(const APReal& c, const APComplex& a) { return a * c; }
    friend APComplex operator/(const APComplex& a, const APComplex& b);
    friend APComplex operator/(const APComplex& a, const APReal& c) {
        return {a.re_ / c, a.im_ / c};
    }

    APComplex conj() const { return {re_, -im_}; }
    APReal abs2() const { return re_ * re_ + im_ * im_; }
    APReal abs() const { return sqrt(abs2()); }

    friend APComplex exp(const APComplex& z);  // e^z
    friend APComplex sqrt(const APComplex& z); // principal branch
    friend APComplex log(const APComplex& z);  // principal branch
    APComplex pow_si(long e) const;            // integer powers

    std::string to_string(long out_digits = 0) const;

private:
    APReal re_, im_;
};

} // namespace apery8

#endif
