#ifndef APERY8_QUADRAT_HPP
#define APERY8_QUADRAT_HPP

#include <string>

#include "apery8/bigrat.hpp"

namespace apery8 {

// Element a + b*sqrt(2) of the real quadratic field Q(sqrt(2)), with exact
// rational components. Enough field arithmetic for the indicial computation
// at t0 = (3 - 2*sqrt(2))/4; nothing level-specific lives here.
class QuadRat {
public:
    QuadRat() = default;
    QuadRat(BigRat a, BigRat b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit QuadRat(const BigRat& a) : a_(a) {}
    QuadRat(long a, long b) : a_(a), b_(b) {}

    static QuadRat sqrt2() { return QuadRat(0, 1); }

    const BigRat& rational_part() const { return a_; }
    const BigRat& sqrt2_part() const { return b_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadRat conjugate() const { return QuadRat(a_, -b_); }

    // Field norm a^2 - 2 b^2 (rational by construction).
    BigRat norm() const { return a_ * a_ - 2 * b_ * b_; }

    friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
        return QuadRat(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadRat operator-(const QuadRat& x, const QuadRat& y) {
        return QuadRat(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadRat operator-(const QuadRat& x) { return QuadRat(-x.a_, -x.b_); }
    friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
        return QuadRat(x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadRat operator*(const QuadRat& x, const BigRat& c) {
        return QuadRat(x.a_ * c, x.b_ * c);
    }
    friend QuadRat operator*(const BigRat& c, const QuadRat& x) { return x * c; }

    QuadRat inverse() const {
        BigRat n = norm();
        if (n == 0)
            throw std::domain_error("QuadRat: inverse of zero");
        return QuadRat(a_ / n, -b_ / n);
    }
    friend QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * y.inverse(); }

    friend bool operator==(const QuadRat& x, const QuadRat& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }

    std::string str() const;

private:
    BigRat a_, b_;
};

inline std::string QuadRat::str() const {
    if (b_ == 0) return to_string(a_);
    std::string s;
    if (a_ != 0) s += to_string(a_) + (b_ > 0 ? " + " : " - ");
    else if (b_ < 0) s += "-";
    BigRat babs = b_ > 0 ? b_ : BigRat(-b_);
    if (babs != 1) s += to_string(babs) + "*";
    s += "sqrt(2)";
    return s;
}

} // namespace apery8

#endif
