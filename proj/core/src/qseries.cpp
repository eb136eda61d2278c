#include "apery8/qseries.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

#include "apery8/errors.hpp"

namespace apery8 {

void QSeries::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& n : num_) n = -n;
    }
    size_t lead = 0;
    while (lead < num_.size() && num_[lead] == 0) ++lead;
    if (lead == num_.size()) {
        num_.clear();
        val_ = order_;
        den_ = 1;
        return;
    }
    if (lead > 0) {
        num_.erase(num_.begin(), num_.begin() + static_cast<long>(lead));
        val_ += static_cast<int>(lead);
    }
    if (den_ != 1) {
        BigInt g = den_;
        for (const auto& n : num_) {
            g = gcd(g, n);
            if (g == 1) break;
        }
        if (g > 1) {
            for (auto& n : num_) n = div_exact(n, g);
            den_ = div_exact(den_, g);
        }
    }
}

QSeries QSeries::raw(std::vector<BigInt> num, BigInt den, int val, int order) {
    QSeries s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.val_ = val;
    s.order_ = order;
    assert(s.num_.empty() || static_cast<int>(s.num_.size()) == order - val);
    s.normalize();
    return s;
}

QSeries QSeries::zero(int order) {
    QSeries s;
    s.val_ = order;
    s.order_ = order;
    return s;
}

QSeries QSeries::constant(const BigRat& c, int order) {
    return monomial(c, 0, order);
}

QSeries QSeries::monomial(const BigRat& c, int expo, int order) {
    if (c == 0 || expo >= order) return zero(order);
    std::vector<BigInt> num(static_cast<size_t>(order - expo));
    num[0] = numerator(c);
    return raw(std::move(num), denominator(c), expo, order);
}

QSeries QSeries::from_rationals(const std::vector<BigRat>& coeffs, int order) {
    size_t n = std::min(coeffs.size(), static_cast<size_t>(std::max(order, 0)));
    BigInt den = 1;
    for (size_t i = 0; i < n; ++i) den = lcm(den, denominator(coeffs[i]));
    std::vector<BigInt> num(static_cast<size_t>(std::max(order, 0)));
    for (size_t i = 0; i < n; ++i)
        num[i] = numerator(coeffs[i]) * div_exact(den, denominator(coeffs[i]));
    return raw(std::move(num), std::move(den), 0, order);
}

QSeries QSeries::from_integers(std::vector<BigInt> coeffs, int order) {
    coeffs.resize(static_cast<size_t>(std::max(order, 0)));
    return raw(std::move(coeffs), 1, 0, order);
}

BigRat QSeries::coeff(int n) const {
    if (n >= order_)
        throw std::logic_error("QSeries::coeff beyond truncation order");
    if (n < val_ || n >= val_ + terms()) return BigRat(0);
    return make_rat(num_[static_cast<size_t>(n - val_)], den_);
}

std::vector<BigRat> QSeries::coeff_range(int from, int to) const {
    std::vector<BigRat> out;
    out.reserve(static_cast<size_t>(std::max(to - from, 0)));
    for (int n = from; n < to; ++n) out.push_back(coeff(n));
    return out;
}

QSeries QSeries::truncated(int new_order) const {
    assert(new_order <= order_);
    if (new_order <= val_) return zero(new_order);
    std::vector<BigInt> num(num_.begin(),
                            num_.begin() + std::min<long>(terms(), new_order - val_));
    num.resize(static_cast<size_t>(new_order - val_));
    return raw(std::move(num), den_, val_, new_order);
}

QSeries QSeries::shifted(int k) const {
    QSeries s = *this;
    s.val_ += k;
    s.order_ += k;
    return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    int order = std::min(a.order_, b.order_);
    int val = std::min({a.val_, b.val_, order});
    if (val >= order) return QSeries::zero(order);
    BigInt den = lcm(a.den_, b.den_);
    BigInt fa = div_exact(den, a.den_), fb = div_exact(den, b.den_);
    std::vector<BigInt> num(static_cast<size_t>(order - val));
    for (int i = 0; i < a.terms(); ++i) {
        int n = a.val_ + i;
        if (n >= order) break;
        num[static_cast<size_t>(n - val)] += a.num_[static_cast<size_t>(i)] * fa;
    }
    for (int i = 0; i < b.terms(); ++i) {
        int n = b.val_ + i;
        if (n >= order) break;
        num[static_cast<size_t>(n - val)] += b.num_[static_cast<size_t>(i)] * fb;
    }
    return QSeries::raw(std::move(num), std::move(den), val, order);
}

QSeries operator-(const QSeries& a) {
    QSeries s = a;
    for (auto& n : s.num_) n = -n;
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    int order = std::min(a.order_ + b.val_, b.order_ + a.val_);
    if (a.is_zero() || b.is_zero()) return QSeries::zero(order);
    int val = a.val_ + b.val_;
    int len = order - val; // == min(a.terms(), b.terms())
    std::vector<BigInt> num(static_cast<size_t>(len));
    for (int i = 0; i < a.terms() && i < len; ++i) {
        const BigInt& ai = a.num_[static_cast<size_t>(i)];
        if (ai == 0) continue;
        int jmax = std::min(b.terms(), len - i);
        for (int j = 0; j < jmax; ++j) {
            const BigInt& bj = b.num_[static_cast<size_t>(j)];
            if (bj == 0) continue;
            num[static_cast<size_t>(i + j)] += ai * bj;
        }
    }
    return QSeries::raw(std::move(num), a.den_ * b.den_, val, order);
}

QSeries operator*(const QSeries& a, const BigRat& c) {
    if (c == 0) return QSeries::zero(a.order_);
    QSeries s = a;
    const BigInt& cn = numerator(c);
    for (auto& n : s.num_) n *= cn;
    s.den_ *= denominator(c);
    s.normalize();
    return s;
}

QSeries QSeries::inverse() const {
    if (is_zero())
        throw DivisionByZeroSeries("series has no nonzero coefficient below order " +
                                   std::to_string(order_));
    // Unit part U = n0 + n1 q + ...; 1/U has coefficient d_i / n0^{i+1} with
    // d_0 = 1 and d_n = -sum_{k=1..n} n_k d_{n-k} n0^{k-1}, all integers.
    int len = terms();
    const BigInt& n0 = num_[0];
    std::vector<BigInt> d(static_cast<size_t>(len));
    d[0] = 1;
    std::vector<BigInt> n0pow(static_cast<size_t>(len)); // n0^{k-1}
    n0pow[0] = 1;                                        // index k-1
    for (int k = 1; k < len; ++k) n0pow[static_cast<size_t>(k)] = n0pow[static_cast<size_t>(k - 1)] * n0;
    for (int n = 1; n < len; ++n) {
        BigInt acc = 0;
        for (int k = 1; k <= n; ++k) {
            const BigInt& nk = num_[static_cast<size_t>(k)];
            if (nk == 0) continue;
            acc += nk * d[static_cast<size_t>(n - k)] * n0pow[static_cast<size_t>(k - 1)];
        }
        d[static_cast<size_t>(n)] = -acc;
    }
    // 1/this = den * q^{-val} * sum d_i n0^{len-1-i} q^i / n0^{len}
    std::vector<BigInt> num(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        num[static_cast<size_t>(i)] = den_ * d[static_cast<size_t>(i)] * n0pow[static_cast<size_t>(len - 1 - i)];
    return raw(std::move(num), pow_int(n0, static_cast<unsigned long>(len)), -val_, -val_ + len);
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

QSeries QSeries::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return constant(BigRat(1), order_ - val_);
    QSeries result = constant(BigRat(1), order_ - val_);
    QSeries base = *this;
    bool first = true;
    for (unsigned long bits = static_cast<unsigned long>(e); bits; bits >>= 1) {
        if (bits & 1) {
            result = first ? base : result * base;
            first = false;
        }
        if (bits > 1) base = base * base;
    }
    return result;
}

QSeries QSeries::theta() const {
    QSeries s = *this;
    for (int i = 0; i < s.terms(); ++i) s.num_[static_cast<size_t>(i)] *= (s.val_ + i);
    s.normalize();
    return s;
}

QSeries QSeries::derivative() const {
    QSeries s = *this;
    for (int i = 0; i < s.terms(); ++i) s.num_[static_cast<size_t>(i)] *= (s.val_ + i);
    s.val_ -= 1;
    s.order_ -= 1;
    s.normalize();
    return s;
}

QSeries QSeries::compose(const QSeries& inner) const {
    if (val_ < 0)
        throw CompositionValuationError("composition with a Laurent outer series");
    if (!inner.is_zero() && inner.val_ < 1)
        throw CompositionValuationError("inner series must vanish at the origin (valuation " +
                                        std::to_string(inner.val_) + ")");
    int w = inner.is_zero() ? inner.order_ : inner.val_;
    int cap = static_cast<int>(std::min<long>(inner.order_, static_cast<long>(w) * order_));
    if (is_zero()) return zero(cap);
    QSeries result = constant(coeff(order_ - 1), cap);
    for (int j = order_ - 2; j >= 0; --j) {
        result = result * inner;
        if (result.order_ > cap) result = result.truncated(cap);
        if (j >= val_) {
            BigRat c = coeff(j);
            if (c != 0) result = result + monomial(c, 0, cap);
        }
    }
    if (result.order_ > cap) result = result.truncated(cap);
    return result;
}

bool QSeries::agrees_with(const QSeries& other) const {
    return !first_difference(other).has_value();
}

std::optional<int> QSeries::first_difference(const QSeries& other) const {
    int hi = std::min(order_, other.order_);
    int lo = std::min(val_, other.val_);
    for (int n = lo; n < hi; ++n) {
        // cross-multiplied comparison, avoids building mpq per coefficient
        const BigInt* an = nullptr;
        const BigInt* bn = nullptr;
        if (n >= val_ && n < val_ + terms()) an = &num_[static_cast<size_t>(n - val_)];
        if (n >= other.val_ && n < other.val_ + other.terms())
            bn = &other.num_[static_cast<size_t>(n - other.val_)];
        if (!an && !bn) continue;
        BigInt lhs = an ? (*an) * other.den_ : BigInt(0);
        BigInt rhs = bn ? (*bn) * den_ : BigInt(0);
        if (lhs != rhs) return n;
    }
    return std::nullopt;
}

std::string QSeries::str(int max_terms) const {
    std::ostringstream os;
    if (is_zero()) {
        os << "O(q^" << order_ << ")";
        return os.str();
    }
    int printed = 0;
    for (int i = 0; i < terms() && printed < max_terms; ++i) {
        if (num_[static_cast<size_t>(i)] == 0) continue;
        BigRat c = make_rat(num_[static_cast<size_t>(i)], den_);
        int n = val_ + i;
        bool neg = c < 0;
        BigRat cabs = neg ? BigRat(-c) : c;
        if (printed == 0)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        if (n == 0) {
            os << to_string(cabs);
        } else {
            if (cabs != 1) os << to_string(cabs) << "*";
            os << "q";
            if (n != 1) os << "^" << n;
        }
        ++printed;
    }
    os << " + O(q^" << order_ << ")";
    return os.str();
}

} // namespace apery8
