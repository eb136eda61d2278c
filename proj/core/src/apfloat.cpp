#include "apery8/apfloat.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

namespace apery8 {

long APReal::bits_for(long digits) {
    // ceil(digits * log2(10)) plus a little slack
    return static_cast<long>(static_cast<double>(digits) * 3.3219280948873626) + 8;
}

APReal::APReal(long value, long digits) : APReal(digits, nullptr) {
    mpfr_set_si(v_, value, MPFR_RNDN);
}

APReal::APReal(const BigInt& value, long digits) : APReal(digits, nullptr) {
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

APReal::APReal(const BigRat& value, long digits) : APReal(digits, nullptr) {
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

APReal::APReal(const char* decimal, long digits) : APReal(digits, nullptr) {
    mpfr_set_str(v_, decimal, 10, MPFR_RNDN);
}

APReal::APReal(double value, long digits) : APReal(digits, nullptr) {
    mpfr_set_d(v_, value, MPFR_RNDN);
}

APReal::APReal(const APReal& o) : APReal(o.digits_, nullptr) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

APReal::APReal(APReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

APReal& APReal::operator=(APReal o) noexcept {
    mpfr_swap(v_, o.v_);
    std::swap(digits_, o.digits_);
    return *this;
}

APReal::~APReal() { mpfr_clear(v_); }

APReal APReal::pi(long digits) {
    APReal r = blank(digits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

APReal APReal::nan(long digits) {
    APReal r = blank(digits);
    mpfr_set_nan(r.v_);
    return r;
}

#define APERY8_BINOP(opname, mpfrfn)                                  \
    APReal opname(const APReal& a, const APReal& b) {                \
        APReal r = APReal::blank(APReal::out_digits_of(a, b));       \
        mpfrfn(r.v_, a.v_, b.v_, MPFR_RNDN);                         \
        return r;                                                    \
    }

APERY8_BINOP(operator+, mpfr_add)
APERY8_BINOP(operator-, mpfr_sub)
APERY8_BINOP(operator*, mpfr_mul)
APERY8_BINOP(operator/, mpfr_div)
APERY8_BINOP(atan2, mpfr_atan2)

#undef APERY8_BINOP

APReal operator-(const APReal& a) {
    APReal r = APReal::blank(a.digits_);
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

#define APERY8_UNOP(opname, mpfrfn)               \
    APReal opname(const APReal& a) {              \
        APReal r = APReal::blank(a.digits_);      \
        mpfrfn(r.v_, a.v_, MPFR_RNDN);            \
        return r;                                 \
    }

APERY8_UNOP(abs, mpfr_abs)
APERY8_UNOP(sqrt, mpfr_sqrt)
APERY8_UNOP(exp, mpfr_exp)
APERY8_UNOP(log, mpfr_log)

#undef APERY8_UNOP

std::pair<APReal, APReal> sin_cos(const APReal& a) {
    APReal s = APReal::blank(a.digits_), c = APReal::blank(a.digits_);
    mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
    return {std::move(s), std::move(c)};
}

APReal pow_si(const APReal& a, long e) {
    APReal r = APReal::blank(a.digits());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

int compare(const APReal& a, const APReal& b) { return mpfr_cmp(a.v_, b.v_); }

APReal APReal::rounded_to(long digits) const {
    APReal r = blank(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

APReal pow10(long e, long digits) { return pow_si(APReal(10L, digits), e); }

bool APReal::agrees_to(const APReal& other, long decimal_digits) const {
    APReal diff = abs(*this - other);
    return diff < pow10(-decimal_digits, out_digits_of(*this, other));
}

std::string APReal::to_string(long out_digits) const {
    if (out_digits <= 0 || out_digits > digits_) out_digits = digits_;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(out_digits), v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string digits = neg ? mant.substr(1) : mant;
    // trim trailing zeros but keep at least one digit
    size_t last = digits.find_last_not_of('0');
    digits.erase(last + 1);
    std::ostringstream os;
    if (neg) os << '-';
    // mpfr convention: value = 0.digits * 10^e
    if (e > 0 && e <= static_cast<mpfr_exp_t>(digits.size())) {
        os << digits.substr(0, static_cast<size_t>(e));
        if (static_cast<size_t>(e) < digits.size()) os << '.' << digits.substr(static_cast<size_t>(e));
    } else if (e <= 0 && e > -6) {
        os << "0." << std::string(static_cast<size_t>(-e), '0') << digits;
    } else {
        os << "0." << digits << "e" << e;
    }
    return os.str();
}

APComplex operator/(const APComplex& a, const APComplex& b) {
    APReal d = b.abs2();
    return {(a.re() * b.re() + a.im() * b.im()) / d, (a.im() * b.re() - a.re() * b.im()) / d};
}

APComplex exp(const APComplex& z) {
    APReal m = exp(z.re());
    auto [s, c] = sin_cos(z.im());
    return {m * c, m * s};
}

APComplex log(const APComplex& z) {
    APReal r2 = z.abs2();
    APReal half(BigRat(1, 2), z.digits());
    return {log(r2) * half, atan2(z.im(), z.re())};
}

APComplex sqrt(const APComplex& z) {
    // principal branch via half-angle; exact on the nonnegative real axis
    APReal r = z.abs();
    APReal half(BigRat(1, 2), z.digits());
    APReal re = sqrt((r + z.re()) * half);
    APReal im = sqrt((r - z.re()) * half);
    if (z.im().sign() < 0) im = -im;
    return {re, im};
}

APComplex APComplex::pow_si(long e) const {
    if (e < 0) {
        APComplex inv = APComplex(APReal(1L, digits())) / *this;
        return inv.pow_si(-e);
    }
    APComplex result{APReal(1L, digits()), APReal(0L, digits())};
    APComplex base = *this;
    for (unsigned long bits = static_cast<unsigned long>(e); bits; bits >>= 1) {
        if (bits & 1) result = result * base;
        if (bits > 1) base = base * base;
    }
    return result;
}

std::string APComplex::to_string(long out_digits) const {
    std::string s = re_.to_string(out_digits);
    s += im_.sign() < 0 ? " - " : " + ";
    APReal iabs = apery8::abs(im_);
    s += iabs.to_string(out_digits) + "*i";
    return s;
}

namespace {

// (5/2) sum_{n>=1} (-1)^{n-1} / (n^3 C(2n,n)); successive-term ratio tends
// to -1/4, so roughly 1.7 terms per digit.
APReal zeta3_hjortnaes(long digits) {
    long work = digits + kGuardDigits;
    long terms = static_cast<long>(static_cast<double>(work) * 1.67) + 12;
    BigRat sum = 0;
    for (long n = 1; n <= terms; ++n) {
        BigRat term = make_rat(BigInt(1), pow_int(BigInt(n), 3) *
                                              binomial(static_cast<unsigned long>(2 * n),
                                                       static_cast<unsigned long>(n)));
        sum += (n % 2 == 1) ? term : BigRat(-term);
    }
    return APReal(BigRat(sum * make_rat(5, 2)), digits);
}

// (1/2) sum_{n>=1} (-1)^{n-1} (205n^2 - 160n + 32) / (n^5 C(2n,n)^5);
// term ratio tends to -2^{-10}, about 3 digits per term.
APReal zeta3_amdeberhan_zeilberger(long digits) {
    long work = digits + kGuardDigits;
    long terms = work / 3 + 8;
    BigRat sum = 0;
    for (long n = 1; n <= terms; ++n) {
        BigInt central = binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
        BigRat term = make_rat(BigInt(205 * n * n - 160 * n + 32),
                               pow_int(BigInt(n), 5) * pow_int(central, 5));
        sum += (n % 2 == 1) ? term : BigRat(-term);
    }
    return APReal(BigRat(sum * make_rat(1, 2)), digits);
}

} // namespace

APReal const_zeta3(long prec) {
    APReal a = zeta3_hjortnaes(prec);
    APReal b = zeta3_amdeberhan_zeilberger(prec);
    if (!a.agrees_to(b, prec + kGuardDigits / 2))
        throw PrecisionUnreachable("zeta(3): independent series disagree at " +
                                   std::to_string(prec) + " digits");
    return a;
}

} // namespace apery8
