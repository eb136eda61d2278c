#ifndef APERY8_BIGRAT_HPP
#define APERY8_BIGRAT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "apery8/errors.hpp"

namespace apery8 {

// Exact scalar types. GMP keeps mpq_class canonical (lowest terms, positive
// denominator) through arithmetic; constructors from raw pairs must
// canonicalize explicitly, which make_rat below takes care of.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(BigInt num, BigInt den) {
    BigRat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline BigRat make_rat(long num, long den) {
    return make_rat(BigInt(num), BigInt(den));
}

inline const BigInt& numerator(const BigRat& q) { return q.get_num(); }
inline const BigInt& denominator(const BigRat& q) { return q.get_den(); }
inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact quotient; throws IntegralityError if b does not divide a.
inline BigInt div_exact(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw IntegralityError("non-exact division: " + a.get_str() + " / " + b.get_str());
    return q;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRat& q) { return q.get_str(); }

} // namespace apery8

#endif
