#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace schurw {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) as long as every value entering arithmetic is
// canonical, so construction helpers below always canonicalize.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    Integer num, den;
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    if (exp < 0) {
        if (num == 0) throw std::domain_error("negative power of zero");
        std::swap(num, den);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer int_pow(long base, unsigned long exp) {
    Integer b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline int parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace schurw
