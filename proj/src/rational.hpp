#pragma once

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace hermeis {

// Exact rationals are GMP's mpq_class; values are always kept canonical
// (gcd(|num|, den) = 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        raise(ErrorCode::InvalidArgument, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        raise(ErrorCode::InvalidArgument, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num" or "num/den" in base 10.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        raise(ErrorCode::MalformedInput, "bad rational literal: '" + text + "'");
    if (q.get_den() == 0)
        raise(ErrorCode::MalformedInput, "zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

// q^e for integer e; e < 0 inverts (q must be nonzero).
inline Rational rational_pow(const Rational& q, long e) {
    if (e == 0)
        return Rational(1);
    if (q == 0 && e < 0)
        raise(ErrorCode::ZeroArgument, "0 raised to a negative power");
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), ae);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), ae);
    if (e < 0)
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    r.canonicalize();
    return r;
}

inline Integer integer_pow(long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 1, 1); // r = 1
    Integer b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

} // namespace hermeis
