#pragma once

#include <string>

#include "rational.hpp"

namespace hermeis {

// Truncated p-adic integer: a residue mod p^j with explicit precision j.
// Arithmetic between operands with the same p truncates to the minimum
// precision; precision is never upgraded silently.
class PadicInt {
public:
    PadicInt() = default;
    PadicInt(long p, unsigned j, const Integer& value);
    PadicInt(long p, unsigned j, long value);

    static PadicInt from_rational(const Rational& q, long p, unsigned j);

    long prime() const { return p_; }
    unsigned precision() const { return j_; }
    const Integer& residue() const { return r_; }
    Integer modulus() const;

    bool is_zero() const { return r_ == 0; }
    bool is_unit() const;

    PadicInt truncated(unsigned j) const;
    PadicInt inverse() const;
    PadicInt pow(long e) const;

    PadicInt operator-() const;
    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
    friend bool operator==(const PadicInt& a, const PadicInt& b);
    friend bool operator!=(const PadicInt& a, const PadicInt& b) { return !(a == b); }

    std::string str() const;

private:
    long p_ = 0;
    unsigned j_ = 0;
    Integer r_;

    static void check_compatible(const PadicInt& a, const PadicInt& b);
};

// values a and b agree mod p^min(ja, jb)
bool congruent(const PadicInt& a, const PadicInt& b);

// Square root of a mod p^j for odd p not dividing a.  The branch is pinned
// by the root mod p with least residue in (0, p/2); the Hensel lift of that
// root is unique.  Throws NoSquareRoot when a is a non-residue mod p.
PadicInt hensel_sqrt(const Integer& a, long p, unsigned j);

} // namespace hermeis
