#include "padic.hpp"

namespace hermeis {

namespace {

Integer pow_pj(long p, unsigned j) {
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), j);
    return m;
}

Integer mod_nonneg(const Integer& v, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

PadicInt::PadicInt(long p, unsigned j, const Integer& value) : p_(p), j_(j) {
    if (p < 2 || j < 1)
        raise(ErrorCode::InvalidArgument, "p-adic value needs p >= 2 and precision >= 1");
    r_ = mod_nonneg(value, pow_pj(p, j));
}

PadicInt::PadicInt(long p, unsigned j, long value) : PadicInt(p, j, Integer(value)) {}

Integer PadicInt::modulus() const { return pow_pj(p_, j_); }

bool PadicInt::is_unit() const {
    return mpz_divisible_ui_p(r_.get_mpz_t(), static_cast<unsigned long>(p_)) == 0;
}

PadicInt PadicInt::from_rational(const Rational& q, long p, unsigned j) {
    Integer den = q.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)) != 0)
        raise(ErrorCode::NotPIntegral,
              "denominator of " + q.get_str() + " is divisible by " + std::to_string(p));
    PadicInt num(p, j, Integer(q.get_num()));
    if (den == 1)
        return num;
    return num * PadicInt(p, j, den).inverse();
}

void PadicInt::check_compatible(const PadicInt& a, const PadicInt& b) {
    if (a.p_ != b.p_)
        raise(ErrorCode::InvalidArgument, "mixed primes in p-adic arithmetic");
}

PadicInt PadicInt::truncated(unsigned j) const {
    if (j > j_)
        raise(ErrorCode::InvalidArgument, "cannot raise p-adic precision");
    return PadicInt(p_, j, r_);
}

PadicInt PadicInt::inverse() const {
    if (!is_unit())
        raise(ErrorCode::NotAUnit, "p-adic inverse of a non-unit");
    Integer m = modulus();
    Integer inv;
    mpz_invert(inv.get_mpz_t(), r_.get_mpz_t(), m.get_mpz_t());
    return PadicInt(p_, j_, inv);
}

PadicInt PadicInt::pow(long e) const {
    if (e == 0)
        return PadicInt(p_, j_, 1);
    const PadicInt base = e < 0 ? inverse() : *this;
    Integer m = modulus();
    Integer r;
    Integer ae(e < 0 ? -e : e);
    mpz_powm(r.get_mpz_t(), base.r_.get_mpz_t(), ae.get_mpz_t(), m.get_mpz_t());
    return PadicInt(p_, j_, r);
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, j_, Integer(-r_)); }

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    PadicInt::check_compatible(a, b);
    unsigned j = std::min(a.j_, b.j_);
    return PadicInt(a.p_, j, Integer(a.r_ + b.r_));
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    PadicInt::check_compatible(a, b);
    unsigned j = std::min(a.j_, b.j_);
    return PadicInt(a.p_, j, Integer(a.r_ - b.r_));
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    PadicInt::check_compatible(a, b);
    unsigned j = std::min(a.j_, b.j_);
    return PadicInt(a.p_, j, Integer(a.r_ * b.r_));
}

bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.p_ == b.p_ && a.j_ == b.j_ && a.r_ == b.r_;
}

bool congruent(const PadicInt& a, const PadicInt& b) {
    if (a.prime() != b.prime())
        return false;
    unsigned j = std::min(a.precision(), b.precision());
    return a.truncated(j).residue() == b.truncated(j).residue();
}

std::string PadicInt::str() const {
    return r_.get_str() + " mod " + std::to_string(p_) + "^" + std::to_string(j_);
}

namespace {

// Tonelli-Shanks square root mod an odd prime p; requires legendre(a, p) = 1.
Integer sqrt_mod_p(const Integer& a, long p) {
    Integer pz(p);
    Integer am = a % pz;
    if (am < 0)
        am += pz;

    // p = q * 2^s + 1 with q odd
    Integer q = pz - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

    auto powm = [&](const Integer& base, const Integer& e) {
        Integer r;
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
        return r;
    };

    if (s == 1) // p == 3 mod 4
        return powm(am, (pz + 1) / 4);

    Integer z(2);
    while (mpz_legendre(z.get_mpz_t(), pz.get_mpz_t()) != -1)
        z += 1;

    Integer m(static_cast<long>(s));
    Integer c = powm(z, q);
    Integer t = powm(am, q);
    Integer r = powm(am, (q + 1) / 2);
    while (t != 1) {
        Integer t2 = t;
        long i = 0;
        while (t2 != 1) {
            t2 = (t2 * t2) % pz;
            ++i;
        }
        Integer b = c;
        for (long k = 0; k < m.get_si() - i - 1; ++k)
            b = (b * b) % pz;
        m = i;
        c = (b * b) % pz;
        t = (t * c) % pz;
        r = (r * b) % pz;
    }
    return r;
}

} // namespace

PadicInt hensel_sqrt(const Integer& a, long p, unsigned j) {
    if (p < 3 || p % 2 == 0)
        raise(ErrorCode::InvalidArgument, "hensel_sqrt needs an odd prime");
    Integer pz(p);
    if (mpz_divisible_p(a.get_mpz_t(), pz.get_mpz_t()))
        raise(ErrorCode::InvalidArgument, "hensel_sqrt argument divisible by p");
    if (mpz_legendre(a.get_mpz_t(), pz.get_mpz_t()) != 1)
        raise(ErrorCode::NoSquareRoot, a.get_str() + " is a quadratic non-residue mod " + std::to_string(p));

    Integer r = sqrt_mod_p(a, p);
    if (2 * r > pz)
        r = pz - r;

    // Newton lifting: precision doubles each round.
    unsigned prec = 1;
    Integer mod = pz;
    while (prec < j) {
        prec = std::min(2 * prec, j);
        Integer m;
        mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), prec);
        Integer two_r_inv;
        Integer two_r = (2 * r) % m;
        mpz_invert(two_r_inv.get_mpz_t(), two_r.get_mpz_t(), m.get_mpz_t());
        Integer am = a % m;
        if (am < 0)
            am += m;
        r = (r - (((r * r - am) % m) * two_r_inv) % m) % m;
        if (r < 0)
            r += m;
        mod = m;
    }
    return PadicInt(p, j, r);
}

} // namespace hermeis
