#include "cmfield.hpp"

#include <algorithm>

namespace hermeis {

void CMElement::check_compatible(const CMElement& x, const CMElement& y) {
    if (x.delta_ != y.delta_)
        raise(ErrorCode::InvalidArgument, "elements of different quadratic fields");
}

CMElement CMElement::inverse() const {
    if (is_zero())
        raise(ErrorCode::ZeroArgument, "inverse of zero field element");
    Rational n = norm();
    return CMElement(a_ / n, -b_ / n, delta_);
}

CMElement CMElement::pow(long e) const {
    if (e == 0)
        return CMElement(Rational(1), Rational(0), delta_);
    CMElement base = e < 0 ? inverse() : *this;
    long ae = e < 0 ? -e : e;
    CMElement acc(Rational(1), Rational(0), delta_);
    while (ae > 0) {
        if (ae & 1)
            acc = acc * base;
        base = base * base;
        ae >>= 1;
    }
    return acc;
}

CMElement operator+(const CMElement& x, const CMElement& y) {
    CMElement::check_compatible(x, y);
    return CMElement(x.a_ + y.a_, x.b_ + y.b_, x.delta_);
}

CMElement operator-(const CMElement& x, const CMElement& y) {
    CMElement::check_compatible(x, y);
    return CMElement(x.a_ - y.a_, x.b_ - y.b_, x.delta_);
}

CMElement operator*(const CMElement& x, const CMElement& y) {
    CMElement::check_compatible(x, y);
    Rational d(x.delta_);
    return CMElement(x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.delta_);
}

CMElement operator*(const Rational& c, const CMElement& x) {
    return CMElement(c * x.a_, c * x.b_, x.delta_);
}

bool operator==(const CMElement& x, const CMElement& y) {
    CMElement::check_compatible(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

bool operator<(const CMElement& x, const CMElement& y) {
    int c = cmp(x.a_, y.a_);
    if (c != 0)
        return c < 0;
    return cmp(x.b_, y.b_) < 0;
}

std::string CMElement::str() const {
    if (b_ == 0)
        return a_.get_str();
    return a_.get_str() + (b_ < 0 ? "" : "+") + b_.get_str() + "*sqrt(" + std::to_string(delta_) + ")";
}

long legendre_symbol(long a, long p) {
    Integer az(a), pz(p);
    return mpz_legendre(az.get_mpz_t(), pz.get_mpz_t());
}

bool is_prime_long(long n) {
    if (n < 2)
        return false;
    Integer nz(n);
    return mpz_probab_prime_p(nz.get_mpz_t(), 40) != 0;
}

bool is_squarefree_long(long n) {
    long m = n < 0 ? -n : n;
    if (m == 0)
        return false;
    for (long d = 2; d * d <= m; ++d) {
        if (m % (d * d) == 0)
            return false;
    }
    return true;
}

CMField::CMField(long delta, long p) : delta_(delta), p_(p) {
    if (delta >= 0)
        raise(ErrorCode::ConfigError, "field.delta: must be negative");
    if (!is_squarefree_long(delta))
        raise(ErrorCode::ConfigError, "field.delta: must be squarefree");
    if (!is_prime_long(p))
        raise(ErrorCode::ConfigError, "field.p: not a prime");
    if (p == 2)
        raise(ErrorCode::ConfigError, "field.p: must be odd");
    if (delta % p == 0)
        raise(ErrorCode::ConfigError, "field.p: prime divides delta");
    if (legendre_symbol(delta, p) != 1)
        raise(ErrorCode::ConfigError, "field.p: prime not split (delta is a non-residue)");
    compute_units();
}

bool CMField::is_integral(const CMElement& x) const {
    long dm = ((delta_ % 4) + 4) % 4;
    if (dm == 1) {
        // O_K = Z[(1+sqrt(delta))/2]: both coordinates in (1/2)Z, same parity of doubles
        Rational ta = 2 * x.a();
        Rational tb = 2 * x.b();
        if (ta.get_den() != 1 || tb.get_den() != 1)
            return false;
        Integer na = ta.get_num(), nb = tb.get_num();
        return ((na - nb) % 2) == 0;
    }
    return x.a().get_den() == 1 && x.b().get_den() == 1;
}

PadicInt CMField::canonical_root(unsigned j) const {
    std::lock_guard<std::mutex> lock(root_mutex_);
    auto it = root_cache_.find(j);
    if (it != root_cache_.end())
        return it->second;
    PadicInt root = hensel_sqrt(Integer(delta_), p_, j);
    root_cache_.emplace(j, root);
    return root;
}

PadicInt CMField::iota(const CMElement& x, unsigned j) const {
    PadicInt pa = PadicInt::from_rational(x.a(), p_, j);
    if (x.b() == 0)
        return pa;
    PadicInt pb = PadicInt::from_rational(x.b(), p_, j);
    return pa + pb * canonical_root(j);
}

PadicPair CMField::iota_pair(const CMElement& x, unsigned j) const {
    return PadicPair(iota(x, j), iota(x.conj(), j));
}

void CMField::compute_units() {
    // Units of O_K solve a^2 - delta*b^2 = 1 in the maximal order; for
    // delta < 0 this forces |a| <= 1 and delta*b^2 >= -1.
    std::vector<CMElement> found;
    std::vector<Rational> coords;
    long dm = ((delta_ % 4) + 4) % 4;
    if (dm == 1) {
        for (long t = -2; t <= 2; ++t)
            coords.push_back(make_rational(t, 2));
    } else {
        for (long t = -1; t <= 1; ++t)
            coords.push_back(Rational(t));
    }
    for (const auto& a : coords) {
        for (const auto& b : coords) {
            CMElement u(a, b, delta_);
            if (!is_integral(u))
                continue;
            if (u.norm() == 1)
                found.push_back(u);
        }
    }
    std::sort(found.begin(), found.end());
    units_.elements = std::move(found);
}

CMElement norm_kv(const CMElement& b, const Weight& w) {
    if (b.is_zero())
        raise(ErrorCode::ZeroArgument, "weight character of zero");
    long nu = w.nu0();
    CMElement power = b.pow(w.k + 2 * nu);
    Rational norm_part = rational_pow(b.norm(), -nu);
    return norm_part * power;
}

PadicInt norm_kv(const PadicPair& b, const Weight& w) {
    long nu = w.nu0();
    return b.at_sigma.pow(w.k + nu) * b.at_sigma_bar.pow(-nu);
}

} // namespace hermeis
