#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "padic.hpp"

namespace hermeis {

class CMField;

// Element a + b*sqrt(delta) of the imaginary quadratic field K = Q(sqrt(delta)).
// Elements carry delta so arithmetic can check field compatibility.
class CMElement {
public:
    CMElement() = default;
    CMElement(Rational a, Rational b, long delta)
        : a_(std::move(a)), b_(std::move(b)), delta_(delta) {}

    static CMElement from_rational(const Rational& a, long delta) {
        return CMElement(a, Rational(0), delta);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long delta() const { return delta_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    CMElement conj() const { return CMElement(a_, -b_, delta_); }
    Rational norm() const { return a_ * a_ - Rational(delta_) * b_ * b_; }
    Rational trace() const { return 2 * a_; }

    CMElement inverse() const;
    CMElement pow(long e) const;

    CMElement operator-() const { return CMElement(-a_, -b_, delta_); }
    friend CMElement operator+(const CMElement& x, const CMElement& y);
    friend CMElement operator-(const CMElement& x, const CMElement& y);
    friend CMElement operator*(const CMElement& x, const CMElement& y);
    friend CMElement operator*(const Rational& c, const CMElement& x);
    friend bool operator==(const CMElement& x, const CMElement& y);
    friend bool operator!=(const CMElement& x, const CMElement& y) { return !(x == y); }

    // total order used for canonical output (a first, then b)
    friend bool operator<(const CMElement& x, const CMElement& y);

    std::string str() const;

private:
    Rational a_;
    Rational b_;
    long delta_ = 0;

    static void check_compatible(const CMElement& x, const CMElement& y);
};

// Weight (k, nu) with nu indexed by the CM type; a single archimedean place
// is supported at runtime so nu holds exactly one entry.
struct Weight {
    int k = 0;
    std::vector<int> nu{0};

    Weight() = default;
    Weight(int k_, int nu0) : k(k_), nu{nu0} {}

    int nu0() const { return nu.at(0); }
};

struct UnitGroup {
    std::vector<CMElement> elements;
    std::size_t order() const { return elements.size(); }
};

// Image of an element of O_K (x) Z_p under the two places above p:
// the pair (iota(x), iota(conj x)).
struct PadicPair {
    PadicInt at_sigma;
    PadicInt at_sigma_bar;

    PadicPair() = default;
    PadicPair(PadicInt s, PadicInt sbar)
        : at_sigma(std::move(s)), at_sigma_bar(std::move(sbar)) {}

    bool is_unit() const { return at_sigma.is_unit() && at_sigma_bar.is_unit(); }
    PadicPair inverse() const { return {at_sigma.inverse(), at_sigma_bar.inverse()}; }
    PadicInt norm() const { return at_sigma * at_sigma_bar; }

    friend PadicPair operator*(const PadicPair& x, const PadicPair& y) {
        return {x.at_sigma * y.at_sigma, x.at_sigma_bar * y.at_sigma_bar};
    }
};

// K = Q(sqrt(delta)) together with an odd prime p that splits in K.
// The split condition is delta being a nonzero quadratic residue mod p.
class CMField {
public:
    CMField(long delta, long p);

    long delta() const { return delta_; }
    long prime() const { return p_; }

    CMElement element(const Rational& a, const Rational& b) const {
        return CMElement(a, b, delta_);
    }
    CMElement rational(const Rational& a) const { return CMElement::from_rational(a, delta_); }
    CMElement rational(long a) const { return rational(Rational(a)); }
    CMElement sqrt_delta() const { return CMElement(Rational(0), Rational(1), delta_); }
    CMElement one() const { return rational(1); }
    CMElement zero() const { return rational(0); }

    // true when x lies in the maximal order O_K
    bool is_integral(const CMElement& x) const;

    // Cached square root of delta mod p^j pinned by the canonical branch.
    PadicInt canonical_root(unsigned j) const;

    PadicInt iota(const CMElement& x, unsigned j) const;
    PadicPair iota_pair(const CMElement& x, unsigned j) const;

    const UnitGroup& units() const { return units_; }

private:
    long delta_;
    long p_;
    UnitGroup units_;
    mutable std::map<unsigned, PadicInt> root_cache_;
    mutable std::mutex root_mutex_;

    void compute_units();
};

// The weight character b -> b^(k+2*nu) * N(b)^(-nu), an exact element of K.
CMElement norm_kv(const CMElement& b, const Weight& w);

// The same character through the places above p: (u, v) -> u^(k+nu) * v^(-nu).
PadicInt norm_kv(const PadicPair& b, const Weight& w);

// Norm from K to E = Q.
inline Rational norm_KE(const CMElement& x) { return x.norm(); }

long legendre_symbol(long a, long p);
bool is_prime_long(long n);
bool is_squarefree_long(long n);

} // namespace hermeis
