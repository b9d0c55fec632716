#include "reps.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hermeis {

HighestWeight::HighestWeight(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            raise(ErrorCode::InvalidArgument, "highest weight parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            raise(ErrorCode::InvalidArgument, "highest weight parts must be non-increasing");
    }
}

bool HighestWeight::is_trivial() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int r) { return r == 0; });
}

int HighestWeight::degree() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int HighestWeight::nonzero_parts() const {
    int count = 0;
    for (int r : parts_)
        if (r > 0)
            ++count;
    return count;
}

std::vector<int> HighestWeight::padded(int l) const {
    if (nonzero_parts() > l)
        raise(ErrorCode::TooManyParts, "weight has more than " + std::to_string(l) + " parts");
    std::vector<int> out(static_cast<std::size_t>(l), 0);
    for (int i = 0; i < l && i < static_cast<int>(parts_.size()); ++i)
        out[static_cast<std::size_t>(i)] = parts_[static_cast<std::size_t>(i)];
    return out;
}

std::vector<int> HighestWeight::exponents(int mu) const {
    std::vector<int> r = padded(mu);
    std::vector<int> e(static_cast<std::size_t>(mu));
    for (int j = 0; j < mu; ++j)
        e[static_cast<std::size_t>(j)] =
            r[static_cast<std::size_t>(j)] - (j + 1 < mu ? r[static_cast<std::size_t>(j) + 1] : 0);
    return e;
}

bool operator==(const HighestWeight& x, const HighestWeight& y) {
    std::size_t n = std::max(x.parts_.size(), y.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int xi = i < x.parts_.size() ? x.parts_[i] : 0;
        int yi = i < y.parts_.size() ? y.parts_[i] : 0;
        if (xi != yi)
            return false;
    }
    return true;
}

bool operator<(const HighestWeight& x, const HighestWeight& y) {
    std::size_t n = std::max(x.parts_.size(), y.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int xi = i < x.parts_.size() ? x.parts_[i] : 0;
        int yi = i < y.parts_.size() ? y.parts_[i] : 0;
        if (xi != yi)
            return xi < yi;
    }
    return false;
}

std::string HighestWeight::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

Integer weyl_dimension(const HighestWeight& lambda, int l) {
    std::vector<int> r = lambda.padded(l);
    Integer num(1), den(1);
    for (int i = 1; i <= l; ++i) {
        for (int j = i + 1; j <= l; ++j) {
            num *= r[static_cast<std::size_t>(i - 1)] - r[static_cast<std::size_t>(j - 1)] + j - i;
            den *= j - i;
        }
    }
    return num / den;
}

Integer monomial_count(int d, int vars) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(vars + d - 1),
                 static_cast<unsigned long>(d));
    return c;
}

void HomogPolynomial::add_term(const std::vector<int>& exponents, const Rational& coeff) {
    if (coeff == 0)
        return;
    if (exponents.size() != static_cast<std::size_t>(rows_) * cols_)
        raise(ErrorCode::InvalidArgument, "exponent matrix shape mismatch");
    int total = std::accumulate(exponents.begin(), exponents.end(), 0);
    if (total != degree_)
        raise(ErrorCode::InvalidArgument, "exponent degree mismatch");
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

HomogPolynomial HomogPolynomial::one(int rows, int cols) {
    HomogPolynomial p(rows, cols, 0);
    p.add_term(std::vector<int>(static_cast<std::size_t>(rows) * cols, 0), Rational(1));
    return p;
}

HomogPolynomial HomogPolynomial::variable(int rows, int cols, int i, int j) {
    HomogPolynomial p(rows, cols, 1);
    std::vector<int> e(static_cast<std::size_t>(rows) * cols, 0);
    e[static_cast<std::size_t>(i) * cols + j] = 1;
    p.add_term(e, Rational(1));
    return p;
}

HomogPolynomial HomogPolynomial::operator*(const HomogPolynomial& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        raise(ErrorCode::InvalidArgument, "polynomial shape mismatch");
    HomogPolynomial out(rows_, cols_, degree_ + other.degree_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            std::vector<int> e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

HomogPolynomial HomogPolynomial::operator+(const HomogPolynomial& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || degree_ != other.degree_)
        raise(ErrorCode::InvalidArgument, "polynomial shape mismatch in addition");
    HomogPolynomial out = *this;
    for (const auto& [e, c] : other.terms_)
        out.add_term(e, c);
    return out;
}

HomogPolynomial HomogPolynomial::operator-(const HomogPolynomial& other) const {
    return *this + other.scaled(Rational(-1));
}

HomogPolynomial HomogPolynomial::scaled(const Rational& c) const {
    HomogPolynomial out(rows_, cols_, degree_);
    if (c == 0)
        return out;
    for (const auto& [e, coeff] : terms_)
        out.add_term(e, c * coeff);
    return out;
}

HomogPolynomial HomogPolynomial::pow(int e) const {
    if (e < 0)
        raise(ErrorCode::InvalidArgument, "negative polynomial power");
    HomogPolynomial acc = HomogPolynomial::one(rows_, cols_);
    for (int i = 0; i < e; ++i)
        acc = acc * *this;
    return acc;
}

bool operator==(const HomogPolynomial& x, const HomogPolynomial& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.degree_ == y.degree_ &&
           x.terms_ == y.terms_;
}

std::vector<std::vector<int>> monomial_basis(int d, int rows, int cols) {
    if (d < 0)
        raise(ErrorCode::InvalidArgument, "negative degree");
    int vars = rows * cols;
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(vars), 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == vars - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[static_cast<std::size_t>(pos)] = e;
            rec(pos + 1, remaining - e);
        }
    };
    if (vars == 0) {
        if (d == 0)
            out.push_back({});
        return out;
    }
    rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

HomogPolynomial tau_action(const HomogPolynomial& g, const QMatrix& alpha, const QMatrix& beta) {
    int r = g.rows(), s = g.cols();
    if (alpha.rows() != r || alpha.cols() != r || beta.rows() != s || beta.cols() != s)
        raise(ErrorCode::InvalidArgument, "substitution matrices do not match shape");

    // linear form for each variable: z_ij -> sum_kl alpha[k][i] beta[l][j] z_kl
    std::vector<std::vector<std::pair<std::size_t, Rational>>> forms(
        static_cast<std::size_t>(r) * s);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < s; ++j) {
            auto& form = forms[static_cast<std::size_t>(i) * s + j];
            for (int k = 0; k < r; ++k) {
                for (int l = 0; l < s; ++l) {
                    Rational c = alpha.at(k, i) * beta.at(l, j);
                    if (c != 0)
                        form.emplace_back(static_cast<std::size_t>(k) * s + l, c);
                }
            }
        }
    }

    HomogPolynomial out(r, s, g.degree());
    for (const auto& [exp, coeff] : g.terms()) {
        // expand the product of linear forms for this monomial, collecting terms
        std::map<std::vector<int>, Rational> acc;
        acc.emplace(std::vector<int>(static_cast<std::size_t>(r) * s, 0), coeff);
        for (std::size_t v = 0; v < exp.size(); ++v) {
            for (int rep = 0; rep < exp[v]; ++rep) {
                std::map<std::vector<int>, Rational> next;
                for (const auto& [e, c] : acc) {
                    for (const auto& [var, fc] : forms[v]) {
                        std::vector<int> e2 = e;
                        ++e2[var];
                        auto [it, inserted] = next.emplace(std::move(e2), c * fc);
                        if (!inserted)
                            it->second += c * fc;
                    }
                }
                acc = std::move(next);
            }
        }
        for (const auto& [e, c] : acc)
            out.add_term(e, c);
    }
    return out;
}

HomogPolynomial leading_minor_poly(int j, int rows, int cols) {
    if (j < 0 || j > std::min(rows, cols))
        raise(ErrorCode::IndexOutOfRange, "minor size out of range");
    if (j == 0)
        return HomogPolynomial::one(rows, cols);
    // Leibniz expansion over permutations of {0..j-1}
    std::vector<int> perm(static_cast<std::size_t>(j));
    std::iota(perm.begin(), perm.end(), 0);
    HomogPolynomial out(rows, cols, j);
    do {
        int inversions = 0;
        for (int a = 0; a < j; ++a)
            for (int b = a + 1; b < j; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)])
                    ++inversions;
        std::vector<int> e(static_cast<std::size_t>(rows) * cols, 0);
        for (int i = 0; i < j; ++i)
            ++e[static_cast<std::size_t>(i) * cols + perm[static_cast<std::size_t>(i)]];
        out.add_term(e, Rational(inversions % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

HomogPolynomial highest_weight_vector(const HighestWeight& lambda, int rows, int cols) {
    int mu = std::min(rows, cols);
    if (lambda.nonzero_parts() > mu)
        raise(ErrorCode::TooManyParts,
              "weight " + lambda.str() + " does not fit " + std::to_string(rows) + "x" +
                  std::to_string(cols));
    std::vector<int> e = lambda.exponents(mu);
    HomogPolynomial out = HomogPolynomial::one(rows, cols);
    for (int j = 1; j <= mu; ++j) {
        int ej = e[static_cast<std::size_t>(j - 1)];
        if (ej > 0)
            out = out * leading_minor_poly(j, rows, cols).pow(ej);
    }
    return out;
}

CMElement phi_kappa_eval(const HighestWeight& lambda, const KMatrix& a21, const CMField& field) {
    HomogPolynomial p = highest_weight_vector(lambda, a21.rows(), a21.cols());
    return p.eval(a21, field.zero(),
                  [&](const Rational& c) { return field.rational(c); });
}

BranchingTable decompose_tau(int d, int q, int s) {
    if (d < 0 || q < 1 || s < 1)
        raise(ErrorCode::InvalidArgument, "decompose_tau needs d >= 0 and q, s >= 1");
    BranchingTable table;
    table.kind = BranchingTable::Kind::TensorFactors;
    table.d = d;
    table.q = q;
    table.s = s;
    int mu = std::min(q, s);

    // partitions of d into at most mu parts, descending
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            HighestWeight w(cur);
            table.pairs.emplace_back(HighestWeight(w.padded(q)), HighestWeight(w.padded(s)));
            return;
        }
        if (static_cast<int>(cur.size()) == mu)
            return;
        for (int part = std::min(remaining, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(d, d);
    std::sort(table.pairs.begin(), table.pairs.end(),
              [](const auto& x, const auto& y) { return y.first < x.first; });
    return table;
}

BranchingTable restrict_decompose(int d, int r, int s) {
    if (d < 0 || r < 1 || s < 1)
        raise(ErrorCode::InvalidArgument, "restrict_decompose needs d >= 0 and r, s >= 1");
    BranchingTable table;
    table.kind = BranchingTable::Kind::Restriction;
    table.d = d;
    table.q = r;
    table.s = s;
    for (int d1 = 0; d1 <= d; ++d1)
        for (int d2 = 0; d1 + d2 <= d; ++d2)
            for (int d3 = 0; d1 + d2 + d3 <= d; ++d3)
                table.splits.push_back({d1, d2, d3, d - d1 - d2 - d3});
    return table;
}

Integer branching_dimension_sum(const BranchingTable& table) {
    Integer sum(0);
    if (table.kind == BranchingTable::Kind::TensorFactors) {
        for (const auto& [left, right] : table.pairs)
            sum += weyl_dimension(left, table.q) * weyl_dimension(right, table.s);
    } else {
        int r = table.q, s = table.s;
        for (const auto& split : table.splits) {
            sum += monomial_count(split[0], r * r) * monomial_count(split[1], s * s) *
                   monomial_count(split[2], r * s) * monomial_count(split[3], s * r);
        }
    }
    return sum;
}

Integer branching_dimension_expected(const BranchingTable& table) {
    if (table.kind == BranchingTable::Kind::TensorFactors)
        return monomial_count(table.d, table.q * table.s);
    int n = table.q + table.s;
    return monomial_count(table.d, n * n);
}

} // namespace hermeis
