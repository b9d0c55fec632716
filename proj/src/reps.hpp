#pragma once

#include <array>
#include <map>

#include "matrix.hpp"

namespace hermeis {

// Non-increasing tuple of nonnegative integers labelling an irreducible
// polynomial representation of GL_l.
class HighestWeight {
public:
    HighestWeight() = default;
    explicit HighestWeight(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool is_trivial() const;
    int degree() const;
    int nonzero_parts() const;

    // parts padded (or trimmed, dropping only zeros) to length l
    std::vector<int> padded(int l) const;

    // e_j = r_j - r_{j+1} for j < mu, e_mu = r_mu
    std::vector<int> exponents(int mu) const;

    friend bool operator==(const HighestWeight& x, const HighestWeight& y);
    friend bool operator<(const HighestWeight& x, const HighestWeight& y);

    std::string str() const;

private:
    std::vector<int> parts_;
};

// dim of the irreducible GL_l representation with highest weight lambda
Integer weyl_dimension(const HighestWeight& lambda, int l);

// number of monomials of degree d in `vars` variables: C(vars + d - 1, d)
Integer monomial_count(int d, int vars);

// Homogeneous polynomial on r x s matrix entries with exact rational
// coefficients, stored sparsely on exponent matrices (row-major).
class HomogPolynomial {
public:
    HomogPolynomial() = default;
    HomogPolynomial(int rows, int cols, int degree)
        : rows_(rows), cols_(cols), degree_(degree) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int degree() const { return degree_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exponents, const Rational& coeff);
    bool is_zero() const { return terms_.empty(); }

    static HomogPolynomial one(int rows, int cols);
    static HomogPolynomial variable(int rows, int cols, int i, int j);

    HomogPolynomial operator*(const HomogPolynomial& other) const;
    HomogPolynomial operator+(const HomogPolynomial& other) const;
    HomogPolynomial operator-(const HomogPolynomial& other) const;
    HomogPolynomial scaled(const Rational& c) const;
    HomogPolynomial pow(int e) const;

    friend bool operator==(const HomogPolynomial& x, const HomogPolynomial& y);

    // evaluation over any commutative ring with + and *; `from_rational`
    // embeds the coefficients
    template <typename T, typename FromRational>
    T eval(const Matrix<T>& point, const T& zero, FromRational from_rational) const {
        if (point.rows() != rows_ || point.cols() != cols_)
            raise(ErrorCode::InvalidArgument, "evaluation point shape mismatch");
        T acc = zero;
        for (const auto& [exp, coeff] : terms_) {
            T term = from_rational(coeff);
            for (int i = 0; i < rows_; ++i) {
                for (int j = 0; j < cols_; ++j) {
                    int e = exp[static_cast<std::size_t>(i) * cols_ + j];
                    for (int k = 0; k < e; ++k)
                        term = term * point.at(i, j);
                }
            }
            acc = acc + term;
        }
        return acc;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    int degree_ = 0;
    std::map<std::vector<int>, Rational> terms_;
};

// all r x s exponent matrices with entry sum d, in lexicographic order
std::vector<std::vector<int>> monomial_basis(int d, int rows, int cols);

// g(z) -> g(alpha^t z beta), expanded exactly
HomogPolynomial tau_action(const HomogPolynomial& g, const QMatrix& alpha, const QMatrix& beta);

// determinant of the upper-left j x j submatrix as a polynomial
HomogPolynomial leading_minor_poly(int j, int rows, int cols);

// product of powers of leading minors attached to lambda; monic by construction
HomogPolynomial highest_weight_vector(const HighestWeight& lambda, int rows, int cols);

// highest weight vector evaluated at a K matrix
CMElement phi_kappa_eval(const HighestWeight& lambda, const KMatrix& a21, const CMField& field);

struct BranchingTable {
    enum class Kind { TensorFactors, Restriction };
    Kind kind = Kind::TensorFactors;
    int d = 0, q = 0, s = 0;
    // tensor-factor decomposition: pairs of highest weights
    std::vector<std::pair<HighestWeight, HighestWeight>> pairs;
    // restriction: degree splits (d1, d2, d3, d4)
    std::vector<std::array<int, 4>> splits;
};

// irreducible constituents of the degree-d polynomial representation on
// q x s matrices: one pair per partition of d into at most min(q, s) parts
BranchingTable decompose_tau(int d, int q, int s);

// graded pieces of the restriction to block-diagonal pairs: weak
// 4-compositions of d
BranchingTable restrict_decompose(int d, int r, int s);

// dimension bookkeeping for the two tables
Integer branching_dimension_sum(const BranchingTable& table);
Integer branching_dimension_expected(const BranchingTable& table);

} // namespace hermeis
