#pragma once

#include "matrix.hpp"

namespace hermeis {

// Hermitian n x n matrix over K: equal to its own conjugate transpose,
// so diagonal entries are rational.  Entries may be any K elements;
// lattice membership is a property of enumeration, not of the type.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(KMatrix entries);

    int size() const { return m_.rows(); }
    const KMatrix& matrix() const { return m_; }
    const CMElement& at(int i, int j) const { return m_.at(i, j); }

    Rational trace() const;
    Rational det(const CMField& field) const { return leading_minor(size(), field); }

    // Determinant of the upper-left j x j submatrix (1-based j); always rational.
    Rational leading_minor(int j, const CMField& field) const;
    bool is_positive_definite(const CMField& field) const;

    HermitianMatrix scaled(const Rational& c) const;

    // Lexicographic key: diagonal entries, then (a, b) parts of the
    // off-diagonal entries in row-major upper-triangle order.
    std::vector<Rational> canonical_key() const;

    friend bool operator==(const HermitianMatrix& x, const HermitianMatrix& y) {
        return x.m_ == y.m_;
    }
    friend bool operator!=(const HermitianMatrix& x, const HermitianMatrix& y) {
        return !(x == y);
    }

private:
    KMatrix m_;
};

// diagonal-major lexicographic order
bool beta_lex_less(const HermitianMatrix& x, const HermitianMatrix& y);
// trace first, then lexicographic; the serialization order for q-expansion keys
bool beta_trace_less(const HermitianMatrix& x, const HermitianMatrix& y);

struct BetaTraceLess {
    bool operator()(const HermitianMatrix& x, const HermitianMatrix& y) const {
        return beta_trace_less(x, y);
    }
};

struct BlockSplit {
    int m = 0;
    HermitianMatrix a11;
    HermitianMatrix a22;
    KMatrix a21;
};

// All positive definite matrices in the lattice (1/scale)*O_K (diagonal in
// (1/scale)*Z) with trace <= bound, in canonical lexicographic order.
std::vector<HermitianMatrix> enumerate_positive(int n, long bound, long scale,
                                                const CMField& field);

// All lattice elements c with N(c) < bound, canonically ordered.
std::vector<CMElement> lattice_elements_norm_below(const Rational& bound, long scale,
                                                   const CMField& field);

// All off-diagonal blocks A21 such that [[A11, A21*],[A21, A22]] is positive
// definite; finite because positivity bounds every entry norm.
std::vector<KMatrix> enumerate_offdiag(const HermitianMatrix& a11, const HermitianMatrix& a22,
                                       long scale, const CMField& field);

HermitianMatrix assemble_blocks(const HermitianMatrix& a11, const HermitianMatrix& a22,
                                const KMatrix& a21);
BlockSplit block_split(const HermitianMatrix& beta, int m);

// Conjugation by the permutation exchanging the two halves of the index set.
HermitianMatrix swap_block_indices(const HermitianMatrix& beta);

// Entry-wise image under the place of K above p fixed by the CM type;
// the result carries no symmetry constraint.
PMatrix project_sigma_p(const HermitianMatrix& beta, unsigned j, const CMField& field);

} // namespace hermeis
