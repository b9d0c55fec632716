#pragma once

#include <vector>

#include "cmfield.hpp"

namespace hermeis {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}
    Matrix(int rows, int cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != static_cast<std::size_t>(rows_) * cols_)
            raise(ErrorCode::InvalidArgument, "matrix entry count mismatch");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<T>& entries() const { return e_; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> e_;
};

using KMatrix = Matrix<CMElement>;
using PMatrix = Matrix<PadicInt>;
using QMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> matmul(const Matrix<T>& x, const Matrix<T>& y, const T& zero) {
    if (x.cols() != y.rows())
        raise(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    Matrix<T> r(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i) {
        for (int j = 0; j < y.cols(); ++j) {
            T acc = zero;
            for (int k = 0; k < x.cols(); ++k)
                acc = acc + x.at(i, k) * y.at(k, j);
            r.at(i, j) = acc;
        }
    }
    return r;
}

// Determinant by cofactor expansion; intended for the small sizes that occur here.
template <typename T>
T cofactor_det(const Matrix<T>& m, const T& zero, const T& one) {
    if (m.rows() != m.cols())
        raise(ErrorCode::InvalidArgument, "determinant of non-square matrix");
    int n = m.rows();
    if (n == 0)
        return one;
    if (n == 1)
        return m.at(0, 0);
    T acc = zero;
    bool neg = false;
    for (int k = 0; k < n; ++k) {
        Matrix<T> minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k)
                    continue;
                minor.at(i - 1, cj++) = m.at(i, j);
            }
        }
        T term = m.at(0, k) * cofactor_det(minor, zero, one);
        acc = neg ? acc - term : acc + term;
        neg = !neg;
    }
    return acc;
}

KMatrix kmatrix_identity(int n, const CMField& field);
CMElement kmatrix_det(const KMatrix& m, const CMField& field);
KMatrix kmatrix_inverse(const KMatrix& m, const CMField& field);
KMatrix kmatrix_conj_transpose(const KMatrix& m);
KMatrix kmatrix_scale(const CMElement& c, const KMatrix& m);

PMatrix pmatrix_identity(int n, long p, unsigned j);
PadicInt pmatrix_det(const PMatrix& m);
PMatrix pmatrix_inverse(const PMatrix& m);
PMatrix pmatrix_scale(const PadicInt& c, const PMatrix& m);

} // namespace hermeis
