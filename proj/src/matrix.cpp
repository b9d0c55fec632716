#include "matrix.hpp"

namespace hermeis {

KMatrix kmatrix_identity(int n, const CMField& field) {
    KMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = field.rational(i == j ? 1 : 0);
    return m;
}

CMElement kmatrix_det(const KMatrix& m, const CMField& field) {
    return cofactor_det(m, field.zero(), field.one());
}

KMatrix kmatrix_inverse(const KMatrix& m, const CMField& field) {
    CMElement det = kmatrix_det(m, field);
    if (det.is_zero())
        raise(ErrorCode::NotInvertible, "singular matrix over K");
    int n = m.rows();
    CMElement det_inv = det.inverse();
    KMatrix inv(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            KMatrix minor(n - 1, n - 1);
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == j)
                    continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == i)
                        continue;
                    minor.at(mr, mc++) = m.at(r, c);
                }
                ++mr;
            }
            CMElement cof = kmatrix_det(minor, field);
            if ((i + j) % 2 != 0)
                cof = -cof;
            inv.at(i, j) = cof * det_inv;
        }
    }
    return inv;
}

KMatrix kmatrix_conj_transpose(const KMatrix& m) {
    KMatrix r(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(j, i) = m.at(i, j).conj();
    return r;
}

KMatrix kmatrix_scale(const CMElement& c, const KMatrix& m) {
    KMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = c * m.at(i, j);
    return r;
}

PMatrix pmatrix_identity(int n, long p, unsigned j) {
    PMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            m.at(i, k) = PadicInt(p, j, i == k ? 1 : 0);
    return m;
}

namespace {

// Determinant of the integer lift; reducing it mod p^j gives the
// determinant of the residue matrix.
Integer lifted_det(const PMatrix& m) {
    Matrix<Integer> z(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            z.at(i, j) = m.at(i, j).residue();
    return cofactor_det(z, Integer(0), Integer(1));
}

unsigned min_precision(const PMatrix& m) {
    unsigned j = m.at(0, 0).precision();
    for (const auto& e : m.entries())
        j = std::min(j, e.precision());
    return j;
}

} // namespace

PadicInt pmatrix_det(const PMatrix& m) {
    if (m.rows() != m.cols())
        raise(ErrorCode::InvalidArgument, "determinant of non-square matrix");
    long p = m.at(0, 0).prime();
    return PadicInt(p, min_precision(m), lifted_det(m));
}

PMatrix pmatrix_inverse(const PMatrix& m) {
    PadicInt det = pmatrix_det(m);
    if (!det.is_unit())
        raise(ErrorCode::NotInvertible, "matrix determinant is not a p-adic unit");
    int n = m.rows();
    long p = det.prime();
    unsigned j = det.precision();
    PadicInt det_inv = det.inverse();
    PMatrix inv(n, n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            PMatrix minor(n - 1, n - 1);
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == k)
                    continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == i)
                        continue;
                    minor.at(mr, mc++) = m.at(r, c);
                }
                ++mr;
            }
            PadicInt cof = n == 1 ? PadicInt(p, j, 1) : pmatrix_det(minor).truncated(j);
            if ((i + k) % 2 != 0)
                cof = -cof;
            inv.at(i, k) = cof * det_inv;
        }
    }
    return inv;
}

PMatrix pmatrix_scale(const PadicInt& c, const PMatrix& m) {
    PMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = c * m.at(i, j);
    return r;
}

} // namespace hermeis
