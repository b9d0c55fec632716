#include "hermitian.hpp"

#include <algorithm>
#include <functional>

namespace hermeis {

HermitianMatrix::HermitianMatrix(KMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols())
        raise(ErrorCode::InvalidArgument, "Hermitian matrix must be square");
    for (int i = 0; i < m_.rows(); ++i) {
        if (m_.at(i, i).b() != 0)
            raise(ErrorCode::InvalidArgument, "Hermitian diagonal must be rational");
        for (int j = i + 1; j < m_.cols(); ++j) {
            if (m_.at(j, i) != m_.at(i, j).conj())
                raise(ErrorCode::InvalidArgument, "matrix is not Hermitian");
        }
    }
}

Rational HermitianMatrix::trace() const {
    Rational t(0);
    for (int i = 0; i < size(); ++i)
        t += m_.at(i, i).a();
    return t;
}

Rational HermitianMatrix::leading_minor(int j, const CMField& field) const {
    if (j < 1 || j > size())
        raise(ErrorCode::IndexOutOfRange, "leading minor index out of range");
    KMatrix sub(j, j);
    for (int r = 0; r < j; ++r)
        for (int c = 0; c < j; ++c)
            sub.at(r, c) = m_.at(r, c);
    CMElement d = kmatrix_det(sub, field);
    if (d.b() != 0)
        raise(ErrorCode::InternalError, "Hermitian minor came out non-real");
    return d.a();
}

bool HermitianMatrix::is_positive_definite(const CMField& field) const {
    for (int j = 1; j <= size(); ++j) {
        if (leading_minor(j, field) <= 0)
            return false;
    }
    return true;
}

HermitianMatrix HermitianMatrix::scaled(const Rational& c) const {
    KMatrix r(size(), size());
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            r.at(i, j) = c * m_.at(i, j);
    return HermitianMatrix(std::move(r));
}

std::vector<Rational> HermitianMatrix::canonical_key() const {
    std::vector<Rational> key;
    int n = size();
    key.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        key.push_back(m_.at(i, i).a());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            key.push_back(m_.at(i, j).a());
            key.push_back(m_.at(i, j).b());
        }
    }
    return key;
}

namespace {

int compare_keys(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    if (x.size() != y.size())
        return x.size() < y.size() ? -1 : 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        int c = cmp(x[i], y[i]);
        if (c != 0)
            return c;
    }
    return 0;
}

} // namespace

bool beta_lex_less(const HermitianMatrix& x, const HermitianMatrix& y) {
    return compare_keys(x.canonical_key(), y.canonical_key()) < 0;
}

bool beta_trace_less(const HermitianMatrix& x, const HermitianMatrix& y) {
    int c = cmp(x.trace(), y.trace());
    if (c != 0)
        return c < 0;
    return beta_lex_less(x, y);
}

std::vector<CMElement> lattice_elements_norm_below(const Rational& bound, long scale,
                                                   const CMField& field) {
    std::vector<CMElement> out;
    if (bound <= 0)
        return out;
    long delta = field.delta();
    long abs_delta = -delta;
    long dm = ((delta % 4) + 4) % 4;
    // c = (x + y*sqrt(delta))/den with x == y mod 2 when den = 2*scale
    long den = (dm == 1) ? 2 * scale : scale;
    // N(c) = (x^2 + |delta| y^2)/den^2 < bound
    Rational cap = bound * Rational(den) * Rational(den);
    Integer cap_floor(cap.get_num() / cap.get_den());
    Integer ymax_z;
    mpz_sqrt(ymax_z.get_mpz_t(), Integer(cap_floor / abs_delta).get_mpz_t());
    long ymax = ymax_z.get_si();
    for (long y = -ymax; y <= ymax; ++y) {
        Rational rem = cap - Rational(abs_delta) * Rational(y) * Rational(y);
        if (rem <= 0)
            continue;
        Integer rem_floor(rem.get_num() / rem.get_den());
        Integer xmax_z;
        mpz_sqrt(xmax_z.get_mpz_t(), rem_floor.get_mpz_t());
        long xmax = xmax_z.get_si();
        for (long x = -xmax; x <= xmax; ++x) {
            if (dm == 1 && ((x - y) % 2 != 0))
                continue;
            if (Rational(x) * Rational(x) >= rem)
                continue;
            out.push_back(field.element(make_rational(x, den), make_rational(y, den)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void fill_offdiag(const std::vector<std::pair<int, int>>& slots,
                  const std::vector<std::vector<CMElement>>& candidates, std::size_t pos,
                  KMatrix& work, const CMField& field,
                  const std::function<void(const KMatrix&)>& sink) {
    if (pos == slots.size()) {
        sink(work);
        return;
    }
    auto [i, j] = slots[pos];
    for (const auto& c : candidates[pos]) {
        work.at(i, j) = c;
        fill_offdiag(slots, candidates, pos + 1, work, field, sink);
    }
}

} // namespace

std::vector<HermitianMatrix> enumerate_positive(int n, long bound, long scale,
                                                const CMField& field) {
    if (bound < 1)
        raise(ErrorCode::InvalidArgument, "trace bound must be >= 1");
    if (n < 1 || scale < 1)
        raise(ErrorCode::InvalidArgument, "enumeration needs n >= 1 and scale >= 1");

    std::vector<HermitianMatrix> out;
    // diagonals k_i/scale with k_i >= 1 and sum k_i <= bound*scale
    long diag_budget = bound * scale;
    std::vector<long> diag(static_cast<std::size_t>(n));

    std::function<void(int, long)> choose_diag = [&](int idx, long used) {
        if (idx == n) {
            std::vector<Rational> d(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                d[static_cast<std::size_t>(i)] =
                    make_rational(diag[static_cast<std::size_t>(i)], scale);

            std::vector<std::pair<int, int>> slots;
            std::vector<std::vector<CMElement>> candidates;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    slots.emplace_back(i, j);
                    candidates.push_back(lattice_elements_norm_below(
                        d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(j)], scale,
                        field));
                }
            }

            KMatrix work(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    work.at(i, j) = field.zero();
            for (int i = 0; i < n; ++i)
                work.at(i, i) = field.element(d[static_cast<std::size_t>(i)], Rational(0));

            fill_offdiag(slots, candidates, 0, work, field, [&](const KMatrix& filled) {
                KMatrix full = filled;
                for (const auto& [i, j] : slots)
                    full.at(j, i) = full.at(i, j).conj();
                HermitianMatrix beta(full);
                if (beta.is_positive_definite(field))
                    out.push_back(beta);
            });
            return;
        }
        for (long k = 1; used + k + (n - idx - 1) <= diag_budget; ++k) {
            diag[static_cast<std::size_t>(idx)] = k;
            choose_diag(idx + 1, used + k);
        }
    };
    choose_diag(0, 0);

    std::sort(out.begin(), out.end(), beta_lex_less);
    return out;
}

std::vector<KMatrix> enumerate_offdiag(const HermitianMatrix& a11, const HermitianMatrix& a22,
                                       long scale, const CMField& field) {
    if (!a11.is_positive_definite(field) || !a22.is_positive_definite(field))
        raise(ErrorCode::NotPositive, "both blocks must be positive definite");
    int m = a11.size();
    if (a22.size() != m)
        raise(ErrorCode::InvalidArgument, "blocks of unequal size");

    std::vector<std::pair<int, int>> slots;
    std::vector<std::vector<CMElement>> candidates;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            slots.emplace_back(i, j);
            // entry (i, j) of A21 sits in the 2 x 2 principal submatrix with
            // diagonal (A11[j][j], A22[i][i])
            candidates.push_back(lattice_elements_norm_below(
                a11.at(j, j).a() * a22.at(i, i).a(), scale, field));
        }
    }

    std::vector<KMatrix> out;
    KMatrix work(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            work.at(i, j) = field.zero();
    fill_offdiag(slots, candidates, 0, work, field, [&](const KMatrix& a21) {
        HermitianMatrix beta = assemble_blocks(a11, a22, a21);
        if (beta.is_positive_definite(field))
            out.push_back(a21);
    });

    std::sort(out.begin(), out.end(), [](const KMatrix& x, const KMatrix& y) {
        for (std::size_t i = 0; i < x.entries().size(); ++i) {
            if (x.entries()[i] != y.entries()[i])
                return x.entries()[i] < y.entries()[i];
        }
        return false;
    });
    return out;
}

HermitianMatrix assemble_blocks(const HermitianMatrix& a11, const HermitianMatrix& a22,
                                const KMatrix& a21) {
    int m = a11.size();
    if (a22.size() != m || a21.rows() != m || a21.cols() != m)
        raise(ErrorCode::InvalidArgument, "block sizes mismatch");
    int n = 2 * m;
    KMatrix full(n, n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            full.at(i, j) = a11.at(i, j);
            full.at(m + i, m + j) = a22.at(i, j);
            full.at(m + i, j) = a21.at(i, j);
            full.at(j, m + i) = a21.at(i, j).conj();
        }
    }
    return HermitianMatrix(std::move(full));
}

BlockSplit block_split(const HermitianMatrix& beta, int m) {
    if (beta.size() != 2 * m)
        raise(ErrorCode::OddSize, "block split needs size 2m");
    KMatrix a11(m, m), a22(m, m), a21(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            a11.at(i, j) = beta.at(i, j);
            a22.at(i, j) = beta.at(m + i, m + j);
            a21.at(i, j) = beta.at(m + i, j);
        }
    }
    BlockSplit split;
    split.m = m;
    split.a11 = HermitianMatrix(std::move(a11));
    split.a22 = HermitianMatrix(std::move(a22));
    split.a21 = std::move(a21);
    return split;
}

HermitianMatrix swap_block_indices(const HermitianMatrix& beta) {
    int n = beta.size();
    if (n % 2 != 0)
        raise(ErrorCode::OddSize, "index swap needs even size");
    int m = n / 2;
    KMatrix r(n, n);
    auto perm = [&](int i) { return (i + m) % n; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.at(i, j) = beta.at(perm(i), perm(j));
    return HermitianMatrix(std::move(r));
}

PMatrix project_sigma_p(const HermitianMatrix& beta, unsigned j, const CMField& field) {
    int n = beta.size();
    PMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c)
            r.at(i, c) = field.iota(beta.at(i, c), j);
    return r;
}

} // namespace hermeis
