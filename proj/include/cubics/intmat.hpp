#pragma once

// Dense integer matrices: exact determinants (fraction-free Bareiss
// elimination) and Smith normal form with recorded unimodular transforms.

#include <algorithm>
#include <utility>
#include <vector>

#include "cubics/numeric.hpp"

namespace cubics {

struct IntMat {
    long rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    IntMat(long r, long c, std::vector<Int> entries) : rows(r), cols(c), a(std::move(entries)) {
        if (a.size() != static_cast<size_t>(r) * c) throw std::invalid_argument("IntMat: size mismatch");
    }

    static IntMat identity(long n) {
        IntMat m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_symmetric() const {
        if (rows != cols) return false;
        for (long i = 0; i < rows; ++i)
            for (long j = i + 1; j < cols; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    friend bool operator==(const IntMat&, const IntMat&) = default;
};

inline IntMat mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mul: dimension mismatch");
    IntMat z(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (long j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return z;
}

inline IntMat transpose(const IntMat& m) {
    IntMat t(m.cols, m.rows);
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

inline std::vector<Int> mul_vec(const IntMat& m, const std::vector<Int>& v) {
    if (m.cols != static_cast<long>(v.size())) throw std::invalid_argument("mul_vec: dimension mismatch");
    std::vector<Int> out(m.rows);
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

// Exact determinant; the intermediate divisions of the Bareiss recurrence
// are always exact.
inline Int det(IntMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    long n = m.rows;
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j)
                m.at(i, j) = div_exact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

struct SmithResult {
    std::vector<Int> diag;  // d_0 | d_1 | ... , nonnegative, zeros trailing
    IntMat U, V;            // unimodular, U * M * V = diag
};

// Smith normal form by row/column reduction with transform tracking.
inline SmithResult smith_normal_form(const IntMat& input) {
    IntMat m = input;
    long r = m.rows, c = m.cols;
    IntMat U = IntMat::identity(r), V = IntMat::identity(c);

    auto swap_rows = [&](long i, long j) {
        for (long k = 0; k < c; ++k) std::swap(m.at(i, k), m.at(j, k));
        for (long k = 0; k < r; ++k) std::swap(U.at(i, k), U.at(j, k));
    };
    auto swap_cols = [&](long i, long j) {
        for (long k = 0; k < r; ++k) std::swap(m.at(k, i), m.at(k, j));
        for (long k = 0; k < c; ++k) std::swap(V.at(k, i), V.at(k, j));
    };
    auto addmul_row = [&](long dst, long src, const Int& q) {  // row dst += q * row src
        for (long k = 0; k < c; ++k) m.at(dst, k) += q * m.at(src, k);
        for (long k = 0; k < r; ++k) U.at(dst, k) += q * U.at(src, k);
    };
    auto addmul_col = [&](long dst, long src, const Int& q) {
        for (long k = 0; k < r; ++k) m.at(k, dst) += q * m.at(k, src);
        for (long k = 0; k < c; ++k) V.at(k, dst) += q * V.at(k, src);
    };
    auto negate_row = [&](long i) {
        for (long k = 0; k < c; ++k) m.at(i, k) = -m.at(i, k);
        for (long k = 0; k < r; ++k) U.at(i, k) = -U.at(i, k);
    };

    long t = 0;
    for (; t < std::min(r, c); ++t) {
        // Smallest nonzero |entry| of the trailing submatrix becomes the pivot.
        long pi = -1, pj = -1;
        Int best;
        for (long i = t; i < r; ++i)
            for (long j = t; j < c; ++j) {
                if (m.at(i, j) == 0) continue;
                Int v = abs(m.at(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);

        for (;;) {
            if (m.at(t, t) < 0) negate_row(t);
            bool dirty = false;
            for (long i = t + 1; i < r; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
                addmul_row(i, t, -q);
                if (m.at(i, t) != 0) {  // strictly smaller remainder: new pivot
                    swap_rows(i, t);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (long j = t + 1; j < c; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
                addmul_col(j, t, -q);
                if (m.at(t, j) != 0) {
                    swap_cols(j, t);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide the whole trailing submatrix.
            long bi = -1, bj = -1;
            for (long i = t + 1; i < r && bi < 0; ++i)
                for (long j = t + 1; j < c; ++j)
                    if (mod_floor(m.at(i, j), m.at(t, t)) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            addmul_row(t, bi, 1);
        }
    }

    SmithResult out;
    out.diag.resize(std::min(r, c));
    for (long i = 0; i < std::min(r, c); ++i) out.diag[i] = m.at(i, i);
    out.U = std::move(U);
    out.V = std::move(V);
    return out;
}

}  // namespace cubics
