#pragma once

#include "schouten/errors.hpp"
#include "schouten/scalar_field.hpp"

#include <cmath>
#include <vector>

namespace schouten {

/// Row-major dense double matrix, sized for chart dimensions (m <= ~10).
struct MatD {
    int rows = 0, cols = 0;
    std::vector<double> a;

    MatD() = default;
    MatD(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static MatD identity(int n) {
        MatD m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline MatD matd_mul(const MatD& x, const MatD& y) {
    MatD r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const double v = x(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

/// Solve A X = B in place by Gaussian elimination with partial pivoting.
inline MatD matd_solve(MatD A, MatD B) {
    const int n = A.rows;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(A(r, col)) > std::fabs(A(piv, col))) piv = r;
        if (std::fabs(A(piv, col)) < 1e-300) throw JacobianSingular();
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A(col, j), A(piv, j));
            for (int j = 0; j < B.cols; ++j) std::swap(B(col, j), B(piv, j));
        }
        const double d = A(col, col);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = A(r, col) / d;
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) A(r, j) -= f * A(col, j);
            for (int j = 0; j < B.cols; ++j) B(r, j) -= f * B(col, j);
        }
    }
    for (int i = 0; i < n; ++i) {
        const double d = A(i, i);
        for (int j = 0; j < B.cols; ++j) B(i, j) /= d;
    }
    return B;
}

inline MatD matd_inverse(const MatD& A) { return matd_solve(A, MatD::identity(A.rows)); }

/// Singular values via cyclic Jacobi on the symmetric matrix A^T A.
inline std::vector<double> singular_values(const MatD& m) {
    const int n = m.cols;
    MatD s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < m.rows; ++k) acc += m(k, i) * m(k, j);
            s(i, j) = acc;
        }
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += s(p, q) * s(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(s(p, q)) < 1e-300) continue;
                const double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    const double skp = s(k, p), skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    const double spk = s(p, k), sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
            }
    }
    std::vector<double> sv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sv[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, s(i, i)));
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

/// Square matrix of scalar fields with exact Gauss-Jordan inversion.  Pivots
/// are chosen by exact nonzero tests, so entries of the inverse are rational
/// functions regular wherever the matrix is invertible.
using FieldMat = std::vector<std::vector<ScalarField>>;

inline FieldMat field_identity(const ChartPtr& chart, int n) {
    FieldMat id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            id[static_cast<std::size_t>(i)].push_back(
                ScalarField::constant(chart, i == j ? Q(1) : Q(0)));
    }
    return id;
}

inline FieldMat field_matrix_inverse(FieldMat a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return a;
    const ChartPtr chart = a[0][0].chart();
    for (auto& row : a)
        for (auto& e : row)
            if (!e.is_exact()) throw Error("symbolic inverse needs exact entries");
    FieldMat inv = field_identity(chart, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero_exact()) {
                piv = r;
                break;
            }
        if (piv < 0) throw LeafMatrixSingular("symbolically singular matrix");
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
        std::swap(inv[static_cast<std::size_t>(col)], inv[static_cast<std::size_t>(piv)]);
        const ScalarField d = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] / d;
            inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] =
                inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const ScalarField f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f.is_zero_exact()) continue;
            for (int j = 0; j < n; ++j) {
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
                inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -
                    f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            }
        }
    }
    return inv;
}

}  // namespace schouten
