// Dense matrices over Q(i); small exact linear algebra for representation
// and identity checks.

#pragma once

#include "okmat/gaussian.hpp"

#include <stdexcept>
#include <vector>

namespace okmat {

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<GaussianRational> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
        return m;
    }

    GaussianRational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const GaussianRational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix m(x.rows, x.cols);
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = x.a[i] + y.a[i];
        return m;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix m(x.rows, x.cols);
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = x.a[i] - y.a[i];
        return m;
    }
    friend Matrix operator*(const GaussianRational& c, const Matrix& x) {
        Matrix m(x.rows, x.cols);
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = c * x.a[i];
        return m;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols != y.rows) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix m(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const GaussianRational& f = x.at(i, k);
                if (f.is_zero()) continue;
                for (int j = 0; j < y.cols; ++j) {
                    if (y.at(k, j).is_zero()) continue;
                    m.at(i, j) += f * y.at(k, j);
                }
            }
        return m;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    Matrix transpose() const {
        Matrix m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    /// Kronecker product, index (i1*B.rows + i2, j1*B.cols + j2).
    static Matrix kron(const Matrix& A, const Matrix& B) {
        Matrix m(A.rows * B.rows, A.cols * B.cols);
        for (int i1 = 0; i1 < A.rows; ++i1)
            for (int j1 = 0; j1 < A.cols; ++j1) {
                const GaussianRational& f = A.at(i1, j1);
                if (f.is_zero()) continue;
                for (int i2 = 0; i2 < B.rows; ++i2)
                    for (int j2 = 0; j2 < B.cols; ++j2) {
                        if (B.at(i2, j2).is_zero()) continue;
                        m.at(i1 * B.rows + i2, j1 * B.cols + j2) = f * B.at(i2, j2);
                    }
            }
        return m;
    }

    /// First nonzero position of x - y, or {-1,-1} when equal.
    static std::pair<int, int> first_difference(const Matrix& x, const Matrix& y) {
        for (int i = 0; i < x.rows; ++i)
            for (int j = 0; j < x.cols; ++j)
                if (!(x.at(i, j) == y.at(i, j))) return {i, j};
        return {-1, -1};
    }
};

} // namespace okmat
