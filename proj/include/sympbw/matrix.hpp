#pragma once

#include <cassert>
#include <vector>

#include "sympbw/common.hpp"

namespace sympbw {

/// Dense row-major matrix, 0-based storage. Entries are exact (Int, Rat or int).
template <class T>
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, T(0)) {}

    static Matrix identity(int d) {
        Matrix m(d, d);
        for (int i = 0; i < d; ++i) m(i, i) = T(1);
        return m;
    }

    T& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const T& operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    bool is_zero() const {
        for (const auto& x : data)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }

    template <class U>
    Matrix<U> cast() const {
        Matrix<U> m(rows, cols);
        for (size_t i = 0; i < data.size(); ++i) m.data[i] = U(data[i]);
        return m;
    }
};

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.rows == b.rows && a.cols == b.cols);
    Matrix<T> m = a;
    for (size_t i = 0; i < m.data.size(); ++i) m.data[i] += b.data[i];
    return m;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.cols == b.rows);
    Matrix<T> m(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int l = 0; l < a.cols; ++l) {
            if (a(i, l) == 0) continue;
            for (int j = 0; j < b.cols; ++j) m(i, j) += a(i, l) * b(l, j);
        }
    return m;
}

template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& a) {
    Matrix<T> m = a;
    for (auto& x : m.data) x *= s;
    return m;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> m(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) m(j, i) = a(i, j);
    return m;
}

/// exp(A) for nilpotent A: the series stops at the first vanishing power.
template <class T>
Matrix<Rat> exp_nilpotent(const Matrix<T>& a) {
    const Matrix<Rat> x = a.template cast<Rat>();
    Matrix<Rat> result = Matrix<Rat>::identity(a.rows);
    Matrix<Rat> power = Matrix<Rat>::identity(a.rows);
    for (int k = 1; k <= a.rows; ++k) {
        power = Rat(1, k) * (power * x);
        if (power.is_zero()) return result;
        result = result + power;
    }
    if (!(power * x).is_zero()) throw InvariantError("exp_nilpotent: matrix is not nilpotent");
    return result;
}

/// Determinant by Gaussian elimination over the rationals.
inline Rat determinant(Matrix<Rat> a) {
    assert(a.rows == a.cols);
    const int d = a.rows;
    Rat det = 1;
    for (int c = 0; c < d; ++c) {
        int pivot = -1;
        for (int r = c; r < d; ++r)
            if (a(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != c) {
            for (int j = 0; j < d; ++j) std::swap(a(pivot, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (int r = c + 1; r < d; ++r) {
            if (a(r, c) == 0) continue;
            const Rat f = a(r, c) / a(c, c);
            for (int j = c; j < d; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

inline int rank(Matrix<Rat> a) {
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows; ++i)
            if (a(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < a.cols; ++j) std::swap(a(pivot, j), a(r, j));
        for (int i = r + 1; i < a.rows; ++i) {
            if (a(i, c) == 0) continue;
            const Rat f = a(i, c) / a(r, c);
            for (int j = c; j < a.cols; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

/// Square submatrix on the given (1-based) rows and the first rows.size() columns.
inline Matrix<Rat> leading_minor_matrix(const Matrix<Rat>& m, const std::vector<int>& rows) {
    const int k = static_cast<int>(rows.size());
    Matrix<Rat> sub(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) sub(r, c) = m(rows[r] - 1, c);
    return sub;
}

}  // namespace sympbw
