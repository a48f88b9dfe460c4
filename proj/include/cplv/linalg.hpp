#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "cplv/ratfunc.hpp"

namespace cplv {

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

// Dense row-major matrix over a field (Scalar or RatFunc).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}
    Matrix(std::vector<std::vector<T>> rows) : r_(static_cast<int>(rows.size())), c_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
        for (auto& row : rows)
            for (auto& x : row) a_.push_back(std::move(x));
    }
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix z(x.r_, y.c_);
        for (int i = 0; i < x.r_; ++i)
            for (int k = 0; k < x.c_; ++k) {
                if (is_zero(x(i, k))) continue;
                for (int j = 0; j < y.c_; ++j) z(i, j) = z(i, j) + x(i, k) * y(k, j);
            }
        return z;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) { return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_; }

    template <class F>
    auto map(F f) const {
        using U = decltype(f(a_[0]));
        Matrix<U> out(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

// Gauss-Jordan in place; returns the rank. For square m, *det gets the determinant.
template <class T>
int row_reduce(Matrix<T>& m, T* det = nullptr) {
    int rank = 0;
    T d(1);
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!is_zero(m(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) {
            d = T(0);
            continue;
        }
        if (piv != rank) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
            d = -d;
        }
        T p = m(rank, col);
        d = d * p;
        T pinv = T(1) / p;
        for (int j = col; j < m.cols(); ++j) m(rank, j) = m(rank, j) * pinv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(rank, j);
        }
        ++rank;
    }
    if (rank < m.rows()) d = T(0);
    if (det) *det = d;
    return rank;
}

template <class T>
int rank(Matrix<T> m) {
    return row_reduce(m);
}

template <class T>
T determinant(Matrix<T> m) {
    T d(0);
    row_reduce(m, &d);
    return d;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    int n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    row_reduce(aug);
    Matrix<T> inv(n, n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(aug(i, i))) return std::nullopt;
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    }
    return inv;
}

}  // namespace cplv
