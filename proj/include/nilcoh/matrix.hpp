#pragma once

#include <cassert>
#include <vector>

#include "nilcoh/scalar.hpp"

namespace nilcoh {

using Vec = std::vector<GQ>;

bool vec_is_zero(const Vec& v);
Vec vec_conj(const Vec& v);

// Dense matrix over Q(i), row major. Values are immutable in spirit: all
// library operations build new matrices instead of mutating shared state.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GQ& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const GQ& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec col(int j) const;
    void swap_rows(int a, int b);

    Matrix transpose() const;
    Matrix conj_transpose() const;
    Matrix conj() const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const GQ& c) const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<GQ> e_;
};

// [a | b] side by side
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Vec& b);
// a on top of b
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace nilcoh
