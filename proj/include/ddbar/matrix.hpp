#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ddbar/scalar.hpp"

namespace ddbar {

/// Dense matrix over Q(i). 0xN and Nx0 matrices are first-class citizens;
/// they show up at every bidegree outside a complex's support.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    Matrix conjugate() const;
    Matrix conj_transpose() const { return conjugate().transpose(); }

    /// Row vector view helpers.
    std::vector<GaussianRational> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<GaussianRational>& v);

    Matrix operator*(const Matrix& o) const;
    std::vector<GaussianRational> operator*(const std::vector<GaussianRational>& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const GaussianRational& s) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Stack b below a (column counts must agree).
    static Matrix vstack(const Matrix& a, const Matrix& b);
    /// Put b to the right of a (row counts must agree).
    static Matrix hstack(const Matrix& a, const Matrix& b);

    /// Exact inverse; throws Error when singular.
    Matrix inverse() const;

    /// Determinant by exact Gaussian elimination.
    GaussianRational determinant() const;

    std::string str() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

struct RrefResult {
    std::size_t rank = 0;
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form, exact arithmetic, pivot = first nonzero
/// entry in column order.
RrefResult rref(const Matrix& m);

/// rank(m) via rref.
std::size_t rank(const Matrix& m);

}  // namespace ddbar
