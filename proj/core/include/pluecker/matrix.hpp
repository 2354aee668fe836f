#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pluecker/scalar.hpp"

namespace plk {

/// Dense matrix over an exact field. Rank and determinant go through
/// fraction-free (Bareiss) elimination on a denominator-cleared integer copy
/// when the field is Q, which keeps intermediate entries small; over F_p
/// ordinary elimination is already exact.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const Field& field);
    static Matrix identity(std::size_t n, const Field& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    friend bool operator==(const Matrix& a, const Matrix& b);

    bool is_zero() const;
    std::size_t rank() const;
    Scalar det() const;
    /// Reduced row echelon form; optionally reports rank and pivot columns.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    /// Basis of the right null space, one column vector per basis element.
    std::vector<std::vector<Scalar>> kernel() const;
    std::optional<Matrix> inverse() const;

    Matrix submatrix(const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    Matrix column(std::size_t j) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_{};
    std::vector<Scalar> a_;
};

/// Determinant of the minor m[rows, cols] with direct formulas for sizes up
/// to three; the membership trials spend their time here.
Scalar minor_det(const Matrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols);

/// Horizontal concatenation [a | b].
Matrix hcat(const Matrix& a, const Matrix& b);
/// Matrix from column vectors.
Matrix from_columns(const std::vector<std::vector<Scalar>>& cols, const Field& field);

/// Extends the k independent columns of `cols` to an invertible square matrix
/// by appending standard basis vectors.
Matrix complete_to_basis(const Matrix& cols);

} // namespace plk
