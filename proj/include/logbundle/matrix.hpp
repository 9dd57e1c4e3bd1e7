#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "logbundle/rational.hpp"

namespace logbundle {

using Vector = std::vector<Rational>;

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty = 0);
    static Matrix from_cols(const std::vector<Vector>& cols, std::size_t rows_if_empty = 0);
    static Matrix diagonal(std::span<const Rational> d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    void set_row(std::size_t i, std::span<const Rational> values);

    Matrix transpose() const;
    Matrix select_rows(std::span<const std::size_t> idx) const;
    Matrix select_cols(std::span<const std::size_t> idx) const;
    Vector apply(std::span<const Rational> v) const;
    bool is_zero() const;

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Rational& c) const;

    bool operator==(const Matrix& other) const = default;

    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix hstack(const Matrix& left, const Matrix& right);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Rank over Q by fraction-free (Bareiss) elimination on the integer-scaled
// rows.  Pivot: first nonzero entry in column order.
std::size_t mat_rank(const Matrix& m);

// Exact determinant by Bareiss elimination.  Throws std::invalid_argument
// for non-square input.
Rational mat_det(const Matrix& m);

// Reduced row echelon form.  `pivots`, when given, receives the pivot
// column of each nonzero row.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

// Basis of {x : m x = 0} as rows, given in reduced row echelon form, so the
// result depends only on the kernel subspace.  Row count = cols - rank.
Matrix mat_kernel(const Matrix& m);

// Basis of the row space in reduced row echelon form.
Matrix row_space(const Matrix& m);

// Some x with m x = b, or nullopt if inconsistent.  Free variables are 0.
std::optional<Vector> mat_solve(const Matrix& m, std::span<const Rational> b);

// Throws DomainError("singular_matrix") when not invertible.
Matrix mat_inverse(const Matrix& m);

// True when the two row sets span the same subspace.
bool same_row_space(const Matrix& a, const Matrix& b);

// Scale a vector so its first nonzero entry is 1 (zero vector unchanged).
Vector normalize_leading(std::span<const Rational> v);

// Sum_k c_k v_k helper; all vectors must share length.
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace logbundle
