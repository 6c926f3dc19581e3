#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cotorlab/field.hpp"

namespace cotorlab {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a Field. Immutable once built; every
/// operation returns a fresh matrix. Use MatrixBuilder to assemble entries.
class Matrix {
  public:
    /// Zero matrix.
    Matrix(Field field, std::size_t rows, std::size_t cols);
    /// Throws InputError unless entries.size() == rows * cols.
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(Field field, std::size_t n);
    /// Integer literal rows, reduced into the field.
    static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_ints(Field field, std::size_t rows, std::size_t cols,
                            const std::vector<long long>& row_major);
    /// Columns given as vectors of equal length `rows`.
    static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Scalar> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    Vector column(std::size_t c) const;
    const std::vector<Scalar>& entries() const { return entries_; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Scalar& s) const;
    Vector apply(std::span<const Scalar> v) const;
    /// Kronecker product, left factor major (row (i,k) -> i*rhs.rows()+k).
    Matrix kron(const Matrix& rhs) const;
    Matrix hstack(const Matrix& rhs) const;
    Matrix vstack(const Matrix& rhs) const;
    Matrix select_columns(const std::vector<std::size_t>& idx) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// Mutable accumulator for building a Matrix entry by entry.
class MatrixBuilder {
  public:
    MatrixBuilder(Field field, std::size_t rows, std::size_t cols);

    void set(std::size_t r, std::size_t c, const Scalar& v);
    void add(std::size_t r, std::size_t c, const Scalar& v);
    const Scalar& get(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Matrix build() &&;

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

}  // namespace cotorlab
