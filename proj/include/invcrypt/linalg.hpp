#pragma once

#include <cstdint>
#include <vector>

#include "invcrypt/field.hpp"

namespace invcrypt {

class Vector {
  public:
    Vector(const PrimeField& field, std::size_t dim)
        : f_(field), e_(dim, 0) {}
    Vector(const PrimeField& field, std::vector<std::uint64_t> entries);

    std::size_t dim() const { return e_.size(); }
    std::uint64_t operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, std::uint64_t v) { e_[i] = f_.reduce(v); }
    const PrimeField& field() const { return f_; }
    const std::vector<std::uint64_t>& entries() const { return e_; }
    bool is_zero() const;

    bool operator==(const Vector&) const = default;

  private:
    PrimeField f_;
    std::vector<std::uint64_t> e_;
};

/// Dense row-major matrix over a prime field; entries always reduced.
class Matrix {
  public:
    Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
        : f_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static Matrix identity(const PrimeField& field, std::size_t n);
    static Matrix from_rows(const PrimeField& field,
                            const std::vector<std::vector<std::uint64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const PrimeField& field() const { return f_; }
    const std::vector<std::uint64_t>& entries() const { return e_; }

    std::uint64_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t v) { e_[r * cols_ + c] = f_.reduce(v); }

    Matrix operator*(const Matrix& b) const;
    Vector operator*(const Vector& v) const;
    Matrix transpose() const;

    void swap_rows(std::size_t r1, std::size_t r2);

    bool operator==(const Matrix&) const = default;

  private:
    PrimeField f_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> e_;
};

FieldElement det(const Matrix& a);
Matrix inverse(const Matrix& a);
bool is_invertible(const Matrix& a);

/// Reduce in place to reduced row echelon form (pivot = first nonzero in
/// column order); returns the pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& a);

std::size_t rank(const Matrix& a);

/// Canonical basis of {x : a*x = 0}: the basis vectors, stacked as rows,
/// form a reduced-row-echelon matrix. Empty iff a has full column rank.
std::vector<Vector> nullspace(const Matrix& a);

Vector random_vector(const PrimeField& field, std::size_t dim, Rng& rng);
Vector random_nonzero_vector(const PrimeField& field, std::size_t dim, Rng& rng);
Matrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, Rng& rng);

/// Rejection-samples until the determinant is nonzero.
Matrix random_invertible(const PrimeField& field, std::size_t n, Rng& rng);

}  // namespace invcrypt
