#pragma once

#include <cstddef>
#include <vector>

#include "hopfaz/scalar.hpp"

namespace hopfaz {

/// Coordinates of an element in a fixed basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector basis_vector(const Field& f, std::size_t n, std::size_t i);
/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

// Tensor flattening used everywhere in this library: the pair (i, j), with i
// indexing the left factor of dimension dl and j the right factor of
// dimension dr, is stored at position i * dr + j.
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t dr) { return i * dr + j; }

/// Dense row-major matrix over one exact field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& f, std::size_t n);
    /// Builds a matrix whose j-th column is cols[j].
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);
    static Matrix from_rows(const Field& f, const std::vector<Vector>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    void set_column(std::size_t c, const Vector& v);
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m);
    friend Vector operator*(const Matrix& m, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Exact determinant. Fraction-free Bareiss elimination over Q, Gaussian
/// elimination over F_p. Throws DimensionError for non-square input.
Scalar det(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space {v : m v = 0}; empty iff m is injective.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Throws NotInvertible if singular, DimensionError if not square.
Matrix inverse(const Matrix& m);

/// Solves a x = b for square nonsingular a.
Vector solve(const Matrix& a, const Vector& b);

/// Kronecker product; entry ((i,k),(j,l)) = a(i,j) b(k,l) with the pair flattening above.
Matrix kron(const Matrix& a, const Matrix& b);

} // namespace hopfaz
