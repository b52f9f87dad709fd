#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hodgedr/gaussian.hpp"

namespace hodgedr {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    Matrix conj() const;
    Matrix conj_transpose() const;
    Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    bool is_zero() const;
    bool is_real() const;
    std::size_t nonzero_count() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    // [a | b] and [a ; b].
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

bool is_zero(const Vector& v);
Vector conj(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

// Reduced row echelon form with pivots chosen as the first nonzero entry in row
// order, column by column.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon row_echelon(Matrix m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
// Throws std::domain_error when m is singular or not square.
Matrix inverse(const Matrix& m);

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    long sigma() const { return static_cast<long>(positive) - static_cast<long>(negative); }
};

// Inertia of a real symmetric matrix, by diagonalization under congruence.
// Throws std::invalid_argument on non-square, non-symmetric or non-real input.
Signature congruence_signature(const Matrix& m);

} // namespace hodgedr
