#pragma once

#include "hgmod/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hgmod {

/* Dense row-major matrix over Q. Rows are the default carrier for bases:
 * a lattice or subspace basis is the list of rows. */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    void set_row(std::size_t i, const Vector& v);
    void set_col(std::size_t j, const Vector& v);
    void append_row(const Vector& v);
    void swap_rows(std::size_t a, std::size_t b);
    std::vector<Vector> row_list() const;

    Matrix transpose() const;
    Vector apply(const Vector& x) const;            // M x, x a column
    Vector apply_left(const Vector& y) const;       // y M, y a row

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct ReducedEchelon {
    Matrix reduced;                    // full reduced row echelon form, zero rows kept
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

ReducedEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
Rational determinant(Matrix m);
Matrix inverse(const Matrix& m);    // throws NotInvertible

/* Rows form a basis of { x : M x = 0 }, canonical from the reduced echelon form. */
Matrix nullspace(const Matrix& m);

/* Any x with M x = b, or nothing. */
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/* Coordinates c with c * basis == v (basis rows independent), or nothing. */
std::optional<Vector> coordinates_in_rows(const Matrix& basis, const Vector& v);

Matrix vstack(const Matrix& a, const Matrix& b);

} // namespace hgmod
