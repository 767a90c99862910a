#pragma once

#include <vector>

#include "minann/rational.hpp"

namespace minann {

/* Dense matrices over Q.
 * ============================================================
 * Everything is exact; there is no floating point anywhere in
 * this project. Ambient dimensions stay in the dozens, so dense
 * row-major storage is the simplest thing that works.
 */
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;  // row-major, rows*cols entries

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), Rational(0)) {}

    Rational& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    Vec row(int r) const;
    Vec col(int c) const;
    void set_row(int r, const Vec& v);
    void set_col(int c, const Vec& v);

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols);

    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
};

Matrix mul(const Matrix& x, const Matrix& y);
Vec mul(const Matrix& m, const Vec& v);
Matrix add(const Matrix& x, const Matrix& y);
Matrix sub(const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& m);
Matrix scale(const Rational& c, const Matrix& m);

Rational det(const Matrix& m);
bool is_identity(const Matrix& m);

// Throws minann::error on a singular matrix.
Matrix inverse(const Matrix& m);

// Exact k-th power; k may be negative (uses the inverse), power(m, 0) = I.
Matrix power(const Matrix& m, long k);

// In-place reduced row echelon form; returns the rank. Deterministic:
// RREF is the unique canonical form of a row space.
int rref(Matrix& m);

// Right null space {x : m x = 0}, as a deterministic list of basis vectors.
std::vector<Vec> kernel(const Matrix& m);

std::string matrix_str(const Matrix& m);

}  // namespace minann
