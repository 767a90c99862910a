#include "minann/matrix.hpp"

#include <sstream>

namespace minann {

Vec Matrix::row(int r) const {
    Vec v(cols);
    for (int c = 0; c < cols; c++) v[c] = at(r, c);
    return v;
}

Vec Matrix::col(int c) const {
    Vec v(rows);
    for (int r = 0; r < rows; r++) v[r] = at(r, c);
    return v;
}

void Matrix::set_row(int r, const Vec& v) {
    if ((int)v.size() != cols) throw error("set_row: length mismatch");
    for (int c = 0; c < cols; c++) at(r, c) = v[c];
}

void Matrix::set_col(int c, const Vec& v) {
    if ((int)v.size() != rows) throw error("set_col: length mismatch");
    for (int r = 0; r < rows; r++) at(r, c) = v[r];
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
    Matrix m((int)rows.size(), cols);
    for (int r = 0; r < m.rows; r++) m.set_row(r, rows[r]);
    return m;
}

Matrix mul(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw error("mul: size mismatch");
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; i++)
        for (int k = 0; k < x.cols; k++) {
            const Rational& xik = x.at(i, k);
            if (sgn(xik) == 0) continue;
            for (int j = 0; j < y.cols; j++) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

Vec mul(const Matrix& m, const Vec& v) {
    if (m.cols != (int)v.size()) throw error("mul: vector length mismatch");
    Vec r(m.rows, Rational(0));
    for (int i = 0; i < m.rows; i++)
        for (int j = 0; j < m.cols; j++) r[i] += m.at(i, j) * v[j];
    return r;
}

Matrix add(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw error("add: size mismatch");
    Matrix z = x;
    for (size_t i = 0; i < z.a.size(); i++) z.a[i] += y.a[i];
    return z;
}

Matrix sub(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw error("sub: size mismatch");
    Matrix z = x;
    for (size_t i = 0; i < z.a.size(); i++) z.a[i] -= y.a[i];
    return z;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (int r = 0; r < m.rows; r++)
        for (int c = 0; c < m.cols; c++) t.at(c, r) = m.at(r, c);
    return t;
}

Matrix scale(const Rational& c, const Matrix& m) {
    Matrix z = m;
    for (Rational& x : z.a) x *= c;
    return z;
}

Rational det(const Matrix& m) {
    if (m.rows != m.cols) throw error("det: matrix not square");
    Matrix w = m;
    int n = w.rows;
    Rational d = 1;
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int r = col; r < n; r++)
            if (sgn(w.at(r, col)) != 0) { piv = r; break; }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int c = 0; c < n; c++) std::swap(w.at(piv, c), w.at(col, c));
            d = -d;
        }
        d *= w.at(col, col);
        Rational inv = 1 / w.at(col, col);
        for (int r = col + 1; r < n; r++) {
            Rational f = w.at(r, col) * inv;
            if (sgn(f) == 0) continue;
            for (int c = col; c < n; c++) w.at(r, c) -= f * w.at(col, c);
        }
    }
    return d;
}

bool is_identity(const Matrix& m) {
    if (m.rows != m.cols) return false;
    return m == Matrix::identity(m.rows);
}

Matrix inverse(const Matrix& m) {
    if (m.rows != m.cols) throw error("inverse: matrix not square");
    int n = m.rows;
    Matrix w = m;
    Matrix inv = Matrix::identity(n);
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int r = col; r < n; r++)
            if (sgn(w.at(r, col)) != 0) { piv = r; break; }
        if (piv < 0) throw error("inverse: singular matrix");
        if (piv != col)
            for (int c = 0; c < n; c++) {
                std::swap(w.at(piv, c), w.at(col, c));
                std::swap(inv.at(piv, c), inv.at(col, c));
            }
        Rational p = 1 / w.at(col, col);
        for (int c = 0; c < n; c++) {
            w.at(col, c) *= p;
            inv.at(col, c) *= p;
        }
        for (int r = 0; r < n; r++) {
            if (r == col) continue;
            Rational f = w.at(r, col);
            if (sgn(f) == 0) continue;
            for (int c = 0; c < n; c++) {
                w.at(r, c) -= f * w.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

Matrix power(const Matrix& m, long k) {
    if (m.rows != m.cols) throw error("power: matrix not square");
    Matrix base = k < 0 ? inverse(m) : m;
    unsigned long e = k < 0 ? (unsigned long)(-(k + 1)) + 1ul : (unsigned long)k;
    Matrix acc = Matrix::identity(m.rows);
    while (e) {
        if (e & 1ul) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

int rref(Matrix& m) {
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; col++) {
        int piv = -1;
        for (int i = r; i < m.rows; i++)
            if (sgn(m.at(i, col)) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int c = 0; c < m.cols; c++) std::swap(m.at(piv, c), m.at(r, c));
        Rational p = 1 / m.at(r, col);
        for (int c = 0; c < m.cols; c++) m.at(r, c) *= p;
        for (int i = 0; i < m.rows; i++) {
            if (i == r) continue;
            Rational f = m.at(i, col);
            if (sgn(f) == 0) continue;
            for (int c = 0; c < m.cols; c++) m.at(i, c) -= f * m.at(r, c);
        }
        r++;
    }
    return r;
}

std::vector<Vec> kernel(const Matrix& m) {
    Matrix w = m;
    int rank = rref(w);
    // locate the pivot column of each nonzero row
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(m.cols, false);
    for (int r = 0; r < rank; r++)
        for (int c = 0; c < m.cols; c++)
            if (sgn(w.at(r, c)) != 0) {
                pivot_col[r] = c;
                is_pivot[c] = true;
                break;
            }
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols; f++) {
        if (is_pivot[f]) continue;
        Vec x(m.cols, Rational(0));
        x[f] = 1;
        for (int r = 0; r < rank; r++) x[pivot_col[r]] = -w.at(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::string matrix_str(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < m.rows; r++) {
        os << (r ? "; " : "");
        for (int c = 0; c < m.cols; c++) os << (c ? " " : "") << rat_str(m.at(r, c));
    }
    os << "]";
    return os.str();
}

}  // namespace minann
