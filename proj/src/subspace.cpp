#include "minann/subspace.hpp"

namespace minann {

bool Subspace::operator<(const Subspace& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    if (basis.rows != o.basis.rows) return basis.rows < o.basis.rows;
    for (size_t i = 0; i < basis.a.size(); i++) {
        int c = cmp(basis.a[i], o.basis.a[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Subspace canonical_subspace(const std::vector<Vec>& vectors, int ambient_dim) {
    for (const Vec& v : vectors)
        if ((int)v.size() != ambient_dim)
            throw error("canonical_subspace: vector length does not match ambient dimension");
    Matrix m = Matrix::from_rows(vectors, ambient_dim);
    int rank = rref(m);
    Matrix basis(rank, ambient_dim);
    for (int r = 0; r < rank; r++)
        for (int c = 0; c < ambient_dim; c++) basis.at(r, c) = m.at(r, c);
    return Subspace{ambient_dim, std::move(basis)};
}

Subspace zero_space(int ambient_dim) { return Subspace{ambient_dim, Matrix(0, ambient_dim)}; }

Subspace full_space(int ambient_dim) {
    return Subspace{ambient_dim, Matrix::identity(ambient_dim)};
}

Subspace span_of(const Vec& v) { return canonical_subspace({v}, (int)v.size()); }

bool member(const Subspace& s, const Vec& v) {
    if ((int)v.size() != s.ambient) throw error("member: vector length mismatch");
    Vec w = v;
    for (int r = 0; r < s.basis.rows; r++) {
        int p = -1;
        for (int c = 0; c < s.ambient; c++)
            if (sgn(s.basis.at(r, c)) != 0) { p = c; break; }
        Rational f = w[p];  // pivot entries are 1 in RREF
        if (sgn(f) == 0) continue;
        for (int c = 0; c < s.ambient; c++) w[c] -= f * s.basis.at(r, c);
    }
    return is_zero_vec(w);
}

Subspace sum(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient != s2.ambient) throw error("sum: ambient dimension mismatch");
    std::vector<Vec> rows;
    for (int r = 0; r < s1.basis.rows; r++) rows.push_back(s1.basis.row(r));
    for (int r = 0; r < s2.basis.rows; r++) rows.push_back(s2.basis.row(r));
    return canonical_subspace(rows, s1.ambient);
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient != s2.ambient) throw error("intersect: ambient dimension mismatch");
    int d1 = s1.dim(), d2 = s2.dim();
    Matrix stacked(d1 + d2, s1.ambient);
    for (int r = 0; r < d1; r++) stacked.set_row(r, s1.basis.row(r));
    for (int r = 0; r < d2; r++) stacked.set_row(d1 + r, s2.basis.row(r));
    // y * stacked = 0 with y = (y1, -y2) gives y1*B1 = y2*B2, i.e. a common vector
    std::vector<Vec> common;
    for (const Vec& y : kernel(transpose(stacked))) {
        Vec v(s1.ambient, Rational(0));
        for (int i = 0; i < d1; i++)
            if (sgn(y[i]) != 0)
                for (int c = 0; c < s1.ambient; c++) v[c] += y[i] * s1.basis.at(i, c);
        common.push_back(std::move(v));
    }
    return canonical_subspace(common, s1.ambient);
}

Subspace apply_map(const Matrix& m, const Subspace& s) {
    if (m.rows != m.cols || m.rows != s.ambient)
        throw error("apply_map: matrix size does not match ambient dimension");
    if (sgn(det(m)) == 0) throw error("apply_map: singular matrix");
    std::vector<Vec> images;
    for (int r = 0; r < s.basis.rows; r++) images.push_back(mul(m, s.basis.row(r)));
    return canonical_subspace(images, s.ambient);
}

std::string subspace_str(const Subspace& s) {
    return "span" + matrix_str(s.basis) + " in dim " + std::to_string(s.ambient);
}

}  // namespace minann
