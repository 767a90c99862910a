#include "minann/wronskian.hpp"

#include <sstream>

namespace minann {

namespace {

SymMatrix minor_drop(const SymMatrix& m, size_t drop_row, size_t drop_col) {
    SymMatrix r;
    for (size_t i = 0; i < m.size(); i++) {
        if (i == drop_row) continue;
        std::vector<SymbolicElement> row;
        for (size_t j = 0; j < m[i].size(); j++)
            if (j != drop_col) row.push_back(m[i][j]);
        r.push_back(std::move(row));
    }
    return r;
}

// derivative table: rows 0..extra_rows-1, columns = elements
SymMatrix derivative_rows(const std::vector<SymbolicElement>& elements, size_t nrows) {
    SymMatrix rows;
    rows.push_back(elements);
    for (size_t i = 1; i < nrows; i++) {
        std::vector<SymbolicElement> next;
        for (const SymbolicElement& e : rows.back()) next.push_back(derive(e));
        rows.push_back(std::move(next));
    }
    return rows;
}

}  // namespace

SymbolicElement sym_det_cofactor(const SymMatrix& m) {
    size_t n = m.size();
    if (n == 0) return SymbolicElement(Rational(1));
    for (const auto& row : m)
        if (row.size() != n) throw error("determinant of a non-square matrix");
    if (n == 1) return m[0][0];
    SymbolicElement det;
    for (size_t i = 0; i < n; i++) {
        if (m[i][0].is_zero()) continue;
        SymbolicElement cof = m[i][0] * sym_det_cofactor(minor_drop(m, i, 0));
        det = (i % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

SymbolicElement sym_det_bareiss(const SymMatrix& m) {
    size_t n = m.size();
    if (n == 0) return SymbolicElement(Rational(1));
    SymMatrix w = m;
    SymbolicElement prev(Rational(1));
    bool negate = false;
    for (size_t k = 0; k + 1 < n; k++) {
        if (w[k][k].is_zero()) {
            size_t swap_with = k;
            for (size_t i = k + 1; i < n; i++)
                if (!w[i][k].is_zero()) { swap_with = i; break; }
            if (swap_with == k) return SymbolicElement();
            std::swap(w[k], w[swap_with]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; i++)
            for (size_t j = k + 1; j < n; j++) {
                SymbolicElement num = w[i][j] * w[k][k] - w[i][k] * w[k][j];
                auto q = try_divide(num, prev);
                if (!q) throw error("bareiss: exact division failed");
                w[i][j] = std::move(*q);
            }
        prev = w[k][k];
    }
    return negate ? -w[n - 1][n - 1] : w[n - 1][n - 1];
}

SymbolicElement wronskian(const std::vector<SymbolicElement>& elements) {
    if (elements.empty()) throw error("wronskian of an empty list");
    return sym_det_cofactor(derivative_rows(elements, elements.size()));
}

DiffOperator minimal_annihilator(const std::vector<SymbolicElement>& orbit_basis) {
    if (orbit_basis.empty()) throw error("minimal_annihilator of an empty basis");
    size_t d = orbit_basis.size();
    SymMatrix table = derivative_rows(orbit_basis, d + 1);  // rows 0..d

    // Expanding the bordered Wronskian W(y, y0..y_{d-1}) along the y column:
    // the coefficient of y^(r) is (-1)^r times the minor with row r removed,
    // and the minor at r = d is the base Wronskian.
    std::vector<SymbolicElement> minors(d + 1);
    for (size_t r = 0; r <= d; r++) minors[r] = sym_det_cofactor(minor_drop(table, r, SIZE_MAX));
    const SymbolicElement& w = minors[d];
    if (w.is_zero()) throw error("dependent basis: the Wronskian vanishes");

    DiffOperator op;
    op.order = (int)d;
    std::vector<SymbolicElement> nums(d);
    bool all_reduced = true;
    std::vector<SymbolicElement> quotients(d);
    for (size_t r = 0; r < d; r++) {
        SymbolicElement num = (d - r) % 2 == 1 ? -minors[r] : minors[r];
        if (all_reduced) {
            auto q = try_divide(num, w);
            if (q)
                quotients[r] = std::move(*q);
            else
                all_reduced = false;
        }
        nums[r] = std::move(num);
    }
    if (all_reduced) {
        // coefficients ordered y^(d-1) .. y
        for (size_t r = d; r-- > 0;) op.coeffs.push_back(std::move(quotients[r]));
    } else {
        op.reduced = false;
        op.denom = w;
        for (size_t r = d; r-- > 0;) op.coeffs.push_back(std::move(nums[r]));
    }
    for (const SymbolicElement& b : orbit_basis)
        if (!apply_operator(op, b).is_zero())
            throw error("internal: constructed operator does not annihilate its basis");
    return op;
}

SymbolicElement apply_operator(const DiffOperator& op, const SymbolicElement& e) {
    if ((int)op.coeffs.size() != op.order) throw error("malformed operator");
    std::vector<SymbolicElement> derivs(op.order + 1);
    derivs[0] = e;
    for (int i = 1; i <= op.order; i++) derivs[i] = derive(derivs[i - 1]);
    SymbolicElement r = op.reduced ? derivs[op.order] : op.denom * derivs[op.order];
    for (int i = 0; i < op.order; i++) r = r + op.coeffs[i] * derivs[op.order - 1 - i];
    return r;
}

std::string operator_str(const DiffOperator& op) {
    std::ostringstream os;
    auto dname = [&](int k) {
        if (k == 0) return std::string("y");
        return "y^(" + std::to_string(k) + ")";
    };
    if (op.reduced) {
        os << dname(op.order);
        for (int i = 0; i < op.order; i++) {
            if (op.coeffs[i].is_zero()) continue;
            os << " + (" << element_str(op.coeffs[i]) << ")*" << dname(op.order - 1 - i);
        }
    } else {
        os << "(" << element_str(op.denom) << ")*" << dname(op.order);
        for (int i = 0; i < op.order; i++) {
            if (op.coeffs[i].is_zero()) continue;
            os << " + (" << element_str(op.coeffs[i]) << ")*" << dname(op.order - 1 - i);
        }
        os << "   [formal quotient by the base Wronskian]";
    }
    return os.str();
}

}  // namespace minann
