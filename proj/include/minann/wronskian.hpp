#pragma once

#include "minann/symbolic.hpp"

namespace minann {

// Monic linear differential operator y^(order) + coeffs[0] y^(order-1) +
// ... + coeffs[order-1] y. When exact division by the base Wronskian is not
// available the cofactors are kept as formal quotients over denom and
// reduced stays false; annihilation checks then clear denominators.
struct DiffOperator {
    int order = 0;
    std::vector<SymbolicElement> coeffs;  // highest derivative first
    SymbolicElement denom = SymbolicElement(Rational(1));
    bool reduced = true;
};

using SymMatrix = std::vector<std::vector<SymbolicElement>>;

// Determinant by cofactor expansion along the first column.
SymbolicElement sym_det_cofactor(const SymMatrix& m);

// Fraction-free (Bareiss) determinant; divisions are exact in the domain
// and performed with try_divide, which throws on failure.
SymbolicElement sym_det_bareiss(const SymMatrix& m);

// Wronskian determinant: row i holds the i-th derivatives, columns follow
// the argument order.
SymbolicElement wronskian(const std::vector<SymbolicElement>& elements);

// The monic operator W(y, y0, ..., y_{d-1}) / W(y0, ..., y_{d-1}) whose
// solution space is the span of the basis. Throws on a dependent basis.
DiffOperator minimal_annihilator(const std::vector<SymbolicElement>& orbit_basis);

// Applies the operator; for an unreduced operator the result is scaled by
// denom (which does not affect vanishing).
SymbolicElement apply_operator(const DiffOperator& op, const SymbolicElement& e);

std::string operator_str(const DiffOperator& op);

}  // namespace minann
