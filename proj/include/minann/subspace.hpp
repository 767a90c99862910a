#pragma once

#include "minann/matrix.hpp"

namespace minann {

/* Points of the Grassmannian.
 * ============================================================
 * A subspace is stored as its reduced row echelon basis with zero
 * rows removed. RREF is the unique canonical form of a row space,
 * so two Subspace values are equal as sets of vectors iff they are
 * equal entry-wise -- which makes them usable directly as ordered
 * map keys during orbit enumeration.
 */
struct Subspace {
    int ambient = 0;
    Matrix basis;  // dim x ambient, RREF, no zero rows

    int dim() const { return basis.rows; }

    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const;
};

// Canonical representative of the span of the given vectors. Idempotent.
Subspace canonical_subspace(const std::vector<Vec>& vectors, int ambient_dim);

Subspace zero_space(int ambient_dim);
Subspace full_space(int ambient_dim);
Subspace span_of(const Vec& v);

// True iff v lies in the span of s.
bool member(const Subspace& s, const Vec& v);

Subspace sum(const Subspace& s1, const Subspace& s2);
Subspace intersect(const Subspace& s1, const Subspace& s2);

// Image of s under an invertible linear map (vectors act as columns).
Subspace apply_map(const Matrix& m, const Subspace& s);

std::string subspace_str(const Subspace& s);

}  // namespace minann
