#pragma once

#include "minann/monodromy.hpp"
#include "minann/subspace.hpp"

namespace minann {

/* Grassmannian orbits, the gamma-closure, and minimality certificates.
 * ============================================================
 * A subspace is virtually invariant iff its orbit under the monodromy
 * group is finite. orbit() certifies finiteness exactly; exceeding the
 * cap only means "not finite within cap". gamma_closure() runs the
 * forcing argument: whenever some power mon0^l of the current subspace
 * pairs nontrivially with gamma, that power must contain gamma, so
 * mon0^{-l} gamma is adjoined. The closure is contained in every
 * virtually invariant subspace containing gamma; when its own orbit is
 * finite it therefore *is* the minimal one, and certify_minimal says so.
 */

struct OrbitResult {
    std::vector<Subspace> subspaces;  // BFS discovery order
    bool finite = false;
    size_t size = 0;  // valid iff finite
    bool cap_hit = false;
    std::vector<std::string> generator_labels;
};

struct ClosureResult {
    Subspace subspace;
    std::vector<std::pair<long, Vec>> forced_vectors;  // (exponent l, vector added)
    int passes = 0;
    bool stable_under_doubling = false;
};

enum class ParityCase { both_odd, p_even, q_even };

const char* parity_case_name(ParityCase c);

struct ZeroSubspaceProfile {
    Subspace kernel;
    ParityCase parity_case = ParityCase::both_odd;
    std::optional<Vec> predicted_span;  // the case-formula vector, even cases only
};

struct CertifiedMinimal {
    int lower_bound = 0;
    bool certified = false;
    OrbitResult orbit;
};

// Breadth-first closure of start under the generators and their inverses,
// using canonical subspaces as keys. Generators are applied in label order,
// each followed by its inverse; the queue is FIFO, so the subspace list is
// deterministic.
OrbitResult orbit(const Subspace& start, const MonodromyGroupSpec& spec, size_t cap);

// One forcing sweep over exponents in [-bound, bound]; returns true if the
// subspace grew. Exposed so the fixpoint property is testable directly.
bool closure_pass(const HomologyModel& model, Subspace& h, long bound,
                  std::vector<std::pair<long, Vec>>* forced = nullptr);

// The gamma-closure. exponent_bound = 0 selects the default of three times
// the torsion order of mon0 (p*q for parabolic, p for lotka_volterra); a
// nonzero bound below twice the torsion order is rejected.
ClosureResult gamma_closure(const HomologyModel& model, long exponent_bound = 0);

// Certifies minimality by checking that the closure itself has a finite
// orbit under {mon0, monc}.
CertifiedMinimal certify_minimal(const HomologyModel& model, const ClosureResult& closure,
                                 size_t cap);

// Kernel of all the functionals v -> gamma . mon0^l v on h, with l running
// one extra torsion period past the bound to capture the affine drift.
// Parabolic models only; gamma must lie in h.
ZeroSubspaceProfile zero_subspace_profile(const HomologyModel& model, const Subspace& h,
                                          long exponent_bound = 0);

// Order window for the minimal annihilator: high = dim of the minimal
// subspace, low = high minus the zero-subspace kernel dimension (minus one
// when no profile is supplied).
std::pair<int, int> annihilator_order_bounds(const HomologyModel& model,
                                             const CertifiedMinimal& certified,
                                             const ZeroSubspaceProfile* profile);

// Rank test for the p cyclic q-block sums e_{iq} + ... + e_{(i+1)q-1}
// (indices mod p): true iff they span all of Q^p.
bool linalg_lemma_check(int p, int q);

}  // namespace minann
