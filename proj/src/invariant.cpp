#include "minann/invariant.hpp"

#include <deque>
#include <map>

namespace minann {

const char* parity_case_name(ParityCase c) {
    switch (c) {
        case ParityCase::both_odd: return "both_odd";
        case ParityCase::p_even: return "p_even";
        case ParityCase::q_even: return "q_even";
    }
    return "?";
}

OrbitResult orbit(const Subspace& start, const MonodromyGroupSpec& spec, size_t cap) {
    if (start.ambient != spec.size()) throw error("orbit: ambient dimension mismatch");
    if (cap < 1) throw error("orbit: cap must be at least 1");
    OrbitResult res;
    res.generator_labels = spec.labels;
    std::map<Subspace, size_t> seen;
    std::deque<size_t> queue;
    res.subspaces.push_back(start);
    seen.emplace(start, 0);
    queue.push_back(0);

    std::vector<const Matrix*> maps;
    for (size_t g = 0; g < spec.generators.size(); g++) {
        maps.push_back(&spec.generators[g]);
        maps.push_back(&spec.inverses[g]);
    }
    while (!queue.empty()) {
        Subspace current = res.subspaces[queue.front()];
        queue.pop_front();
        for (const Matrix* m : maps) {
            Subspace next = apply_map(*m, current);
            if (seen.count(next)) continue;
            if (res.subspaces.size() >= cap) {
                res.finite = false;
                res.cap_hit = true;
                res.size = 0;
                return res;
            }
            queue.push_back(res.subspaces.size());
            seen.emplace(next, res.subspaces.size());
            res.subspaces.push_back(std::move(next));
        }
    }
    res.finite = true;
    res.size = res.subspaces.size();
    return res;
}

namespace {

long torsion_order(const HomologyModel& model) {
    switch (model.params.family) {
        case Family::parabolic: return (long)model.params.p * model.params.q;
        case Family::lotka_volterra: return model.params.p;
        default: throw error("no torsion order for this family");
    }
}

// mon0^l for every |l| <= bound, built by stepwise multiplication.
std::vector<Matrix> power_table(const Matrix& mon0, long bound) {
    std::vector<Matrix> pows(2 * bound + 1);
    Matrix inv = inverse(mon0);
    pows[bound] = Matrix::identity(mon0.rows);
    for (long l = 1; l <= bound; l++) {
        pows[bound + l] = mul(mon0, pows[bound + l - 1]);
        pows[bound - l] = mul(inv, pows[bound - l + 1]);
    }
    return pows;
}

bool iota_vanishes_on(const HomologyModel& model, const Matrix& image_basis) {
    for (int r = 0; r < image_basis.rows; r++)
        if (sgn(dot(model.iota, image_basis.row(r))) != 0) return false;
    return true;
}

}  // namespace

bool closure_pass(const HomologyModel& model, Subspace& h, long bound,
                  std::vector<std::pair<long, Vec>>* forced) {
    std::vector<Matrix> pows = power_table(model.mon0, bound);
    Vec gamma(model.rank, Rational(0));
    gamma[model.gamma_index] = 1;
    bool changed = false;
    for (long l = -bound; l <= bound; l++) {
        const Matrix& ml = pows[bound + l];
        Subspace image = apply_map(ml, h);
        if (iota_vanishes_on(model, image.basis)) continue;
        if (member(image, gamma)) continue;
        Vec add = mul(pows[bound - l], gamma);  // mon0^{-l} gamma
        h = sum(h, span_of(add));
        if (forced) forced->emplace_back(l, add);
        changed = true;
    }
    return changed;
}

ClosureResult gamma_closure(const HomologyModel& model, long exponent_bound) {
    if (!model.has_iota())
        throw error("gamma_closure: the toy family carries no intersection data");
    long torsion = torsion_order(model);
    long bound = exponent_bound == 0 ? 3 * torsion : exponent_bound;
    if (bound < 2 * torsion)
        throw error("gamma_closure: exponent bound must be at least twice the torsion order (" +
                    std::to_string(2 * torsion) + ")");

    ClosureResult res;
    Vec gamma(model.rank, Rational(0));
    gamma[model.gamma_index] = 1;
    res.subspace = span_of(gamma);
    while (closure_pass(model, res.subspace, bound, &res.forced_vectors)) res.passes++;
    res.passes++;  // the final no-change pass
    Subspace probe = res.subspace;  // keep the fixpoint even if the probe grows
    res.stable_under_doubling = !closure_pass(model, probe, 2 * bound, nullptr);
    return res;
}

CertifiedMinimal certify_minimal(const HomologyModel& model, const ClosureResult& closure,
                                 size_t cap) {
    if (!model.monc) throw error("certify_minimal: model has no center monodromy");
    CertifiedMinimal res;
    res.lower_bound = closure.subspace.dim();
    MonodromyGroupSpec spec = MonodromyGroupSpec::make({model.mon0, *model.monc}, {"mon0", "monc"});
    res.orbit = orbit(closure.subspace, spec, cap);
    res.certified = res.orbit.finite;
    return res;
}

ZeroSubspaceProfile zero_subspace_profile(const HomologyModel& model, const Subspace& h,
                                          long exponent_bound) {
    if (model.params.family != Family::parabolic)
        throw error("zero_subspace_profile: the case analysis is parabolic-specific");
    if (h.ambient != model.rank) throw error("zero_subspace_profile: ambient mismatch");
    Vec gamma(model.rank, Rational(0));
    gamma[model.gamma_index] = 1;
    if (!member(h, gamma)) throw error("zero_subspace_profile: gamma does not lie in h");

    long torsion = torsion_order(model);
    long bound = (exponent_bound == 0 ? 3 * torsion : exponent_bound) + torsion;
    std::vector<Matrix> pows = power_table(model.mon0, bound);

    // rows of constraints on coefficients c of v = sum c_i b_i
    Matrix constraints(2 * (int)bound + 1, h.dim());
    for (long l = -bound; l <= bound; l++)
        for (int i = 0; i < h.dim(); i++)
            constraints.at((int)(l + bound), i) = dot(model.iota, mul(pows[bound + l], h.basis.row(i)));
    std::vector<Vec> kernel_vectors;
    for (const Vec& c : kernel(constraints)) {
        Vec v(model.rank, Rational(0));
        for (int i = 0; i < h.dim(); i++)
            for (int j = 0; j < model.rank; j++) v[j] += c[i] * h.basis.at(i, j);
        kernel_vectors.push_back(std::move(v));
    }

    ZeroSubspaceProfile prof;
    prof.kernel = canonical_subspace(kernel_vectors, model.rank);
    int p = model.params.p, q = model.params.q;
    if (p % 2 == 0) {
        prof.parity_case = ParityCase::p_even;
        Vec z(model.rank, Rational(0));
        for (int k = 0; k < p; k += 2) {
            Vec cls = model.generator_class("P" + std::to_string(k));
            for (int j = 0; j < model.rank; j++) z[j] += 2 * cls[j];
        }
        Vec d2 = model.generator_class("Delta2"), d1 = model.generator_class("Delta1");
        for (int j = 0; j < model.rank; j++) z[j] += d2[j] - d1[j];
        prof.predicted_span = std::move(z);
    } else if (q % 2 == 0) {
        prof.parity_case = ParityCase::q_even;
        Vec z(model.rank, Rational(0));
        for (int k = 0; k < q; k += 2) {
            Vec cls = model.generator_class("Q" + std::to_string(k));
            for (int j = 0; j < model.rank; j++) z[j] += 2 * cls[j];
        }
        Vec d2 = model.generator_class("Delta2"), d1 = model.generator_class("Delta1");
        for (int j = 0; j < model.rank; j++) z[j] -= d2[j] - d1[j];
        prof.predicted_span = std::move(z);
    } else {
        prof.parity_case = ParityCase::both_odd;
    }
    return prof;
}

std::pair<int, int> annihilator_order_bounds(const HomologyModel& model,
                                             const CertifiedMinimal& certified,
                                             const ZeroSubspaceProfile* profile) {
    if (!certified.certified)
        throw error("annihilator_order_bounds: minimality was not certified");
    int high = certified.lower_bound;
    int low = high - (profile ? profile->kernel.dim() : 1);
    if (model.params.family == Family::parabolic && low < model.params.p + model.params.q - 1)
        throw error("annihilator_order_bounds: window dropped below p+q-1");
    return {low, high};
}

bool linalg_lemma_check(int p, int q) {
    if (p < 1 || q < 1) return false;
    Matrix m(p, p);
    for (int i = 0; i < p; i++)
        for (int j = 0; j < q; j++) m.at(i, (i * q + j) % p) += 1;
    Matrix w = m;
    return rref(w) == p;
}

}  // namespace minann
