#include "minann/homology.hpp"

#include <numeric>
#include <sstream>

#include "minann/subspace.hpp"

namespace minann {

const char* family_name(Family f) {
    switch (f) {
        case Family::toy: return "toy";
        case Family::parabolic: return "parabolic";
        case Family::lotka_volterra: return "lotka_volterra";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "toy") return Family::toy;
    if (name == "parabolic") return Family::parabolic;
    if (name == "lotka_volterra") return Family::lotka_volterra;
    return std::nullopt;
}

std::pair<long, long> bezout_mn(int p, int q) {
    if (p < 1 || q < 1) throw error("bezout_mn: p, q must be positive");
    if (std::gcd(p, q) != 1) throw error("bezout_mn: p, q must be coprime");
    // Unique representative with 1 <= m <= q, -p <= n <= 0. Solutions differ
    // by (q, -p), so scanning m over one period is exhaustive.
    for (long m = 1; m <= q; m++) {
        long rem = 1 - (long)p * m;
        if (rem % q == 0) {
            long n = rem / q;
            if (n <= 0 && n >= -(long)p) return {m, n};
        }
    }
    throw error("bezout_mn: no representative found");  // unreachable for coprime input
}

namespace {

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); i++) os << (i ? " " : "") << rat_str(v[i]);
    os << ")";
    return os.str();
}

Rational int_pow(const Rational& base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; i++) r *= base;
    return r;
}

// Everything needed before the relations are eliminated.
struct Scaffold {
    std::vector<std::string> gens;
    std::vector<Vec> relations;  // each expands to zero in homology
    std::vector<int> drop;       // one eliminated generator per relation
    Matrix mon0_gen;
    std::optional<Matrix> monc_gen;
    Vec iota_gen;  // empty when the family has no intersection data
    std::optional<Rational> critical_value;
};

int mod(long a, int m) {
    long r = a % m;
    return (int)(r < 0 ? r + m : r);
}

Scaffold scaffold_toy(const FamilyParams& fp) {
    int p = fp.p, q = fp.q;
    Scaffold s;
    s.gens = {"gamma", "Delta"};
    auto Q = [&](int j) { return 2 + mod(j, q); };
    auto P = [&](int k) { return 2 + q + mod(k, p); };
    for (int j = 0; j < q; j++) s.gens.push_back("Q" + std::to_string(j));
    for (int k = 0; k < p; k++) s.gens.push_back("P" + std::to_string(k));
    int ng = (int)s.gens.size();

    // Q0+...+Q_{q-1} = -Delta  and  P0+...+P_{p-1} = Delta
    Vec rq(ng, Rational(0)), rp(ng, Rational(0));
    rq[1] = 1;
    for (int j = 0; j < q; j++) rq[Q(j)] = 1;
    rp[1] = -1;
    for (int k = 0; k < p; k++) rp[P(k)] = 1;
    s.relations = {rq, rp};
    s.drop = {Q(q - 1), P(p - 1)};

    // mon Q_j = Q_{j-m}, mon P_k = P_{k+n}, mon Delta = Delta.
    // The gamma row adds m Q-generators and |n| P-generators walking from
    // index 0 in the shift direction (both shifts are negative here); the
    // p = 1 edge (n = 0) contributes the single P0, which makes the (1,1)
    // monodromy the identity, as the trivial fibration of x*y requires.
    Matrix m0 = Matrix::identity(ng);
    for (int j = 0; j < q; j++) m0.set_col(Q(j), Vec(ng, Rational(0)));
    for (int k = 0; k < p; k++) m0.set_col(P(k), Vec(ng, Rational(0)));
    for (int j = 0; j < q; j++) m0.at(Q(j - (int)fp.m), Q(j)) = 1;
    for (int k = 0; k < p; k++) m0.at(P(k + (int)fp.n), P(k)) = 1;
    for (long i = 0; i < fp.m; i++) m0.at(Q((int)-i), 0) += 1;
    if (fp.n == 0) {
        m0.at(P(0), 0) += 1;
    } else {
        for (long i = 0; i < -fp.n; i++) m0.at(P((int)-i), 0) += 1;
    }
    s.mon0_gen = std::move(m0);
    return s;
}

Scaffold scaffold_parabolic(const FamilyParams& fp) {
    int p = fp.p, q = fp.q;
    Scaffold s;
    s.gens = {"gamma", "Delta1", "Delta2"};
    auto Q = [&](int j) { return 3 + mod(j, q); };
    auto P = [&](int k) { return 3 + q + mod(k, p); };
    for (int j = 0; j < q; j++) s.gens.push_back("Q" + std::to_string(j));
    for (int k = 0; k < p; k++) s.gens.push_back("P" + std::to_string(k));
    int ng = (int)s.gens.size();

    // Q0+...+Q_{q-1} = Delta2 - Delta1  and  P0+...+P_{p-1} = Delta1 - Delta2
    Vec rq(ng, Rational(0)), rp(ng, Rational(0));
    rq[1] = 1;
    rq[2] = -1;
    for (int j = 0; j < q; j++) rq[Q(j)] = 1;
    rp[1] = -1;
    rp[2] = 1;
    for (int k = 0; k < p; k++) rp[P(k)] = 1;
    s.relations = {rq, rp};
    s.drop = {Q(q - 1), P(p - 1)};

    // Intersection indices with gamma; coinciding index positions add
    // (q = 1 makes Q0 carry -2, p = 1 makes P0 carry +2), which is forced
    // by compatibility with the relations.
    Vec iota(ng, Rational(0));
    iota[1] += 1;
    iota[2] += -1;
    iota[Q(0)] += -1;
    iota[Q(q - 1)] += -1;
    iota[P(0)] += 1;
    iota[P(p - 1)] += 1;
    s.iota_gen = std::move(iota);

    // mon0 Q_j = Q_{j+m}, mon0 P_k = P_{k-n}, mon0 Delta_i = Delta_i,
    // mon0 gamma = gamma + Q_0..Q_{m-1} + P_0..P_{|n|-1}.
    Matrix m0 = Matrix::identity(ng);
    for (int j = 0; j < q; j++) m0.set_col(Q(j), Vec(ng, Rational(0)));
    for (int k = 0; k < p; k++) m0.set_col(P(k), Vec(ng, Rational(0)));
    for (int j = 0; j < q; j++) m0.at(Q(j + (int)fp.m), Q(j)) = 1;
    for (int k = 0; k < p; k++) m0.at(P(k - (int)fp.n), P(k)) = 1;
    for (long i = 0; i < fp.m; i++) m0.at(Q((int)i), 0) += 1;
    for (long i = 0; i < -fp.n; i++) m0.at(P((int)i), 0) += 1;
    s.mon0_gen = std::move(m0);

    // monc transcribed from the Picard-Lefschetz table around the center:
    // Q0, Q_{q-1} lose a gamma; P0, P_{p-1} and Delta1 gain one; Delta2
    // loses one; gamma is fixed. Coinciding lines accumulate.
    Matrix mc = Matrix::identity(ng);
    mc.at(0, Q(0)) += -1;
    mc.at(0, Q(q - 1)) += -1;
    mc.at(0, P(0)) += 1;
    mc.at(0, P(p - 1)) += 1;
    mc.at(0, 1) += 1;
    mc.at(0, 2) += -1;
    s.monc_gen = std::move(mc);

    Rational pq(p + q);
    s.critical_value = int_pow(Rational(p) / pq, p) * int_pow(Rational(-q) / pq, q);
    return s;
}

Scaffold scaffold_lotka_volterra(const FamilyParams& fp) {
    int p = fp.p;
    Scaffold s;
    s.gens = {"gamma", "Delta1", "Delta2"};
    auto P = [&](int k) { return 3 + mod(k, p); };
    auto D = [&](int j) { return 3 + p + mod(j, p); };
    for (int k = 0; k < p; k++) s.gens.push_back("P" + std::to_string(k));
    for (int j = 0; j < p; j++) s.gens.push_back("delta" + std::to_string(j));
    int ng = (int)s.gens.size();

    // P0+...+P_{p-1} = Delta1 - Delta2 + delta0
    Vec rp(ng, Rational(0));
    rp[1] = -1;
    rp[2] = 1;
    rp[D(0)] = -1;
    for (int k = 0; k < p; k++) rp[P(k)] += 1;
    s.relations = {rp};
    s.drop = {P(p - 1)};

    Vec iota(ng, Rational(0));
    iota[1] += -1;
    iota[2] += -1;
    iota[P(p - 1)] += -1;
    iota[D(0)] += -1;
    s.iota_gen = std::move(iota);

    // mon0 gamma = gamma + P0; mon0 P_j = P_{j+1} for j < p-1;
    // mon0 P_{p-1} = P0 + delta1 - delta0; mon0 delta_j = delta_{j+1 mod p}.
    Matrix m0 = Matrix::identity(ng);
    for (int k = 0; k < p; k++) m0.set_col(P(k), Vec(ng, Rational(0)));
    for (int j = 0; j < p; j++) m0.set_col(D(j), Vec(ng, Rational(0)));
    m0.at(P(0), 0) += 1;
    for (int j = 0; j + 1 < p; j++) m0.at(P(j + 1), P(j)) = 1;
    m0.at(P(0), P(p - 1)) += 1;
    m0.at(D(1), P(p - 1)) += 1;
    m0.at(D(0), P(p - 1)) += -1;
    for (int j = 0; j < p; j++) m0.at(D(j + 1), D(j)) += 1;
    s.mon0_gen = std::move(m0);

    // monc is the Picard-Lefschetz operator v -> v + iota(v) * gamma.
    Matrix mc = Matrix::identity(ng);
    for (int g = 0; g < ng; g++) mc.at(0, g) += s.iota_gen[g];
    s.monc_gen = std::move(mc);

    // F(p/(1+2p), p/(1+2p)) for F = (xy)^p (x+y-1)
    Rational x = Rational(p) / Rational(2 * p + 1);
    s.critical_value = int_pow(x * x, p) * (2 * x - 1);
    return s;
}

Scaffold make_scaffold(const FamilyParams& fp) {
    switch (fp.family) {
        case Family::toy: return scaffold_toy(fp);
        case Family::parabolic: return scaffold_parabolic(fp);
        case Family::lotka_volterra: return scaffold_lotka_volterra(fp);
    }
    throw error("make_scaffold: unknown family");
}

FamilyParams make_params(Family f, int p, int q) {
    if (f == Family::lotka_volterra) {
        if (p < 1) throw error("lotka_volterra requires p >= 1");
        q = 1;
    } else {
        if (p < 1 || q < 1) throw error("family parameters must be positive");
        if (std::gcd(p, q) != 1) throw error("family parameters must be coprime");
    }
    auto [m, n] = bezout_mn(p, q);
    return FamilyParams{f, p, q, m, n};
}

HomologyModel assemble(const FamilyParams& fp, Scaffold&& s) {
    int ng = (int)s.gens.size();
    std::vector<bool> dropped(ng, false);
    for (int d : s.drop) dropped[d] = true;

    HomologyModel model;
    model.params = fp;
    model.generator_names = s.gens;
    model.relations = s.relations;
    std::vector<int> free_gens;
    for (int g = 0; g < ng; g++)
        if (!dropped[g]) {
            free_gens.push_back(g);
            model.basis_names.push_back(s.gens[g]);
        }
    model.rank = (int)free_gens.size();
    model.gamma_index = 0;

    // subst column g = expansion of generator g through the free basis
    Matrix subst(model.rank, ng);
    for (int j = 0; j < model.rank; j++) subst.at(j, free_gens[j]) = 1;
    for (size_t r = 0; r < s.relations.size(); r++) {
        int d = s.drop[r];
        const Vec& rel = s.relations[r];
        Rational inv = -1 / rel[d];
        for (int g = 0; g < ng; g++) {
            if (g == d || sgn(rel[g]) == 0) continue;
            for (int j = 0; j < model.rank; j++) subst.at(j, d) += inv * rel[g] * subst.at(j, g);
        }
    }
    for (const Vec& rel : s.relations)
        if (!is_zero_vec(mul(subst, rel)))
            throw error("homology builder: relation does not vanish after elimination");

    auto project = [&](const Matrix& gen_level) {
        Matrix free_level(model.rank, model.rank);
        for (int j = 0; j < model.rank; j++)
            free_level.set_col(j, mul(subst, gen_level.col(free_gens[j])));
        return free_level;
    };
    model.mon0 = project(s.mon0_gen);
    if (s.monc_gen) model.monc = project(*s.monc_gen);
    if (!s.iota_gen.empty()) {
        model.iota.resize(model.rank);
        for (int j = 0; j < model.rank; j++) model.iota[j] = s.iota_gen[free_gens[j]];
    }
    model.critical_value = s.critical_value;
    model.mon0_gen = std::move(s.mon0_gen);
    model.monc_gen = std::move(s.monc_gen);
    model.iota_gen = std::move(s.iota_gen);
    return model;
}

}  // namespace

int HomologyModel::generator_index(const std::string& name) const {
    for (size_t g = 0; g < generator_names.size(); g++)
        if (generator_names[g] == name) return (int)g;
    throw error("unknown generator '" + name + "'");
}

Vec HomologyModel::generator_class(int gen_index) const {
    const std::string& name = generator_names.at(gen_index);
    for (size_t j = 0; j < basis_names.size(); j++)
        if (basis_names[j] == name) {
            Vec e(rank, Rational(0));
            e[j] = 1;
            return e;
        }
    // eliminated: solve from the (unique) relation containing it
    for (const Vec& rel : relations) {
        if (sgn(rel[gen_index]) == 0) continue;
        Vec v(rank, Rational(0));
        Rational inv = -1 / rel[gen_index];
        for (size_t g = 0; g < rel.size(); g++) {
            if ((int)g == gen_index || sgn(rel[g]) == 0) continue;
            Vec w = generator_class((int)g);
            for (int j = 0; j < rank; j++) v[j] += inv * rel[g] * w[j];
        }
        return v;
    }
    throw error("generator_class: generator in no relation and not free");
}

Vec HomologyModel::generator_class(const std::string& name) const {
    return generator_class(generator_index(name));
}

HomologyModel build_toy(int p, int q) {
    FamilyParams fp = make_params(Family::toy, p, q);
    return assemble(fp, scaffold_toy(fp));
}

HomologyModel build_parabolic(int p, int q) {
    FamilyParams fp = make_params(Family::parabolic, p, q);
    return assemble(fp, scaffold_parabolic(fp));
}

HomologyModel build_lotka_volterra(int p) {
    FamilyParams fp = make_params(Family::lotka_volterra, p, 1);
    return assemble(fp, scaffold_lotka_volterra(fp));
}

HomologyModel build_family(Family f, int p, int q) {
    switch (f) {
        case Family::toy: return build_toy(p, q);
        case Family::parabolic: return build_parabolic(p, q);
        case Family::lotka_volterra: return build_lotka_volterra(p);
    }
    throw error("build_family: unknown family");
}

void attach_generator_action(HomologyModel& model) {
    Scaffold s = make_scaffold(model.params);
    model.mon0_gen = std::move(s.mon0_gen);
    model.monc_gen = std::move(s.monc_gen);
    model.iota_gen = std::move(s.iota_gen);
}

bool ValidationReport::all_pass() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

ValidationReport validate(const HomologyModel& model) {
    ValidationReport rep;
    auto check = [&](const std::string& name, bool pass, const std::string& witness = "") {
        rep.checks.push_back(Check{name, pass, pass ? "" : witness});
    };
    const FamilyParams& fp = model.params;

    int expected_rank = 0;
    switch (fp.family) {
        case Family::toy: expected_rank = fp.p + fp.q; break;
        case Family::parabolic: expected_rank = fp.p + fp.q + 1; break;
        case Family::lotka_volterra: expected_rank = 2 * fp.p + 2; break;
    }
    check("rank_formula",
          model.rank == expected_rank && (int)model.basis_names.size() == model.rank &&
              model.mon0.rows == model.rank && model.mon0.cols == model.rank,
          "rank " + std::to_string(model.rank) + ", expected " + std::to_string(expected_rank));

    {
        bool ok = true;
        std::string w;
        for (const Vec& rel : model.relations) {
            Vec v(model.rank, Rational(0));
            for (size_t g = 0; g < rel.size(); g++)
                if (sgn(rel[g]) != 0) {
                    Vec cls = model.generator_class((int)g);
                    for (int j = 0; j < model.rank; j++) v[j] += rel[g] * cls[j];
                }
            if (!is_zero_vec(v)) {
                ok = false;
                w = "relation " + vec_str(rel) + " expands to " + vec_str(v);
                break;
            }
        }
        check("relations_vanish_in_free_basis", ok, w);
    }

    {
        // generator-level action must preserve the span of the relations
        Subspace rel_span = canonical_subspace(model.relations, (int)model.generator_names.size());
        auto quotient_ok = [&](const Matrix& act) {
            for (const Vec& rel : model.relations)
                if (!member(rel_span, mul(act, rel))) return false;
            return true;
        };
        check("mon0_quotient_invariance", quotient_ok(model.mon0_gen));
        if (model.monc_gen) check("monc_quotient_invariance", quotient_ok(*model.monc_gen));
    }

    {
        Rational d0 = det(model.mon0);
        check("mon0_unimodular", d0 == 1 || d0 == -1, "det(mon0) = " + rat_str(d0));
    }

    if (model.has_iota()) {
        check("iota_gamma_zero", sgn(model.iota[model.gamma_index]) == 0,
              "iota(gamma) = " + rat_str(model.iota[model.gamma_index]));

        bool compat = true;
        std::string w;
        for (const Vec& rel : model.relations) {
            Rational s = dot(model.iota_gen, rel);
            if (sgn(s) != 0) {
                compat = false;
                w = "iota on relation " + vec_str(rel) + " = " + rat_str(s);
            }
        }
        // the family sum identities
        auto gsum = [&](char prefix) {
            Rational s = 0;
            for (size_t g = 0; g < model.generator_names.size(); g++)
                if (model.generator_names[g][0] == prefix) s += model.iota_gen[g];
            return s;
        };
        auto gval = [&](const std::string& n) { return model.iota_gen[model.generator_index(n)]; };
        if (fp.family == Family::parabolic) {
            compat = compat && gsum('Q') == -2 && gsum('Q') == gval("Delta2") - gval("Delta1");
            compat = compat && gsum('P') == 2 && gsum('P') == gval("Delta1") - gval("Delta2");
        } else if (fp.family == Family::lotka_volterra) {
            Rational rhs = gval("Delta1") - gval("Delta2") + gval("delta0");
            compat = compat && gsum('P') == -1 && gsum('P') == rhs;
        }
        check("iota_relation_compatibility", compat, w);
    }

    if (model.monc) {
        const Matrix& mc = *model.monc;
        {
            Rational dc = det(mc);
            check("monc_determinant_one", dc == 1, "det(monc) = " + rat_str(dc));
        }
        {
            Matrix nil = sub(mc, Matrix::identity(model.rank));
            bool sq_zero = mul(nil, nil) == Matrix(model.rank, model.rank);
            std::vector<Vec> cols;
            for (int c = 0; c < model.rank; c++) cols.push_back(nil.col(c));
            Subspace image = canonical_subspace(cols, model.rank);
            Vec gamma(model.rank, Rational(0));
            gamma[model.gamma_index] = 1;
            bool img_gamma = image.dim() == 1 && member(image, gamma);
            check("monc_unipotent_rank_one", sq_zero && img_gamma,
                  "(monc - id)^2 zero: " + std::string(sq_zero ? "yes" : "no") +
                      ", image: " + subspace_str(image));
        }
        if (model.has_iota()) {
            bool ok = true;
            std::string w;
            for (int j = 0; j < model.rank; j++) {
                Rational lhs = dot(model.iota, mc.col(j));
                if (lhs != model.iota[j]) {
                    ok = false;
                    w = "iota(monc e_" + std::to_string(j) + ") = " + rat_str(lhs) +
                        " != " + rat_str(model.iota[j]);
                    break;
                }
            }
            check("monc_preserves_iota", ok, w);
        }
    }

    return rep;
}

}  // namespace minann
