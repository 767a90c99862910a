#pragma once

#include <optional>
#include <string>

#include "minann/matrix.hpp"

namespace minann {

/* Fiber homology lattices of the three polynomial families.
 * ============================================================
 * Each model carries named generators with their relations, a free
 * basis obtained by eliminating one generator per relation, the
 * intersection-with-gamma functional iota, and exact monodromy
 * matrices around t = 0 (mon0) and around the center critical value
 * (monc, absent for the toy family which is a relative-homology
 * model without intersection data).
 */

enum class Family { toy, parabolic, lotka_volterra };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct FamilyParams {
    Family family;
    int p = 0;
    int q = 0;
    long m = 0;  // p*m + q*n = 1 with 1 <= m <= q and -p <= n <= 0
    long n = 0;
};

// The unique pair with p*m + q*n = 1, 1 <= m <= q, -p <= n <= 0. The bounds
// are strict (|m| < q, |n| < p) whenever p > 1 and q > 1; for p = q = 1 the
// convention yields (1, 0). Throws on non-coprime input.
std::pair<long, long> bezout_mn(int p, int q);

struct HomologyModel {
    FamilyParams params;
    std::vector<std::string> generator_names;
    std::vector<Vec> relations;  // generator coordinates; each expands to zero
    std::vector<std::string> basis_names;
    int rank = 0;
    Vec iota;  // on the free basis; empty for toy
    Matrix mon0;
    std::optional<Matrix> monc;
    std::optional<Rational> critical_value;  // puncture encircled by monc
    int gamma_index = 0;

    // Generator-level data, kept for quotient-invariance validation.
    Matrix mon0_gen;
    std::optional<Matrix> monc_gen;
    Vec iota_gen;

    bool has_iota() const { return !iota.empty(); }
    int generator_index(const std::string& name) const;
    // Expansion of a generator through the free basis (relations substituted).
    Vec generator_class(int gen_index) const;
    Vec generator_class(const std::string& name) const;
};

HomologyModel build_toy(int p, int q);
HomologyModel build_parabolic(int p, int q);
HomologyModel build_lotka_volterra(int p);
HomologyModel build_family(Family f, int p, int q);

// Recomputes the generator-level matrices from params (used after loading a
// model dump, which stores only the free-basis data).
void attach_generator_action(HomologyModel& model);

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // populated on failure
};

struct ValidationReport {
    std::vector<Check> checks;
    bool all_pass() const;
};

// Re-checks every model invariant against the stored fields; failures are
// report entries with witnesses, never exceptions.
ValidationReport validate(const HomologyModel& model);

}  // namespace minann
