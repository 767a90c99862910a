#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minann/monodromy.hpp"
#include "minann/subspace.hpp"

using namespace minann;

namespace {

Vec gamma_of(const HomologyModel& m) {
    Vec g(m.rank, Rational(0));
    g[m.gamma_index] = 1;
    return g;
}

// The center monodromy table, transcribed line by line at generator level
// and then pushed to the free basis: Q0 and Q_{q-1} lose a gamma, P0 and
// P_{p-1} and Delta1 gain one, Delta2 loses one, everything else is fixed.
// Coinciding index positions accumulate. sign = -1 builds the flipped
// (wrong) convention for the negative control.
Matrix center_table(const HomologyModel& m, int sign) {
    int ng = (int)m.generator_names.size();
    Matrix table = Matrix::identity(ng);
    int p = m.params.p, q = m.params.q;
    auto gi = [&](const std::string& n) { return m.generator_index(n); };
    table.at(0, gi("Q0")) += -sign;
    table.at(0, gi("Q" + std::to_string(q - 1))) += -sign;
    table.at(0, gi("P0")) += sign;
    table.at(0, gi("P" + std::to_string(p - 1))) += sign;
    table.at(0, gi("Delta1")) += sign;
    table.at(0, gi("Delta2")) += -sign;
    // push to the free basis: free generators map to free generators here
    Matrix free_level(m.rank, m.rank);
    for (int j = 0; j < m.rank; j++) {
        int g = m.generator_index(m.basis_names[j]);
        Vec img(m.rank, Rational(0));
        for (int h = 0; h < ng; h++) {
            if (sgn(table.at(h, g)) == 0) continue;
            Vec cls = m.generator_class(h);
            for (int i = 0; i < m.rank; i++) img[i] += table.at(h, g) * cls[i];
        }
        free_level.set_col(j, img);
    }
    return free_level;
}

}  // namespace

TEST_CASE("picard_lefschetz reproduces the stored center monodromy") {
    for (auto [p, q] : {std::pair{1, 2}, {2, 3}, {3, 4}, {2, 5}}) {
        HomologyModel m = build_parabolic(p, q);
        REQUIRE(picard_lefschetz(m) == *m.monc);
    }
    for (int p : {1, 2, 5}) {
        HomologyModel m = build_lotka_volterra(p);
        REQUIRE(picard_lefschetz(m) == *m.monc);
    }
}

TEST_CASE("picard_lefschetz matches the transcribed center table entry-exactly") {
    for (auto [p, q] : {std::pair{1, 2}, {2, 3}, {3, 4}, {2, 5}}) {
        HomologyModel m = build_parabolic(p, q);
        REQUIRE(picard_lefschetz(m) == center_table(m, +1));
        // flipping the sign convention must break the table
        REQUIRE(picard_lefschetz(m) != center_table(m, -1));
    }
}

TEST_CASE("picard_lefschetz moves individual classes as the table says") {
    HomologyModel m = build_parabolic(2, 3);
    Matrix pl = picard_lefschetz(m);
    Vec g = gamma_of(m);
    CHECK(mul(pl, m.generator_class("Q0")) == vec_sub(m.generator_class("Q0"), g));
    CHECK(mul(pl, m.generator_class("Delta1")) == vec_add(m.generator_class("Delta1"), g));
    CHECK(mul(pl, g) == g);
}

TEST_CASE("picard_lefschetz is unipotent with one-dimensional image") {
    HomologyModel m = build_parabolic(3, 4);
    Matrix pl = picard_lefschetz(m);
    Matrix nil = sub(pl, Matrix::identity(m.rank));
    CHECK(mul(nil, nil) == Matrix(m.rank, m.rank));
    std::vector<Vec> cols;
    for (int c = 0; c < m.rank; c++) cols.push_back(nil.col(c));
    CHECK(canonical_subspace(cols, m.rank) == span_of(gamma_of(m)));
}

TEST_CASE("pairing values against gamma") {
    HomologyModel m = build_parabolic(1, 2);
    CHECK(pair_with_gamma(m, m.generator_class("Delta2")) == -1);
    CHECK(pair_with_gamma(m, gamma_of(m)) == 0);

    HomologyModel lv = build_lotka_volterra(2);
    CHECK(pair_with_gamma(lv, lv.generator_class("delta0")) == -1);
    CHECK_THROWS_AS(pair_with_gamma(lv, Vec(3, Rational(0))), error);

    HomologyModel toy = build_toy(1, 2);
    CHECK_THROWS_AS(pair_with_gamma(toy, Vec(3, Rational(0))), error);
    CHECK_THROWS_AS(picard_lefschetz(toy), error);
}

TEST_CASE("pairing is preserved by the center monodromy") {
    for (auto [p, q] : {std::pair{2, 3}, {3, 4}}) {
        HomologyModel m = build_parabolic(p, q);
        Matrix pl = picard_lefschetz(m);
        for (int j = 0; j < m.rank; j++) {
            Vec e(m.rank, Rational(0));
            e[j] = 1;
            REQUIRE(pair_with_gamma(m, mul(pl, e)) == pair_with_gamma(m, e));
        }
    }
}

TEST_CASE("act applies words right to left with signed letters") {
    HomologyModel m = build_parabolic(1, 2);
    MonodromyGroupSpec spec = MonodromyGroupSpec::make({m.mon0, *m.monc}, {"mon0", "monc"});
    Vec g = gamma_of(m);

    CHECK(act(spec, {}, g) == g);
    Vec moved = act(spec, {1, -1}, g);
    CHECK(moved == g);
    CHECK(act(spec, {2, -2, 1, -1}, g) == g);

    // two loops around zero: gamma + Delta2 - Delta1
    Vec expect = vec_add(vec_sub(g, m.generator_class("Delta1")), m.generator_class("Delta2"));
    CHECK(act(spec, {1, 1}, g) == expect);

    CHECK_THROWS_AS(act(spec, {3}, g), error);
    CHECK_THROWS_AS(act(spec, {0}, g), error);
}

TEST_CASE("group spec rejects malformed generators") {
    Matrix singular(2, 2);
    CHECK_THROWS_AS(MonodromyGroupSpec::make({singular}, {"bad"}), error);
    CHECK_THROWS_AS(MonodromyGroupSpec::make({Matrix::identity(2), Matrix::identity(3)},
                                             {"a", "b"}),
                    error);
    CHECK_THROWS_AS(MonodromyGroupSpec::make({Matrix::identity(2)}, {"a", "b"}), error);
}
