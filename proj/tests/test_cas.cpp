#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minann/symbolic.hpp"

using namespace minann;

namespace {

Polynomial poly(std::initializer_list<long> low_to_high) {
    Vec c;
    for (long x : low_to_high) c.push_back(Rational(x));
    return Polynomial::from_coeffs(c);
}

SymbolicElement radical(long center, long num, long den) {
    auto [m, carry] = Monomial::radical_power(Rational(center), Rational(num) / Rational(den));
    return SymbolicElement(m, carry);
}

SymbolicElement logterm(long center, int k = 1) {
    return SymbolicElement(Monomial::log_power(Rational(center), k),
                           RationalFunction(Rational(1)));
}

SymbolicElement ratfun(Polynomial num, Polynomial den) {
    return SymbolicElement(RationalFunction(std::move(num), std::move(den)));
}

// deterministic sampler over a small pool of ring elements
SymbolicElement random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 5), coeff(-3, 3);
    SymbolicElement e;
    for (int terms = 0; terms < 2; terms++) {
        SymbolicElement base;
        switch (pick(rng)) {
            case 0: base = SymbolicElement(Rational(1)); break;
            case 1: base = SymbolicElement::t(); break;
            case 2: base = radical(0, 1, 2); break;
            case 3: base = radical(1, 2, 3); break;
            case 4: base = logterm(0); break;
            default: base = logterm(2, 2); break;
        }
        e = e + SymbolicElement(Rational(coeff(rng))) * base;
    }
    return e;
}

}  // namespace

TEST_CASE("polynomial arithmetic and division") {
    Polynomial a = poly({-1, 0, 1});  // t^2 - 1
    Polynomial b = poly({-1, 1});     // t - 1
    auto [quo, rem] = a.divmod(b);
    CHECK(quo == poly({1, 1}));
    CHECK(rem.is_zero());
    CHECK(a.derivative() == poly({0, 2}));
    CHECK(poly_gcd(a, poly({1, -2, 1})) == b);  // gcd(t^2-1, (t-1)^2) = t-1
    CHECK(poly_gcd(a, poly({1})) == poly({1}));
    CHECK_THROWS_AS(a.divmod(Polynomial()), error);
}

TEST_CASE("rational functions normalize to reduced monic-denominator form") {
    RationalFunction f(poly({0, 2}), poly({0, 0, 4}));  // 2t / 4t^2 = 1/(2t)
    CHECK(f.num() == poly({1}) * Rational(1, 2));
    CHECK(f.den() == poly({0, 1}));
    CHECK(f + (-f) == RationalFunction());
    CHECK(f * RationalFunction(poly({0, 2})) == RationalFunction(Rational(1)));

    RationalFunction inv_t(poly({1}), poly({0, 1}));
    CHECK(inv_t.derivative() == RationalFunction(poly({-1}), poly({0, 0, 1})));
    CHECK_THROWS_AS(f / RationalFunction(), error);
}

TEST_CASE("monomial products carry integer exponent parts into polynomials") {
    auto [m, carry] = Monomial::radical_power(Rational(0), Rational(1) / 2);
    auto [prod, c2] = mono_mul(m, m);  // t^(1/2) * t^(1/2) = t
    CHECK(prod.is_trivial());
    CHECK(c2 == RationalFunction(Polynomial::t()));

    auto [m23, c0] = Monomial::radical_power(Rational(1), Rational(2) / 3);
    auto [prod2, carry2] = mono_mul(m23, m23);  // (t-1)^(4/3) = (t-1) * (t-1)^(1/3)
    CHECK(prod2.radical.at(Rational(1)) == Rational(1) / 3);
    CHECK(carry2 == RationalFunction(poly({-1, 1})));

    // negative exponents normalize with a denominator carry
    auto [m_neg, carry_neg] = Monomial::radical_power(Rational(0), Rational(-1) / 3);
    CHECK(m_neg.radical.at(Rational(0)) == Rational(2) / 3);
    CHECK(carry_neg == RationalFunction(poly({1}), poly({0, 1})));
}

TEST_CASE("derivatives of the basic building blocks") {
    SymbolicElement t2 = ratfun(poly({0, 0, 1}), poly({1}));
    CHECK(derive(t2) == ratfun(poly({0, 2}), poly({1})));

    // d t^(1/2) = 1/(2t) * t^(1/2)
    SymbolicElement root = radical(0, 1, 2);
    SymbolicElement expected =
        SymbolicElement(root.terms().begin()->first,
                        RationalFunction(poly({1}), poly({0, 2})));
    CHECK(derive(root) == expected);

    // d log t = 1/t
    CHECK(derive(logterm(0)) == ratfun(poly({1}), poly({0, 1})));

    // d log(t)^2 = 2 log(t) / t
    SymbolicElement dlog2 = derive(logterm(0, 2));
    CHECK(dlog2 == SymbolicElement(Monomial::log_power(Rational(0), 1),
                                   RationalFunction(poly({2}), poly({0, 1}))));

    CHECK(derive(SymbolicElement(Rational(5))).is_zero());
}

TEST_CASE("derivation is linear and satisfies the Leibniz rule") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 60; trial++) {
        SymbolicElement a = random_element(rng), b = random_element(rng);
        REQUIRE(derive(a + b) == derive(a) + derive(b));
        REQUIRE(derive(a * b) == derive(a) * b + a * derive(b));
    }
}

TEST_CASE("products of nonzero elements stay nonzero") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; trial++) {
        SymbolicElement a = random_element(rng), b = random_element(rng);
        if (a.is_zero() || b.is_zero()) continue;
        REQUIRE_FALSE((a * b).is_zero());
    }
}

TEST_CASE("rationality and log-freeness predicates") {
    SymbolicElement f = ratfun(poly({3}), poly({-1, 1}));  // 3/(t-1)
    CHECK(is_rational(f));
    CHECK(is_log_free(f));

    SymbolicElement root = radical(0, 1, 2);
    CHECK_FALSE(is_rational(root));
    CHECK(is_log_free(root));

    CHECK_FALSE(is_log_free(logterm(0)));
    CHECK_FALSE(is_rational(logterm(0)));
    CHECK(is_rational(SymbolicElement()));
}

TEST_CASE("single-term division always succeeds on divisible input") {
    SymbolicElement root = radical(0, 1, 2);
    SymbolicElement prod = root * logterm(0) * SymbolicElement(Rational(3));
    auto q = try_divide(prod, root);
    REQUIRE(q.has_value());
    CHECK(*q == logterm(0) * SymbolicElement(Rational(3)));

    // dividing away a log that is not there fails
    CHECK_FALSE(try_divide(root, logterm(0)).has_value());
    CHECK_THROWS_AS(try_divide(root, SymbolicElement()), error);
}

TEST_CASE("multi-term division recovers exact quotients") {
    SymbolicElement a = SymbolicElement(Rational(1)) + radical(0, 1, 2);        // 1 + t^(1/2)
    SymbolicElement b = SymbolicElement(Rational(2)) + radical(0, 1, 3);        // 2 + t^(1/3)
    SymbolicElement prod = a * b;
    auto q = try_divide(prod, a);
    REQUIRE(q.has_value());
    CHECK(*q == b);

    // 1/(1 + log t) does not lie in the ring
    SymbolicElement denom = SymbolicElement(Rational(1)) + logterm(0);
    CHECK_FALSE(try_divide(logterm(0), denom).has_value());
}

TEST_CASE("element rendering is deterministic") {
    SymbolicElement e = radical(0, 1, 2) * SymbolicElement(Rational(-3)) + logterm(2, 2);
    CHECK(element_str(e) == element_str(e));
    CHECK(element_str(SymbolicElement()) == "0");
}
