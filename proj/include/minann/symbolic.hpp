#pragma once

#include <map>
#include <optional>

#include "minann/polynomial.hpp"

namespace minann {

/* Transcendental monomials and the symbolic ring.
 * ============================================================
 * A Monomial is prod (t-c)^a * prod log(t-c)^k with a in (0,1) and k >= 1;
 * the integer part of every radical exponent is carried into the Q(t)
 * coefficient, so monomial equality is syntactic and the term maps of
 * SymbolicElement are canonical. The resulting ring (a Kummer radical
 * extension of Q(t) with a polynomial log layer on top) is an integral
 * domain, so cancellation is valid; this is asserted, not re-proved at
 * runtime.
 */
struct Monomial {
    std::map<Rational, Rational> radical;  // center -> exponent in (0,1)
    std::map<Rational, int> logs;          // center -> power >= 1

    bool is_trivial() const { return radical.empty() && logs.empty(); }
    bool is_log_free() const { return logs.empty(); }
    int log_degree() const;

    bool operator==(const Monomial& o) const { return radical == o.radical && logs == o.logs; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    bool operator<(const Monomial& o) const;

    // (t-c)^e with e normalized into [0,1); the integer part is returned as
    // an exact power of (t-c) to fold into the coefficient.
    static std::pair<Monomial, RationalFunction> radical_power(const Rational& center,
                                                               const Rational& exponent);
    static Monomial log_power(const Rational& center, int k);
};

// Product of monomials; the RationalFunction is the carried polynomial
// factor from exponents that crossed 1.
std::pair<Monomial, RationalFunction> mono_mul(const Monomial& a, const Monomial& b);

// a / b; fails (nullopt) iff a log power would go negative.
std::optional<std::pair<Monomial, RationalFunction>> mono_div(const Monomial& a,
                                                              const Monomial& b);

// Finite Q(t)-linear combinations of monomials; the term map stores no zero
// coefficients.
class SymbolicElement {
  public:
    SymbolicElement() = default;
    SymbolicElement(const Rational& c) : SymbolicElement(RationalFunction(c)) {}
    SymbolicElement(const RationalFunction& f);
    SymbolicElement(const Monomial& m, const RationalFunction& coeff);

    static SymbolicElement t() { return SymbolicElement(RationalFunction(Polynomial::t())); }

    const std::map<Monomial, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True iff the element lies in Q(t) (only the trivial monomial appears).
    bool is_rational() const;
    bool is_log_free() const;
    std::optional<RationalFunction> as_rational() const;

    SymbolicElement operator-() const;
    SymbolicElement operator+(const SymbolicElement& o) const;
    SymbolicElement operator-(const SymbolicElement& o) const;
    SymbolicElement operator*(const SymbolicElement& o) const;
    bool operator==(const SymbolicElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymbolicElement& o) const { return !(*this == o); }

    void add_term(const Monomial& m, const RationalFunction& coeff);

  private:
    std::map<Monomial, RationalFunction> terms_;
};

// Derivation extending d/dt: d(t-c)^a = a (t-c)^{a-1}, d log(t-c)^k =
// k log(t-c)^{k-1} / (t-c). Linear, satisfies the Leibniz rule.
SymbolicElement derive(const SymbolicElement& e);
SymbolicElement derive(const SymbolicElement& e, int times);

bool is_rational(const SymbolicElement& e);
bool is_log_free(const SymbolicElement& e);

// Exact division in the ring. Complete for single-term divisors; for
// multi-term divisors a capped leading-term reduction is attempted, and
// nullopt means "no quotient found", not a proof of indivisibility.
std::optional<SymbolicElement> try_divide(const SymbolicElement& num,
                                          const SymbolicElement& den);

std::string element_str(const SymbolicElement& e);

}  // namespace minann
