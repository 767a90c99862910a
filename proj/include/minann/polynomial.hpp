#pragma once

#include "minann/rational.hpp"

namespace minann {

// Univariate polynomials over Q in the variable t, dense, low degree first,
// no trailing zero coefficients (zero polynomial has no coefficients).
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    static Polynomial t();                         // the variable itself
    static Polynomial linear(const Rational& c);   // t - c
    static Polynomial from_coeffs(Vec coeffs);     // low degree first

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    const Rational& leading() const;
    Rational coeff(int k) const;
    const Vec& coeffs() const { return c_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Quotient and remainder; the divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial pow(int e) const;

    std::string str() const;

  private:
    void trim();
    Vec c_;
};

// Monic gcd via the Euclidean algorithm (coefficients are exact rationals).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Elements of Q(t): num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Polynomial(Rational(1))) {}
    RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction derivative() const;
    RationalFunction pow(int e) const;  // e may be negative

    std::string str() const;

  private:
    void normalize();
    Polynomial num_, den_;
};

}  // namespace minann
