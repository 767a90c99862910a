#include "minann/polynomial.hpp"

#include <sstream>

namespace minann {

Polynomial::Polynomial(const Rational& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

Polynomial Polynomial::t() { return from_coeffs({Rational(0), Rational(1)}); }

Polynomial Polynomial::linear(const Rational& c) { return from_coeffs({-c, Rational(1)}); }

Polynomial Polynomial::from_coeffs(Vec coeffs) {
    Polynomial p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void Polynomial::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Polynomial::coeff(int k) const {
    return k >= 0 && k < (int)c_.size() ? c_[k] : Rational(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Rational& x : r.c_) x = -x;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); i++) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); i++) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    Polynomial r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); i++) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); j++) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r = *this;
    for (Rational& x : r.c_) x *= c;
    r.trim();
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw error("polynomial division by zero");
    Polynomial rem = *this;
    Polynomial quo;
    if (degree() >= d.degree()) quo.c_.assign(degree() - d.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rational f = rem.leading() / d.leading();
        quo.c_[k] += f;
        for (int i = 0; i <= d.degree(); i++) rem.c_[k + i] -= f * d.c_[i];
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

Polynomial Polynomial::derivative() const {
    Polynomial r;
    for (size_t i = 1; i < c_.size(); i++) r.c_.push_back(Rational((long)i) * c_[i]);
    r.trim();
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / leading());
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw error("negative polynomial power");
    Polynomial r(Rational(1)), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; k--) {
        Rational c = c_[k];
        if (sgn(c) == 0) continue;
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        Rational ac = abs(c);
        if (k == 0) {
            os << rat_str(ac);
        } else {
            if (ac != 1) os << rat_str(ac) << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial(Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool RationalFunction::is_one() const {
    return den_.degree() == 0 && num_.degree() == 0 && num_.coeff(0) == 1;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw error("rational function division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw error("negative power of zero");
        return RationalFunction(den_.pow(-e), num_.pow(-e));
    }
    return RationalFunction(num_.pow(e), den_.pow(e));
}

std::string RationalFunction::str() const {
    // a degree-zero denominator is exactly 1 after normalization
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace minann
