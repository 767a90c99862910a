#include "minann/symbolic.hpp"

#include <sstream>

namespace minann {

int Monomial::log_degree() const {
    int d = 0;
    for (const auto& [c, k] : logs) d += k;
    return d;
}

bool Monomial::operator<(const Monomial& o) const {
    if (logs != o.logs) return logs < o.logs;
    return radical < o.radical;
}

std::pair<Monomial, RationalFunction> Monomial::radical_power(const Rational& center,
                                                              const Rational& exponent) {
    // split e = floor(e) + frac with frac in [0,1)
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), exponent.get_num_mpz_t(), exponent.get_den_mpz_t());
    Rational frac = exponent - Rational(fl);
    Monomial m;
    if (sgn(frac) != 0) m.radical[center] = frac;
    Polynomial lin = Polynomial::linear(center);
    RationalFunction carry(Rational(1));
    if (fl >= 0)
        carry = RationalFunction(lin.pow((int)fl.get_si()));
    else
        carry = RationalFunction(Polynomial(Rational(1)), lin.pow((int)(-fl.get_si())));
    return {m, carry};
}

Monomial Monomial::log_power(const Rational& center, int k) {
    Monomial m;
    if (k < 0) throw error("negative log power");
    if (k > 0) m.logs[center] = k;
    return m;
}

std::pair<Monomial, RationalFunction> mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    RationalFunction carry(Rational(1));
    for (const auto& [c, e] : b.radical) {
        auto it = m.radical.find(c);
        if (it == m.radical.end()) {
            m.radical[c] = e;
            continue;
        }
        Rational s = it->second + e;  // in (0, 2)
        if (s >= 1) {
            s -= 1;
            carry = carry * RationalFunction(Polynomial::linear(c));
        }
        if (sgn(s) == 0)
            m.radical.erase(it);
        else
            it->second = s;
    }
    for (const auto& [c, k] : b.logs) m.logs[c] += k;
    return {m, carry};
}

std::optional<std::pair<Monomial, RationalFunction>> mono_div(const Monomial& a,
                                                              const Monomial& b) {
    Monomial m = a;
    RationalFunction carry(Rational(1));
    for (const auto& [c, k] : b.logs) {
        auto it = m.logs.find(c);
        if (it == m.logs.end() || it->second < k) return std::nullopt;
        it->second -= k;
        if (it->second == 0) m.logs.erase(it);
    }
    for (const auto& [c, e] : b.radical) {
        auto it = m.radical.find(c);
        Rational have = it == m.radical.end() ? Rational(0) : it->second;
        Rational d = have - e;  // in (-1, 1)
        if (sgn(d) < 0) {
            d += 1;
            carry = carry / RationalFunction(Polynomial::linear(c));
        }
        if (it != m.radical.end()) m.radical.erase(it);
        if (sgn(d) != 0) m.radical[c] = d;
    }
    return std::make_pair(m, carry);
}

SymbolicElement::SymbolicElement(const RationalFunction& f) {
    if (!f.is_zero()) terms_[Monomial{}] = f;
}

SymbolicElement::SymbolicElement(const Monomial& m, const RationalFunction& coeff) {
    if (!coeff.is_zero()) terms_[m] = coeff;
}

bool SymbolicElement::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_trivial();
}

bool SymbolicElement::is_log_free() const {
    for (const auto& [m, f] : terms_)
        if (!m.is_log_free()) return false;
    return true;
}

std::optional<RationalFunction> SymbolicElement::as_rational() const {
    if (!is_rational()) return std::nullopt;
    if (terms_.empty()) return RationalFunction();
    return terms_.begin()->second;
}

void SymbolicElement::add_term(const Monomial& m, const RationalFunction& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = coeff;
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

SymbolicElement SymbolicElement::operator-() const {
    SymbolicElement r;
    for (const auto& [m, f] : terms_) r.terms_[m] = -f;
    return r;
}

SymbolicElement SymbolicElement::operator+(const SymbolicElement& o) const {
    SymbolicElement r = *this;
    for (const auto& [m, f] : o.terms_) r.add_term(m, f);
    return r;
}

SymbolicElement SymbolicElement::operator-(const SymbolicElement& o) const {
    return *this + (-o);
}

SymbolicElement SymbolicElement::operator*(const SymbolicElement& o) const {
    SymbolicElement r;
    for (const auto& [ma, fa] : terms_)
        for (const auto& [mb, fb] : o.terms_) {
            auto [m, carry] = mono_mul(ma, mb);
            r.add_term(m, fa * fb * carry);
        }
    return r;
}

SymbolicElement derive(const SymbolicElement& e) {
    SymbolicElement r;
    for (const auto& [m, f] : e.terms()) {
        r.add_term(m, f.derivative());
        for (const auto& [c, a] : m.radical) {
            // (t-c)^a -> a (t-c)^{a-1}: same monomial, coefficient a/(t-c)
            RationalFunction factor(Polynomial(a), Polynomial::linear(c));
            r.add_term(m, f * factor);
        }
        for (const auto& [c, k] : m.logs) {
            Monomial lower = m;
            if (k == 1)
                lower.logs.erase(c);
            else
                lower.logs[c] = k - 1;
            RationalFunction factor(Polynomial(Rational(k)), Polynomial::linear(c));
            r.add_term(lower, f * factor);
        }
    }
    return r;
}

SymbolicElement derive(const SymbolicElement& e, int times) {
    SymbolicElement r = e;
    for (int i = 0; i < times; i++) r = derive(r);
    return r;
}

bool is_rational(const SymbolicElement& e) { return e.is_rational(); }
bool is_log_free(const SymbolicElement& e) { return e.is_log_free(); }

std::optional<SymbolicElement> try_divide(const SymbolicElement& num,
                                          const SymbolicElement& den) {
    if (den.is_zero()) throw error("symbolic division by zero");
    if (num.is_zero()) return SymbolicElement();

    if (den.terms().size() == 1) {
        const auto& [md, fd] = *den.terms().begin();
        SymbolicElement r;
        for (const auto& [m, f] : num.terms()) {
            auto q = mono_div(m, md);
            if (!q) return std::nullopt;
            r.add_term(q->first, f / fd * q->second);
        }
        return r;
    }

    // Leading-term reduction, graded by total log degree. Carries in the
    // radical layer can stall this, so the pass count is capped; a failure
    // here only means the quotient was not found this way.
    auto lead = [](const SymbolicElement& e) { return std::prev(e.terms().end()); };
    SymbolicElement rem = num, quo;
    const auto den_lead = lead(den);
    SymbolicElement den_lead_term(den_lead->first, den_lead->second);
    for (int pass = 0; pass < 256; pass++) {
        if (rem.is_zero()) return quo;
        auto rl = lead(rem);
        if (rl->first.log_degree() < den_lead->first.log_degree()) return std::nullopt;
        auto step = try_divide(SymbolicElement(rl->first, rl->second), den_lead_term);
        if (!step || step->is_zero()) return std::nullopt;
        quo = quo + *step;
        rem = rem - *step * den;
    }
    return std::nullopt;
}

std::string element_str(const SymbolicElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, f] : e.terms()) {
        std::string cs = f.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (neg) cs = cs.substr(1);
        bool coeff_needs_star = true;
        if (m.is_trivial()) {
            os << cs;
            continue;
        }
        if (cs == "1")
            coeff_needs_star = false;
        else if (f.is_polynomial() && f.num().degree() > 0 && cs.find(' ') != std::string::npos)
            os << "(" << cs << ")";
        else
            os << cs;
        bool first_factor = !coeff_needs_star;
        auto sep = [&]() {
            if (!first_factor) os << "*";
            first_factor = false;
        };
        for (const auto& [c, a] : m.radical) {
            sep();
            if (sgn(c) == 0)
                os << "t";
            else
                os << "(" << Polynomial::linear(c).str() << ")";
            os << "^(" << rat_str(a) << ")";
        }
        for (const auto& [c, k] : m.logs) {
            sep();
            os << "log(" << Polynomial::linear(c).str() << ")";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace minann
