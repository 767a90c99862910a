#include "minann/expr.hpp"

#include <cctype>

namespace minann {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    SymbolicElement run() {
        SymbolicElement e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) pos_++;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Rational integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) pos_++;
        if (pos_ == start) fail("expected a number");
        return rat_parse(s_.substr(start, pos_ - start));
    }

    SymbolicElement expr() {
        bool neg = eat('-');
        SymbolicElement e = term();
        if (neg) e = -e;
        while (true) {
            if (eat('+'))
                e = e + term();
            else if (eat('-'))
                e = e - term();
            else
                return e;
        }
    }

    SymbolicElement term() {
        SymbolicElement e = factor();
        while (true) {
            if (eat('*')) {
                e = e * factor();
            } else if (eat('/')) {
                size_t at = pos_;
                SymbolicElement d = factor();
                auto q = try_divide(e, d);
                if (!q) throw parse_error("division is not exact in this ring", at);
                e = *q;
            } else {
                return e;
            }
        }
    }

    SymbolicElement factor() {
        SymbolicElement base = atom();
        if (!eat('^')) return base;
        auto [num, den] = exponent();
        if (den == 1) return int_power(base, num);
        // fractional power: the base must be exactly t - c
        Rational c = as_center(base, "a fractional power requires base t - c");
        auto [mono, carry] = Monomial::radical_power(c, Rational(num) / Rational(den));
        return SymbolicElement(mono, carry);
    }

    // returns (numerator, denominator) with denominator >= 1
    std::pair<long, long> exponent() {
        skip_ws();
        bool paren = eat('(');
        bool neg = eat('-');
        Rational n = integer();
        long den = 1;
        if (paren && eat('/')) den = (long)integer().get_num().get_si();
        if (paren) expect(')');
        if (den == 0) fail("zero exponent denominator");
        long num = (long)n.get_num().get_si();
        return {neg ? -num : num, den};
    }

    SymbolicElement int_power(const SymbolicElement& base, long e) {
        if (auto f = base.as_rational()) return SymbolicElement(f->pow((int)e));
        if (e >= 0) {
            SymbolicElement r(Rational(1));
            for (long i = 0; i < e; i++) r = r * base;
            return r;
        }
        // negative power of a single log-free monomial term
        if (base.terms().size() == 1 && base.is_log_free()) {
            const auto& [m, f] = *base.terms().begin();
            SymbolicElement one(Rational(1));
            auto q = try_divide(one, SymbolicElement(m, f));
            if (q) {
                SymbolicElement r(Rational(1));
                for (long i = 0; i < -e; i++) r = r * *q;
                return r;
            }
        }
        fail("negative power of a non-invertible element");
    }

    Rational as_center(const SymbolicElement& e, const std::string& msg) {
        auto f = e.as_rational();
        if (!f || !f->is_polynomial()) fail(msg);
        const Polynomial& p = f->num();
        Rational dc = f->den().coeff(0);
        if (p.degree() != 1 || p.coeff(1) != dc) fail(msg);
        return -p.coeff(0) / dc;
    }

    SymbolicElement atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit((unsigned char)c)) return SymbolicElement(RationalFunction(integer()));
        if (c == 't' && !std::isalpha((unsigned char)peek_at(pos_ + 1))) {
            pos_++;
            return SymbolicElement::t();
        }
        if (s_.compare(pos_, 3, "log") == 0) {
            pos_ += 3;
            expect('(');
            size_t at = pos_;
            SymbolicElement arg = expr();
            expect(')');
            Rational center;
            try {
                center = as_center(arg, "log argument must be t - c");
            } catch (const parse_error&) {
                throw parse_error("log argument must be t - c", at);
            }
            return SymbolicElement(Monomial::log_power(center, 1), RationalFunction(Rational(1)));
        }
        if (c == '(') {
            pos_++;
            SymbolicElement e = expr();
            expect(')');
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    char peek_at(size_t i) const { return i < s_.size() ? s_[i] : '\0'; }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

SymbolicElement parse_element(const std::string& text) { return Parser(text).run(); }

std::string render(const SymbolicElement& e) { return element_str(e); }

}  // namespace minann
