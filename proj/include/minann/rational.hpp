#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace minann {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator), which the canonical-form machinery below depends on for
// bit-identical bases.
using Rational = mpq_class;
using Vec = std::vector<Rational>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num" or "num/den". Exact, no precision loss.
inline Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0)
        throw error("cannot parse rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline bool is_zero_vec(const Vec& v) {
    for (const Rational& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

inline Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error("dot: length mismatch");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
    return s;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error("vec_add: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error("vec_sub: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_scale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = c * a[i];
    return r;
}

}  // namespace minann
