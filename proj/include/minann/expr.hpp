#pragma once

#include "minann/symbolic.hpp"

namespace minann {

struct parse_error : error {
    parse_error(const std::string& msg, size_t position)
        : error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    size_t pos;
};

/* Expression grammar (whitespace-insensitive):
 *
 *   expr     := '-'? term (('+' | '-') term)*
 *   term     := factor (('*' | '/') factor)*
 *   factor   := atom ('^' exponent)?
 *   atom     := NUMBER | 't' | '(' expr ')' | 'log' '(' expr ')'
 *   exponent := '-'? NUMBER | '(' '-'? NUMBER ('/' NUMBER)? ')'
 *
 * log arguments and bases of fractional powers must reduce to a monic
 * linear polynomial t - c. Division requires the divisor to divide exactly
 * in the ring (always true for single-term log-free divisors).
 */
SymbolicElement parse_element(const std::string& text);

// Produces text in the same grammar; parse_element(render(e)) == e.
std::string render(const SymbolicElement& e);

}  // namespace minann
