#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ssyn {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (denominator > 0, gcd(|num|, den) = 1) as long as every value entering
// arithmetic is canonical, which make_rational and parse_rational guarantee.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p/q", and exact decimal literals like "0.5" or "-3.25".
std::optional<Rational> parse_rational(const std::string& text);

// Canonical form: "p" when den == 1, otherwise "p/q".
std::string to_string(const Rational& r);

int sign(const Rational& r);

// Least common multiple of the denominators, gcd of the scaled numerators.
// Used to rescale a row of rationals to coprime integers.
void scale_to_coprime_integers(std::vector<Rational>& row);

}  // namespace ssyn
