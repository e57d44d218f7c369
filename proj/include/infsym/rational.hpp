#pragma once

// Exact integer and rational arithmetic (GMP) plus the "p/q" text form used
// for every number that crosses a file or process boundary.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace infsym {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "n", "-p/q" or a plain decimal such as "0.3" (read exactly).
/// Throws std::invalid_argument on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals: "1/2,1/3".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Canonical form: "p/q" in lowest terms, integers without the "/1".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// q^k for k >= 0.
Rational pow(const Rational& q, unsigned k);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace infsym
