#ifndef FILTRA_RATIONAL_HPP
#define FILTRA_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace filtra {

// Exact arithmetic over Q. Every stored value is canonical: lowest terms,
// positive denominator (GMP maintains this after canonicalize()).
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", "p/q" (q > 0 after canonicalization). Throws
// std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// n * (n-1) * ... * (n-k+1); equals 1 for k = 0, 0 when k > n.
Integer falling_factorial(unsigned long n, unsigned long k);

Rational rational_pow(const Rational& base, unsigned long exponent);

// Exact square root when the value is a square of a rational. Requires a
// non-negative input.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace filtra

#endif
