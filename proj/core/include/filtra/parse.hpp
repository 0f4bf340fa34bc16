#ifndef FILTRA_PARSE_HPP
#define FILTRA_PARSE_HPP

#include <string>

#include "filtra/polynomial.hpp"
#include "filtra/weyl.hpp"

namespace filtra {

// Element grammar: terms joined by '+' and '-'; a term is an optional
// rational coefficient ("a/b" or an integer) and '*'-separated factors
// "x<k>" / "d<k>" with an optional "^<e>". Whitespace is ignored.
// parse(render(u)) == u and render(parse(s)) normalizes s.
WeylElement parse_weyl(const std::string& text, int n);
// Infers n as the largest generator index that appears (at least 1).
WeylElement parse_weyl(const std::string& text);

// Same grammar restricted to x<k> factors.
Polynomial parse_polynomial(const std::string& text, int n);
Polynomial parse_polynomial(const std::string& text);

// Normal form in descending grlex order, coefficients in lowest terms.
std::string render(const WeylElement& u);
std::string render(const Polynomial& p);

}  // namespace filtra

#endif
