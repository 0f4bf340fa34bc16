#ifndef FILTRA_QPOLY_HPP
#define FILTRA_QPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "filtra/rational.hpp"

namespace filtra {

// Dense univariate polynomial over Q; coeffs[i] is the coefficient of t^i.
// Normalized: no trailing zero coefficients, empty vector = zero.
using QPoly = std::vector<Rational>;

void qpoly_trim(QPoly& p);
std::optional<long> qpoly_degree(const QPoly& p);
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_scale(const QPoly& a, const Rational& c);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
Rational qpoly_eval(const QPoly& p, const Rational& t);

// p(a*t + b)
QPoly qpoly_compose_affine(const QPoly& p, const Rational& a, const Rational& b);

// Binomial coefficient C(t, r) = t(t-1)...(t-r+1)/r! as a polynomial in t.
QPoly qpoly_binomial(unsigned r);

std::string qpoly_to_string(const QPoly& p, const std::string& var = "t");

}  // namespace filtra

#endif
