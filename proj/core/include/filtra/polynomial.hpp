#ifndef FILTRA_POLYNOMIAL_HPP
#define FILTRA_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>

#include "filtra/multi_index.hpp"
#include "filtra/rational.hpp"

namespace filtra {

// Polynomial in K[x_1..x_n] with exact rational coefficients; no stored
// zero coefficients. Keys have length n.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, GrlexLess>;

  Polynomial() : n_(1) {}
  explicit Polynomial(int n);

  static Polynomial zero(int n) { return Polynomial(n); }
  static Polynomial constant(int n, const Rational& c);
  static Polynomial one(int n) { return constant(n, 1); }
  static Polynomial variable(int n, int i);  // x_i, 1-based
  static Polynomial monomial(int n, const MultiIndex& exponents, const Rational& c = 1);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::optional<long> degree() const;
  Rational coefficient(const MultiIndex& key) const;
  std::optional<Rational> as_constant() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& c) const;
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  Polynomial partial(int i) const;  // d/dx_i, 1-based

  // Exact quotient in the polynomial ring; nullopt when the division leaves
  // a remainder. Used by fraction-free elimination where exactness is
  // guaranteed by the Bareiss identity.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  void add_term(const MultiIndex& key, const Rational& c);

 private:
  int merged_n(const Polynomial& rhs, const char* op) const;

  int n_;
  TermMap terms_;
};

}  // namespace filtra

#endif
