#ifndef FILTRA_WEYL_HPP
#define FILTRA_WEYL_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "filtra/multi_index.hpp"
#include "filtra/rational.hpp"

namespace filtra {

class Polynomial;

// Element of the n-th Weyl algebra in normal form: a finite sum of terms
// c * X^alpha * D^beta, keyed by the concatenated exponent vector
// (alpha | beta) of length 2n. No stored coefficient is zero, so two
// elements are equal iff their term maps are equal.
class WeylElement {
 public:
  using TermMap = std::map<MultiIndex, Rational, GrlexLess>;

  WeylElement() : n_(1) {}
  explicit WeylElement(int n);

  static WeylElement zero(int n) { return WeylElement(n); }
  static WeylElement scalar(int n, const Rational& c);
  static WeylElement one(int n) { return scalar(n, 1); }
  // X_i resp. D_i, 1-based.
  static WeylElement coordinate(int n, int i);
  static WeylElement derivation(int n, int i);
  // Canonical generator a_g, g in 1..2n: a_1..a_n are X_1..X_n,
  // a_{n+1}..a_{2n} are D_1..D_n.
  static WeylElement generator(int n, int g);
  static WeylElement monomial(int n, const MultiIndex& alpha, const MultiIndex& beta,
                              const Rational& c = 1);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // Engaged iff the element is a scalar (including zero).
  std::optional<Rational> as_scalar() const;
  // Coefficient of the constant term (lambda_{0,0}); zero when absent.
  Rational constant_coefficient() const;

  // Filtration degree max(|alpha| + |beta|); nullopt for the zero element.
  std::optional<long> degree() const;

  WeylElement operator-() const;
  WeylElement operator+(const WeylElement& rhs) const;
  WeylElement operator-(const WeylElement& rhs) const;
  WeylElement operator*(const WeylElement& rhs) const;  // normal-form product
  WeylElement operator*(const Rational& c) const;
  friend WeylElement operator*(const Rational& c, const WeylElement& u) { return u * c; }

  bool operator==(const WeylElement& rhs) const;
  bool operator!=(const WeylElement& rhs) const { return !(*this == rhs); }

  // Module action on K[X_1..X_n].
  Polynomial apply(const Polynomial& p) const;

  // Internal accumulation; drops the term if the sum cancels.
  void add_term(const MultiIndex& key, const Rational& c);

 private:
  // Picks the ambient n for a binary operation; zero operands adopt the
  // other side's n, otherwise mismatched n raises dimension_mismatch.
  int merged_n(const WeylElement& rhs, const char* op) const;

  int n_;
  TermMap terms_;
};

WeylElement linear_combination(std::span<const std::pair<Rational, WeylElement>> pairs);

WeylElement commutator(const WeylElement& u, const WeylElement& v);

// ad(a_g)(u) = a_g u - u a_g; strictly decreases the filtration degree.
WeylElement ad_generator(int g, const WeylElement& u);

// Monomial basis of A_{n,i}: all (alpha | beta) with |alpha|+|beta| <= i,
// in ascending grlex order. Cardinality C(i + 2n, 2n).
std::vector<MultiIndex> filtration_basis_keys(int n, long i);
std::vector<WeylElement> filtration_basis(int n, long i);
Integer filtration_dimension(int n, long i);

}  // namespace filtra

#endif
