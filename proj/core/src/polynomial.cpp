#include "filtra/polynomial.hpp"

#include <stdexcept>

#include "filtra/errors.hpp"

namespace filtra {

Polynomial::Polynomial(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Polynomial: n must be >= 1");
}

Polynomial Polynomial::constant(int n, const Rational& c) {
  Polynomial p(n);
  p.add_term(MultiIndex(static_cast<std::size_t>(n), 0), c);
  return p;
}

Polynomial Polynomial::variable(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("Polynomial::variable: index out of range");
  MultiIndex key(static_cast<std::size_t>(n), 0);
  key[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(n, key);
}

Polynomial Polynomial::monomial(int n, const MultiIndex& exponents, const Rational& c) {
  if (exponents.size() != static_cast<std::size_t>(n))
    throw dimension_mismatch("Polynomial::monomial: exponent length != n");
  Polynomial p(n);
  p.add_term(exponents, c);
  return p;
}

std::optional<long> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  // grlex map: the last key has maximal total degree
  return static_cast<long>(total_degree(terms_.rbegin()->first));
}

Rational Polynomial::coefficient(const MultiIndex& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> Polynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  if (total_degree(terms_.begin()->first) != 0) return std::nullopt;
  return terms_.begin()->second;
}

int Polynomial::merged_n(const Polynomial& rhs, const char* op) const {
  if (is_zero()) return rhs.n_;
  if (rhs.is_zero()) return n_;
  if (n_ != rhs.n_)
    throw dimension_mismatch(std::string(op) + ": operands live in different polynomial rings");
  return n_;
}

void Polynomial::add_term(const MultiIndex& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(n_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out(merged_n(rhs, "polynomial +"));
  out.terms_ = terms_;
  for (const auto& [key, c] : rhs.terms_) out.add_term(key, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out(merged_n(rhs, "polynomial -"));
  out.terms_ = terms_;
  for (const auto& [key, c] : rhs.terms_) out.add_term(key, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out(merged_n(rhs, "polynomial *"));
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      MultiIndex key(ka.size());
      for (std::size_t j = 0; j < ka.size(); ++j) key[j] = ka[j] + kb[j];
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(n_);
  if (c == 0) return out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
  return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (is_zero() && rhs.is_zero()) return true;
  return n_ == rhs.n_ && terms_ == rhs.terms_;
}

Polynomial Polynomial::partial(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("Polynomial::partial: index out of range");
  const auto v = static_cast<std::size_t>(i - 1);
  Polynomial out(n_);
  for (const auto& [key, c] : terms_) {
    if (key[v] == 0) continue;
    MultiIndex shifted = key;
    shifted[v] -= 1;
    out.add_term(shifted, c * Rational(key[v]));
  }
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  Polynomial quotient(merged_n(divisor, "polynomial /"));
  Polynomial remainder = *this;
  const auto& lead_key = divisor.terms_.rbegin()->first;  // grlex-largest
  const Rational& lead_coeff = divisor.terms_.rbegin()->second;
  while (!remainder.is_zero()) {
    const auto& r_key = remainder.terms_.rbegin()->first;
    MultiIndex q_key(r_key.size());
    for (std::size_t j = 0; j < r_key.size(); ++j) {
      if (r_key[j] < lead_key[j]) return std::nullopt;
      q_key[j] = r_key[j] - lead_key[j];
    }
    Rational q_coeff = remainder.terms_.rbegin()->second / lead_coeff;
    Polynomial t = Polynomial::monomial(quotient.n(), q_key, q_coeff);
    quotient = quotient + t;
    remainder = remainder - t * divisor;
  }
  return quotient;
}

}  // namespace filtra
