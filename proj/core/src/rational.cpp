#include "filtra/rational.hpp"

#include <stdexcept>

namespace filtra {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class value;
  if (value.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  if (value.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

std::string to_string(const Integer& value) {
  return value.get_str();
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  if (k > n) return 0;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer falling_factorial(unsigned long n, unsigned long k) {
  Integer result = 1;
  if (k > n) return 0;
  for (unsigned long j = 0; j < k; ++j) result *= Integer(n - j);
  return result;
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
  Rational result = 1;
  Rational acc = base;
  unsigned long e = exponent;
  while (e > 0) {
    if (e & 1UL) result *= acc;
    acc *= acc;
    e >>= 1UL;
  }
  result.canonicalize();
  return result;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value < 0) throw std::invalid_argument("exact_sqrt of a negative value");
  const Integer num = value.get_num();
  const Integer den = value.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Integer num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
  Rational root(num_root, den_root);
  root.canonicalize();
  return root;
}

}  // namespace filtra
