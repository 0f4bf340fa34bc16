#include "filtra/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "filtra/errors.hpp"
#include "filtra/polynomial.hpp"

namespace filtra {

WeylElement::WeylElement(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("WeylElement: n must be >= 1");
}

WeylElement WeylElement::scalar(int n, const Rational& c) {
  WeylElement u(n);
  u.add_term(MultiIndex(static_cast<std::size_t>(2 * n), 0), c);
  return u;
}

WeylElement WeylElement::coordinate(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("WeylElement::coordinate: index out of range");
  MultiIndex key(static_cast<std::size_t>(2 * n), 0);
  key[static_cast<std::size_t>(i - 1)] = 1;
  WeylElement u(n);
  u.add_term(key, 1);
  return u;
}

WeylElement WeylElement::derivation(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("WeylElement::derivation: index out of range");
  MultiIndex key(static_cast<std::size_t>(2 * n), 0);
  key[static_cast<std::size_t>(n + i - 1)] = 1;
  WeylElement u(n);
  u.add_term(key, 1);
  return u;
}

WeylElement WeylElement::generator(int n, int g) {
  if (g < 1 || g > 2 * n) throw std::invalid_argument("WeylElement::generator: index out of range");
  return g <= n ? coordinate(n, g) : derivation(n, g - n);
}

WeylElement WeylElement::monomial(int n, const MultiIndex& alpha, const MultiIndex& beta,
                                  const Rational& c) {
  if (alpha.size() != static_cast<std::size_t>(n) || beta.size() != static_cast<std::size_t>(n))
    throw dimension_mismatch("WeylElement::monomial: exponent length != n");
  WeylElement u(n);
  u.add_term(concat(alpha, beta), c);
  return u;
}

std::optional<Rational> WeylElement::as_scalar() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  if (total_degree(terms_.begin()->first) != 0) return std::nullopt;
  return terms_.begin()->second;
}

Rational WeylElement::constant_coefficient() const {
  if (terms_.empty()) return 0;
  const auto& first = *terms_.begin();  // grlex-smallest; constant iff degree 0
  return total_degree(first.first) == 0 ? first.second : Rational(0);
}

std::optional<long> WeylElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<long>(total_degree(terms_.rbegin()->first));
}

void WeylElement::add_term(const MultiIndex& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int WeylElement::merged_n(const WeylElement& rhs, const char* op) const {
  if (is_zero()) return rhs.n_;
  if (rhs.is_zero()) return n_;
  if (n_ != rhs.n_)
    throw dimension_mismatch(std::string(op) + ": operands live in different Weyl algebras");
  return n_;
}

WeylElement WeylElement::operator-() const {
  WeylElement out(n_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

WeylElement WeylElement::operator+(const WeylElement& rhs) const {
  WeylElement out(merged_n(rhs, "weyl +"));
  out.terms_ = terms_;
  for (const auto& [key, c] : rhs.terms_) out.add_term(key, c);
  return out;
}

WeylElement WeylElement::operator-(const WeylElement& rhs) const {
  WeylElement out(merged_n(rhs, "weyl -"));
  out.terms_ = terms_;
  for (const auto& [key, c] : rhs.terms_) out.add_term(key, -c);
  return out;
}

namespace {

// small-argument tables; thread-safe via static initialization
constexpr unsigned kTableSize = 65;

const Integer& cached_binomial(std::uint32_t n, std::uint32_t k) {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> t(kTableSize * kTableSize);
    for (unsigned a = 0; a < kTableSize; ++a)
      for (unsigned b = 0; b <= a; ++b) t[a * kTableSize + b] = binomial(a, b);
    return t;
  }();
  if (n < kTableSize) {
    static const Integer zero = 0;
    return k <= n ? table[n * kTableSize + k] : zero;
  }
  thread_local Integer big;
  big = binomial(n, k);
  return big;
}

const Integer& cached_falling(std::uint32_t n, std::uint32_t k) {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> t(kTableSize * kTableSize);
    for (unsigned a = 0; a < kTableSize; ++a)
      for (unsigned b = 0; b < kTableSize; ++b) t[a * kTableSize + b] = falling_factorial(a, b);
    return t;
  }();
  if (n < kTableSize && k < kTableSize) return table[n * kTableSize + k];
  thread_local Integer big;
  big = falling_factorial(n, k);
  return big;
}

// D_i^b X_i^g = sum_j C(b,j) * g*(g-1)*...*(g-j+1) * X_i^{g-j} D_i^{b-j};
// coordinates are independent, so the cross terms are walked with an
// odometer over the contraction vector j.
void expand_product_term(WeylElement& out, int n, const MultiIndex& left, const MultiIndex& right,
                         const Rational& coeff) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint32_t> limit(un);
  for (std::size_t i = 0; i < un; ++i)
    limit[i] = std::min(left[un + i], right[i]);  // min(beta_i, gamma_i)

  std::vector<std::uint32_t> j(un, 0);
  MultiIndex key(2 * un);
  Rational term;
  for (;;) {
    term = coeff;
    for (std::size_t i = 0; i < un; ++i) {
      if (j[i] == 0) continue;
      term *= cached_binomial(left[un + i], j[i]);
      term *= cached_falling(right[i], j[i]);
    }
    for (std::size_t i = 0; i < un; ++i) {
      key[i] = left[i] + right[i] - j[i];
      key[un + i] = left[un + i] + right[un + i] - j[i];
    }
    out.add_term(key, term);

    std::size_t pos = 0;
    while (pos < un && j[pos] == limit[pos]) {
      j[pos] = 0;
      ++pos;
    }
    if (pos == un) break;
    ++j[pos];
  }
}

}  // namespace

namespace {

// Fast path for products at desk scale: up to 8 exponent slots of 6 bits
// each, with the total degree in the high bits so that the integer order
// on packed keys coincides with grlex.
constexpr int kPackSlots = 8;
constexpr unsigned kPackBits = 6;
constexpr std::uint32_t kPackMax = (1u << kPackBits) - 1;

std::uint64_t pack_key(const MultiIndex& key) {
  std::uint64_t packed = 0;
  std::uint64_t degree = 0;
  for (std::size_t i = 0; i < key.size(); ++i) {
    packed |= static_cast<std::uint64_t>(key[i])
              << (kPackBits * (static_cast<std::size_t>(kPackSlots) - 1 - i));
    degree += key[i];
  }
  return (degree << (kPackBits * kPackSlots)) | packed;
}

MultiIndex unpack_key(std::uint64_t packed, std::size_t length) {
  MultiIndex key(length);
  for (std::size_t i = 0; i < length; ++i)
    key[i] = static_cast<std::uint32_t>(
        (packed >> (kPackBits * (static_cast<std::size_t>(kPackSlots) - 1 - i))) & kPackMax);
  return key;
}

void expand_packed(std::vector<std::pair<std::uint64_t, Rational>>& out, int n,
                   const MultiIndex& left, const MultiIndex& right, const Rational& coeff) {
  const auto un = static_cast<std::size_t>(n);
  std::uint32_t limit[kPackSlots];
  for (std::size_t i = 0; i < un; ++i) limit[i] = std::min(left[un + i], right[i]);
  std::uint32_t j[kPackSlots] = {0};
  MultiIndex key(2 * un);
  for (;;) {
    Rational term = coeff;
    for (std::size_t i = 0; i < un; ++i) {
      if (j[i] == 0) continue;
      term *= cached_binomial(left[un + i], j[i]);
      term *= cached_falling(right[i], j[i]);
    }
    for (std::size_t i = 0; i < un; ++i) {
      key[i] = left[i] + right[i] - j[i];
      key[un + i] = left[un + i] + right[un + i] - j[i];
    }
    out.emplace_back(pack_key(key), std::move(term));

    std::size_t pos = 0;
    while (pos < un && j[pos] == limit[pos]) {
      j[pos] = 0;
      ++pos;
    }
    if (pos == un) break;
    ++j[pos];
  }
}

}  // namespace

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  const int n = merged_n(rhs, "weyl *");
  WeylElement out(n);
  if (is_zero() || rhs.is_zero()) return out;

  const long left_degree = *degree();
  const long right_degree = *rhs.degree();
  if (2 * n <= kPackSlots && left_degree + right_degree <= static_cast<long>(kPackMax)) {
    std::vector<std::pair<std::uint64_t, Rational>> products;
    products.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& [ka, ca] : terms_) {
      for (const auto& [kb, cb] : rhs.terms_) {
        Rational c = ca;
        c *= cb;
        expand_packed(products, n, ka, kb, c);
      }
    }
    std::sort(products.begin(), products.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t t = 0;
    while (t < products.size()) {
      Rational sum = std::move(products[t].second);
      const std::uint64_t key = products[t].first;
      ++t;
      while (t < products.size() && products[t].first == key) {
        sum += products[t].second;
        ++t;
      }
      if (sum != 0)
        out.terms_.emplace_hint(out.terms_.end(),
                                unpack_key(key, static_cast<std::size_t>(2 * n)),
                                std::move(sum));
    }
    return out;
  }

  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : rhs.terms_) expand_product_term(out, n, ka, kb, ca * cb);
  return out;
}

WeylElement WeylElement::operator*(const Rational& c) const {
  WeylElement out(n_);
  if (c == 0) return out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
  return out;
}

bool WeylElement::operator==(const WeylElement& rhs) const {
  if (is_zero() && rhs.is_zero()) return true;
  return n_ == rhs.n_ && terms_ == rhs.terms_;
}

Polynomial WeylElement::apply(const Polynomial& p) const {
  if (!is_zero() && !p.is_zero() && p.n() != n_)
    throw dimension_mismatch("weyl apply: element and polynomial dimensions differ");
  const auto un = static_cast<std::size_t>(n_);
  Polynomial out(p.is_zero() ? n_ : p.n());
  for (const auto& [key, c] : terms_) {
    for (const auto& [mono, pc] : p.terms()) {
      // X^alpha D^beta * x^gamma = (gamma)_beta x^{alpha + gamma - beta}
      Integer factor = 1;
      bool vanished = false;
      MultiIndex result(un);
      for (std::size_t i = 0; i < un; ++i) {
        const auto beta = key[un + i];
        if (mono[i] < beta) {
          vanished = true;
          break;
        }
        factor *= falling_factorial(mono[i], beta);
        result[i] = key[i] + mono[i] - beta;
      }
      if (vanished) continue;
      out.add_term(result, c * pc * Rational(factor));
    }
  }
  return out;
}

WeylElement linear_combination(std::span<const std::pair<Rational, WeylElement>> pairs) {
  if (pairs.empty()) return WeylElement::zero(1);
  WeylElement acc = WeylElement::zero(pairs.front().second.n());
  for (const auto& [c, u] : pairs) acc = acc + u * c;
  return acc;
}

WeylElement commutator(const WeylElement& u, const WeylElement& v) {
  return u * v - v * u;
}

WeylElement ad_generator(int g, const WeylElement& u) {
  if (g < 1 || g > 2 * u.n())
    throw std::invalid_argument("ad_generator: generator index out of range");
  return commutator(WeylElement::generator(u.n(), g), u);
}

std::vector<MultiIndex> filtration_basis_keys(int n, long i) {
  if (n < 1) throw std::invalid_argument("filtration_basis_keys: n must be >= 1");
  if (i < 0) throw std::invalid_argument("filtration_basis_keys: i must be >= 0");
  std::vector<MultiIndex> keys;
  for (long d = 0; d <= i; ++d) {
    auto level = multi_indices_of_degree(static_cast<std::size_t>(2 * n),
                                         static_cast<std::uint64_t>(d));
    keys.insert(keys.end(), level.begin(), level.end());
  }
  return keys;
}

std::vector<WeylElement> filtration_basis(int n, long i) {
  std::vector<WeylElement> basis;
  for (const auto& key : filtration_basis_keys(n, i)) {
    WeylElement u(n);
    u.add_term(key, 1);
    basis.push_back(std::move(u));
  }
  return basis;
}

Integer filtration_dimension(int n, long i) {
  if (i < 0) return 0;
  return binomial(static_cast<unsigned long>(i + 2 * n), static_cast<unsigned long>(2 * n));
}

}  // namespace filtra
