#include "filtra/parse.hpp"

#include <cctype>
#include <vector>

#include "filtra/errors.hpp"

namespace filtra {

namespace {

constexpr std::uint64_t kMaxExponent = 1'000'000;

struct RawFactor {
  bool is_derivation;
  std::uint32_t index;     // 1-based
  std::uint32_t exponent;  // >= 1
};

struct RawTerm {
  Rational coefficient;
  std::vector<RawFactor> factors;
};

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    skip_ws();
    return text_[pos_++];
  }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos_); }

  std::uint64_t take_unsigned() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a digit");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > kMaxExponent) fail("exponent overflow");
      ++pos_;
    }
    return value;
  }

  Integer take_integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a digit");
    return Integer(text_.substr(start, pos_ - start));
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

bool starts_factor(char c) { return c == 'x' || c == 'd'; }

RawFactor parse_factor(Cursor& cur, bool allow_derivations) {
  const char kind = cur.take();
  if (kind == 'd' && !allow_derivations) cur.fail("derivation factor not allowed here");
  const std::uint64_t index = cur.take_unsigned();
  if (index == 0) cur.fail("generator indices are 1-based");
  std::uint64_t exponent = 1;
  if (cur.peek() == '^') {
    cur.take();
    exponent = cur.take_unsigned();
  }
  return RawFactor{kind == 'd', static_cast<std::uint32_t>(index),
                   static_cast<std::uint32_t>(exponent)};
}

RawTerm parse_term(Cursor& cur, bool allow_derivations) {
  RawTerm term;
  term.coefficient = 1;
  const char head = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(head))) {
    Integer numerator = cur.take_integer_literal();
    if (cur.peek() == '/') {
      cur.take();
      Integer denominator = cur.take_integer_literal();
      if (denominator == 0) cur.fail("zero denominator");
      term.coefficient = Rational(numerator, denominator);
      term.coefficient.canonicalize();
    } else {
      term.coefficient = Rational(numerator);
    }
    while (cur.peek() == '*') {
      cur.take();
      term.factors.push_back(parse_factor(cur, allow_derivations));
    }
  } else if (starts_factor(head)) {
    term.factors.push_back(parse_factor(cur, allow_derivations));
    while (cur.peek() == '*') {
      cur.take();
      term.factors.push_back(parse_factor(cur, allow_derivations));
    }
  } else {
    cur.fail("expected a coefficient or a factor");
  }
  return term;
}

std::vector<RawTerm> parse_terms(const std::string& text, bool allow_derivations) {
  Cursor cur(text);
  std::vector<RawTerm> terms;
  if (cur.done()) cur.fail("empty element");
  bool negate = false;
  if (cur.peek() == '+' || cur.peek() == '-') negate = cur.take() == '-';
  for (;;) {
    RawTerm term = parse_term(cur, allow_derivations);
    if (negate) term.coefficient = -term.coefficient;
    terms.push_back(std::move(term));
    if (cur.done()) break;
    const char sep = cur.peek();
    if (sep != '+' && sep != '-') cur.fail("expected '+', '-' or end of input");
    cur.take();
    negate = sep == '-';
  }
  return terms;
}

int inferred_n(const std::vector<RawTerm>& terms) {
  std::uint32_t n = 1;
  for (const auto& term : terms)
    for (const auto& factor : term.factors) n = std::max(n, factor.index);
  return static_cast<int>(n);
}

WeylElement assemble_weyl(const std::vector<RawTerm>& terms, int n) {
  WeylElement result = WeylElement::zero(n);
  for (const auto& term : terms) {
    // factors multiply left to right; mul normalizes
    WeylElement product = WeylElement::scalar(n, term.coefficient);
    for (const auto& factor : term.factors) {
      if (factor.index > static_cast<std::uint32_t>(n))
        throw parse_error("generator index exceeds n=" + std::to_string(n), 0);
      MultiIndex alpha(static_cast<std::size_t>(n), 0);
      MultiIndex beta(static_cast<std::size_t>(n), 0);
      (factor.is_derivation ? beta : alpha)[factor.index - 1] = factor.exponent;
      product = product * WeylElement::monomial(n, alpha, beta);
    }
    result = result + product;
  }
  return result;
}

Polynomial assemble_polynomial(const std::vector<RawTerm>& terms, int n) {
  Polynomial result = Polynomial::zero(n);
  for (const auto& term : terms) {
    MultiIndex key(static_cast<std::size_t>(n), 0);
    for (const auto& factor : term.factors) {
      if (factor.index > static_cast<std::uint32_t>(n))
        throw parse_error("variable index exceeds n=" + std::to_string(n), 0);
      key[factor.index - 1] += factor.exponent;
    }
    result.add_term(key, term.coefficient);
  }
  return result;
}

void render_coefficient(std::string& out, const Rational& c, bool has_factors, bool first) {
  Rational abs = c < 0 ? Rational(-c) : c;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (abs != 1 || !has_factors) {
    out += to_string(abs);
    if (has_factors) out += "*";
  }
}

void render_power(std::string& out, char kind, std::size_t index, std::uint32_t exponent,
                  bool& need_star) {
  if (exponent == 0) return;
  if (need_star) out += "*";
  out += kind;
  out += std::to_string(index + 1);
  if (exponent > 1) {
    out += "^";
    out += std::to_string(exponent);
  }
  need_star = true;
}

template <class TermMap>
std::string render_terms(const TermMap& terms, std::size_t n) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  // grlex-descending: leading term first
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const MultiIndex& key = it->first;
    const bool has_factors = total_degree(key) > 0;
    render_coefficient(out, it->second, has_factors, first);
    bool need_star = false;
    for (std::size_t i = 0; i < n; ++i) render_power(out, 'x', i, key[i], need_star);
    for (std::size_t i = n; i < key.size(); ++i) render_power(out, 'd', i - n, key[i], need_star);
    first = false;
  }
  return out;
}

}  // namespace

WeylElement parse_weyl(const std::string& text, int n) {
  return assemble_weyl(parse_terms(text, true), n);
}

WeylElement parse_weyl(const std::string& text) {
  auto terms = parse_terms(text, true);
  return assemble_weyl(terms, inferred_n(terms));
}

Polynomial parse_polynomial(const std::string& text, int n) {
  return assemble_polynomial(parse_terms(text, false), n);
}

Polynomial parse_polynomial(const std::string& text) {
  auto terms = parse_terms(text, false);
  return assemble_polynomial(terms, inferred_n(terms));
}

std::string render(const WeylElement& u) {
  return render_terms(u.terms(), static_cast<std::size_t>(u.n()));
}

std::string render(const Polynomial& p) {
  return render_terms(p.terms(), static_cast<std::size_t>(p.n()));
}

}  // namespace filtra
