#include "filtra/qpoly.hpp"

namespace filtra {

void qpoly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::optional<long> qpoly_degree(const QPoly& p) {
  if (p.empty()) return std::nullopt;
  return static_cast<long>(p.size()) - 1;
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  qpoly_trim(out);
  return out;
}

QPoly qpoly_scale(const QPoly& a, const Rational& c) {
  if (c == 0) return {};
  QPoly out(a);
  for (auto& x : out) x *= c;
  return out;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  qpoly_trim(out);
  return out;
}

Rational qpoly_eval(const QPoly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QPoly qpoly_compose_affine(const QPoly& p, const Rational& a, const Rational& b) {
  QPoly result;
  QPoly inner = {b, a};
  qpoly_trim(inner);
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    result = qpoly_add(qpoly_mul(result, inner), QPoly{*it});
  qpoly_trim(result);
  return result;
}

QPoly qpoly_binomial(unsigned r) {
  QPoly out = {Rational(1)};
  for (unsigned j = 0; j < r; ++j) {
    out = qpoly_mul(out, QPoly{Rational(-static_cast<long>(j)), Rational(1)});
  }
  Rational scale(Integer(1), factorial(r));
  scale.canonicalize();
  return qpoly_scale(out, scale);
}

std::string qpoly_to_string(const QPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p[i];
    if (c == 0) continue;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_coeff = abs != 1 || i == 0;
    if (show_coeff) out += to_string(abs);
    if (i > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace filtra
