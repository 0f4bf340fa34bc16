#include "filtra/poisson.hpp"

#include <stdexcept>

#include "filtra/errors.hpp"
#include "filtra/linalg.hpp"

namespace filtra {

int poisson_half_dimension(const Polynomial& f) {
  if (f.n() % 2 != 0)
    throw std::invalid_argument("Poisson algebra needs an even number of variables");
  return f.n() / 2;
}

Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g) {
  if (!f.is_zero() && !g.is_zero() && f.n() != g.n())
    throw dimension_mismatch("poisson_bracket: operands live in different algebras");
  if (f.is_zero() || g.is_zero()) return Polynomial::zero(f.is_zero() ? g.n() : f.n());
  const int half = poisson_half_dimension(f);
  Polynomial out(f.n());
  for (int i = 1; i <= half; ++i) {
    out = out + f.partial(i) * g.partial(half + i) - f.partial(half + i) * g.partial(i);
  }
  return out;
}

WeylElement hamiltonian_weyl_image(const Polynomial& a) {
  const int half = poisson_half_dimension(a);
  const int m = a.n();  // the image lives in A_{2n}
  WeylElement out(m);
  auto add_order_one = [&](const Polynomial& coeff, int d_index, bool negate) {
    for (const auto& [gamma, c] : coeff.terms()) {
      MultiIndex key(static_cast<std::size_t>(2 * m), 0);
      for (std::size_t t = 0; t < gamma.size(); ++t) key[t] = gamma[t];
      key[static_cast<std::size_t>(m + d_index - 1)] = 1;
      out.add_term(key, negate ? Rational(-c) : c);
    }
  };
  for (int i = 1; i <= half; ++i) {
    add_order_one(a.partial(i), half + i, false);
    add_order_one(a.partial(half + i), i, true);
  }
  return out;
}

IsotropyResult isotropic_check(std::span<const Polynomial> generators) {
  if (generators.empty()) throw std::invalid_argument("isotropic_check: empty generator list");
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!poisson_bracket(generators[i], generators[j]).is_zero())
        return IsotropyResult{false, std::make_pair(i, j)};
  return IsotropyResult{true, std::nullopt};
}

namespace {

std::size_t jacobian_rank(std::span<const Polynomial> functions, int variables) {
  std::vector<std::vector<Polynomial>> jacobian;
  jacobian.reserve(functions.size());
  for (const auto& f : functions) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<std::size_t>(variables));
    for (int v = 1; v <= variables; ++v) row.push_back(f.partial(v));
    jacobian.push_back(std::move(row));
  }
  return polynomial_matrix_rank(std::move(jacobian));
}

// Embeds a polynomial of P_{2n} into K[x_1..x_{2n}, xi_1..xi_{2n}].
Polynomial embed_double(const Polynomial& f) {
  Polynomial out(2 * f.n());
  for (const auto& [key, c] : f.terms()) {
    MultiIndex wide(static_cast<std::size_t>(2 * f.n()), 0);
    for (std::size_t t = 0; t < key.size(); ++t) wide[t] = key[t];
    out.add_term(wide, c);
  }
  return out;
}

// Principal symbol of the Hamiltonian image: D_k replaced by xi_k.
Polynomial hamiltonian_symbol(const Polynomial& a) {
  const int half = poisson_half_dimension(a);
  const int m = a.n();
  Polynomial out(2 * m);
  auto add = [&](const Polynomial& coeff, int xi_index, bool negate) {
    for (const auto& [gamma, c] : coeff.terms()) {
      MultiIndex wide(static_cast<std::size_t>(2 * m), 0);
      for (std::size_t t = 0; t < gamma.size(); ++t) wide[t] = gamma[t];
      wide[static_cast<std::size_t>(m + xi_index - 1)] += 1;
      out.add_term(wide, negate ? Rational(-c) : c);
    }
  };
  for (int i = 1; i <= half; ++i) {
    add(a.partial(i), half + i, false);
    add(a.partial(half + i), i, true);
  }
  return out;
}

}  // namespace

bool independence_check(std::span<const Polynomial> generators) {
  if (generators.empty()) throw std::invalid_argument("independence_check: empty generator list");
  const int variables = generators.front().n();
  for (const auto& g : generators)
    if (g.n() != variables)
      throw dimension_mismatch("independence_check: generators in different rings");
  if (generators.size() > static_cast<std::size_t>(variables)) return false;
  return jacobian_rank(generators, variables) == generators.size();
}

IsotropicBoundReport isotropic_bound_report(int n, std::span<const Polynomial> generators) {
  IsotropicBoundReport report;
  report.n = n;
  report.generator_count = generators.size();
  report.bound = n;

  const auto isotropy = isotropic_check(generators);
  report.isotropic = isotropy.isotropic;
  if (!report.isotropic) {
    throw std::invalid_argument(
        "isotropic_bound_report: generators are not isotropic (offending pair " +
        std::to_string(isotropy.offending->first + 1) + ", " +
        std::to_string(isotropy.offending->second + 1) + ")");
  }
  for (const auto& g : generators)
    if (g.n() != 2 * n)
      throw dimension_mismatch("isotropic_bound_report: generator not in P_{2n}");

  report.independent = independence_check(generators);
  if (!report.independent)
    throw std::invalid_argument("isotropic_bound_report: generators are not independent");

  // combined symbol map: {a_i} and their Hamiltonian symbols in 4n variables
  std::vector<Polynomial> combined;
  combined.reserve(2 * generators.size());
  for (const auto& g : generators) combined.push_back(embed_double(g));
  for (const auto& g : generators) combined.push_back(hamiltonian_symbol(g));
  report.images_independent = jacobian_rank(combined, 4 * n) == combined.size();

  const auto m = static_cast<long>(generators.size());
  report.margin = report.bound - m;
  report.tight = report.margin == 0;
  report.holds = report.images_independent && m <= report.bound;
  return report;
}

}  // namespace filtra
