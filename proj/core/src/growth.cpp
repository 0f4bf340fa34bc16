#include "filtra/growth.hpp"

#include <stdexcept>

#include "filtra/errors.hpp"

namespace filtra {

Rational GrowthFit::evaluate(long i) const {
  if (class_polynomials.empty()) return 0;
  const auto j = static_cast<std::size_t>(i) % k;
  return qpoly_eval(class_polynomials[j], Rational(i));
}

namespace {

struct ClassFit {
  bool stabilized = false;
  QPoly poly;  // in the global index i
};

// Fits the residue class j (entries at i = j, j+k, ...) through the tail of
// its finite-difference table.
ClassFit fit_class(const std::vector<Integer>& values, unsigned k, unsigned j,
                   const FitOptions& options) {
  ClassFit out;
  std::vector<Rational> row;
  for (std::size_t idx = j; idx < values.size(); idx += k) row.emplace_back(values[idx]);
  const std::size_t m_count = row.size();
  const std::size_t window = options.window(k);
  if (m_count < window + 1)
    throw std::invalid_argument("fit_quasi_polynomial: sequence too short for the window");

  std::vector<std::vector<Rational>> table = {row};
  long degree = -1;
  const long degree_cap = std::min<long>(options.max_degree, static_cast<long>(m_count) - 1);
  for (long d = 0; d <= degree_cap; ++d) {
    const auto& current = table.back();
    if (current.size() >= window) {
      bool constant = true;
      for (std::size_t t = current.size() - window + 1; t < current.size() && constant; ++t)
        constant = current[t] == current[t - 1];
      if (constant) {
        degree = d;
        break;
      }
    }
    std::vector<Rational> next(current.size() - 1);
    for (std::size_t t = 0; t + 1 < current.size(); ++t) next[t] = current[t + 1] - current[t];
    table.push_back(std::move(next));
  }
  if (degree < 0) return out;  // no stabilization within the degree bound

  // Newton expansion from the base point b = last usable position.
  const std::size_t b = m_count - 1 - static_cast<std::size_t>(degree);
  QPoly in_m;  // polynomial in the class-local index m
  for (long r = 0; r <= degree; ++r) {
    QPoly basis = qpoly_binomial(static_cast<unsigned>(r));       // C(t, r)
    basis = qpoly_compose_affine(basis, 1, Rational(-static_cast<long>(b)));  // t = m - b
    in_m = qpoly_add(in_m, qpoly_scale(basis, table[static_cast<std::size_t>(r)][b]));
  }
  // global index: i = j + m*k  =>  m = (i - j)/k
  Rational inv_k(Integer(1), Integer(k));
  inv_k.canonicalize();
  out.poly = qpoly_compose_affine(in_m, inv_k, Rational(-static_cast<long>(j)) * inv_k);
  out.stabilized = true;
  return out;
}

}  // namespace

GrowthFit fit_quasi_polynomial(const std::vector<Integer>& values, unsigned k,
                               const FitOptions& options) {
  if (k == 0) throw std::invalid_argument("fit_quasi_polynomial: period must be >= 1");
  GrowthFit fit;
  fit.k = k;

  bool all_zero = true;
  for (const auto& v : values) all_zero = all_zero && v == 0;
  if (all_zero) {
    fit.status = GrowthFit::Status::ZeroModule;
    fit.note = "zero module: every dimension vanishes";
    fit.class_polynomials.assign(k, QPoly{});
    return fit;
  }

  std::vector<ClassFit> classes;
  for (unsigned j = 0; j < k; ++j) classes.push_back(fit_class(values, k, j, options));

  fit.class_polynomials.clear();
  for (const auto& c : classes) fit.class_polynomials.push_back(c.poly);

  for (const auto& c : classes) {
    if (!c.stabilized) {
      fit.status = GrowthFit::Status::Unstable;
      fit.note = "difference table did not stabilize within the degree bound";
      return fit;
    }
  }

  const auto degree0 = qpoly_degree(classes.front().poly);
  for (const auto& c : classes) {
    if (qpoly_degree(c.poly) != degree0) {
      fit.status = GrowthFit::Status::Unstable;
      fit.note = "residue classes disagree on the degree";
      return fit;
    }
  }
  if (!degree0) {
    // identically zero tail but a nonzero entry somewhere: eventually zero
    fit.status = GrowthFit::Status::ZeroModule;
    fit.note = "dimensions are eventually zero";
    return fit;
  }
  const Rational lc = classes.front().poly.back();
  for (const auto& c : classes) {
    if (c.poly.back() != lc) {
      fit.status = GrowthFit::Status::Unstable;
      fit.note = "residue classes disagree on the leading coefficient";
      return fit;
    }
  }

  // verify the fit against the last 2k entries, then locate fit_from
  const std::size_t check = std::min<std::size_t>(values.size(), 2 * k);
  for (std::size_t idx = values.size() - check; idx < values.size(); ++idx) {
    if (qpoly_eval(fit.class_polynomials[idx % k], Rational(static_cast<long>(idx))) !=
        Rational(values[idx])) {
      fit.status = GrowthFit::Status::Unstable;
      fit.note = "fitted polynomials fail to reproduce the sequence tail";
      return fit;
    }
  }
  std::size_t from = values.size();
  while (from > 0) {
    const std::size_t idx = from - 1;
    if (qpoly_eval(fit.class_polynomials[idx % k], Rational(static_cast<long>(idx))) !=
        Rational(values[idx]))
      break;
    --from;
  }

  fit.status = GrowthFit::Status::ExactFit;
  fit.degree = *degree0;
  fit.leading = lc;
  fit.multiplicity = Rational(factorial(static_cast<unsigned long>(*degree0))) * lc;
  fit.fit_from = from;

  // denominator invariant: every coefficient times k^d * d! is integral
  const Rational scale = Rational(rational_pow(Rational(static_cast<long>(k)),
                                               static_cast<unsigned long>(*degree0))) *
                         Rational(factorial(static_cast<unsigned long>(*degree0)));
  for (const auto& poly : fit.class_polynomials)
    for (const auto& coeff : poly) {
      Rational scaled = coeff * scale;
      scaled.canonicalize();
      if (scaled.get_den() != 1)
        throw falsification_error("fit_quasi_polynomial: coefficient denominator bound violated");
    }
  return fit;
}

GrowthFit fit_quasi_polynomial(const DimensionSequence& seq, unsigned k,
                               const FitOptions& options) {
  GrowthFit fit = fit_quasi_polynomial(seq.plain(), k, options);
  fit.sequence_exact = seq.all_exact();
  if (!fit.sequence_exact && fit.note.empty())
    fit.note = "dimension entries include unstabilized upper bounds";
  return fit;
}

GrowthFit growth_profile(const ModuleRealization& m, long i_max, unsigned k,
                         const FitOptions& options) {
  return fit_quasi_polynomial(module_dimension_sequence(m, i_max), k, options);
}

}  // namespace filtra
