#include "filtra/inequality.hpp"

#include <stdexcept>

namespace filtra {

WeylAlgebraConstants weyl_constants(int n) {
  if (n < 1) throw std::invalid_argument("weyl_constants: n must be >= 1");
  WeylAlgebraConstants c;
  c.n = n;
  c.gk = Rational(2 * n);
  c.filter_dimension = 1;
  c.holonomic_number = Rational(n);
  c.l_A = Rational(Integer(1), factorial(static_cast<unsigned long>(2 * n)));
  c.l_A.canonicalize();
  c.L_A = 1;
  c.L_prime = c.L_A + 1;
  Rational denom = rational_pow(c.L_A * c.L_prime, static_cast<unsigned long>(n));
  c.c_squared = c.l_A / denom;
  c.c_squared.canonicalize();
  c.c_exact = exact_sqrt(c.c_squared);
  return c;
}

InequalityReport first_filter_report(int n,
                                     const std::vector<std::pair<std::string, GrowthFit>>& fits) {
  InequalityReport report;
  report.constants = weyl_constants(n);
  const Rational d = report.constants.filter_dimension;
  const Rational required = report.constants.gk / (d + std::max(d, Rational(1)));
  for (const auto& [name, fit] : fits) {
    ModuleVerdict v;
    v.module = name;
    v.required = required;
    if (!fit.exact()) {
      v.skipped = true;
      v.skip_reason = fit.status == GrowthFit::Status::ZeroModule
                          ? "zero module (nonzero required)"
                          : "unstable fit: " + fit.note;
      report.any_skipped = true;
      report.verdicts.push_back(std::move(v));
      continue;
    }
    v.gk_degree = *fit.degree;
    v.leading = fit.leading;
    v.multiplicity = fit.multiplicity;
    v.holds = Rational(v.gk_degree) >= required;
    v.equality = Rational(v.gk_degree) == required;
    const auto flag = holonomic_classify(n, fit);
    v.holonomic = flag.holonomic;
    v.holonomic_margin = flag.margin;
    if (!v.holds) report.any_violation = true;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

HolonomicFlag holonomic_classify(int n, const GrowthFit& fit) {
  if (!fit.exact())
    throw std::invalid_argument("holonomic_classify: exact fit on a nonzero module required");
  const long degree = *fit.degree;
  return HolonomicFlag{degree == n, degree - n};
}

LengthBounds length_bounds(int n, const GrowthFit& fit, unsigned k) {
  const auto flag = holonomic_classify(n, fit);
  if (!flag.holonomic)
    throw std::invalid_argument("length_bounds: module is not holonomic (margin " +
                                std::to_string(flag.margin) + ")");
  const WeylAlgebraConstants c = weyl_constants(n);
  LengthBounds out;
  out.bound_leading_squared = fit.leading * fit.leading / c.c_squared;
  out.bound_leading_squared.canonicalize();
  if (c.c_exact) {
    out.bound_leading = fit.leading / *c.c_exact;
    out.bound_leading->canonicalize();
  }
  out.bound_multiplicity =
      fit.multiplicity * rational_pow(Rational(static_cast<long>(k)),
                                      static_cast<unsigned long>(n));
  out.bound_multiplicity.canonicalize();
  return out;
}

Rational second_filter_bound(const Rational& gk, const Rational& d) {
  if (gk <= 0) throw std::invalid_argument("second_filter_bound: GK must be positive");
  if (d < 0) throw std::invalid_argument("second_filter_bound: d must be >= 0");
  Rational denom = d + std::max(d, Rational(1));
  Rational out = gk * (Rational(1) - Rational(1) / denom);
  out.canonicalize();
  return out;
}

Rational commutative_subalgebra_bound(const Rational& gk, const Rational& f) {
  if (gk <= 0) throw std::invalid_argument("commutative_subalgebra_bound: GK must be positive");
  if (f < 0) throw std::invalid_argument("commutative_subalgebra_bound: f must be >= 0");
  Rational denom = f + std::max(f, Rational(1));
  Rational out = gk * (Rational(1) - Rational(1) / denom);
  out.canonicalize();
  return out;
}

FilterDimensionReport filter_dimension_consistency(const ReturnFunctionProfile& profile,
                                                   const Rational& algebra_gk,
                                                   const std::optional<Rational>& module_gk) {
  FilterDimensionReport report;
  report.interval = !profile.all_exact();
  const std::vector<Integer> values = profile.exact_values();
  report.fit = fit_quasi_polynomial(values, 1);
  if (report.fit.status == GrowthFit::Status::ZeroModule) {
    // constant-zero synthetic profile: degree 0
    report.fd_estimate = 0;
  } else if (report.fit.exact()) {
    report.fd_estimate = *report.fit.degree;
  }
  if (report.fd_estimate) {
    report.at_least_half = Rational(*report.fd_estimate) >= Rational(Integer(1), Integer(2));
    report.matches_pinned = *report.fd_estimate == 1;
    if (module_gk)
      report.module_gk_bound_ok = *module_gk <= algebra_gk * Rational(*report.fd_estimate);
  }
  return report;
}

}  // namespace filtra
