#ifndef FILTRA_INEQUALITY_HPP
#define FILTRA_INEQUALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "filtra/growth.hpp"
#include "filtra/return_function.hpp"

namespace filtra {

// Constants of A_n entering the bound formulas. The filter dimension is
// pinned to 1 (both reduction mechanisms realize it; the consistency check
// below cross-validates the pinned value against computed profiles).
struct WeylAlgebraConstants {
  int n;
  Rational gk;               // GK(A_n) = 2n
  Rational filter_dimension; // 1
  Rational holonomic_number; // n
  Rational l_A;              // leading coefficient of dim A_{n,i}: 1/(2n)!
  Rational L_A;              // leading coefficient of the return function: 1
  Rational L_prime;          // L(A) + 1 since d(A) = 1
  Rational c_squared;        // l(A) / (L L')^h
  std::optional<Rational> c_exact;  // engaged when c is rational
};

WeylAlgebraConstants weyl_constants(int n);

struct ModuleVerdict {
  std::string module;
  long gk_degree = 0;
  Rational leading;
  Rational multiplicity;
  Rational required;  // GK lower bound from the first filter inequality
  bool holds = false;
  bool equality = false;
  bool holonomic = false;
  long holonomic_margin = 0;
  bool skipped = false;
  std::string skip_reason;
};

struct InequalityReport {
  WeylAlgebraConstants constants;
  std::vector<ModuleVerdict> verdicts;
  bool any_violation = false;
  bool any_skipped = false;
};

// GK(M) >= GK(A) / (d + max(d, 1)) with d = 1, i.e. >= n, per module.
InequalityReport first_filter_report(int n,
                                     const std::vector<std::pair<std::string, GrowthFit>>& fits);

struct HolonomicFlag {
  bool holonomic;
  long margin;  // degree - n
};
HolonomicFlag holonomic_classify(int n, const GrowthFit& fit);

struct LengthBounds {
  // l(M)/c_A: exact when c_A is rational, else carried as its square
  std::optional<Rational> bound_leading;
  Rational bound_leading_squared;
  Rational bound_multiplicity;  // e(M) * k^h
};
LengthBounds length_bounds(int n, const GrowthFit& fit, unsigned k);

// K.dim(A) <= GK * (1 - 1/(d + max(d,1))); pure calculator.
Rational second_filter_bound(const Rational& gk, const Rational& d);
// GK(C) <= GK * (1 - 1/(f + max(f,1))) for commutative subalgebras.
Rational commutative_subalgebra_bound(const Rational& gk, const Rational& f);

struct FilterDimensionReport {
  bool interval = false;  // profile entries were not all exact
  GrowthFit fit;          // fit of the return-function values
  std::optional<long> fd_estimate;
  bool at_least_half = false;
  bool matches_pinned = false;              // == 1 for the Weyl suite
  std::optional<bool> module_gk_bound_ok;   // GK(M) <= GK(A) * fd(M)
};

// Fits the profile's exact values and checks fd >= 1/2; when a module GK
// estimate is supplied, also checks GK(M) <= GK(A) * fd(M).
FilterDimensionReport filter_dimension_consistency(
    const ReturnFunctionProfile& profile, const Rational& algebra_gk,
    const std::optional<Rational>& module_gk = std::nullopt);

}  // namespace filtra

#endif
