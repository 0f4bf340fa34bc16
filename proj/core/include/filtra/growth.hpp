#ifndef FILTRA_GROWTH_HPP
#define FILTRA_GROWTH_HPP

#include <optional>
#include <string>
#include <vector>

#include "filtra/module_realization.hpp"
#include "filtra/qpoly.hpp"
#include "filtra/rational.hpp"

namespace filtra {

struct FitOptions {
  long max_degree = 16;
  // the top difference row must be constant over this many trailing entries
  std::size_t window(unsigned k) const { return std::max<std::size_t>(4, 2 * k); }
};

// Detected eventual quasi-polynomial of a dimension sequence: one fitted
// polynomial per residue class mod k.  Exact fits obey the denominator
// bound: every coefficient times k^degree * degree! is an integer.
struct GrowthFit {
  enum class Status { ExactFit, Unstable, ZeroModule };

  Status status = Status::Unstable;
  unsigned k = 1;
  std::vector<QPoly> class_polynomials;  // gamma_0 .. gamma_{k-1}, in i
  std::optional<long> degree;            // shared degree; engaged for exact fits
  Rational leading;                      // shared leading coefficient
  Rational multiplicity;                 // degree! * leading
  std::size_t fit_from = 0;              // first index reproduced by the fit
  bool sequence_exact = true;            // exactness of the underlying dims
  std::string note;

  bool exact() const { return status == Status::ExactFit; }
  Rational evaluate(long i) const;
};

GrowthFit fit_quasi_polynomial(const std::vector<Integer>& values, unsigned k,
                               const FitOptions& options = {});
GrowthFit fit_quasi_polynomial(const DimensionSequence& seq, unsigned k,
                               const FitOptions& options = {});

// Fit of the module's dimension sequence with k = 1; the fit degree is the
// Gelfand-Kirillov dimension estimate.
GrowthFit growth_profile(const ModuleRealization& m, long i_max, unsigned k = 1,
                         const FitOptions& options = {});

}  // namespace filtra

#endif
