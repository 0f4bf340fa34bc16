#ifndef FILTRA_MODULE_REALIZATION_HPP
#define FILTRA_MODULE_REALIZATION_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "filtra/linalg.hpp"
#include "filtra/weyl.hpp"

namespace filtra {

// A finitely generated A_n-module given concretely: basis vectors are
// indexed by opaque MultiIndex keys, each of the 2n canonical generators
// acts as a linear map on basis vectors, and M_0 is a finite vector list.
// The action callback is total on every key reachable from M_0.
struct ConcreteModule {
  int n = 1;
  std::function<Echelon::Vec(int g, const MultiIndex& basis_key)> generator_action;
  std::vector<Echelon::Vec> generating_vectors;  // spans M_0
  std::string description;
  bool polynomial_structure = false;  // basis keys are monomials of P_n
};

// A_n / (A_n g_1 + ... + A_n g_t), approximated through the cutoff N:
// ideal pieces use products a * g_k with deg a <= N - deg g_k only.
struct CyclicQuotientModule {
  int n = 1;
  std::vector<WeylElement> generators;
  long cutoff = 0;
  std::string description;
};

using ModuleRealization = std::variant<ConcreteModule, CyclicQuotientModule>;

int module_n(const ModuleRealization& m);
const std::string& module_description(const ModuleRealization& m);

// P_n = K[x_1..x_n] with X_i acting by multiplication and D_i by
// differentiation; M_0 = K*1.
ConcreteModule polynomial_module(int n);

CyclicQuotientModule cyclic_quotient_module(int n, std::vector<WeylElement> generators,
                                            long cutoff);

struct IdealPiece {
  Integer dimension;
  bool stabilized;  // unchanged when the cutoff is lowered by one
};

// dim { v in span{a g_k : deg a <= N - deg g_k} : deg v <= d }.
IdealPiece ideal_piece_dimension(int n, const std::vector<WeylElement>& generators, long d,
                                 long N);

struct DimensionEntry {
  Integer value;
  bool exact;
};

struct DimensionSequence {
  std::vector<DimensionEntry> values;  // index i = 0..i_max
  std::string source;

  bool all_exact() const;
  std::vector<Integer> plain() const;
};

DimensionSequence module_dimension_sequence(const ModuleRealization& m, long i_max);

// Applies a generator / normal-form monomial / full element to a concrete
// module vector.  Monomial X^alpha D^beta acts right-to-left: derivations
// first, coordinates after.
Echelon::Vec apply_generator(const ConcreteModule& m, int g, const Echelon::Vec& v);
Echelon::Vec apply_monomial(const ConcreteModule& m, const MultiIndex& weyl_key,
                            const Echelon::Vec& v);
Echelon::Vec apply_element(const ConcreteModule& m, const WeylElement& u, const Echelon::Vec& v);

// Verifies the Weyl defining relations of all generator pairs on the given
// basis keys; throws falsification_error on a violation.
void check_action_relations(const ConcreteModule& m, const std::vector<MultiIndex>& basis_keys);

// Direct sum; basis keys of the two components are tagged with a leading
// 0/1 coordinate.
ConcreteModule direct_sum(const ConcreteModule& a, const ConcreteModule& b);

}  // namespace filtra

#endif
