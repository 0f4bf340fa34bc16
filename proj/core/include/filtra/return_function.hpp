#ifndef FILTRA_RETURN_FUNCTION_HPP
#define FILTRA_RETURN_FUNCTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "filtra/module_realization.hpp"
#include "filtra/weyl.hpp"

namespace filtra {

// Working-set guard for span computations: the number of spanning products
// C(j+2n,2n)^2 must stay below the cap. FILTRA_MAX_SPAN overrides.
struct SpanOptions {
  std::size_t max_span;
  SpanOptions();
};

// A chain of commutators with canonical generators reducing an element to
// a nonzero scalar c.  Expanding ad_{g_m} ... ad_{g_1}(a) = c writes c as a
// combination of x a y with deg x + deg y <= m, so 1 lies in A_m a A_m.
struct AdChainCertificate {
  WeylElement element;
  std::vector<int> chain;  // generator indices, applied left to right
  Rational scalar;
};

AdChainCertificate ad_chain_witness(const WeylElement& a);
// Recomputes the chain through the commutator arithmetic.
bool replay(const AdChainCertificate& certificate);

enum class ProbeStatus { Exact, BoundReached };

struct ReturnProbe {
  long index = 0;       // minimal j found (or the bound when not found)
  long search_bound = 0;
  ProbeStatus status = ProbeStatus::Exact;
  bool approximate = false;  // membership tested modulo a cutoff ideal span
};

// Minimal j <= j_max with 1 in the span of {x a y : x, y in A_j basis}.
ReturnProbe element_return_index_algebra(const WeylElement& a, long j_max,
                                         const SpanOptions& options = {});

// Minimal j <= j_max with M_0 inside span{b u : b in A_j basis}.
ReturnProbe element_return_index_module(const ModuleRealization& m, const Echelon::Vec& u,
                                        std::span<const Echelon::Vec> m0, long j_max);
// Cyclic-quotient variant: u and M_0 are coset representatives.
ReturnProbe element_return_index_module(const CyclicQuotientModule& m, const WeylElement& u,
                                        std::span<const WeylElement> m0, long j_max);

// Verifies that every x X_1^i y with deg x + deg y < i has zero constant
// coefficient; on success i is a certified lower bound for the return
// function. Throws falsification_error if the identity ever fails.
long lower_bound_probe(int n, long i);

// Left return function, cutoff approximation: minimal j with 1 in
// span{x a y : deg x <= N, deg y <= j}; stabilized compares N against N-1.
struct LeftReturnProbe {
  long index;
  long search_bound;
  ProbeStatus status;
  bool stabilized;
};
LeftReturnProbe left_return_index_cutoff(const WeylElement& a, long j_max, long N,
                                         const SpanOptions& options = {});

struct ProfileWitness {
  std::string kind;      // "ad-chain" | "derivative"
  std::string element;   // rendered element or module vector
  std::vector<std::uint32_t> data;  // generator chain resp. derivative exponents
  std::string scalar;
  long probe_index = 0;
};

struct ProfileEntry {
  long i = 0;
  long lower = 0;
  long upper = 0;
  bool exact = false;
  std::vector<ProfileWitness> witnesses;
};

struct ReturnFunctionProfile {
  std::string target;
  bool algebra = true;
  bool certified_cap = true;  // upper bounds backed by the reduction argument
  int n = 1;
  long i_max = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<ProfileEntry> entries;

  std::vector<Integer> exact_values() const;  // lower == upper prefix values
  bool all_exact() const;
};

ReturnFunctionProfile algebra_return_profile(int n, long i_max, int samples, std::uint64_t seed,
                                             const SpanOptions& options = {});
ReturnFunctionProfile module_return_profile(const ModuleRealization& m, long i_max, int samples,
                                            std::uint64_t seed);

}  // namespace filtra

#endif
