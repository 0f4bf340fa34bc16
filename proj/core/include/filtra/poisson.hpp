#ifndef FILTRA_POISSON_HPP
#define FILTRA_POISSON_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "filtra/polynomial.hpp"
#include "filtra/weyl.hpp"

namespace filtra {

// The Poisson polynomial algebra P_{2n} = K[x_1..x_{2n}] with
// {f,g} = sum_i (df/dx_i dg/dx_{n+i} - df/dx_{n+i} dg/dx_i).
// Elements are plain polynomials in an even number of variables.

// Half dimension n of the ambient P_{2n}; rejects odd variable counts.
int poisson_half_dimension(const Polynomial& f);

Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g);

// The inner derivation {a, .} as an order-one element of A_{2n}:
// sum_i (da/dx_i) D_{n+i} - (da/dx_{n+i}) D_i.
WeylElement hamiltonian_weyl_image(const Polynomial& a);

struct IsotropyResult {
  bool isotropic;
  std::optional<std::pair<std::size_t, std::size_t>> offending;  // 0-based pair
};
IsotropyResult isotropic_check(std::span<const Polynomial> generators);

// Algebraic independence over K(x) via the generic rank of the Jacobian.
bool independence_check(std::span<const Polynomial> generators);

struct IsotropicBoundReport {
  int n = 1;                    // ambient P_{2n}
  std::size_t generator_count = 0;
  bool isotropic = false;
  bool independent = false;
  bool images_independent = false;  // generators plus symbol images: rank 2m
  long bound = 0;                   // n
  long margin = 0;                  // n - m
  bool tight = false;
  bool holds = false;
};

// Verifies {a_i} isotropic and independent, checks the combined symbol map
// has rank 2m, and reports m <= n.
IsotropicBoundReport isotropic_bound_report(int n, std::span<const Polynomial> generators);

}  // namespace filtra

#endif
