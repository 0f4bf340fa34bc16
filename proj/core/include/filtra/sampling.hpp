#ifndef FILTRA_SAMPLING_HPP
#define FILTRA_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "filtra/polynomial.hpp"
#include "filtra/weyl.hpp"

namespace filtra {

// Seeded, reproducible element sampling. Bounded draws go through an
// explicit rejection loop on raw 64-bit output so results depend only on
// the seed, not on library distribution internals.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // Coefficient uniform in {-bound..bound}; zeros allowed.
  Rational sparse_coefficient(int bound = 3) { return Rational(uniform(-bound, bound)); }
  // Coefficient uniform in {-bound..bound} \ {0}.
  Rational nonzero_coefficient(int bound = 3);

  // Every monomial of degree <= max_degree gets a nonzero coefficient.
  WeylElement dense_weyl(int n, long max_degree, int bound = 3);
  // Monomials keep or drop coefficients at random (keep_percent chance of
  // a nonzero coefficient); resampled if the element vanishes.
  WeylElement sparse_weyl(int n, long max_degree, int bound = 3, int keep_percent = 50);
  Polynomial sparse_polynomial(int n, long max_degree, int bound = 3, int keep_percent = 50);

 private:
  std::mt19937_64 rng_;
};

}  // namespace filtra

#endif
