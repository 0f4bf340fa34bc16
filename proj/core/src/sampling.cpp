#include "filtra/sampling.hpp"

#include <stdexcept>

namespace filtra {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Sampler::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
  std::uint64_t draw;
  do {
    draw = rng_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational Sampler::nonzero_coefficient(int bound) {
  std::int64_t v = 0;
  while (v == 0) v = uniform(-bound, bound);
  return Rational(v);
}

WeylElement Sampler::dense_weyl(int n, long max_degree, int bound) {
  WeylElement u(n);
  for (const auto& key : filtration_basis_keys(n, max_degree))
    u.add_term(key, nonzero_coefficient(bound));
  return u;
}

WeylElement Sampler::sparse_weyl(int n, long max_degree, int bound, int keep_percent) {
  for (;;) {
    WeylElement u(n);
    for (const auto& key : filtration_basis_keys(n, max_degree)) {
      if (uniform(1, 100) > keep_percent) continue;
      u.add_term(key, nonzero_coefficient(bound));
    }
    if (!u.is_zero()) return u;
  }
}

Polynomial Sampler::sparse_polynomial(int n, long max_degree, int bound, int keep_percent) {
  for (;;) {
    Polynomial p(n);
    for (long d = 0; d <= max_degree; ++d)
      for (const auto& key :
           multi_indices_of_degree(static_cast<std::size_t>(n), static_cast<std::uint64_t>(d))) {
        if (uniform(1, 100) > keep_percent) continue;
        p.add_term(key, nonzero_coefficient(bound));
      }
    if (!p.is_zero()) return p;
  }
}

}  // namespace filtra
