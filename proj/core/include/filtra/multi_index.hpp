#ifndef FILTRA_MULTI_INDEX_HPP
#define FILTRA_MULTI_INDEX_HPP

#include <cstdint>
#include <vector>

namespace filtra {

// Exponent vector. The length is the ambient number of variables; for Weyl
// algebra terms two of these are stored concatenated as (alpha | beta).
using MultiIndex = std::vector<std::uint32_t>;

std::uint64_t total_degree(const MultiIndex& m);

// Graded lexicographic: first by total degree, ties broken lexicographically.
// Vectors of different length compare by length first so mixed keys still
// form a strict total order.
bool grlex_less(const MultiIndex& a, const MultiIndex& b);

struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return grlex_less(a, b); }
};

struct GrlexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return grlex_less(b, a); }
};

MultiIndex concat(const MultiIndex& a, const MultiIndex& b);

// Enumerates all m of the given length with total_degree(m) == degree, in
// ascending lexicographic order.
std::vector<MultiIndex> multi_indices_of_degree(std::size_t length, std::uint64_t degree);

}  // namespace filtra

#endif
