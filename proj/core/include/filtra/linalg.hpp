#ifndef FILTRA_LINALG_HPP
#define FILTRA_LINALG_HPP

#include <cstddef>
#include <map>
#include <utility>

#include "filtra/multi_index.hpp"
#include "filtra/polynomial.hpp"
#include "filtra/rational.hpp"
#include "filtra/weyl.hpp"

namespace filtra {

// Sparse row echelon over Q with keys ordered grlex-descending, so a row's
// pivot is its grlex-largest key. Two consequences are used throughout:
//  * the span contains the "unit" vector (all-zero key) iff that key is a
//    pivot, because a row pivoted there can hold nothing else;
//  * rows whose pivot has total degree <= d lie entirely inside the
//    degree-<= d coordinate subspace, so counting such pivots gives the
//    dimension of (row space) intersected with that subspace.
class Echelon {
 public:
  using Vec = std::map<MultiIndex, Rational, GrlexGreater>;

  // v -= c * row
  static void axpy(Vec& v, const Rational& c, const Vec& row);

  // Fully reduces v against the echelon rows.
  Vec reduce(Vec v) const;

  // Reduces and inserts; returns the pivot key when the rank grew.
  const MultiIndex* insert(Vec v);

  bool contains(Vec v) const { return reduce(std::move(v)).empty(); }
  bool has_pivot(const MultiIndex& key) const { return rows_.count(key) > 0; }
  std::size_t rank() const { return rows_.size(); }

  std::size_t pivots_with_degree_at_most(std::uint64_t d) const;

  const std::map<MultiIndex, Vec, GrlexGreater>& rows() const { return rows_; }

 private:
  std::map<MultiIndex, Vec, GrlexGreater> rows_;  // pivot -> monic row
};

Echelon::Vec to_vec(const WeylElement& u);
Echelon::Vec to_vec(const Polynomial& p);
WeylElement weyl_from_vec(int n, const Echelon::Vec& v);
Polynomial polynomial_from_vec(int n, const Echelon::Vec& v);

// Rank of a matrix with polynomial entries over the fraction field,
// by fraction-free (Bareiss) elimination with row/column pivoting.
std::size_t polynomial_matrix_rank(std::vector<std::vector<Polynomial>> m);

}  // namespace filtra

#endif
