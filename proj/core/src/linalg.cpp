#include "filtra/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace filtra {

void Echelon::axpy(Vec& v, const Rational& c, const Vec& row) {
  if (c == 0) return;
  for (const auto& [key, value] : row) {
    auto [it, inserted] = v.emplace(key, 0);
    it->second -= c * value;
    if (it->second == 0) v.erase(it);
  }
}

Echelon::Vec Echelon::reduce(Vec v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const MultiIndex pivot = it->first;
    const Rational coeff = it->second;  // copy: axpy erases the aliased entry
    axpy(v, coeff, row->second);        // rows are monic
    it = v.upper_bound(pivot);
  }
  return v;
}

const MultiIndex* Echelon::insert(Vec v) {
  v = reduce(std::move(v));
  if (v.empty()) return nullptr;
  const Rational lead = v.begin()->second;
  if (lead != 1)
    for (auto& [key, value] : v) value /= lead;
  auto [it, inserted] = rows_.emplace(v.begin()->first, std::move(v));
  assert(inserted);
  return &it->first;
}

std::size_t Echelon::pivots_with_degree_at_most(std::uint64_t d) const {
  std::size_t count = 0;
  // rows_ iterates pivots grlex-descending; the tail of the map is the
  // low-degree part.
  for (auto it = rows_.begin(); it != rows_.end(); ++it) {
    if (total_degree(it->first) <= d) {
      count = static_cast<std::size_t>(std::distance(it, rows_.end()));
      break;
    }
  }
  return count;
}

Echelon::Vec to_vec(const WeylElement& u) {
  Echelon::Vec v;
  for (const auto& [key, c] : u.terms()) v.emplace(key, c);
  return v;
}

Echelon::Vec to_vec(const Polynomial& p) {
  Echelon::Vec v;
  for (const auto& [key, c] : p.terms()) v.emplace(key, c);
  return v;
}

WeylElement weyl_from_vec(int n, const Echelon::Vec& v) {
  WeylElement u(n);
  for (const auto& [key, c] : v) u.add_term(key, c);
  return u;
}

Polynomial polynomial_from_vec(int n, const Echelon::Vec& v) {
  Polynomial p(n);
  for (const auto& [key, c] : v) p.add_term(key, c);
  return p;
}

std::size_t polynomial_matrix_rank(std::vector<std::vector<Polynomial>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("polynomial_matrix_rank: ragged matrix");

  Polynomial previous_pivot;  // zero means "none yet"
  std::size_t rank = 0;
  for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
    // pick the nonzero entry with the fewest terms to slow coefficient growth
    std::size_t pr = rows, pc = cols, best = 0;
    for (std::size_t r = step; r < rows; ++r) {
      for (std::size_t c = step; c < cols; ++c) {
        const auto size = m[r][c].terms().size();
        if (size == 0) continue;
        if (pr == rows || size < best) {
          pr = r;
          pc = c;
          best = size;
        }
      }
    }
    if (pr == rows) break;  // all remaining entries vanish
    std::swap(m[step], m[pr]);
    if (pc != step)
      for (auto& row : m) std::swap(row[step], row[pc]);

    const Polynomial& pivot = m[step][step];
    for (std::size_t r = step + 1; r < rows; ++r) {
      for (std::size_t c = step + 1; c < cols; ++c) {
        Polynomial numerator = m[r][c] * pivot - m[r][step] * m[step][c];
        if (previous_pivot.is_zero()) {
          m[r][c] = std::move(numerator);
        } else {
          auto quotient = numerator.divide_exact(previous_pivot);
          if (!quotient)
            throw std::logic_error("polynomial_matrix_rank: Bareiss division left a remainder");
          m[r][c] = std::move(*quotient);
        }
      }
      m[r][step] = Polynomial::zero(m[r][step].n());
    }
    previous_pivot = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace filtra
