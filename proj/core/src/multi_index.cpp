#include "filtra/multi_index.hpp"

namespace filtra {

std::uint64_t total_degree(const MultiIndex& m) {
  std::uint64_t sum = 0;
  for (auto e : m) sum += e;
  return sum;
}

bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return a < b;  // lexicographic on equal degree
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

namespace {

void enumerate(std::size_t length, std::uint64_t degree, MultiIndex& prefix,
               std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == length) {
    prefix.push_back(static_cast<std::uint32_t>(degree));
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::uint64_t e = 0; e <= degree; ++e) {
    prefix.push_back(static_cast<std::uint32_t>(e));
    enumerate(length, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(std::size_t length, std::uint64_t degree) {
  std::vector<MultiIndex> out;
  if (length == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  MultiIndex prefix;
  enumerate(length, degree, prefix, out);
  return out;
}

}  // namespace filtra
