#include <doctest.h>

#include "filtra/linalg.hpp"
#include "filtra/parse.hpp"
#include "filtra/sampling.hpp"
#include "test_helpers.hpp"

using namespace filtra;
using filtra::testing::dense_rank_of;

TEST_CASE("echelon rank matches the dense oracle") {
  Sampler sampler(41);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Echelon::Vec> vecs;
    const int count = static_cast<int>(sampler.uniform(1, 12));
    for (int v = 0; v < count; ++v) vecs.push_back(to_vec(sampler.sparse_weyl(2, 3)));
    // throw in exact linear dependencies
    if (vecs.size() >= 2) {
      Echelon::Vec combo = vecs[0];
      Echelon::axpy(combo, Rational(-2), vecs[1]);  // combo = v0 + 2 v1
      vecs.push_back(std::move(combo));
    }
    Echelon ech;
    for (const auto& v : vecs) ech.insert(v);
    CHECK(ech.rank() == dense_rank_of(vecs));
  }
}

TEST_CASE("membership and unit pivots") {
  Echelon ech;
  ech.insert(to_vec(parse_weyl("x1*d1 + 1", 1)));
  ech.insert(to_vec(parse_weyl("x1*d1", 1)));
  CHECK(ech.has_pivot(MultiIndex{0, 0}));
  CHECK(ech.contains(to_vec(WeylElement::one(1))));
  CHECK(ech.contains(to_vec(parse_weyl("2*x1*d1 + 7", 1))));
  CHECK_FALSE(ech.contains(to_vec(parse_weyl("x1", 1))));
}

TEST_CASE("pivot degree counting") {
  Echelon ech;
  ech.insert(to_vec(parse_weyl("x1^3 + x1", 1)));
  ech.insert(to_vec(parse_weyl("x1^2", 1)));
  ech.insert(to_vec(parse_weyl("d1 + 5", 1)));
  CHECK(ech.pivots_with_degree_at_most(0) == 0);
  CHECK(ech.pivots_with_degree_at_most(1) == 1);
  CHECK(ech.pivots_with_degree_at_most(2) == 2);
  CHECK(ech.pivots_with_degree_at_most(3) == 3);
}

TEST_CASE("polynomial matrix rank by fraction-free elimination") {
  auto grid = [](std::initializer_list<std::initializer_list<const char*>> rows, int n) {
    std::vector<std::vector<Polynomial>> m;
    for (const auto& row : rows) {
      std::vector<Polynomial> out;
      for (const char* cell : row) out.push_back(parse_polynomial(cell, n));
      m.push_back(std::move(out));
    }
    return m;
  };
  CHECK(polynomial_matrix_rank(grid({{"1", "0"}, {"0", "1"}}, 2)) == 2);
  CHECK(polynomial_matrix_rank(grid({{"1", "0"}, {"2*x1", "0"}}, 2)) == 1);
  CHECK(polynomial_matrix_rank(grid({{"1", "1"}, {"x2", "x1"}}, 2)) == 2);  // det = x1 - x2
  CHECK(polynomial_matrix_rank(grid({{"x1", "x2"}, {"x1^2", "x1*x2"}}, 2)) == 1);
  CHECK(polynomial_matrix_rank(grid({{"x1*x2", "x2"}, {"x1", "1"}}, 2)) == 1);
  CHECK(polynomial_matrix_rank(grid({{"x1*x2 + 1", "x2"}, {"x1", "1"}}, 2)) == 2);
  CHECK(polynomial_matrix_rank(grid({{"x1", "x2", "1"}, {"x2", "x1", "0"}}, 2)) == 2);
}
