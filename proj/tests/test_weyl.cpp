#include <doctest.h>

#include "filtra/errors.hpp"
#include "filtra/linalg.hpp"
#include "filtra/parse.hpp"
#include "filtra/polynomial.hpp"
#include "filtra/sampling.hpp"
#include "filtra/weyl.hpp"
#include "test_helpers.hpp"

using namespace filtra;

namespace {

WeylElement X(int n, int i) { return WeylElement::coordinate(n, i); }
WeylElement D(int n, int i) { return WeylElement::derivation(n, i); }

WeylElement power(WeylElement base, unsigned e) {
  WeylElement acc = WeylElement::one(base.n());
  for (unsigned k = 0; k < e; ++k) acc = acc * base;
  return acc;
}

}  // namespace

TEST_CASE("defining relations") {
  for (int n : {1, 2, 3}) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const WeylElement lhs = D(n, i) * X(n, j) - X(n, j) * D(n, i);
        if (i == j)
          CHECK(lhs == WeylElement::one(n));
        else
          CHECK(lhs.is_zero());
        CHECK((X(n, i) * X(n, j) - X(n, j) * X(n, i)).is_zero());
        CHECK((D(n, i) * D(n, j) - D(n, j) * D(n, i)).is_zero());
      }
    }
  }
}

TEST_CASE("product normal forms") {
  CHECK(D(1, 1) * X(1, 1) == parse_weyl("x1*d1 + 1", 1));
  const WeylElement u = parse_weyl("x1^2*d1 - 3*x1 + 1/2", 1);
  CHECK(WeylElement::one(1) * u == u);
  CHECK(u * WeylElement::one(1) == u);

  // oracle: both sides act identically on x1^k
  const WeylElement lhs = power(D(1, 1), 2) * power(X(1, 1), 2);
  for (unsigned k = 0; k <= 4; ++k) {
    const Polynomial xk = Polynomial::monomial(1, MultiIndex{k});
    CHECK(lhs.apply(xk) == power(D(1, 1), 2).apply(power(X(1, 1), 2).apply(xk)));
  }
  CHECK(lhs == parse_weyl("x1^2*d1^2 + 4*x1*d1 + 2", 1));
}

TEST_CASE("linear combinations") {
  std::vector<std::pair<Rational, WeylElement>> pairs = {{1, D(1, 1)}, {-1, D(1, 1)}};
  CHECK(linear_combination(pairs).is_zero());
  pairs = {{2, X(1, 1)}, {3, X(1, 1)}};
  CHECK(linear_combination(pairs) == X(1, 1) * Rational(5));
  const Rational half(1, 2);
  pairs = {{half, X(1, 1) * D(1, 1)}, {half, X(1, 1) * D(1, 1)}};
  CHECK(linear_combination(pairs) == X(1, 1) * D(1, 1));
}

TEST_CASE("mixed dimensions") {
  CHECK_THROWS_AS((void)(X(1, 1) * X(2, 1)), dimension_mismatch);
  std::vector<std::pair<Rational, WeylElement>> mixed = {{1, X(1, 1)}, {1, X(2, 1)}};
  CHECK_THROWS_AS(linear_combination(mixed), dimension_mismatch);
  // zero adopts the other operand's algebra
  CHECK((WeylElement::zero(1) + X(2, 2)).n() == 2);
  CHECK((X(2, 2) * WeylElement::zero(1)).is_zero());
}

TEST_CASE("filtration degree") {
  CHECK(WeylElement::one(1).degree() == 0);
  CHECK(parse_weyl("x1*d1 + 1", 1).degree() == 2);
  CHECK(parse_weyl("x1^3*d2", 2).degree() == 4);
  CHECK_FALSE(WeylElement::zero(1).degree().has_value());
}

TEST_CASE("ad on generators") {
  CHECK(ad_generator(2, X(1, 1)) == WeylElement::one(1));  // ad(d1) x1 = 1
  CHECK(ad_generator(1, power(X(1, 1), 5)).is_zero());
  CHECK(ad_generator(3, parse_weyl("x1^2*d2", 2)) == parse_weyl("2*x1*d2", 2));
  CHECK_THROWS_AS(ad_generator(5, X(2, 1)), std::invalid_argument);

  Sampler sampler(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(sampler.uniform(0, 1));
    const WeylElement u = sampler.sparse_weyl(n, 3);
    for (int g = 1; g <= 2 * n; ++g) {
      const WeylElement image = ad_generator(g, u);
      if (!image.is_zero()) CHECK(*image.degree() <= *u.degree() - 1);
    }
  }
}

TEST_CASE("filtration basis enumeration") {
  // oracle: odometer enumeration of exponent tuples with sum <= i
  auto brute_count = [](int n, long i) {
    const std::size_t len = static_cast<std::size_t>(2 * n);
    std::vector<long> exponents(len, 0);
    std::size_t count = 0;
    for (;;) {
      long sum = 0;
      for (long e : exponents) sum += e;
      if (sum <= i) ++count;
      std::size_t pos = 0;
      while (pos < len && exponents[pos] == i) exponents[pos++] = 0;
      if (pos == len) break;
      ++exponents[pos];
    }
    return count;
  };
  CHECK(filtration_basis(1, 0).size() == 1);
  CHECK(filtration_basis(1, 2).size() == 6);
  CHECK(filtration_basis(2, 1).size() == 5);
  for (int n : {1, 2, 3})
    for (long i = 0; i <= 6; ++i) {
      const auto keys = filtration_basis_keys(n, i);
      CHECK(keys.size() == brute_count(n, i));
      CHECK(Integer(static_cast<unsigned long>(keys.size())) == filtration_dimension(n, i));
      for (std::size_t t = 1; t < keys.size(); ++t) CHECK(grlex_less(keys[t - 1], keys[t]));
    }
}

TEST_CASE("polynomial action") {
  const Polynomial x2 = parse_polynomial("x1^2", 1);
  CHECK(D(1, 1).apply(x2) == parse_polynomial("2*x1", 1));
  const Polynomial p = parse_polynomial("x1^3 - 2*x1 + 5", 1);
  CHECK(WeylElement::one(1).apply(p) == p);
  CHECK((X(1, 1) * D(1, 1)).apply(parse_polynomial("x1^3", 1)) ==
        parse_polynomial("3*x1^3", 1));

  // module axiom (u v) p = u (v p) on random data
  Sampler sampler(23);
  for (int trial = 0; trial < 30; ++trial) {
    const WeylElement u = sampler.sparse_weyl(2, 3);
    const WeylElement v = sampler.sparse_weyl(2, 3);
    const Polynomial p2 = sampler.sparse_polynomial(2, 3);
    CHECK((u * v).apply(p2) == u.apply(v.apply(p2)));
  }
}

TEST_CASE("associativity and distributivity") {
  Sampler sampler(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(sampler.uniform(0, 1));
    const WeylElement u = sampler.sparse_weyl(n, 3);
    const WeylElement v = sampler.sparse_weyl(n, 3);
    const WeylElement w = sampler.sparse_weyl(n, 3);
    CHECK((u * v) * w == u * (v * w));
    CHECK((u + v) * w == u * w + v * w);
    CHECK(u * (v + w) == u * v + u * w);
  }
}

TEST_CASE("degree is additive under products") {
  Sampler sampler(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(sampler.uniform(0, 1));
    const WeylElement u = sampler.sparse_weyl(n, 4);
    const WeylElement v = sampler.sparse_weyl(n, 4);
    CHECK(*(u * v).degree() == *u.degree() + *v.degree());
  }
}

TEST_CASE("normal form uniqueness against the polynomial action") {
  Sampler sampler(31);
  auto random_word = [&](int n) {
    WeylElement acc = WeylElement::one(n);
    const int length = static_cast<int>(sampler.uniform(1, 6));
    for (int t = 0; t < length; ++t)
      acc = acc * WeylElement::generator(n, static_cast<int>(sampler.uniform(1, 2 * n)));
    return acc;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(sampler.uniform(0, 1));
    const WeylElement u = random_word(n);
    const WeylElement v = random_word(n);
    const long bound = std::max(u.degree().value_or(0), v.degree().value_or(0));
    bool acts_equal = true;
    for (long d = 0; d <= bound && acts_equal; ++d)
      for (const auto& key :
           multi_indices_of_degree(static_cast<std::size_t>(n), static_cast<std::uint64_t>(d))) {
        const Polynomial mono = Polynomial::monomial(n, key);
        if (u.apply(mono) != v.apply(mono)) {
          acts_equal = false;
          break;
        }
      }
    CHECK(acts_equal == (u == v));
  }
}

TEST_CASE("joint ad kernel is the scalars") {
  for (const auto& [n, imax] : std::vector<std::pair<int, long>>{{1, 4}, {2, 3}}) {
    for (long i = 1; i <= imax; ++i) {
      // rank of b -> (ad_1 b, ..., ad_2n b) stacked with tagged keys
      std::vector<Echelon::Vec> images;
      for (const auto& key : filtration_basis_keys(n, i)) {
        WeylElement b(n);
        b.add_term(key, 1);
        Echelon::Vec stacked;
        for (int g = 1; g <= 2 * n; ++g) {
          const WeylElement image = ad_generator(g, b);
          for (const auto& [ikey, c] : image.terms())
            stacked.emplace(concat(MultiIndex{static_cast<std::uint32_t>(g)}, ikey), c);
        }
        images.push_back(std::move(stacked));
      }
      Echelon ech;
      for (const auto& v : images) ech.insert(v);
      const auto domain = filtration_dimension(n, i);
      CHECK(Integer(static_cast<unsigned long>(ech.rank())) == domain - 1);
    }
  }
}
