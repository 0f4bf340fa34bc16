#include <doctest.h>

#include "filtra/errors.hpp"
#include "filtra/parse.hpp"
#include "filtra/return_function.hpp"
#include "filtra/sampling.hpp"
#include "test_helpers.hpp"

using namespace filtra;

namespace {

WeylElement x_power(int n, long e) {
  MultiIndex alpha(static_cast<std::size_t>(n), 0);
  alpha[0] = static_cast<std::uint32_t>(e);
  return WeylElement::monomial(n, alpha, MultiIndex(static_cast<std::size_t>(n), 0));
}

// brute-force span of {x a y : x, y in the A_j monomial basis}, dense rank
bool unit_in_span_oracle(const WeylElement& a, long j) {
  std::vector<Echelon::Vec> span;
  const auto keys = filtration_basis_keys(a.n(), j);
  for (const auto& kx : keys) {
    WeylElement x(a.n());
    x.add_term(kx, 1);
    for (const auto& ky : keys) {
      WeylElement y(a.n());
      y.add_term(ky, 1);
      span.push_back(to_vec(x * a * y));
    }
  }
  const std::size_t base = filtra::testing::dense_rank_of(span);
  span.push_back(to_vec(WeylElement::one(a.n())));
  return filtra::testing::dense_rank_of(span) == base;
}

}  // namespace

TEST_CASE("algebra return probes") {
  CHECK(element_return_index_algebra(WeylElement::scalar(1, 5), 3).index == 0);

  const ReturnProbe x1 = element_return_index_algebra(x_power(1, 1), 4);
  CHECK(x1.index == 1);
  CHECK(x1.status == ProbeStatus::Exact);
  CHECK_FALSE(unit_in_span_oracle(x_power(1, 1), 0));
  CHECK(unit_in_span_oracle(x_power(1, 1), 1));

  const ReturnProbe x3 = element_return_index_algebra(x_power(1, 3), 5);
  CHECK(x3.index == 3);
  CHECK_FALSE(unit_in_span_oracle(x_power(1, 3), 2));

  CHECK_THROWS_AS(element_return_index_algebra(WeylElement::zero(1), 2), std::invalid_argument);

  const ReturnProbe capped = element_return_index_algebra(x_power(1, 4), 2);
  CHECK(capped.status == ProbeStatus::BoundReached);
}

TEST_CASE("span guard") {
  SpanOptions tight;
  tight.max_span = 10;
  CHECK_THROWS_AS(element_return_index_algebra(x_power(1, 3), 3, tight), span_cap_exceeded);
}

TEST_CASE("module return probes") {
  const auto p1 = polynomial_module(1);
  const ModuleRealization m(p1);
  const std::vector<Echelon::Vec>& m0 = p1.generating_vectors;

  auto poly_vec = [&](const char* text) { return to_vec(parse_polynomial(text, 1)); };
  CHECK(element_return_index_module(m, poly_vec("1"), m0, 4).index == 0);
  for (long i = 1; i <= 4; ++i) {
    const auto probe = element_return_index_module(
        m, to_vec(Polynomial::monomial(1, MultiIndex{static_cast<std::uint32_t>(i)})), m0, 6);
    CHECK(probe.index == i);
    CHECK(probe.status == ProbeStatus::Exact);
  }
  CHECK(element_return_index_module(m, poly_vec("1 + x1"), m0, 4).index == 1);  // d1 recovers 1
  CHECK_THROWS_AS(element_return_index_module(m, Echelon::Vec{}, m0, 3), std::invalid_argument);
}

TEST_CASE("cyclic module probes reduce modulo the ideal span") {
  const auto quotient = cyclic_quotient_module(1, {parse_weyl("d1", 1)}, 8);
  const std::vector<WeylElement> m0 = {WeylElement::one(1)};
  // the class of x1^2 behaves like the polynomial-module vector x^2
  const auto probe = element_return_index_module(quotient, x_power(1, 2), m0, 6);
  CHECK(probe.index == 2);
  CHECK_FALSE(probe.approximate);
}

TEST_CASE("ad chain witnesses") {
  const AdChainCertificate cx = ad_chain_witness(x_power(1, 1));
  CHECK(cx.chain == std::vector<int>{2});
  CHECK(cx.scalar == 1);
  CHECK(replay(cx));

  const AdChainCertificate scalar = ad_chain_witness(WeylElement::scalar(1, 5));
  CHECK(scalar.chain.empty());
  CHECK(scalar.scalar == 5);

  // greedy order applies ad(x1) first: x1 d1 -> -x1 -> -1
  const AdChainCertificate mixed = ad_chain_witness(parse_weyl("x1*d1", 1));
  CHECK(mixed.chain == std::vector<int>{1, 2});
  CHECK(mixed.scalar == -1);
  CHECK(replay(mixed));

  AdChainCertificate corrupted = mixed;
  corrupted.scalar = 1;
  CHECK_FALSE(replay(corrupted));

  CHECK_THROWS_AS(ad_chain_witness(WeylElement::zero(2)), std::invalid_argument);

  Sampler sampler(13);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(sampler.uniform(0, 1));
    const WeylElement a = sampler.sparse_weyl(n, 3);
    const AdChainCertificate cert = ad_chain_witness(a);
    CHECK(replay(cert));
    CHECK(static_cast<long>(cert.chain.size()) <= *a.degree());
  }
}

TEST_CASE("constant-coefficient lower bound probe") {
  CHECK(lower_bound_probe(1, 1) == 1);
  CHECK(lower_bound_probe(1, 3) == 3);
  CHECK(lower_bound_probe(2, 2) == 2);
  CHECK_THROWS_AS(lower_bound_probe(1, 0), std::invalid_argument);
}

TEST_CASE("left probes stay below two-sided probes") {
  for (long e = 1; e <= 3; ++e) {
    const WeylElement a = x_power(1, e);
    const LeftReturnProbe left = left_return_index_cutoff(a, 2 * e, 6);
    const ReturnProbe two_sided = element_return_index_algebra(a, 2 * e);
    REQUIRE(left.status == ProbeStatus::Exact);
    CHECK(left.index <= two_sided.index);
    CHECK(left.stabilized);
  }
}

TEST_CASE("algebra profile pins the return function") {
  const ReturnFunctionProfile profile = algebra_return_profile(1, 4, 4, 7);
  REQUIRE(profile.entries.size() == 5);
  for (long i = 0; i <= 4; ++i) {
    const auto& e = profile.entries[static_cast<std::size_t>(i)];
    CHECK(e.lower == i);
    CHECK(e.upper == i);
    CHECK(e.exact);
  }
  CHECK(profile.all_exact());
  // witnesses replay through the public arithmetic
  for (const auto& entry : profile.entries)
    for (const auto& w : entry.witnesses) {
      REQUIRE(w.kind == "ad-chain");
      AdChainCertificate cert;
      cert.element = parse_weyl(w.element, 1);
      for (auto g : w.data) cert.chain.push_back(static_cast<int>(g));
      cert.scalar = rational_from_string(w.scalar);
      CHECK(replay(cert));
      CHECK(w.probe_index <= static_cast<long>(cert.chain.size()));
    }
}

TEST_CASE("module profile pins the return function of P1") {
  const ReturnFunctionProfile profile =
      module_return_profile(polynomial_module(1), 4, 3, 11);
  for (long i = 0; i <= 4; ++i) {
    const auto& e = profile.entries[static_cast<std::size_t>(i)];
    CHECK(e.lower == i);
    CHECK(e.upper == i);
    CHECK(e.exact);
  }
  CHECK(profile.certified_cap);
}

TEST_CASE("profiles are monotone") {
  const ReturnFunctionProfile profile = algebra_return_profile(1, 4, 2, 19);
  for (std::size_t i = 1; i < profile.entries.size(); ++i) {
    CHECK(profile.entries[i].lower >= profile.entries[i - 1].lower);
    CHECK(profile.entries[i].upper >= profile.entries[i - 1].upper);
  }
}
