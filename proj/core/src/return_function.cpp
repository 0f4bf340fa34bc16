#include "filtra/return_function.hpp"

#include <cstdlib>
#include <stdexcept>

#include "filtra/errors.hpp"
#include "filtra/parse.hpp"
#include "filtra/sampling.hpp"

namespace filtra {

SpanOptions::SpanOptions() : max_span(20000) {
  if (const char* env = std::getenv("FILTRA_MAX_SPAN")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) max_span = static_cast<std::size_t>(parsed);
  }
}

namespace {

void check_span_cap(const SpanOptions& options, std::size_t rows, const char* what, long j) {
  if (rows > options.max_span)
    throw span_cap_exceeded(std::string(what) + " at j=" + std::to_string(j) + " needs " +
                            std::to_string(rows) + " spanning vectors; cap is " +
                            std::to_string(options.max_span) + " (set FILTRA_MAX_SPAN to raise)");
}

MultiIndex constant_key(int n) { return MultiIndex(static_cast<std::size_t>(2 * n), 0); }

WeylElement key_monomial(int n, const MultiIndex& key) {
  WeylElement u(n);
  u.add_term(key, 1);
  return u;
}

}  // namespace

AdChainCertificate ad_chain_witness(const WeylElement& a) {
  if (a.is_zero()) throw std::invalid_argument("ad_chain_witness: zero element");
  AdChainCertificate cert;
  cert.element = a;
  WeylElement current = a;
  const long degree_bound = *a.degree();
  while (!current.as_scalar()) {
    bool advanced = false;
    for (int g = 1; g <= 2 * a.n() && !advanced; ++g) {
      WeylElement next = ad_generator(g, current);
      if (!next.is_zero()) {
        cert.chain.push_back(g);
        current = std::move(next);
        advanced = true;
      }
    }
    if (!advanced)
      throw falsification_error("ad_chain_witness: non-scalar element killed by every ad");
    if (static_cast<long>(cert.chain.size()) > degree_bound)
      throw falsification_error("ad_chain_witness: chain exceeds the filtration degree");
  }
  cert.scalar = *current.as_scalar();
  return cert;
}

bool replay(const AdChainCertificate& certificate) {
  WeylElement current = certificate.element;
  for (int g : certificate.chain) current = ad_generator(g, current);
  const auto scalar = current.as_scalar();
  return scalar && *scalar == certificate.scalar && certificate.scalar != 0 &&
         static_cast<long>(certificate.chain.size()) <=
             certificate.element.degree().value_or(0);
}

ReturnProbe element_return_index_algebra(const WeylElement& a, long j_max,
                                         const SpanOptions& options) {
  if (a.is_zero()) throw std::invalid_argument("element_return_index_algebra: zero element");
  const int n = a.n();
  const MultiIndex unit = constant_key(n);
  Echelon ech;
  std::vector<MultiIndex> keys;  // basis keys of A_j, grown level by level
  for (long j = 0; j <= j_max; ++j) {
    const std::size_t old_count = keys.size();
    for (const auto& key :
         multi_indices_of_degree(static_cast<std::size_t>(2 * n), static_cast<std::uint64_t>(j)))
      keys.push_back(key);
    check_span_cap(options, keys.size() * keys.size(), "algebra return probe", j);

    bool found = false;
    // only pairs with max(deg x, deg y) == j are new at this level
    for (std::size_t xi = 0; xi < keys.size() && !found; ++xi) {
      const WeylElement xa = key_monomial(n, keys[xi]) * a;
      const std::size_t y_start = xi < old_count ? old_count : 0;
      for (std::size_t yi = y_start; yi < keys.size() && !found; ++yi) {
        const MultiIndex* pivot = ech.insert(to_vec(xa * key_monomial(n, keys[yi])));
        found = pivot != nullptr && *pivot == unit;
      }
    }
    if (found || ech.has_pivot(unit)) return ReturnProbe{j, j_max, ProbeStatus::Exact, false};
  }
  return ReturnProbe{j_max, j_max, ProbeStatus::BoundReached, false};
}

namespace {

bool contains_all(const Echelon& ech, std::span<const Echelon::Vec> targets) {
  for (const auto& t : targets)
    if (!ech.contains(t)) return false;
  return true;
}

}  // namespace

ReturnProbe element_return_index_module(const ModuleRealization& m, const Echelon::Vec& u,
                                        std::span<const Echelon::Vec> m0, long j_max) {
  const auto* concrete = std::get_if<ConcreteModule>(&m);
  if (concrete == nullptr)
    throw std::invalid_argument(
        "element_return_index_module: concrete realization required for vector probes");
  if (u.empty()) throw std::invalid_argument("element_return_index_module: zero vector");
  const int n = concrete->n;
  Echelon ech;
  for (long j = 0; j <= j_max; ++j) {
    for (const auto& key :
         multi_indices_of_degree(static_cast<std::size_t>(2 * n), static_cast<std::uint64_t>(j))) {
      Echelon::Vec image = apply_monomial(*concrete, key, u);
      if (!image.empty()) ech.insert(std::move(image));
    }
    if (contains_all(ech, m0)) return ReturnProbe{j, j_max, ProbeStatus::Exact, false};
  }
  return ReturnProbe{j_max, j_max, ProbeStatus::BoundReached, false};
}

ReturnProbe element_return_index_module(const CyclicQuotientModule& m, const WeylElement& u,
                                        std::span<const WeylElement> m0, long j_max) {
  if (u.is_zero()) throw std::invalid_argument("element_return_index_module: zero vector");
  // membership holds modulo the cutoff ideal span; the span only under-
  // approximates the ideal, so a found index is valid but maybe not minimal
  bool stabilized = true;
  Echelon ech;
  for (const auto& g : m.generators) {
    const long budget = m.cutoff - *g.degree();
    for (long d = 0; d <= budget; ++d)
      for (const auto& key : multi_indices_of_degree(static_cast<std::size_t>(2 * m.n),
                                                     static_cast<std::uint64_t>(d)))
        ech.insert(to_vec(key_monomial(m.n, key) * g));
  }
  {
    IdealPiece probe = m.generators.empty()
                           ? IdealPiece{0, true}
                           : ideal_piece_dimension(m.n, m.generators, std::min(j_max, m.cutoff),
                                                   m.cutoff);
    stabilized = probe.stabilized;
  }
  if (ech.contains(to_vec(u)))
    throw std::invalid_argument("element_return_index_module: the class of u is zero");
  for (long j = 0; j <= j_max; ++j) {
    for (const auto& key :
         multi_indices_of_degree(static_cast<std::size_t>(2 * m.n), static_cast<std::uint64_t>(j)))
      ech.insert(to_vec(key_monomial(m.n, key) * u));
    bool all = true;
    for (const auto& t : m0)
      if (!ech.contains(to_vec(t))) {
        all = false;
        break;
      }
    if (all) return ReturnProbe{j, j_max, ProbeStatus::Exact, !stabilized};
  }
  return ReturnProbe{j_max, j_max, ProbeStatus::BoundReached, !stabilized};
}

long lower_bound_probe(int n, long i) {
  if (i < 1) throw std::invalid_argument("lower_bound_probe: i must be >= 1");
  MultiIndex alpha(static_cast<std::size_t>(n), 0);
  alpha[0] = static_cast<std::uint32_t>(i);
  const WeylElement worst =
      WeylElement::monomial(n, alpha, MultiIndex(static_cast<std::size_t>(n), 0));
  for (long p = 0; p < i; ++p) {
    for (long q = 0; p + q < i; ++q) {
      for (const auto& x : multi_indices_of_degree(static_cast<std::size_t>(2 * n),
                                                   static_cast<std::uint64_t>(p))) {
        const WeylElement left = key_monomial(n, x) * worst;
        for (const auto& y : multi_indices_of_degree(static_cast<std::size_t>(2 * n),
                                                     static_cast<std::uint64_t>(q))) {
          if ((left * key_monomial(n, y)).constant_coefficient() != 0)
            throw falsification_error(
                "lower_bound_probe: nonzero constant coefficient below the degree threshold");
        }
      }
    }
  }
  return i;
}

LeftReturnProbe left_return_index_cutoff(const WeylElement& a, long j_max, long N,
                                         const SpanOptions& options) {
  if (a.is_zero()) throw std::invalid_argument("left_return_index_cutoff: zero element");
  if (N < 1) throw std::invalid_argument("left_return_index_cutoff: cutoff must be >= 1");
  const int n = a.n();
  const MultiIndex unit = constant_key(n);

  auto probe_at = [&](long cutoff) -> long {
    Echelon ech;
    const auto left_keys = filtration_basis_keys(n, cutoff);
    for (long j = 0; j <= j_max; ++j) {
      const auto right_keys = multi_indices_of_degree(static_cast<std::size_t>(2 * n),
                                                      static_cast<std::uint64_t>(j));
      check_span_cap(options, left_keys.size() * right_keys.size(), "left return probe", j);
      for (const auto& x : left_keys) {
        const WeylElement xa = key_monomial(n, x) * a;
        for (const auto& y : right_keys) ech.insert(to_vec(xa * key_monomial(n, y)));
      }
      if (ech.has_pivot(unit)) return j;
    }
    return -1;
  };

  const long at_cutoff = probe_at(N);
  const long before = probe_at(N - 1);
  if (at_cutoff < 0)
    return LeftReturnProbe{j_max, j_max, ProbeStatus::BoundReached, at_cutoff == before};
  return LeftReturnProbe{at_cutoff, j_max, ProbeStatus::Exact, at_cutoff == before};
}

namespace {

MultiIndex worst_element_key(int n, long i) {
  MultiIndex key(static_cast<std::size_t>(2 * n), 0);
  key[0] = static_cast<std::uint32_t>(i);
  return key;
}

ProfileWitness chain_witness(const AdChainCertificate& cert, long probe_index) {
  ProfileWitness w;
  w.kind = "ad-chain";
  w.element = render(cert.element);
  for (int g : cert.chain) w.data.push_back(static_cast<std::uint32_t>(g));
  w.scalar = to_string(cert.scalar);
  w.probe_index = probe_index;
  return w;
}

}  // namespace

ReturnFunctionProfile algebra_return_profile(int n, long i_max, int samples, std::uint64_t seed,
                                             const SpanOptions& options) {
  if (i_max < 0) throw std::invalid_argument("algebra_return_profile: i_max must be >= 0");
  if (samples < 1) throw std::invalid_argument("algebra_return_profile: samples must be >= 1");
  ReturnFunctionProfile profile;
  profile.target = "A" + std::to_string(n);
  profile.algebra = true;
  profile.certified_cap = true;
  profile.n = n;
  profile.i_max = i_max;
  profile.samples = samples;
  profile.seed = seed;
  Sampler sampler(seed);

  for (long i = 0; i <= i_max; ++i) {
    ProfileEntry entry;
    entry.i = i;
    if (i == 0) {
      // A_0 = K: every nonzero element is scalar, hence already invertible
      entry.lower = entry.upper = 0;
      entry.exact = true;
      profile.entries.push_back(std::move(entry));
      continue;
    }

    const WeylElement worst = key_monomial(n, worst_element_key(n, i));
    const ReturnProbe worst_probe = element_return_index_algebra(worst, i, options);
    if (worst_probe.status != ProbeStatus::Exact)
      throw falsification_error("algebra_return_profile: X1^i exceeded the reduction bound");
    const AdChainCertificate worst_cert = ad_chain_witness(worst);
    if (!replay(worst_cert))
      throw falsification_error("algebra_return_profile: certificate replay failed");
    entry.witnesses.push_back(chain_witness(worst_cert, worst_probe.index));

    long sampled_max = worst_probe.index;
    for (int s = 0; s < samples; ++s) {
      const WeylElement a = sampler.dense_weyl(n, i);
      const AdChainCertificate cert = ad_chain_witness(a);
      if (!replay(cert))
        throw falsification_error("algebra_return_profile: certificate replay failed");
      const ReturnProbe probe =
          element_return_index_algebra(a, static_cast<long>(cert.chain.size()), options);
      if (probe.status != ProbeStatus::Exact)
        throw falsification_error(
            "algebra_return_profile: sampled element exceeded its ad-chain bound");
      sampled_max = std::max(sampled_max, probe.index);
      entry.witnesses.push_back(chain_witness(cert, probe.index));
    }

    const long lower = std::max(lower_bound_probe(n, i), worst_probe.index);
    const long upper = i;  // every a in A_i reduces to a scalar in <= i steps
    if (sampled_max > upper)
      throw falsification_error("algebra_return_profile: probe exceeded the certified cap");
    entry.lower = lower;
    entry.upper = upper;
    entry.exact = lower == upper;
    profile.entries.push_back(std::move(entry));
  }
  return profile;
}

namespace {

// Cyclic-restricted profile: membership is tested modulo the cutoff ideal
// span and no reduction theorem caps the upper bound, so every entry is an
// observational bracket and stays flagged non-exact.
ReturnFunctionProfile cyclic_return_profile(const CyclicQuotientModule& m, long i_max,
                                            int samples, std::uint64_t seed) {
  ReturnFunctionProfile profile;
  profile.target = m.description + " (cyclic-restricted)";
  profile.algebra = false;
  profile.certified_cap = false;
  profile.n = m.n;
  profile.i_max = i_max;
  profile.samples = samples;
  profile.seed = seed;
  Sampler sampler(seed);

  Echelon ideal;
  for (const auto& g : m.generators) {
    const long budget = m.cutoff - *g.degree();
    for (long d = 0; d <= budget; ++d)
      for (const auto& key : multi_indices_of_degree(static_cast<std::size_t>(2 * m.n),
                                                     static_cast<std::uint64_t>(d)))
        ideal.insert(to_vec(key_monomial(m.n, key) * g));
  }
  auto class_is_zero = [&](const WeylElement& u) { return ideal.contains(to_vec(u)); };

  const std::vector<WeylElement> m0 = {WeylElement::one(m.n)};
  const long j_max = m.cutoff;
  for (long i = 0; i <= i_max; ++i) {
    ProfileEntry entry;
    entry.i = i;
    const WeylElement worst = key_monomial(m.n, worst_element_key(m.n, i));
    if (class_is_zero(worst))
      throw std::invalid_argument("cyclic_return_profile: X1^i lies in the ideal");
    const ReturnProbe worst_probe =
        element_return_index_module(m, worst, std::span<const WeylElement>(m0), j_max);
    long observed = worst_probe.index;
    for (int s = 0; s < samples && i >= 1; ++s) {
      WeylElement u = sampler.dense_weyl(m.n, i);
      while (class_is_zero(u)) u = sampler.dense_weyl(m.n, i);
      const ReturnProbe probe =
          element_return_index_module(m, u, std::span<const WeylElement>(m0), j_max);
      observed = std::max(observed, probe.index);
    }
    entry.lower = worst_probe.status == ProbeStatus::Exact ? worst_probe.index : j_max;
    entry.upper = observed;
    entry.exact = false;
    profile.entries.push_back(std::move(entry));
  }
  return profile;
}

}  // namespace

ReturnFunctionProfile module_return_profile(const ModuleRealization& m, long i_max, int samples,
                                            std::uint64_t seed) {
  if (i_max < 0) throw std::invalid_argument("module_return_profile: i_max must be >= 0");
  if (samples < 1) throw std::invalid_argument("module_return_profile: samples must be >= 1");
  if (const auto* cyclic = std::get_if<CyclicQuotientModule>(&m))
    return cyclic_return_profile(*cyclic, i_max, samples, seed);
  const auto* concrete = std::get_if<ConcreteModule>(&m);
  if (concrete == nullptr || concrete->generating_vectors.empty())
    throw std::invalid_argument("module_return_profile: concrete realization required");
  const int n = concrete->n;
  const bool polynomial = concrete->polynomial_structure;

  ReturnFunctionProfile profile;
  profile.target = concrete->description;
  profile.algebra = false;
  profile.certified_cap = polynomial;
  profile.n = n;
  profile.i_max = i_max;
  profile.samples = samples;
  profile.seed = seed;
  Sampler sampler(seed);

  const std::span<const Echelon::Vec> m0(concrete->generating_vectors);

  auto derivative_witness = [&](const Echelon::Vec& u, long probe_index) {
    ProfileWitness w;
    w.kind = "derivative";
    w.element = render(polynomial_from_vec(n, u));
    const MultiIndex gamma = u.begin()->first;  // grlex-largest monomial
    w.data = gamma;
    MultiIndex key(static_cast<std::size_t>(2 * n), 0);
    for (std::size_t t = 0; t < gamma.size(); ++t) key[gamma.size() + t] = gamma[t];
    const Echelon::Vec scalar_vec = apply_monomial(*concrete, key, u);
    if (scalar_vec.size() != 1 || total_degree(scalar_vec.begin()->first) != 0 ||
        scalar_vec.begin()->second == 0)
      throw falsification_error("module_return_profile: derivative witness failed to replay");
    w.scalar = to_string(scalar_vec.begin()->second);
    w.probe_index = probe_index;
    return w;
  };

  for (long i = 0; i <= i_max; ++i) {
    ProfileEntry entry;
    entry.i = i;
    if (i == 0) {
      entry.lower = entry.upper = 0;
      entry.exact = true;
      profile.entries.push_back(std::move(entry));
      continue;
    }

    // designated worst vector: X_1^i applied to the first generator of M_0
    MultiIndex xkey(static_cast<std::size_t>(2 * n), 0);
    xkey[0] = static_cast<std::uint32_t>(i);
    const Echelon::Vec worst = apply_monomial(*concrete, xkey, concrete->generating_vectors[0]);
    if (worst.empty())
      throw std::invalid_argument("module_return_profile: X1^i annihilates the generator");
    const ReturnProbe worst_probe = element_return_index_module(m, worst, m0, i_max + i);
    if (worst_probe.status != ProbeStatus::Exact)
      throw falsification_error("module_return_profile: worst-vector probe hit its bound");

    long sampled_max = worst_probe.index;
    if (polynomial) entry.witnesses.push_back(derivative_witness(worst, worst_probe.index));

    for (int s = 0; s < samples; ++s) {
      Echelon::Vec u;
      do {
        const WeylElement w = sampler.dense_weyl(n, i);
        u = apply_element(*concrete, w, concrete->generating_vectors[0]);
      } while (u.empty());
      const ReturnProbe probe = element_return_index_module(m, u, m0, i_max + i);
      if (probe.status != ProbeStatus::Exact)
        throw falsification_error("module_return_profile: sampled probe hit its bound");
      sampled_max = std::max(sampled_max, probe.index);
      if (polynomial) {
        ProfileWitness w = derivative_witness(u, probe.index);
        if (probe.index > static_cast<long>(total_degree(w.data)))
          throw falsification_error(
              "module_return_profile: probe exceeded the derivative-witness bound");
        entry.witnesses.push_back(std::move(w));
      }
    }

    if (polynomial) {
      entry.lower = worst_probe.index;
      entry.upper = i;  // D^gamma extracts a scalar from degree-<= i vectors
      if (sampled_max > entry.upper)
        throw falsification_error("module_return_profile: probe exceeded the certified cap");
    } else {
      entry.lower = worst_probe.index;
      entry.upper = sampled_max;  // sampled only; not certified over all generators
    }
    entry.exact = polynomial && entry.lower == entry.upper;
    profile.entries.push_back(std::move(entry));
  }
  return profile;
}

std::vector<Integer> ReturnFunctionProfile::exact_values() const {
  std::vector<Integer> out;
  for (const auto& e : entries) {
    if (!e.exact) break;
    out.emplace_back(e.lower);
  }
  return out;
}

bool ReturnFunctionProfile::all_exact() const {
  for (const auto& e : entries)
    if (!e.exact) return false;
  return true;
}

}  // namespace filtra
