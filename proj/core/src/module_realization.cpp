#include "filtra/module_realization.hpp"

#include <set>
#include <stdexcept>

#include "filtra/errors.hpp"

namespace filtra {

int module_n(const ModuleRealization& m) {
  return std::visit([](const auto& r) { return r.n; }, m);
}

const std::string& module_description(const ModuleRealization& m) {
  return std::visit([](const auto& r) -> const std::string& { return r.description; }, m);
}

ConcreteModule polynomial_module(int n) {
  if (n < 1) throw std::invalid_argument("polynomial_module: n must be >= 1");
  ConcreteModule m;
  m.n = n;
  m.description = "P" + std::to_string(n);
  m.polynomial_structure = true;
  m.generator_action = [n](int g, const MultiIndex& key) {
    Echelon::Vec out;
    MultiIndex shifted = key;
    if (g <= n) {
      shifted[static_cast<std::size_t>(g - 1)] += 1;  // multiplication by x_g
      out.emplace(shifted, 1);
    } else {
      const auto v = static_cast<std::size_t>(g - n - 1);
      if (key[v] > 0) {  // d/dx_v
        shifted[v] -= 1;
        out.emplace(shifted, Rational(key[v]));
      }
    }
    return out;
  };
  m.generating_vectors.push_back({{MultiIndex(static_cast<std::size_t>(n), 0), Rational(1)}});
  return m;
}

CyclicQuotientModule cyclic_quotient_module(int n, std::vector<WeylElement> generators,
                                            long cutoff) {
  if (n < 1) throw std::invalid_argument("cyclic_quotient_module: n must be >= 1");
  if (cutoff < 0) throw std::invalid_argument("cyclic_quotient_module: cutoff must be >= 0");
  std::string desc = "A" + std::to_string(n) + "/(";
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& g = generators[k];
    if (g.is_zero()) throw std::invalid_argument("cyclic_quotient_module: zero ideal generator");
    if (g.n() != n)
      throw dimension_mismatch("cyclic_quotient_module: generator lives in a different algebra");
    if (k) desc += ", ";
    desc += "g" + std::to_string(k + 1);
  }
  desc += ")";
  CyclicQuotientModule m;
  m.n = n;
  m.generators = std::move(generators);
  m.cutoff = cutoff;
  m.description = desc;
  return m;
}

namespace {

// Echelon of span{a g_k : deg a <= N - deg g_k} for all generators.
Echelon ideal_span_echelon(int n, const std::vector<WeylElement>& generators, long N) {
  Echelon ech;
  for (const auto& g : generators) {
    if (g.is_zero()) throw std::invalid_argument("ideal span: zero generator");
    const long budget = N - *g.degree();
    if (budget < 0) continue;
    for (const auto& key : filtration_basis_keys(n, budget)) {
      WeylElement monomial(n);
      monomial.add_term(key, 1);
      ech.insert(to_vec(monomial * g));
    }
  }
  return ech;
}

}  // namespace

IdealPiece ideal_piece_dimension(int n, const std::vector<WeylElement>& generators, long d,
                                 long N) {
  if (d > N) throw std::invalid_argument("ideal_piece_dimension: cutoff below requested degree");
  if (d < 0) throw std::invalid_argument("ideal_piece_dimension: negative degree");
  const auto ud = static_cast<std::uint64_t>(d);
  const Echelon at_cutoff = ideal_span_echelon(n, generators, N);
  const std::size_t dim = at_cutoff.pivots_with_degree_at_most(ud);
  bool stabilized = true;
  if (N > 0) {
    const Echelon before = ideal_span_echelon(n, generators, N - 1);
    stabilized = before.pivots_with_degree_at_most(ud) == dim;
  }
  return IdealPiece{Integer(static_cast<unsigned long>(dim)), stabilized};
}

bool DimensionSequence::all_exact() const {
  for (const auto& e : values)
    if (!e.exact) return false;
  return true;
}

std::vector<Integer> DimensionSequence::plain() const {
  std::vector<Integer> out;
  out.reserve(values.size());
  for (const auto& e : values) out.push_back(e.value);
  return out;
}

Echelon::Vec apply_generator(const ConcreteModule& m, int g, const Echelon::Vec& v) {
  if (g < 1 || g > 2 * m.n) throw std::invalid_argument("apply_generator: index out of range");
  Echelon::Vec out;
  for (const auto& [key, c] : v) {
    Echelon::Vec image = m.generator_action(g, key);
    for (const auto& [ikey, ic] : image) {
      auto [it, inserted] = out.emplace(ikey, 0);
      it->second += c * ic;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

Echelon::Vec apply_monomial(const ConcreteModule& m, const MultiIndex& weyl_key,
                            const Echelon::Vec& v) {
  const auto un = static_cast<std::size_t>(m.n);
  Echelon::Vec current = v;
  for (std::size_t i = 0; i < un && !current.empty(); ++i)
    for (std::uint32_t rep = 0; rep < weyl_key[un + i] && !current.empty(); ++rep)
      current = apply_generator(m, static_cast<int>(un + i) + 1, current);
  for (std::size_t i = 0; i < un && !current.empty(); ++i)
    for (std::uint32_t rep = 0; rep < weyl_key[i] && !current.empty(); ++rep)
      current = apply_generator(m, static_cast<int>(i) + 1, current);
  return current;
}

Echelon::Vec apply_element(const ConcreteModule& m, const WeylElement& u, const Echelon::Vec& v) {
  Echelon::Vec out;
  for (const auto& [key, c] : u.terms()) {
    Echelon::Vec part = apply_monomial(m, key, v);
    for (const auto& [pkey, pc] : part) {
      auto [it, inserted] = out.emplace(pkey, 0);
      it->second += c * pc;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

void check_action_relations(const ConcreteModule& m, const std::vector<MultiIndex>& basis_keys) {
  const int n = m.n;
  auto vec_of = [](const MultiIndex& key) {
    Echelon::Vec v;
    v.emplace(key, 1);
    return v;
  };
  auto sub = [](Echelon::Vec a, const Echelon::Vec& b) {
    for (const auto& [key, c] : b) {
      auto [it, inserted] = a.emplace(key, 0);
      it->second -= c;
      if (it->second == 0) a.erase(it);
    }
    return a;
  };
  for (const auto& key : basis_keys) {
    const Echelon::Vec e = vec_of(key);
    for (int i = 1; i <= 2 * n; ++i) {
      for (int j = 1; j <= 2 * n; ++j) {
        Echelon::Vec ij = apply_generator(m, i, apply_generator(m, j, e));
        Echelon::Vec ji = apply_generator(m, j, apply_generator(m, i, e));
        Echelon::Vec diff = sub(std::move(ij), ji);
        // [a_i, a_j] = delta when (i,j) = (D_k, X_k), -delta transposed, 0 otherwise
        Echelon::Vec expected;
        if (i == j + n) expected = e;                          // D_k X_k - X_k D_k = 1
        else if (j == i + n) expected = sub(Echelon::Vec{}, e);  // X_k D_k - D_k X_k = -1
        if (!sub(std::move(diff), expected).empty())
          throw falsification_error(m.description +
                                    ": generator actions violate the Weyl relations");
      }
    }
  }
}

namespace {

DimensionSequence concrete_dimension_sequence(const ConcreteModule& m, long i_max) {
  DimensionSequence seq;
  seq.source = m.description + " (concrete realization)";
  Echelon ech;
  std::vector<Echelon::Vec> layer;  // representatives added in the previous degree
  std::set<MultiIndex, GrlexLess> touched;

  for (const auto& v : m.generating_vectors) {
    for (const auto& [key, c] : v) touched.insert(key);
    if (ech.insert(v) != nullptr) layer.push_back(v);
  }
  seq.values.push_back({Integer(static_cast<unsigned long>(ech.rank())), true});

  for (long d = 1; d <= i_max; ++d) {
    std::vector<Echelon::Vec> next;
    for (const auto& v : layer) {
      for (int g = 1; g <= 2 * m.n; ++g) {
        Echelon::Vec image = apply_generator(m, g, v);
        if (image.empty()) continue;
        for (const auto& [key, c] : image) touched.insert(key);
        if (ech.insert(image) != nullptr) next.push_back(std::move(image));
      }
    }
    seq.values.push_back({Integer(static_cast<unsigned long>(ech.rank())), true});
    layer = std::move(next);
  }

  check_action_relations(m, std::vector<MultiIndex>(touched.begin(), touched.end()));
  return seq;
}

DimensionSequence cyclic_dimension_sequence(const CyclicQuotientModule& m, long i_max) {
  if (i_max > m.cutoff)
    throw std::invalid_argument("module_dimension_sequence: i_max exceeds the cutoff");
  DimensionSequence seq;
  seq.source = m.description + " (cyclic quotient, cutoff " + std::to_string(m.cutoff) + ")";
  const Echelon at_cutoff = ideal_span_echelon(m.n, m.generators, m.cutoff);
  const Echelon before = m.cutoff > 0 ? ideal_span_echelon(m.n, m.generators, m.cutoff - 1)
                                      : Echelon{};
  for (long d = 0; d <= i_max; ++d) {
    const auto ud = static_cast<std::uint64_t>(d);
    const std::size_t piece = at_cutoff.pivots_with_degree_at_most(ud);
    const bool stabilized =
        m.cutoff == 0 || before.pivots_with_degree_at_most(ud) == piece;
    Integer dim = filtration_dimension(m.n, d) - Integer(static_cast<unsigned long>(piece));
    seq.values.push_back({dim, stabilized});
  }
  return seq;
}

}  // namespace

DimensionSequence module_dimension_sequence(const ModuleRealization& m, long i_max) {
  if (i_max < 0) throw std::invalid_argument("module_dimension_sequence: i_max must be >= 0");
  if (const auto* concrete = std::get_if<ConcreteModule>(&m))
    return concrete_dimension_sequence(*concrete, i_max);
  return cyclic_dimension_sequence(std::get<CyclicQuotientModule>(m), i_max);
}

ConcreteModule direct_sum(const ConcreteModule& a, const ConcreteModule& b) {
  if (a.n != b.n) throw dimension_mismatch("direct_sum: components over different algebras");
  ConcreteModule m;
  m.n = a.n;
  m.description = a.description + " (+) " + b.description;
  auto tag = [](std::uint32_t t, const MultiIndex& key) {
    MultiIndex out;
    out.reserve(key.size() + 1);
    out.push_back(t);
    out.insert(out.end(), key.begin(), key.end());
    return out;
  };
  m.generator_action = [a_act = a.generator_action, b_act = b.generator_action,
                        tag](int g, const MultiIndex& key) {
    const std::uint32_t t = key.front();
    MultiIndex inner(key.begin() + 1, key.end());
    Echelon::Vec image = (t == 0 ? a_act : b_act)(g, inner);
    Echelon::Vec out;
    for (const auto& [ikey, c] : image) out.emplace(tag(t, ikey), c);
    return out;
  };
  for (const auto& v : a.generating_vectors) {
    Echelon::Vec tagged;
    for (const auto& [key, c] : v) tagged.emplace(tag(0, key), c);
    m.generating_vectors.push_back(std::move(tagged));
  }
  for (const auto& v : b.generating_vectors) {
    Echelon::Vec tagged;
    for (const auto& [key, c] : v) tagged.emplace(tag(1, key), c);
    m.generating_vectors.push_back(std::move(tagged));
  }
  return m;
}

}  // namespace filtra
