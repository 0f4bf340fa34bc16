// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "filtra/growth.hpp"
#include "filtra/inequality.hpp"
#include "filtra/module_io.hpp"
#include "filtra/parse.hpp"
#include "filtra/poisson.hpp"
#include "filtra/return_function.hpp"
#include "filtra/sampling.hpp"

using namespace filtra;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0 = untimed
  std::function<bool(std::string&)> run;
};

bool check(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// ---------------------------------------------------------------------------

bool weyl_arithmetic(std::string& detail) {
  bool ok = true;
  const WeylElement relation = WeylElement::derivation(1, 1) * WeylElement::coordinate(1, 1) -
                               WeylElement::coordinate(1, 1) * WeylElement::derivation(1, 1);
  ok &= check(relation == WeylElement::one(1), detail, "d1 x1 - x1 d1 != 1");

  Sampler sampler(20240801);
  for (int n : {1, 2}) {
    for (int trial = 0; trial < 500; ++trial) {
      const WeylElement u = sampler.sparse_weyl(n, 4, 3, 25);
      const WeylElement v = sampler.sparse_weyl(n, 4, 3, 25);
      const WeylElement w = sampler.sparse_weyl(n, 4, 3, 25);
      ok &= check((u * v) * w == u * (v * w), detail, "associativity failed");
      ok &= check((u + v) * w == u * w + v * w, detail, "right distributivity failed");
      ok &= check(u * (v + w) == u * v + u * w, detail, "left distributivity failed");
      if (!ok) return false;
    }
  }
  return ok;
}

bool filtration_dimensions(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 3; ++n)
    for (long i = 0; i <= 10; ++i) {
      const auto enumerated = filtration_basis_keys(n, i).size();
      const Integer expected = binomial(static_cast<unsigned long>(i + 2 * n),
                                        static_cast<unsigned long>(2 * n));
      ok &= check(Integer(static_cast<unsigned long>(enumerated)) == expected, detail,
                  "dim A_" + std::to_string(n) + "," + std::to_string(i) +
                      " != C(i+2n, 2n)");
    }
  return ok;
}

bool replay_profile_witnesses(const ReturnFunctionProfile& profile, std::string& detail) {
  bool ok = true;
  std::size_t replayed = 0;
  for (const auto& entry : profile.entries)
    for (const auto& w : entry.witnesses) {
      if (w.kind != "ad-chain") continue;
      AdChainCertificate cert;
      cert.element = parse_weyl(w.element, profile.n);
      for (auto g : w.data) cert.chain.push_back(static_cast<int>(g));
      cert.scalar = rational_from_string(w.scalar);
      ok &= check(replay(cert), detail, "ad-chain certificate failed to replay");
      ++replayed;
    }
  ok &= check(replayed > 0, detail, "profile carries no ad-chain certificates");
  return ok;
}

bool algebra_return_function(std::string& detail) {
  bool ok = true;
  const std::array<std::tuple<int, long, int>, 2> cases = {
      std::tuple<int, long, int>{1, 5, 6}, std::tuple<int, long, int>{2, 3, 3}};
  for (const auto& [n, imax, samples] : cases) {
    const auto profile = algebra_return_profile(n, imax, samples, 7);
    for (const auto& entry : profile.entries) {
      ok &= check(entry.lower == entry.i && entry.upper == entry.i && entry.exact, detail,
                  "A_" + std::to_string(n) + " profile not pinned at i=" +
                      std::to_string(entry.i));
    }
    ok &= replay_profile_witnesses(profile, detail);
    for (long i = 1; i <= imax; ++i)
      ok &= check(lower_bound_probe(n, i) == i, detail, "lower-bound probe failed");
  }
  return ok;
}

bool module_return_function(std::string& detail) {
  bool ok = true;
  const std::array<std::tuple<int, long, int>, 2> cases = {
      std::tuple<int, long, int>{1, 6, 6}, std::tuple<int, long, int>{2, 4, 3}};
  for (const auto& [n, imax, samples] : cases) {
    const auto profile = module_return_profile(polynomial_module(n), imax, samples, 7);
    for (const auto& entry : profile.entries)
      ok &= check(entry.lower == entry.i && entry.upper == entry.i && entry.exact, detail,
                  "P_" + std::to_string(n) + " profile not pinned at i=" +
                      std::to_string(entry.i));
  }
  return ok;
}

bool bernstein_inequality(std::string& detail) {
  bool ok = true;
  std::vector<std::pair<std::string, GrowthFit>> fits;
  fits.emplace_back("P1", growth_profile(polynomial_module(1), 10));
  fits.emplace_back("A1/A1(d1-1)",
                    growth_profile(cyclic_quotient_module(1, {parse_weyl("d1 - 1", 1)}, 12), 10));

  Sampler sampler(42);
  int accepted = 0;
  while (accepted < 20) {
    const WeylElement g = sampler.sparse_weyl(1, 3);
    if (g.as_scalar()) continue;
    const auto m = cyclic_quotient_module(1, {g}, 12);
    const GrowthFit fit = growth_profile(m, 10);
    if (!fit.exact() || !fit.sequence_exact) continue;
    fits.emplace_back("A1/A1(" + render(g) + ")", fit);
    ++accepted;
  }
  const auto report = first_filter_report(1, fits);
  ok &= check(!report.any_violation && !report.any_skipped, detail,
              "a GK estimate fell below the holonomic bound");
  for (const auto& v : report.verdicts)
    ok &= check(v.gk_degree >= 1, detail, v.module + ": GK < 1");
  // the two named modules are holonomic with degree 1 and multiplicity 1
  for (std::size_t t : {std::size_t{0}, std::size_t{1}}) {
    ok &= check(report.verdicts[t].holonomic && report.verdicts[t].gk_degree == 1 &&
                    report.verdicts[t].multiplicity == 1,
                detail, report.verdicts[t].module + " not classified holonomic(1, 1)");
  }
  return ok;
}

bool quasi_polynomial_machinery(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    std::vector<Integer> seq;
    for (long i = 0; i < 16; ++i)
      seq.push_back(binomial(static_cast<unsigned long>(i + n), static_cast<unsigned long>(n)));
    const GrowthFit fit = fit_quasi_polynomial(seq, 1);
    ok &= check(fit.exact() && *fit.degree == n && fit.multiplicity == 1, detail,
                "C(i+n,n) fit wrong for n=" + std::to_string(n));
    Rational denom_scale = Rational(factorial(static_cast<unsigned long>(n)));
    for (const auto& poly : fit.class_polynomials)
      for (const auto& c : poly) {
        Rational scaled = c * denom_scale;
        scaled.canonicalize();
        ok &= check(scaled.get_den() == 1, detail, "coefficient denominator bound violated");
      }
  }
  // period-2 synthetic: f(i) = C(floor(i/2) + 2, 2), degree 2 in i
  std::vector<Integer> synthetic;
  for (long i = 0; i < 24; ++i)
    synthetic.push_back(binomial(static_cast<unsigned long>(i / 2 + 2), 2));
  const GrowthFit fit2 = fit_quasi_polynomial(synthetic, 2);
  ok &= check(fit2.exact() && *fit2.degree == 2 && fit2.leading == Rational(1, 8), detail,
              "period-2 synthetic fit wrong");
  const Rational scale = Rational(4) * Rational(2);  // k^d * d! = 4 * 2
  for (const auto& poly : fit2.class_polynomials)
    for (const auto& c : poly) {
      Rational scaled = c * scale;
      scaled.canonicalize();
      ok &= check(scaled.get_den() == 1, detail, "period-2 denominator bound violated");
    }
  return ok;
}

bool length_bound_values(std::string& detail) {
  bool ok = true;
  const auto constants = weyl_constants(1);
  ok &= check(constants.c_squared == Rational(1, 4), detail, "c^2 != 1/4 for A_1");

  const GrowthFit p1 = growth_profile(polynomial_module(1), 10);
  const LengthBounds bounds = length_bounds(1, p1, 1);
  ok &= check(bounds.bound_leading.has_value() && *bounds.bound_leading == 2, detail,
              "l(P1)/c != 2");
  ok &= check(bounds.bound_multiplicity == 1, detail, "e(P1) k^h != 1");

  const GrowthFit doubled =
      growth_profile(direct_sum(polynomial_module(1), polynomial_module(1)), 10);
  ok &= check(doubled.exact() && doubled.leading == 2, detail, "l(P1 (+) P1) != 2");
  return ok;
}

bool bound_calculators(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    ok &= check(second_filter_bound(Rational(2 * n), 1) == Rational(n), detail,
                "second filter bound wrong at n=" + std::to_string(n));
    ok &= check(commutative_subalgebra_bound(Rational(2 * n), 1) == Rational(n), detail,
                "commutative subalgebra bound wrong at n=" + std::to_string(n));
  }
  return ok;
}

bool poisson_suite(std::string& detail) {
  bool ok = true;
  Sampler sampler(19);
  for (int vars : {2, 4}) {
    for (int trial = 0; trial < 250; ++trial) {
      const Polynomial f = sampler.sparse_polynomial(vars, 3);
      const Polynomial g = sampler.sparse_polynomial(vars, 3);
      const Polynomial h = sampler.sparse_polynomial(vars, 3);
      ok &= check(poisson_bracket(f, g) == -poisson_bracket(g, f), detail,
                  "antisymmetry failed");
      ok &= check(poisson_bracket(f, g * h) ==
                      poisson_bracket(f, g) * h + g * poisson_bracket(f, h),
                  detail, "Leibniz failed");
      const Polynomial jacobi = poisson_bracket(f, poisson_bracket(g, h)) +
                                poisson_bracket(g, poisson_bracket(h, f)) +
                                poisson_bracket(h, poisson_bracket(f, g));
      ok &= check(jacobi.is_zero(), detail, "Jacobi failed");
      if (!ok) return false;
    }
  }
  for (int n : {1, 2}) {
    const int vars = 2 * n;
    for (int i = 1; i <= vars; ++i) {
      const auto image = hamiltonian_weyl_image(Polynomial::variable(vars, i));
      const WeylElement expected = i <= n ? WeylElement::derivation(vars, n + i)
                                          : -WeylElement::derivation(vars, i - n);
      ok &= check(image == expected, detail, "coordinate image wrong");
    }
    for (int i = 1; i <= vars; ++i)
      for (int j = 1; j <= vars; ++j) {
        const auto hi = hamiltonian_weyl_image(Polynomial::variable(vars, i));
        const auto hj = hamiltonian_weyl_image(Polynomial::variable(vars, j));
        const auto mi = WeylElement::coordinate(vars, i);
        const auto mj = WeylElement::coordinate(vars, j);
        const auto bracket = poisson_bracket(Polynomial::variable(vars, i),
                                             Polynomial::variable(vars, j));
        const auto scalar = bracket.as_constant();
        ok &= check(scalar.has_value() &&
                        commutator(hi, mj) == WeylElement::scalar(vars, *scalar) &&
                        commutator(hi, hj).is_zero() && commutator(mi, mj).is_zero(),
                    detail, "Weyl relations failed on images");
      }
    std::vector<Polynomial> coords;
    for (int i = 1; i <= n; ++i) coords.push_back(Polynomial::variable(vars, i));
    const auto report = isotropic_bound_report(n, coords);
    ok &= check(report.holds && report.tight && report.bound == n, detail,
                "isotropic bound not tight for coordinates");
  }
  return ok;
}

// ---------------------------------------------------------------------------

std::string g_filtra_path;
std::string g_data_dir;
std::string g_work_dir;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool run_cli(const std::string& args, const std::string& out_path) {
  const std::string command =
      "\"" + g_filtra_path + "\" " + args + " --out \"" + out_path + "\"";
  return std::system(command.c_str()) == 0;
}

bool determinism(std::string& detail) {
  if (g_filtra_path.empty()) {
    detail = "path to the filtra binary not supplied (--filtra)";
    return false;
  }
  bool ok = true;
  const std::vector<std::string> runs = {
      "return-fn --n 1 --imax 4 --samples 8 --seed 7",
      "bernstein --module \"" + g_data_dir + "/p1.json\" --random 5 --seed 3",
      "poisson-check --n 1 --triples 50 --seed 9",
      "dims --n 2 --imax 8 --format csv",
  };
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const std::string first = g_work_dir + "/acc_run_" + std::to_string(r) + "_a";
    const std::string second = g_work_dir + "/acc_run_" + std::to_string(r) + "_b";
    ok &= check(run_cli(runs[r], first), detail, "CLI run failed: " + runs[r]);
    ok &= check(run_cli(runs[r], second), detail, "CLI rerun failed: " + runs[r]);
    if (!ok) return false;
    const std::string a = slurp(first);
    ok &= check(!a.empty() && a == slurp(second), detail,
                "outputs differ across identical runs: " + runs[r]);
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"filtra acceptance suite"};
  app.add_option("--filtra", g_filtra_path, "Path to the filtra binary");
  app.add_option("--data", g_data_dir, "Directory with module description files");
  app.add_option("--work", g_work_dir, "Scratch directory for CLI outputs");
  CLI11_PARSE(app, argc, argv);
  if (g_data_dir.empty()) g_data_dir = "data/modules";
  if (g_work_dir.empty()) {
    const char* tmp = std::getenv("TMPDIR");
    g_work_dir = tmp != nullptr ? tmp : "/tmp";
  }

  const std::vector<Criterion> criteria = {
      {1, "Weyl arithmetic: defining relation, associativity, distributivity", 10.0,
       weyl_arithmetic},
      {2, "filtration dimensions match C(i+2n, 2n)", 5.0, filtration_dimensions},
      {3, "algebra return function pinned to nu(i) = i with certificates", 120.0,
       algebra_return_function},
      {4, "polynomial module return function pinned to nu(i) = i", 60.0,
       module_return_function},
      {5, "Bernstein inequality and holonomic classification", 120.0, bernstein_inequality},
      {6, "quasi-polynomial fits and denominator bounds", 5.0, quasi_polynomial_machinery},
      {7, "holonomic length bounds: 2 and 1 for P1, additive leading coefficients", 0.0,
       length_bound_values},
      {8, "bound calculators reproduce n", 0.0, bound_calculators},
      {9, "Poisson suite: bracket laws, coordinate images, isotropic bound", 30.0,
       poisson_suite},
      {10, "CLI determinism: identical runs emit identical bytes", 0.0, determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (criterion.time_limit_s > 0 && elapsed > criterion.time_limit_s) {
      ok = false;
      if (detail.empty())
        detail = "exceeded the time budget of " + std::to_string(criterion.time_limit_s) + "s";
    }
    char line[512];
    std::snprintf(line, sizeof(line), "%s  criterion %2d: %s (%.2fs)%s%s",
                  ok ? "PASS" : "FAIL", criterion.id, criterion.title.c_str(), elapsed,
                  detail.empty() ? "" : " -- ", detail.c_str());
    std::cout << line << "\n";
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
