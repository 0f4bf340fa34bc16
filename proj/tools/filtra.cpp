// filtra — exact-arithmetic laboratory for Weyl algebras: filtration
// dimensions, growth degrees, return functions, holonomic classification
// and the bound calculators, with reproducible JSON/CSV/Markdown reports.

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "filtra/errors.hpp"
#include "filtra/growth.hpp"
#include "filtra/inequality.hpp"
#include "filtra/module_io.hpp"
#include "filtra/parse.hpp"
#include "filtra/poisson.hpp"
#include "filtra/report.hpp"
#include "filtra/return_function.hpp"
#include "filtra/sampling.hpp"
#include "filtra/task_pool.hpp"

namespace {

using filtra::Report;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 2;
constexpr int kExitResource = 3;

struct CommonOptions {
  std::string format = "json";
  std::string out = "-";
  std::string config_path;
  unsigned jobs = 1;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  cmd->add_option("--out", common.out, "Output path ('-' for stdout)")->capture_default_str();
  cmd->add_option("--config", common.config_path, "JSON config with option defaults");
  cmd->add_option("--jobs", common.jobs, "Worker pool size")->capture_default_str();
}

// Config-file values fill in every option the command line left untouched.
void apply_config_file(CLI::App* cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json doc;
  in >> doc;
  if (!doc.is_object()) throw std::runtime_error("config file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    const std::string flag = "--" + key;
    CLI::Option* opt = cmd->get_option_no_throw(flag);
    if (opt == nullptr) throw std::runtime_error("config key not recognized: " + key);
    if (opt->count() > 0) continue;  // explicit flags win
    if (value.is_array()) {
      for (const auto& item : value) opt->add_result(item.get<std::string>());
    } else if (value.is_string()) {
      opt->add_result(value.get<std::string>());
    } else {
      opt->add_result(value.dump());
    }
    opt->run_callback();
  }
}

void emit(const CommonOptions& common, const std::string& text) {
  const std::string body =
      text.empty() || text.back() == '\n' ? text : text + "\n";
  if (common.out == "-") {
    std::cout << body;
  } else {
    filtra::write_text_file(common.out, body);
  }
}

void emit_json(const CommonOptions& common, Report document) {
  emit(common, document.dump(2) + "\n");
}

Report report_shell(const std::string& command, Report config, Report results) {
  return Report{{"schema", filtra::kReportSchema},
                {"command", command},
                {"config", std::move(config)},
                {"results", std::move(results)}};
}

std::string module_label(const std::string& path, const filtra::ModuleRealization& m) {
  return module_description(m) + " [" + path + "]";
}

// ---------------------------------------------------------------- dims --

struct DimsOptions {
  CommonOptions common;
  int n = 0;
  std::string module_path;
  long imax = 10;
};

int run_dims(const DimsOptions& opt) {
  filtra::DimensionSequence seq;
  if (!opt.module_path.empty()) {
    const auto m = filtra::load_module_description(opt.module_path);
    seq = filtra::module_dimension_sequence(m, opt.imax);
  } else {
    seq.source = "A" + std::to_string(opt.n) + " standard filtration";
    for (long i = 0; i <= opt.imax; ++i)
      seq.values.push_back({filtra::filtration_dimension(opt.n, i), true});
  }
  const Report config{{"n", opt.n}, {"module", opt.module_path}, {"imax", opt.imax}};
  if (opt.common.format == "csv") {
    emit(opt.common, filtra::dimension_csv(seq));
  } else if (opt.common.format == "markdown") {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < seq.values.size(); ++i)
      rows.push_back({std::to_string(i), filtra::to_string(seq.values[i].value),
                      seq.values[i].exact ? "yes" : "upper bound"});
    emit(opt.common, filtra::markdown_table({"i", "dim", "exact"}, rows));
  } else {
    emit_json(opt.common, report_shell("dims", config, to_report(seq)));
  }
  return kExitOk;
}

// ------------------------------------------------------------ gk/hilbert --

struct FitOptionsCli {
  CommonOptions common;
  int n = 0;
  std::string module_path;
  long imax = 10;
  unsigned period = 1;
};

int run_fit(const FitOptionsCli& opt, const char* command) {
  filtra::GrowthFit fit;
  std::string target;
  if (!opt.module_path.empty()) {
    const auto m = filtra::load_module_description(opt.module_path);
    target = module_label(opt.module_path, m);
    fit = filtra::growth_profile(m, opt.imax, opt.period);
  } else {
    target = "A" + std::to_string(opt.n);
    std::vector<filtra::Integer> dims;
    for (long i = 0; i <= opt.imax; ++i) dims.push_back(filtra::filtration_dimension(opt.n, i));
    fit = filtra::fit_quasi_polynomial(dims, opt.period);
  }
  const Report config{{"n", opt.n},
                      {"module", opt.module_path},
                      {"imax", opt.imax},
                      {"period", opt.period}};
  Report results = to_report(fit);
  results["target"] = target;
  if (opt.common.format == "markdown") {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({target, fit.degree ? std::to_string(*fit.degree) : "-",
                    fit.degree ? filtra::to_string(fit.multiplicity) : "-",
                    results["status"].get<std::string>()});
    emit(opt.common,
         filtra::markdown_table({"target", "GK estimate", "multiplicity", "status"}, rows));
  } else {
    emit_json(opt.common, report_shell(command, config, std::move(results)));
  }
  return kExitOk;
}

// -------------------------------------------------------------- return-fn --

struct ReturnFnOptions {
  CommonOptions common;
  int n = 0;
  std::string module_path;
  long imax = 4;
  int samples = 8;
  std::uint64_t seed = 0;
};

int run_return_fn(const ReturnFnOptions& opt) {
  filtra::ReturnFunctionProfile profile;
  if (!opt.module_path.empty()) {
    const auto m = filtra::load_module_description(opt.module_path);
    profile = filtra::module_return_profile(m, opt.imax, opt.samples, opt.seed);
    profile.target = module_label(opt.module_path, m);
  } else {
    profile = filtra::algebra_return_profile(opt.n, opt.imax, opt.samples, opt.seed);
  }
  const Report config{{"n", opt.n},
                      {"module", opt.module_path},
                      {"imax", opt.imax},
                      {"samples", opt.samples},
                      {"seed", opt.seed}};
  Report results = to_report(profile);
  if (profile.all_exact() && profile.entries.size() >= 5) {
    const filtra::Rational algebra_gk(2 * profile.n);
    results["filter_dimension"] =
        to_report(filter_dimension_consistency(profile, algebra_gk));
  }
  if (opt.common.format == "csv") {
    emit(opt.common, filtra::profile_csv(profile));
  } else if (opt.common.format == "markdown") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : profile.entries)
      rows.push_back({std::to_string(e.i), std::to_string(e.lower), std::to_string(e.upper),
                      e.exact ? "yes" : "no"});
    emit(opt.common, filtra::markdown_table({"i", "lower", "upper", "exact"}, rows));
  } else {
    emit_json(opt.common, report_shell("return-fn", config, std::move(results)));
  }
  return kExitOk;
}

// -------------------------------------------------------------- bernstein --

struct BernsteinOptions {
  CommonOptions common;
  std::vector<std::string> module_paths;
  int random_count = 0;
  std::uint64_t seed = 0;
  long imax = 10;
  long cutoff = 12;
  long degree = 3;
};

int run_bernstein(const BernsteinOptions& opt) {
  int n = 0;
  std::vector<std::pair<std::string, filtra::ModuleRealization>> modules;
  for (const auto& path : opt.module_paths) {
    auto m = filtra::load_module_description(path);
    if (n == 0) n = module_n(m);
    if (module_n(m) != n)
      throw std::invalid_argument("bernstein: all modules must live over the same algebra");
    modules.emplace_back(module_label(path, m), std::move(m));
  }
  if (opt.random_count > 0) {
    if (n == 0) n = 1;
    if (n != 1) throw std::invalid_argument("bernstein: the random suite samples A_1 modules");
    filtra::Sampler sampler(opt.seed);
    int accepted = 0;
    while (accepted < opt.random_count) {
      filtra::WeylElement g = sampler.sparse_weyl(1, opt.degree);
      if (g.as_scalar()) continue;  // nonzero non-scalar generator
      auto m = filtra::cyclic_quotient_module(1, {g}, opt.cutoff);
      const auto seq = filtra::module_dimension_sequence(m, opt.imax);
      if (!seq.all_exact()) continue;  // stabilized modules only
      ++accepted;
      modules.emplace_back("A1/A1(" + filtra::render(g) + ")", std::move(m));
    }
  }
  if (modules.empty()) throw std::invalid_argument("bernstein: no modules given");

  const std::function<filtra::GrowthFit(std::size_t)> fit_task = [&](std::size_t index) {
    return filtra::growth_profile(modules[index].second, opt.imax);
  };
  const auto fits = filtra::run_indexed_tasks(modules.size(), opt.common.jobs, fit_task);
  std::vector<std::pair<std::string, filtra::GrowthFit>> named;
  for (std::size_t i = 0; i < modules.size(); ++i) named.emplace_back(modules[i].first, fits[i]);
  const auto report = filtra::first_filter_report(n, named);

  const Report config{{"modules", opt.module_paths}, {"random", opt.random_count},
                      {"seed", opt.seed},            {"imax", opt.imax},
                      {"cutoff", opt.cutoff},        {"degree", opt.degree}};
  if (opt.common.format == "markdown") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : report.verdicts) {
      if (v.skipped) {
        rows.push_back({v.module, "-", "-", "skipped: " + v.skip_reason, "-"});
      } else {
        std::string verdict = "holds (" + std::to_string(v.gk_degree) + " >= " +
                              filtra::to_string(v.required) + ")";
        if (!v.holds) verdict = "VIOLATED";
        rows.push_back({v.module, std::to_string(v.gk_degree),
                        filtra::to_string(v.multiplicity), verdict,
                        v.holonomic ? "holonomic" : "not holonomic"});
      }
    }
    emit(opt.common, filtra::markdown_table(
                         {"module", "GK", "multiplicity", "verdict", "class"}, rows));
  } else {
    emit_json(opt.common, report_shell("bernstein", config, to_report(report)));
  }
  return report.any_violation ? kExitFalsified : kExitOk;
}

// ---------------------------------------------------------- length-bounds --

struct LengthOptions {
  CommonOptions common;
  std::string module_path;
  long imax = 10;
  unsigned period = 1;
};

int run_length_bounds(const LengthOptions& opt) {
  const auto m = filtra::load_module_description(opt.module_path);
  const int n = module_n(m);
  const auto fit = filtra::growth_profile(m, opt.imax, opt.period);
  const Report config{{"module", opt.module_path}, {"imax", opt.imax}, {"period", opt.period}};
  Report results;
  results["module"] = module_label(opt.module_path, m);
  results["constants"] = to_report(filtra::first_filter_report(n, {}))["constants"];
  results["fit"] = to_report(fit);
  if (!fit.exact()) {
    results["excluded"] = true;
    results["reason"] = "growth fit is not exact";
  } else {
    const auto flag = filtra::holonomic_classify(n, fit);
    results["holonomic"] = flag.holonomic;
    results["holonomic_margin"] = flag.margin;
    if (flag.holonomic) {
      results["bounds"] = to_report(filtra::length_bounds(n, fit, opt.period));
    } else {
      results["excluded"] = true;
      results["reason"] = "module is not holonomic";
    }
  }
  emit_json(opt.common, report_shell("length-bounds", config, std::move(results)));
  return kExitOk;
}

// ------------------------------------------------------------------ bounds --

struct BoundsOptions {
  CommonOptions common;
  std::string gk, d, f;
  int table_max = 0;
};

int run_bounds(const BoundsOptions& opt) {
  const Report config{{"gk", opt.gk}, {"d", opt.d}, {"f", opt.f}, {"table", opt.table_max}};
  if (opt.table_max > 0) {
    std::vector<std::vector<std::string>> rows;
    Report entries = Report::array();
    for (int n = 1; n <= opt.table_max; ++n) {
      const filtra::Rational gk(2 * n);
      const auto second = filtra::second_filter_bound(gk, 1);
      const auto comm = filtra::commutative_subalgebra_bound(gk, 1);
      rows.push_back({std::to_string(n), filtra::to_string(gk), filtra::to_string(second),
                      filtra::to_string(comm)});
      entries.push_back(Report{{"n", n},
                               {"gk", filtra::to_string(gk)},
                               {"krull_bound", filtra::to_string(second)},
                               {"commutative_bound", filtra::to_string(comm)}});
    }
    if (opt.common.format == "json") {
      emit_json(opt.common, report_shell("bounds", config, Report{{"table", entries}}));
    } else if (opt.common.format == "csv") {
      std::string csv = "n,gk,krull_bound,commutative_bound\n";
      for (const auto& row : rows)
        csv += row[0] + "," + row[1] + "," + row[2] + "," + row[3] + "\n";
      emit(opt.common, csv);
    } else {
      emit(opt.common, filtra::markdown_table(
                           {"n", "GK(A_n)", "K.dim bound", "commutative GK bound"}, rows));
    }
    return kExitOk;
  }
  if (opt.gk.empty()) throw std::invalid_argument("bounds: give --gk with --d/--f, or --table");
  const filtra::Rational gk = filtra::rational_from_string(opt.gk);
  Report results;
  if (!opt.d.empty()) {
    const auto d = filtra::rational_from_string(opt.d);
    results["second_filter_bound"] = filtra::to_string(filtra::second_filter_bound(gk, d));
  }
  if (!opt.f.empty()) {
    const auto f = filtra::rational_from_string(opt.f);
    results["commutative_subalgebra_bound"] =
        filtra::to_string(filtra::commutative_subalgebra_bound(gk, f));
  }
  if (results.empty()) throw std::invalid_argument("bounds: give --d and/or --f, or --table");
  emit_json(opt.common, report_shell("bounds", config, std::move(results)));
  return kExitOk;
}

// ------------------------------------------------------------ poisson-check --

struct PoissonOptions {
  CommonOptions common;
  int n = 1;
  std::vector<std::string> gens;
  int triples = 100;
  std::uint64_t seed = 0;
  long degree = 3;
};

int run_poisson(const PoissonOptions& opt) {
  const int vars = 2 * opt.n;
  std::vector<filtra::Polynomial> gens;
  if (opt.gens.empty()) {
    for (int i = 1; i <= opt.n; ++i) gens.push_back(filtra::Polynomial::variable(vars, i));
  } else {
    for (const auto& text : opt.gens) gens.push_back(filtra::parse_polynomial(text, vars));
  }

  // seeded property suite: antisymmetry, Leibniz, Jacobi
  filtra::Sampler sampler(opt.seed);
  std::vector<std::array<filtra::Polynomial, 3>> triples;
  triples.reserve(static_cast<std::size_t>(opt.triples));
  for (int t = 0; t < opt.triples; ++t)
    triples.push_back({sampler.sparse_polynomial(vars, opt.degree),
                       sampler.sparse_polynomial(vars, opt.degree),
                       sampler.sparse_polynomial(vars, opt.degree)});
  const std::function<bool(std::size_t)> check_task = [&](std::size_t index) {
    const auto& [f, g, h] = triples[index];
    using filtra::poisson_bracket;
    if (poisson_bracket(f, g) != -poisson_bracket(g, f)) return false;
    if (poisson_bracket(f, g * h) !=
        poisson_bracket(f, g) * h + g * poisson_bracket(f, h))
      return false;
    const filtra::Polynomial jacobi = poisson_bracket(f, poisson_bracket(g, h)) +
                                      poisson_bracket(g, poisson_bracket(h, f)) +
                                      poisson_bracket(h, poisson_bracket(f, g));
    return jacobi.is_zero();
  };
  const auto verdicts = filtra::run_indexed_tasks(triples.size(), opt.common.jobs, check_task);
  int failures = 0;
  for (bool ok : verdicts)
    if (!ok) ++failures;

  // coordinate images generate the Weyl relations
  bool relations_ok = true;
  for (int i = 1; i <= vars && relations_ok; ++i) {
    const auto image = filtra::hamiltonian_weyl_image(filtra::Polynomial::variable(vars, i));
    const filtra::WeylElement expected =
        i <= opt.n ? filtra::WeylElement::derivation(vars, opt.n + i)
                   : -filtra::WeylElement::derivation(vars, i - opt.n);
    relations_ok = image == expected;
  }
  for (int i = 1; i <= vars && relations_ok; ++i) {
    const auto hi = filtra::hamiltonian_weyl_image(filtra::Polynomial::variable(vars, i));
    for (int j = 1; j <= vars && relations_ok; ++j) {
      const auto mj = filtra::WeylElement::coordinate(vars, j);
      const auto hj = filtra::hamiltonian_weyl_image(filtra::Polynomial::variable(vars, j));
      const auto bracket = filtra::poisson_bracket(filtra::Polynomial::variable(vars, i),
                                                   filtra::Polynomial::variable(vars, j));
      const auto scalar = bracket.as_constant();
      relations_ok = scalar.has_value() &&
                     commutator(hi, mj) == filtra::WeylElement::scalar(vars, *scalar) &&
                     commutator(hi, hj).is_zero();
    }
  }

  const auto bound = filtra::isotropic_bound_report(opt.n, gens);

  const Report config{{"n", opt.n},       {"gens", opt.gens},
                      {"triples", opt.triples}, {"seed", opt.seed},
                      {"degree", opt.degree}};
  Report results;
  results["triples_checked"] = opt.triples;
  results["triple_failures"] = failures;
  results["coordinate_images_ok"] = relations_ok;
  results["isotropic_bound"] = to_report(bound);
  emit_json(opt.common, report_shell("poisson-check", config, std::move(results)));
  const bool falsified = failures > 0 || !relations_ok || !bound.holds;
  return falsified ? kExitFalsified : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"filtra: exact filtration laboratory for Weyl algebras and their modules"};
  app.require_subcommand(1);

  DimsOptions dims;
  auto* dims_cmd = app.add_subcommand("dims", "Filtration dimension sequences");
  add_common(dims_cmd, dims.common);
  dims_cmd->add_option("--n", dims.n, "Weyl algebra index (algebra dimensions)");
  dims_cmd->add_option("--module", dims.module_path, "Module description JSON");
  dims_cmd->add_option("--imax", dims.imax, "Largest filtration index")->capture_default_str();

  FitOptionsCli gk;
  auto* gk_cmd = app.add_subcommand("gk", "Gelfand-Kirillov dimension estimate");
  add_common(gk_cmd, gk.common);
  gk_cmd->add_option("--n", gk.n, "Weyl algebra index (the algebra itself)");
  gk_cmd->add_option("--module", gk.module_path, "Module description JSON");
  gk_cmd->add_option("--imax", gk.imax, "Largest filtration index")->capture_default_str();
  gk_cmd->add_option("--period", gk.period, "Quasi-polynomial period")->capture_default_str();

  FitOptionsCli hilbert;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Quasi-polynomial Hilbert data");
  add_common(hilbert_cmd, hilbert.common);
  hilbert_cmd->add_option("--n", hilbert.n, "Weyl algebra index");
  hilbert_cmd->add_option("--module", hilbert.module_path, "Module description JSON");
  hilbert_cmd->add_option("--imax", hilbert.imax, "Largest filtration index")
      ->capture_default_str();
  hilbert_cmd->add_option("--period", hilbert.period, "Quasi-polynomial period")
      ->capture_default_str();

  ReturnFnOptions rf;
  auto* rf_cmd = app.add_subcommand("return-fn", "Return function profile");
  add_common(rf_cmd, rf.common);
  rf_cmd->add_option("--n", rf.n, "Weyl algebra index (algebra profile)");
  rf_cmd->add_option("--module", rf.module_path, "Module description JSON (module profile)");
  rf_cmd->add_option("--imax", rf.imax, "Largest index i")->capture_default_str();
  rf_cmd->add_option("--samples", rf.samples, "Random elements per index")
      ->capture_default_str();
  rf_cmd->add_option("--seed", rf.seed, "RNG seed (required: sampled run)");

  BernsteinOptions bern;
  auto* bern_cmd = app.add_subcommand("bernstein", "Holonomic-number lower bound verdicts");
  add_common(bern_cmd, bern.common);
  bern_cmd->add_option("--module", bern.module_paths, "Module description JSON (repeatable)");
  bern_cmd->add_option("--random", bern.random_count, "Random cyclic A_1 modules to add");
  bern_cmd->add_option("--seed", bern.seed, "RNG seed (required with --random)");
  bern_cmd->add_option("--imax", bern.imax, "Largest filtration index")->capture_default_str();
  bern_cmd->add_option("--cutoff", bern.cutoff, "Ideal-span cutoff")->capture_default_str();
  bern_cmd->add_option("--degree", bern.degree, "Random generator degree bound")
      ->capture_default_str();

  LengthOptions len;
  auto* len_cmd = app.add_subcommand("length-bounds", "Holonomic length bounds");
  add_common(len_cmd, len.common);
  len_cmd->add_option("--module", len.module_path, "Module description JSON")->required();
  len_cmd->add_option("--imax", len.imax, "Largest filtration index")->capture_default_str();
  len_cmd->add_option("--period", len.period, "Quasi-polynomial period")->capture_default_str();

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Bound-formula calculators");
  add_common(bounds_cmd, bounds.common);
  bounds_cmd->add_option("--gk", bounds.gk, "Gelfand-Kirillov dimension (rational)");
  bounds_cmd->add_option("--d", bounds.d, "Filter dimension (rational)");
  bounds_cmd->add_option("--f", bounds.f, "Commutative-subalgebra parameter (rational)");
  bounds_cmd->add_option("--table", bounds.table_max, "Emit the Weyl table for n = 1..N");

  PoissonOptions poisson;
  auto* poisson_cmd = app.add_subcommand("poisson-check", "Poisson bracket suite");
  add_common(poisson_cmd, poisson.common);
  poisson_cmd->add_option("--n", poisson.n, "Half dimension of P_2n")->capture_default_str();
  poisson_cmd->add_option("--gens", poisson.gens, "Isotropic generators (repeatable)");
  poisson_cmd->add_option("--triples", poisson.triples, "Seeded random triples")
      ->capture_default_str();
  poisson_cmd->add_option("--seed", poisson.seed, "RNG seed (required: sampled run)");
  poisson_cmd->add_option("--degree", poisson.degree, "Random polynomial degree bound")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  CLI::App* active = app.get_subcommands().front();

  try {
    // config file fills unset options, then the handlers read final values
    auto* config_opt = active->get_option_no_throw("--config");
    if (config_opt != nullptr && config_opt->count() > 0)
      apply_config_file(active, config_opt->results().front());

    if (active == dims_cmd) {
      if (dims.n <= 0 && dims.module_path.empty())
        throw std::invalid_argument("dims: give --n or --module");
      return run_dims(dims);
    }
    if (active == gk_cmd || active == hilbert_cmd) {
      auto& opt = active == gk_cmd ? gk : hilbert;
      if (opt.n <= 0 && opt.module_path.empty())
        throw std::invalid_argument("gk/hilbert: give --n or --module");
      return run_fit(opt, active == gk_cmd ? "gk" : "hilbert");
    }
    if (active == rf_cmd) {
      if (rf_cmd->count("--seed") == 0)
        throw std::invalid_argument("return-fn: --seed is required for sampled runs");
      if (rf.n <= 0 && rf.module_path.empty())
        throw std::invalid_argument("return-fn: give --n or --module");
      return run_return_fn(rf);
    }
    if (active == bern_cmd) {
      if (bern.random_count > 0 && bern_cmd->count("--seed") == 0)
        throw std::invalid_argument("bernstein: --seed is required with --random");
      return run_bernstein(bern);
    }
    if (active == len_cmd) return run_length_bounds(len);
    if (active == bounds_cmd) return run_bounds(bounds);
    if (active == poisson_cmd) {
      if (poisson_cmd->count("--seed") == 0)
        throw std::invalid_argument("poisson-check: --seed is required for sampled runs");
      return run_poisson(poisson);
    }
    throw std::logic_error("unreachable subcommand");
  } catch (const filtra::span_cap_exceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const filtra::falsification_error& e) {
    std::cerr << "FALSIFICATION: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
