#include "filtra/report.hpp"

#include <fstream>
#include <stdexcept>

namespace filtra {

namespace {

const char* status_name(GrowthFit::Status status) {
  switch (status) {
    case GrowthFit::Status::ExactFit: return "exact-fit";
    case GrowthFit::Status::Unstable: return "unstable";
    case GrowthFit::Status::ZeroModule: return "zero-module";
  }
  return "unknown";
}

Report qpoly_report(const QPoly& poly) {
  Report coeffs = Report::array();
  for (const auto& c : poly) coeffs.push_back(to_string(c));
  return Report{{"coefficients", coeffs}, {"text", qpoly_to_string(poly, "i")}};
}

}  // namespace

Report to_report(const DimensionSequence& seq) {
  Report values = Report::array();
  Report exact = Report::array();
  for (const auto& entry : seq.values) {
    values.push_back(to_string(entry.value));
    exact.push_back(entry.exact);
  }
  return Report{{"source", seq.source}, {"values", values}, {"exact", exact}};
}

Report to_report(const GrowthFit& fit) {
  Report out;
  out["status"] = status_name(fit.status);
  out["period"] = fit.k;
  if (fit.degree) {
    out["degree"] = *fit.degree;
    out["leading"] = to_string(fit.leading);
    out["multiplicity"] = to_string(fit.multiplicity);
    out["fit_from"] = fit.fit_from;
  }
  out["sequence_exact"] = fit.sequence_exact;
  if (!fit.note.empty()) out["note"] = fit.note;
  Report polys = Report::array();
  for (const auto& p : fit.class_polynomials) polys.push_back(qpoly_report(p));
  out["polynomials"] = polys;
  return out;
}

Report to_report(const ReturnFunctionProfile& profile) {
  Report out;
  out["target"] = profile.target;
  out["kind"] = profile.algebra ? "algebra" : "module";
  out["n"] = profile.n;
  out["i_max"] = profile.i_max;
  out["samples"] = profile.samples;
  out["seed"] = profile.seed;
  out["certified_cap"] = profile.certified_cap;
  Report entries = Report::array();
  for (const auto& e : profile.entries) {
    Report witnesses = Report::array();
    for (const auto& w : e.witnesses) {
      Report chain = Report::array();
      for (auto g : w.data) chain.push_back(g);
      witnesses.push_back(Report{{"kind", w.kind},
                                 {"element", w.element},
                                 {"chain", chain},
                                 {"scalar", w.scalar},
                                 {"probe_index", w.probe_index}});
    }
    entries.push_back(Report{{"i", e.i},
                             {"lower", e.lower},
                             {"upper", e.upper},
                             {"exact", e.exact},
                             {"witnesses", witnesses}});
  }
  out["entries"] = entries;
  return out;
}

Report to_report(const InequalityReport& report) {
  const auto& c = report.constants;
  Report constants{{"n", c.n},
                   {"gk", to_string(c.gk)},
                   {"filter_dimension", to_string(c.filter_dimension)},
                   {"holonomic_number", to_string(c.holonomic_number)},
                   {"l_A", to_string(c.l_A)},
                   {"L_A", to_string(c.L_A)},
                   {"L_prime", to_string(c.L_prime)},
                   {"c_squared", to_string(c.c_squared)}};
  constants["c"] = c.c_exact ? Report(to_string(*c.c_exact))
                             : Report("sqrt(" + to_string(c.c_squared) + ")");
  Report verdicts = Report::array();
  for (const auto& v : report.verdicts) {
    Report entry{{"module", v.module}};
    if (v.skipped) {
      entry["skipped"] = true;
      entry["reason"] = v.skip_reason;
    } else {
      entry["gk"] = v.gk_degree;
      entry["leading"] = to_string(v.leading);
      entry["multiplicity"] = to_string(v.multiplicity);
      entry["required"] = to_string(v.required);
      entry["holds"] = v.holds;
      entry["equality"] = v.equality;
      entry["holonomic"] = v.holonomic;
      entry["holonomic_margin"] = v.holonomic_margin;
    }
    verdicts.push_back(std::move(entry));
  }
  return Report{{"constants", constants},
                {"verdicts", verdicts},
                {"any_violation", report.any_violation},
                {"any_skipped", report.any_skipped}};
}

Report to_report(const LengthBounds& bounds) {
  Report out;
  if (bounds.bound_leading) {
    out["length_bound_leading"] = to_string(*bounds.bound_leading);
  } else {
    out["length_bound_leading"] = "sqrt(" + to_string(bounds.bound_leading_squared) + ")";
  }
  out["length_bound_leading_squared"] = to_string(bounds.bound_leading_squared);
  out["length_bound_multiplicity"] = to_string(bounds.bound_multiplicity);
  return out;
}

Report to_report(const FilterDimensionReport& report) {
  Report out;
  out["interval"] = report.interval;
  out["fit"] = to_report(report.fit);
  if (report.fd_estimate) out["fd_estimate"] = *report.fd_estimate;
  out["at_least_half"] = report.at_least_half;
  out["matches_pinned"] = report.matches_pinned;
  if (report.module_gk_bound_ok) out["module_gk_bound_ok"] = *report.module_gk_bound_ok;
  return out;
}

Report to_report(const IsotropicBoundReport& report) {
  return Report{{"n", report.n},
                {"generators", report.generator_count},
                {"isotropic", report.isotropic},
                {"independent", report.independent},
                {"images_independent", report.images_independent},
                {"bound", report.bound},
                {"margin", report.margin},
                {"tight", report.tight},
                {"holds", report.holds}};
}

std::string profile_csv(const ReturnFunctionProfile& profile) {
  std::string out = "i,lower,upper,exact\n";
  for (const auto& e : profile.entries) {
    out += std::to_string(e.i) + "," + std::to_string(e.lower) + "," + std::to_string(e.upper) +
           "," + (e.exact ? "true" : "false") + "\n";
  }
  return out;
}

std::string dimension_csv(const DimensionSequence& seq) {
  std::string out = "i,dim,exact\n";
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    out += std::to_string(i) + "," + to_string(seq.values[i].value) + "," +
           (seq.values[i].exact ? "true" : "false") + "\n";
  }
  return out;
}

std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
  std::string out = "|";
  for (const auto& h : header) out += " " + h + " |";
  out += "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& row : rows) {
    out += "|";
    for (const auto& cell : row) out += " " + cell + " |";
    out += "\n";
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << contents;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace filtra
