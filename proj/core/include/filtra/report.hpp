#ifndef FILTRA_REPORT_HPP
#define FILTRA_REPORT_HPP

#include <string>

#include <json.hpp>

#include "filtra/growth.hpp"
#include "filtra/inequality.hpp"
#include "filtra/poisson.hpp"
#include "filtra/return_function.hpp"

namespace filtra {

// All emitted documents are byte-stable for a fixed config: keys keep
// insertion order, rationals are "p/q" strings, no floats anywhere.
using Report = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "filtra-report/1";

Report to_report(const DimensionSequence& seq);
Report to_report(const GrowthFit& fit);
Report to_report(const ReturnFunctionProfile& profile);
Report to_report(const InequalityReport& report);
Report to_report(const LengthBounds& bounds);
Report to_report(const FilterDimensionReport& report);
Report to_report(const IsotropicBoundReport& report);

std::string profile_csv(const ReturnFunctionProfile& profile);
std::string dimension_csv(const DimensionSequence& seq);

std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace filtra

#endif
