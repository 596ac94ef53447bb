#pragma once

#include "dps/catalog.hpp"

#include <string>

namespace dps {

enum class OutputFormat { Text, Json, Csv, Latex };
OutputFormat parse_format(const std::string& name);  // throws on bad name

std::string render_table(const RootDatum& datum, const ReducibilityTable& table,
                         OutputFormat format);
std::string render_analysis(const RootDatum& datum, const CaseAnalysis& a,
                            OutputFormat format);

} // namespace dps
