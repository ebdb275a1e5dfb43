#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vfbound/harness.hpp"

namespace vfbound {

/// Fixed column order of report.csv.
const std::vector<std::string>& report_columns();

/// Header plus one row per report. Doubles use 17 significant digits so that
/// parse_report_csv() reproduces every field exactly.
void write_report_csv(std::ostream& out, const std::vector<InstanceReport>& reports);
std::vector<InstanceReport> parse_report_csv(std::istream& in);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace vfbound
