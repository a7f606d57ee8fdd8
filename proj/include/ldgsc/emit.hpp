#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ldgsc/study.hpp"

namespace ldgsc {

enum class OutputFormat { Csv, Json, Table, Plot };

std::string to_string(OutputFormat format);
OutputFormat output_format_from_string(const std::string& name);

/// One row per N; header `N,<metric keys...>`. Values use %.10e.
std::string render_csv(const StudyRecord& record);

/// Full record, including configuration, per-run timing, rates (null when
/// undefined) and any abort reason.
std::string render_json(const StudyRecord& record);
/// Inverse of render_json: render_json(parse_record_json(s)) == s.
StudyRecord parse_record_json(const std::string& text);

/// Human-readable error table followed by the rate table.
std::string render_table(const StudyRecord& record);

/// Per metric: rows of (log2 N, log10 error) and a reference line with the
/// theoretical slope anchored at the first point.
std::string render_plot(const StudyRecord& record);

/// Theoretical order used for reference lines: k+2 for projection-gap and
/// Radau columns, 2k+1 for nodal and averaged columns.
int reference_rate(const std::string& metric_key, int degree);

/// Writes <dir>/<config name>.<ext>, creating dir if needed, and returns the
/// path. Throws std::runtime_error naming the path when it cannot be written.
std::filesystem::path emit(const StudyRecord& record, OutputFormat format, const std::filesystem::path& dir);

}  // namespace ldgsc
