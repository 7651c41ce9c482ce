#pragma once

#include "wshift/rational.hpp"
#include "wshift/threshold.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wshift {

enum class Format { Text, Csv, Json };

/// Throws ParseError for anything but text, csv, json.
Format parse_format(std::string_view name);

inline constexpr int kReportSchemaVersion = 1;

/// One output line. `exact` is authoritative; `approx` is a 6-place decimal
/// annotation. Both are empty for rows that carry a verdict instead.
struct ReportRow {
    std::string label;
    std::string exact;
    std::string approx;
    std::vector<std::pair<std::string, std::string>> extra;
};

ReportRow value_row(std::string label, const Rational& value);
ReportRow value_row(std::string label, const Threshold& value);

struct Report {
    std::string command;
    std::vector<std::string> extra_columns;
    std::vector<ReportRow> rows;
    std::vector<std::string> notes;
    bool ok = true;
};

void render(const Report& report, Format format, std::ostream& out);

} // namespace wshift
