#include "wshift/report.hpp"

#include "wshift/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <string>

namespace wshift {

Format parse_format(std::string_view name)
{
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw ParseError("--format", "unknown format \"" + std::string(name) + "\" (text, csv, json)");
}

ReportRow value_row(std::string label, const Rational& value)
{
    return {std::move(label), to_string(value), to_decimal(value), {}};
}

ReportRow value_row(std::string label, const Threshold& value)
{
    return {std::move(label), value.exact_string(), value.approx_string(), {}};
}

namespace {

std::string extra_value(const ReportRow& row, const std::string& column)
{
    for (const auto& [k, v] : row.extra)
        if (k == column) return v;
    return "";
}

std::vector<std::string> header(const Report& r)
{
    std::vector<std::string> h{"label", "exact", "approx"};
    h.insert(h.end(), r.extra_columns.begin(), r.extra_columns.end());
    return h;
}

std::vector<std::string> cells(const Report& r, const ReportRow& row)
{
    std::vector<std::string> c{row.label, row.exact, row.approx};
    for (const auto& col : r.extra_columns) c.push_back(extra_value(row, col));
    return c;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void render_text(const Report& r, std::ostream& out)
{
    auto h = header(r);
    std::vector<std::size_t> width(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) width[i] = h[i].size();
    for (const auto& row : r.rows) {
        auto c = cells(r, row);
        for (std::size_t i = 0; i < c.size(); ++i) width[i] = std::max(width[i], c[i].size());
    }
    auto line = [&](const std::vector<std::string>& c) {
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) {
            s += c[i];
            if (i + 1 < c.size()) s += std::string(width[i] - c[i].size() + 2, ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out << s << '\n';
    };
    line(h);
    for (const auto& row : r.rows) line(cells(r, row));
    for (const auto& note : r.notes) out << "# " << note << '\n';
    out << "# status: " << (r.ok ? "ok" : "FAILED") << '\n';
}

void render_csv(const Report& r, std::ostream& out)
{
    auto emit = [&](const std::vector<std::string>& c) {
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << csv_field(c[i]);
        out << "\r\n";
    };
    emit(header(r));
    for (const auto& row : r.rows) emit(cells(r, row));
}

void render_json(const Report& r, std::ostream& out)
{
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = r.command;
    doc["ok"] = r.ok;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json j;
        j["label"] = row.label;
        if (row.exact.empty()) j["exact"] = nullptr;
        else j["exact"] = row.exact;
        // approx is a plain JSON number; non-finite values become null
        if (row.approx.empty() || row.approx == "inf") j["approx"] = nullptr;
        else j["approx"] = std::stod(row.approx);
        for (const auto& [k, v] : row.extra) j[k] = v;
        doc["rows"].push_back(std::move(j));
    }
    doc["notes"] = r.notes;
    out << doc.dump(2) << '\n';
}

} // namespace

void render(const Report& report, Format format, std::ostream& out)
{
    switch (format) {
    case Format::Text: render_text(report, out); break;
    case Format::Csv: render_csv(report, out); break;
    case Format::Json: render_json(report, out); break;
    }
}

} // namespace wshift
