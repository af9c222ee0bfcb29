#include "thermgrav/output.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <charconv>
#include <stdexcept>
#include <string>
#include <utility>

namespace thermgrav {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string cell_text(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return csv_field(v);
            }
        },
        cell);
}

nlohmann::json cell_json(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> nlohmann::json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                // Round through the 12-digit text so both formats carry the same value.
                const std::string text = format_number(v);
                double rounded = v;
                std::from_chars(text.data(), text.data() + text.size(), rounded);
                return rounded;
            } else {
                return v;
            }
        },
        cell);
}

}  // namespace

OutputRecord make_record(std::string command, const PhysicalConstants& consts, std::vector<std::string> columns) {
    OutputRecord rec;
    rec.constants_fingerprint = consts.fingerprint();
    rec.constants = consts;
    rec.command = std::move(command);
    rec.columns = std::move(columns);
    return rec;
}

std::string format_number(double v) { return fmt::format("{:.12g}", v); }

void write_csv(const OutputRecord& record, std::ostream& out) {
    std::string text;
    for (std::size_t i = 0; i < record.columns.size(); ++i) {
        if (i) text += ',';
        text += csv_field(record.columns[i]);
    }
    text += '\n';
    for (const auto& row : record.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) text += ',';
            text += cell_text(row[i]);
        }
        text += '\n';
    }
    out << text;
}

void write_json(const OutputRecord& record, std::ostream& out) {
    nlohmann::json doc;
    doc["schema_version"] = record.schema_version;
    doc["constants_fingerprint"] = record.constants_fingerprint;
    doc["constants"] = {
        {"hbar", record.constants.hbar},
        {"c", record.constants.c},
        {"k_boltzmann", record.constants.k_boltzmann},
        {"gamma_grav", record.constants.gamma_grav},
    };
    doc["command"] = record.command;
    auto rows = nlohmann::json::array();
    for (const auto& row : record.rows) {
        if (row.size() != record.columns.size()) throw std::logic_error("row width does not match columns");
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[record.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

void write_record(const OutputRecord& record, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::json) {
        write_json(record, out);
    } else {
        write_csv(record, out);
    }
}

}  // namespace thermgrav
