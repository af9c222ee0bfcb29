#pragma once

#include "thermgrav/constants.hpp"

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace thermgrav {

using Cell = std::variant<double, std::string, bool>;

/// Tabular command output with provenance metadata.
struct OutputRecord {
    static constexpr const char* current_schema = "1";

    std::string schema_version = current_schema;
    std::string constants_fingerprint;
    PhysicalConstants constants;
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

OutputRecord make_record(std::string command, const PhysicalConstants& consts, std::vector<std::string> columns);

/// 12 significant digits, locale independent.
std::string format_number(double v);

/// Header line then one line per row, LF endings, comma separated. Strings
/// containing a comma, quote or newline are quoted RFC 4180 style.
void write_csv(const OutputRecord& record, std::ostream& out);

/// Object with schema_version, constants_fingerprint, constants, command
/// and a `rows` array of column-keyed objects.
void write_json(const OutputRecord& record, std::ostream& out);

enum class OutputFormat { csv, json };

void write_record(const OutputRecord& record, OutputFormat format, std::ostream& out);

}  // namespace thermgrav
