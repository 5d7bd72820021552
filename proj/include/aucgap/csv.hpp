#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aucgap {

// A parsed CSV file: a header row plus data rows of identical width.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    // 1-based line on which each data row starts (quoted fields may span
    // lines, so this is not simply the row index plus two).
    std::vector<std::size_t> row_lines;
    std::map<std::string, std::size_t> column_index;

    std::optional<std::size_t> find(const std::string& name) const {
        const auto it = column_index.find(name);
        if (it == column_index.end()) {
            return std::nullopt;
        }
        return it->second;
    }
};

// Strict RFC 4180 parsing: quoted fields with doubled quotes, CRLF or LF
// row breaks, no stray quotes, rectangular rows, unique non-empty column
// names. Violations raise ParseError with the 1-based line and character
// position. A leading UTF-8 byte-order mark is ignored.
CsvTable parse_csv(std::string_view text);

// Reads and parses a CSV file; IoError when unreadable, ParseError as above.
CsvTable read_csv_file(const std::filesystem::path& path);

// Quotes a field if it contains a comma, quote, or line break.
std::string csv_escape(std::string_view field);

// Writes a CSV file with LF row breaks; throws IoError on failure.
void write_csv_file(const std::filesystem::path& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);

} // namespace aucgap
