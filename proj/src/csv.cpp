#include "aucgap/csv.hpp"

#include <fstream>
#include <sstream>

#include "aucgap/errors.hpp"

namespace aucgap {

CsvTable parse_csv(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) {
        text.remove_prefix(3);
    }

    std::vector<std::vector<std::string>> records;
    std::vector<std::size_t> record_lines;

    std::size_t line = 1;
    std::size_t col = 1; // 1-based character position within the line
    std::size_t i = 0;
    const std::size_t n = text.size();

    while (i < n) {
        const std::size_t record_line = line;
        std::vector<std::string> fields;
        bool record_done = false;
        while (!record_done) {
            std::string field;
            if (i < n && text[i] == '"') {
                const std::size_t open_line = line;
                const std::size_t open_col = col;
                ++i;
                ++col;
                bool closed = false;
                while (i < n) {
                    const char c = text[i];
                    if (c == '"') {
                        if (i + 1 < n && text[i + 1] == '"') {
                            field.push_back('"');
                            i += 2;
                            col += 2;
                        } else {
                            ++i;
                            ++col;
                            closed = true;
                            break;
                        }
                    } else if (c == '\n') {
                        field.push_back('\n');
                        ++i;
                        ++line;
                        col = 1;
                    } else {
                        field.push_back(c);
                        ++i;
                        ++col;
                    }
                }
                if (!closed) {
                    throw ParseError(open_line, std::to_string(open_col),
                                     "unterminated quoted field");
                }
            } else {
                while (i < n) {
                    const char c = text[i];
                    if (c == ',' || c == '\n' || c == '\r') {
                        break;
                    }
                    if (c == '"') {
                        throw ParseError(line, std::to_string(col),
                                         "quote inside unquoted field");
                    }
                    field.push_back(c);
                    ++i;
                    ++col;
                }
            }
            fields.push_back(std::move(field));

            if (i >= n) {
                record_done = true;
            } else if (text[i] == ',') {
                ++i;
                ++col;
            } else if (text[i] == '\n') {
                ++i;
                ++line;
                col = 1;
                record_done = true;
            } else if (text[i] == '\r') {
                if (i + 1 < n && text[i + 1] == '\n') {
                    i += 2;
                    ++line;
                    col = 1;
                    record_done = true;
                } else {
                    throw ParseError(line, std::to_string(col),
                                     "stray carriage return");
                }
            } else {
                // Only reachable after a closing quote.
                throw ParseError(line, std::to_string(col),
                                 "unexpected character after closing quote");
            }
        }
        records.push_back(std::move(fields));
        record_lines.push_back(record_line);
    }

    if (records.empty()) {
        throw ParseError(1, "", "empty input: expected a header row");
    }

    CsvTable table;
    table.header = std::move(records.front());
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        const std::string& name = table.header[c];
        if (name.empty()) {
            throw ParseError(1, std::to_string(c + 1), "empty column name");
        }
        if (!table.column_index.emplace(name, c).second) {
            throw ParseError(1, name, "duplicate column");
        }
    }

    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != table.header.size()) {
            throw ParseError(record_lines[r], "",
                             "row has " + std::to_string(records[r].size()) +
                                 " fields, header has " +
                                 std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(records[r]));
        table.row_lines.push_back(record_lines[r]);
    }
    return table;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        throw IoError("cannot open \"" + path.string() + "\" for reading");
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    if (stream.bad()) {
        throw IoError("error while reading \"" + path.string() + "\"");
    }
    return parse_csv(buffer.str());
}

std::string csv_escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) {
        return std::string(field);
    }
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (const char c : field) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_csv_file(const std::filesystem::path& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream) {
        throw IoError("cannot open \"" + path.string() + "\" for writing");
    }
    const auto write_row = [&stream](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                stream << ',';
            }
            stream << csv_escape(row[c]);
        }
        stream << '\n';
    };
    write_row(header);
    for (const std::vector<std::string>& row : rows) {
        write_row(row);
    }
    if (!stream) {
        throw IoError("error while writing \"" + path.string() + "\"");
    }
}

} // namespace aucgap
