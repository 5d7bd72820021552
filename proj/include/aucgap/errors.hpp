#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aucgap {

// Data condition under which the requested statistic does not exist
// (e.g. a score set with no positives has no AUC).
class DegenerateDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid configuration: unknown columns, duplicate group names,
// missing task-specific settings.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unreadable or unwritable file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input data; carries the 1-based line and, when known, the
// offending column so batch users can fix the exact cell.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::string column, const std::string& what)
        : std::runtime_error(format(line, column, what)),
          line_(line),
          column_(std::move(column)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& column() const noexcept { return column_; }

private:
    static std::string format(std::size_t line, const std::string& column,
                              const std::string& what) {
        std::string msg = "line " + std::to_string(line);
        if (!column.empty()) {
            msg += ", column " + column;
        }
        msg += ": " + what;
        return msg;
    }

    std::size_t line_;
    std::string column_;
};

} // namespace aucgap
