#pragma once

#include <stdexcept>
#include <string>

namespace portlab {

// Bad request from the caller (unknown flag, out-of-range size, ...). CLI exit code 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data. CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// DataError carrying file/line/column context, e.g. "runs.csv:12:3: unknown status token".
class ParseError : public DataError {
public:
    ParseError(const std::string& file, std::size_t line, std::size_t column,
               const std::string& msg)
        : DataError(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
                    ": " + msg),
          file_(file), line_(line), column_(column) {}

    const std::string& file() const { return file_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string file_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace portlab
