#pragma once

#include <cstdio>
#include <istream>
#include <string>
#include <vector>

#include "portlab/errors.hpp"

namespace portlab {

// Minimal CSV reader for the comma-separated, unquoted formats used throughout:
// header line + data rows, LF or CRLF line endings, no embedded commas in ids.
// Tracks line and field positions so parse errors can point at the offender.
class CsvReader {
public:
    CsvReader(std::istream& in, std::string filename)
        : in_(in), filename_(std::move(filename)) {}

    // Reads the header row and checks the leading expected columns. When
    // `allow_extra` is true the header may continue past the expected names
    // (features.csv has f1..fm after the fixed columns).
    std::vector<std::string> read_header(const std::vector<std::string>& expected,
                                         bool allow_extra = false) {
        std::vector<std::string> fields;
        if (!next_row(fields))
            throw ParseError(filename_, 1, 1, "missing header row");
        if (fields.size() < expected.size() ||
            (!allow_extra && fields.size() != expected.size()))
            throw ParseError(filename_, line_, 1, "header must be '" + join(expected) +
                                                      (allow_extra ? ",...'" : "'"));
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (fields[i] != expected[i])
                throw ParseError(filename_, line_, i + 1,
                                 "expected header column '" + expected[i] + "', got '" +
                                     fields[i] + "'");
        return fields;
    }

    // Fills `fields` with the next non-empty row; returns false at end of input.
    bool next_row(std::vector<std::string>& fields) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            if (raw.empty()) continue;
            fields.clear();
            std::size_t start = 0;
            while (true) {
                const std::size_t comma = raw.find(',', start);
                if (comma == std::string::npos) {
                    fields.push_back(raw.substr(start));
                    break;
                }
                fields.push_back(raw.substr(start, comma - start));
                start = comma + 1;
            }
            return true;
        }
        return false;
    }

    std::size_t line() const { return line_; }

    [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
        throw ParseError(filename_, line_, column, msg);
    }

    // Column numbers are 1-based field positions.
    double parse_double(const std::vector<std::string>& fields, std::size_t col) const {
        const std::string& s = fields.at(col - 1);
        try {
            std::size_t consumed = 0;
            const double v = std::stod(s, &consumed);
            if (consumed != s.size()) fail(col, "non-numeric field '" + s + "'");
            return v;
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            fail(col, "non-numeric field '" + s + "'");
        }
    }

    void require_fields(const std::vector<std::string>& fields, std::size_t n) const {
        if (fields.size() != n)
            fail(fields.size() < n ? fields.size() + 1 : n + 1,
                 "expected " + std::to_string(n) + " fields, got " +
                     std::to_string(fields.size()));
    }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ',';
            out += v[i];
        }
        return out;
    }

    std::istream& in_;
    std::string filename_;
    std::size_t line_ = 0;
};

// Fixed numeric formats so identical results serialize to identical bytes.
inline std::string format_time(double seconds) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", seconds);
    return buf;
}

inline std::string format_fraction(double f) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", f);
    return buf;
}

inline std::string format_pvalue(double p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", p);
    return buf;
}

// Round-trippable representation for feature values.
inline std::string format_feature(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace portlab
