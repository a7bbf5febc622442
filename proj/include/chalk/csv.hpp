#pragma once
// RFC-4180-ish CSV: quoted fields, doubled quotes, embedded separators and
// newlines inside quotes. Rows carry their 1-based starting line for error
// reporting.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "chalk/common.hpp"

namespace chalk {

struct CsvRow {
    std::size_t line = 0;  // 1-based line where the row starts
    std::vector<std::string> fields;
};

inline std::vector<CsvRow> parse_csv(std::string_view text) {
    std::vector<CsvRow> rows;
    std::size_t line = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        CsvRow row;
        row.line = line;
        std::string field;
        bool in_quotes = false;
        bool row_done = false;
        while (i < n && !row_done) {
            char c = text[i];
            if (in_quotes) {
                if (c == '"') {
                    if (i + 1 < n && text[i + 1] == '"') {
                        field.push_back('"');
                        i += 2;
                    } else {
                        in_quotes = false;
                        ++i;
                    }
                } else {
                    if (c == '\n') ++line;
                    field.push_back(c);
                    ++i;
                }
            } else if (c == '"') {
                if (!field.empty())
                    throw DataError("csv: stray quote in unquoted field at line " + std::to_string(line));
                in_quotes = true;
                ++i;
            } else if (c == ',') {
                row.fields.push_back(std::move(field));
                field.clear();
                ++i;
            } else if (c == '\r') {
                ++i;  // swallow; \n handles the row break
            } else if (c == '\n') {
                ++line;
                ++i;
                row_done = true;
            } else {
                field.push_back(c);
                ++i;
            }
        }
        if (in_quotes) throw DataError("csv: unterminated quoted field starting near line " + std::to_string(row.line));
        row.fields.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string csv_escape(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(fields[i]);
    }
    os << '\n';
}

}  // namespace chalk
