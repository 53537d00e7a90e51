#include "audit/csv.hpp"

#include <fstream>
#include <sstream>

#include "audit/errors.hpp"
#include "audit/io.hpp"

namespace audit::csv {

std::vector<Row> parse(const std::string& text) {
    std::vector<Row> rows;
    std::size_t line = 1;

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        Row row;
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
            } else {
                switch (c) {
                    case '"':
                        if (!field.empty())
                            throw AuditError(ErrorCode::MalformedRow,
                                             "stray quote at line " + std::to_string(line));
                        in_quotes = true;
                        ++i;
                        break;
                    case ',':
                        row.fields.push_back(std::move(field));
                        field.clear();
                        ++i;
                        break;
                    case '\r':
                        ++i;
                        if (i < n && text[i] == '\n') {
                            ++i;
                            ++line;
                            row_done = true;
                        }
                        break;
                    case '\n':
                        ++i;
                        ++line;
                        row_done = true;
                        break;
                    default:
                        field.push_back(c);
                        ++i;
                        break;
                }
            }
        }
        if (in_quotes)
            throw AuditError(ErrorCode::MalformedRow,
                             "unterminated quote starting near line " + std::to_string(row.line));
        row.fields.push_back(std::move(field));
        // skip records that are a single empty field (blank trailing line)
        if (!(row.fields.size() == 1 && row.fields[0].empty())) rows.push_back(std::move(row));
    }
    return rows;
}

Table read_file(const std::filesystem::path& file,
                const std::vector<std::string>& expected_header) {
    const std::string text = io::read_text_file(file);
    Table table;
    if (text.empty()) return table;

    std::vector<Row> rows = parse(text);
    if (rows.empty()) return table;

    table.header = rows.front().fields;
    if (!expected_header.empty() && table.header != expected_header) {
        throw AuditError(ErrorCode::MalformedRow,
                         file.string() + ": line 1: expected header `" + join(expected_header) +
                             "`, got `" + join(table.header) + "`");
    }
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].fields.size() != table.header.size()) {
            throw AuditError(ErrorCode::MalformedRow,
                             file.string() + ": line " + std::to_string(rows[r].line) + ": expected " +
                                 std::to_string(table.header.size()) + " fields, got " +
                                 std::to_string(rows[r].fields.size()));
        }
        table.rows.push_back(std::move(rows[r]));
    }
    return table;
}

std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += escape(fields[i]);
    }
    return out;
}

}  // namespace audit::csv
