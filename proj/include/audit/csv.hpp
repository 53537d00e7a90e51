#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace audit::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based line number of the first line of the record
};

struct Table {
    std::vector<std::string> header;
    std::vector<Row> rows;
};

// RFC-4180 subset: comma-delimited, double-quote quoting with "" escapes,
// quoted fields may span lines, CRLF and LF both accepted.
std::vector<Row> parse(const std::string& text);

// Parses a file whose first record is the header. A zero-byte file yields an
// empty table. When `expected_header` is non-empty the header must match it
// exactly (throws MalformedRow at line 1 otherwise). Data rows must have the
// same field count as the header.
Table read_file(const std::filesystem::path& file,
                const std::vector<std::string>& expected_header = {});

std::string escape(const std::string& field);
std::string join(const std::vector<std::string>& fields);

}  // namespace audit::csv
