#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace audit::io {

std::string read_text_file(const std::filesystem::path& file);

// write-temp-then-rename so readers never observe a partial file
void write_file_atomic(const std::filesystem::path& file, std::string_view content);

void append_line(const std::filesystem::path& file, std::string_view line);

std::string sha256_hex(std::string_view data);
std::string sha256_hex_of_file(const std::filesystem::path& file);

std::string iso8601_utc_now();

// Shortest round-trip decimal representation.
std::string format_double(double v);

// Half-up rounding used for report display ("1.7", "0.4", "0.2").
std::string display_one_decimal(double v);
// Fraction -> integer percent, half-up ("98").
long long display_percent(double fraction);

std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

}  // namespace audit::io
