#include "audit/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "audit/errors.hpp"

namespace audit::io {

std::string read_text_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw AuditError(ErrorCode::IoError, "cannot open " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& file, std::string_view content) {
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw AuditError(ErrorCode::IoError, "cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw AuditError(ErrorCode::IoError, "short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

void append_line(const std::filesystem::path& file, std::string_view line) {
    std::ofstream out(file, std::ios::binary | std::ios::app);
    if (!out) throw AuditError(ErrorCode::IoError, "cannot append to " + file.string());
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.put('\n');
    if (!out) throw AuditError(ErrorCode::IoError, "short append to " + file.string());
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
        throw AuditError(ErrorCode::IoError, "sha256 failed");
    static const char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0x0f]);
    }
    return out;
}

std::string sha256_hex_of_file(const std::filesystem::path& file) {
    return sha256_hex(read_text_file(file));
}

std::string iso8601_utc_now() {
    using namespace std::chrono;
    const auto now = time_point_cast<seconds>(system_clock::now());
    const std::time_t t = system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

std::string format_double(double v) {
    std::array<char, 40> buf{};
    auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc()) throw AuditError(ErrorCode::IoError, "to_chars failed");
    return std::string(buf.data(), p);
}

std::string display_one_decimal(double v) {
    const long long tenths = std::llround(v * 10.0);
    std::string out = std::to_string(tenths / 10);
    out.push_back('.');
    out += std::to_string(std::llabs(tenths % 10));
    return out;
}

long long display_percent(double fraction) {
    return std::llround(fraction * 100.0);
}

std::optional<double> parse_double(std::string_view s) {
    double v = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || p != end) return std::nullopt;
    return v;
}

std::optional<long long> parse_int(std::string_view s) {
    long long v = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || p != end) return std::nullopt;
    return v;
}

}  // namespace audit::io
