#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace discourse {

// Typed error categories; the CLI maps each to a distinct exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct InputError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ApiError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};

namespace util {

uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
// Whitespace-separated fields, empty fields dropped.
std::vector<std::string> split_ws(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
bool starts_with_icase(std::string_view s, std::string_view prefix);

// ISO 8601 UTC instants ("2024-05-14T09:30:00Z").
std::optional<int64_t> parse_iso8601_utc(const std::string& s);
std::string format_iso8601_utc(int64_t epoch_seconds);

// Deterministic uniform double in [0,1) from a 64-bit generator draw.
inline double to_unit_double(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// CSV field handling (no embedded-newline support; fields may be quoted).
std::vector<std::string> parse_csv_line(const std::string& line);
std::string csv_escape(const std::string& field);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace util
} // namespace discourse
