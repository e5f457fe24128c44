#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace mapflow {

/// Shortest decimal form that parses back to exactly the same double.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

/// Fixed number of significant digits (general format); 17 digits always
/// round-trips.
inline std::string format_double(double v, int significant_digits) {
    char buf[64];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, significant_digits);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace mapflow
