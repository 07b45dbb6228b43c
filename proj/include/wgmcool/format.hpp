#ifndef WGMCOOL_FORMAT_HPP
#define WGMCOOL_FORMAT_HPP

#include <charconv>
#include <string>
#include <system_error>

namespace wgmcool {

// Shortest decimal that parses back to the same double.
inline std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ec == std::errc{} ? res.ptr : buf);
}

}  // namespace wgmcool

#endif
