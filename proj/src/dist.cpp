#include "urforge/dist.hpp"

#include <charconv>

namespace urforge {

std::string Dist::str() const {
    if (v_.denominator() == 1) return std::to_string(v_.numerator());
    return std::to_string(v_.numerator()) + "/" + std::to_string(v_.denominator());
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
        throw ParseError("malformed distance '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Dist parse_dist(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    std::int64_t num = 0, den = 1;
    if (slash == std::string_view::npos) {
        num = parse_int(s, text);
    } else {
        num = parse_int(trim(s.substr(0, slash)), text);
        den = parse_int(trim(s.substr(slash + 1)), text);
        if (den <= 0) throw ParseError("malformed distance '" + std::string(text) + "'");
    }
    if (num < 0) throw ParseError("negative distance '" + std::string(text) + "'");
    return Dist(num, den);
}

}  // namespace urforge
