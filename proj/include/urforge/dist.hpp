#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace urforge {

// Raised when an operation's precondition does not hold.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised by parsers on malformed input.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A non-negative exact rational distance.
class Dist {
public:
    using Rep = boost::rational<std::int64_t>;

    Dist() = default;
    Dist(std::int64_t n) : v_(n) { check(); }  // NOLINT: integers are distances
    Dist(std::int64_t num, std::int64_t den) : v_(num, den) { check(); }
    explicit Dist(Rep r) : v_(r) { check(); }

    const Rep& rep() const { return v_; }
    std::int64_t num() const { return v_.numerator(); }
    std::int64_t den() const { return v_.denominator(); }
    bool is_integer() const { return v_.denominator() == 1; }
    bool is_zero() const { return v_.numerator() == 0; }

    friend Dist operator+(Dist a, Dist b) { return Dist(a.v_ + b.v_); }
    friend Dist operator*(Dist a, Dist b) { return Dist(a.v_ * b.v_); }
    friend Dist operator/(Dist a, Dist b) { return Dist(a.v_ / b.v_); }
    // Absolute difference; distances never go negative.
    friend Dist absdiff(Dist a, Dist b) { return a.v_ < b.v_ ? Dist(b.v_ - a.v_) : Dist(a.v_ - b.v_); }

    friend bool operator==(const Dist& a, const Dist& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Dist& a, const Dist& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (b.v_ < a.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const;

private:
    void check() const {
        if (v_ < 0) throw PreconditionError("negative distance");
    }
    Rep v_{0};
};

// Parses "3", "5/2" (whitespace tolerated at the ends).
Dist parse_dist(std::string_view text);

}  // namespace urforge

template <>
struct std::hash<urforge::Dist> {
    std::size_t operator()(const urforge::Dist& d) const noexcept {
        return std::hash<std::int64_t>{}(d.num()) * 31u + std::hash<std::int64_t>{}(d.den());
    }
};
