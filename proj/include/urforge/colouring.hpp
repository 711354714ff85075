#pragma once

#include "urforge/space.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace urforge {

// A named deterministic 2-colouring rule. The colour of a point depends only
// on its id, its distances to earlier points and the strategy seed.
class Colouring {
public:
    enum class Kind { constant, random, parity, profile_hash, class_alternating, table };

    // Accepts "const:0", "const:1", "random:SEED", "parity", "profile-hash",
    // "profile-hash:SEED", "class-alternating", "file:PATH". Throws ParseError.
    static Colouring parse(const std::string& spec);
    // Explicit point -> colour table; points missing from it get colour 0.
    static Colouring from_table(std::map<Point, int> table, std::string name = "table");

    const std::string& name() const { return name_; }
    Kind kind() const { return kind_; }

    // Memoized colour of p in s; s must only ever grow by appending.
    int operator()(const Space& s, Point p);
    int peek(Point p) const;  // memoized colour or -1
    // Drops memoized colours (for use with a different space).
    void reset() { memo_.clear(); cls_.clear(); ncls_ = 0; }

private:
    int compute(const Space& s, Point p);

    Kind kind_ = Kind::constant;
    std::string name_;
    std::uint64_t seed_ = 0;
    int value_ = 0;
    std::map<Point, int> table_;
    std::vector<int> memo_;
    std::vector<int> cls_;
    int ncls_ = 0;
};

}  // namespace urforge
