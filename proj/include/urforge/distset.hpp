#pragma once

#include "urforge/dist.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace urforge {

// Finite sorted set of distances containing 0. Members are addressed by index;
// index 0 is always the distance 0.
class DistanceSet {
public:
    static constexpr std::size_t max_size = 64;

    DistanceSet() : v_{Dist(0)} {}
    // Sorts and deduplicates; inserts 0 if missing.
    explicit DistanceSet(std::vector<Dist> members);
    DistanceSet(std::initializer_list<Dist> members) : DistanceSet(std::vector<Dist>(members)) {}

    std::size_t size() const { return v_.size(); }
    const Dist& operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Dist>& members() const { return v_; }
    Dist max() const { return v_.back(); }
    // Smallest positive member; throws on {0}.
    Dist min_positive() const;

    bool contains(Dist d) const { return index_of(d).has_value(); }
    std::optional<int> index_of(Dist d) const;
    // Index of the least member >= d, or size() if none.
    int lower_index(Dist d) const;

    std::string str() const;

    friend bool operator==(const DistanceSet&, const DistanceSet&) = default;

private:
    std::vector<Dist> v_;
};

struct Canonical {
    DistanceSet set;
    Dist scale;  // original = scale * canonical
};

Canonical canonicalize(const DistanceSet& d);

// max([0,r) ∩ D).
Dist predecessor(const DistanceSet& d, Dist r);
// min((r, max D] ∩ D), or r itself when r = max D.
Dist successor(const DistanceSet& d, Dist r);
bool is_jump(const DistanceSet& d, Dist r);

// Two triangles over a shared edge (b,c) that admit no amalgamating distance.
struct UniversalityWitness {
    Dist bc;                      // δ(b,c); 0 means b = c
    std::array<Dist, 2> a0;       // (δ(a0,b), δ(a0,c))
    std::array<Dist, 2> a1;       // (δ(a1,b), δ(a1,c))
    std::vector<Dist> admissible; // always empty; kept for reporting
};

struct UniversalityResult {
    bool universal = true;
    std::optional<UniversalityWitness> witness;
};

UniversalityResult is_universal(const DistanceSet& d);

using Block = std::vector<Dist>;

// Block decomposition of D\{0}; throws on non-universal D.
std::vector<Block> blocks(const DistanceSet& d);

// Triangle lookup table over the indices of a distance set:
// bit k of allowed(i,j) is set iff (D[i], D[j], D[k]) obeys the triangle
// inequality, i.e. |D[i]-D[j]| <= D[k] <= D[i]+D[j].
class TriangleTable {
public:
    explicit TriangleTable(const DistanceSet& d);
    std::uint64_t allowed(int i, int j) const { return t_[static_cast<std::size_t>(i) * n_ + j]; }
    bool ok(int i, int j, int k) const { return (allowed(i, j) >> k) & 1u; }
    std::uint64_t positive() const { return pos_; }
    std::size_t size() const { return n_; }

private:
    std::size_t n_;
    std::uint64_t pos_;
    std::vector<std::uint64_t> t_;
};

}  // namespace urforge
