#pragma once

#include "urforge/space.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace urforge {

// Raised when an operation would grow a space past its point budget.
struct BudgetExhausted : std::runtime_error {
    BudgetExhausted(const std::string& what, TypeFn blocking = {})
        : std::runtime_error(what), blocking(std::move(blocking)) {}
    TypeFn blocking;
};

// Raised when an operation requires a universal distance set.
struct NonUniversalError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// A finite approximant of the Urysohn space over space.D(). Growth happens in
// place; (D, n, seed) determines the space exactly.
struct Approximant {
    Space space;
    std::uint64_t seed = 0;
    int level = 1;  // schedule position: prefix length whose functions are being realized

    const DistanceSet& D() const { return space.D(); }
    int size() const { return space.size(); }
};

// Map from source points to target points.
struct Embedding {
    std::vector<Point> source;
    std::vector<Point> target;

    std::size_t size() const { return source.size(); }
    Point operator()(Point p) const;
    bool defined(Point p) const;
};

// True iff e is injective and distance preserving from src into tgt.
bool is_embedding(const Space& src, const Space& tgt, const Embedding& e);

// Appends one point realizing t. Outside points get seeded-random admissible
// distances unless `prefer` names a value for them.
Point grow(Approximant& a, const TypeFn& t, const std::vector<int>* prefer = nullptr);

Approximant build(const DistanceSet& d, int n, std::uint64_t seed);
// Continues the fair schedule until the space has n points.
void build_more(Approximant& a, int n);

struct SaturationCertificate {
    struct Entry {
        int prefix;
        TypeFn fn;
        Point realizer;
    };
    int level = 0;
    std::vector<Entry> checks;
};

struct Saturation {
    int level;
    SaturationCertificate certificate;
};

// Largest k such that every Katětov function with domain inside the first k
// points is realized.
Saturation saturation_level(const Space& s);
inline Saturation saturation_level(const Approximant& a) { return saturation_level(a.space); }
// True iff every Katětov function with domain exactly the first k points is realized.
bool saturated_at(const Space& s, int k);

// Katětov functions over exactly `dom` without a realizer, in lexicographic
// order, at most `limit` of them.
std::vector<TypeFn> unrealized(const Space& s, const std::vector<Point>& dom, std::size_t limit = SIZE_MAX);

// Grows until saturation_level >= k; throws BudgetExhausted past max_added.
Approximant saturate(Approximant a, int k, int max_added = 1 << 20);
// Realizes every Katětov function over exactly `dom` that is not yet realized.
int saturate_over(Approximant& a, const std::vector<Point>& dom, int max_added = 1 << 20);

// Extends `partial` to the first `upto` source points, growing target as needed.
Embedding extend_isometry(const Approximant& source, Approximant& target, const Embedding& partial, int upto,
                          int max_added = 1 << 16);
// Embeds the first `upto` points into the space minus B, fixing A.
Embedding avoid(Approximant& a, const std::vector<Point>& fix, const std::vector<Point>& B, int upto,
                int max_added = 1 << 16);

// Truncated copy criterion: every Katětov function (over `against`, default
// the space's D) with domain inside the first `depth` elements of C is realized
// inside C. C is taken in the given order.
bool copy_check(const Space& s, const std::vector<Point>& C, int depth);
bool copy_check(const Space& s, const std::vector<Point>& C, int depth, const DistanceSet& against);

}  // namespace urforge
