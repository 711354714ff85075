#pragma once

#include "urforge/distset.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace urforge {

using Point = int;

// A finite D-graph with points 0..n-1 in enumeration order. Distances are
// stored as indices into D. Constructions in this library only ever produce
// metric instances; is_metric checks that claim.
class Space {
public:
    Space() : Space(DistanceSet{}) {}
    explicit Space(DistanceSet d);
    // Throws PreconditionError unless m is a symmetric matrix over D with zero
    // exactly on the diagonal.
    static Space from_matrix(DistanceSet d, const std::vector<std::vector<Dist>>& m);

    int size() const { return static_cast<int>(rows_.size()); }
    const DistanceSet& D() const { return meta_->d; }
    const TriangleTable& table() const { return meta_->tt; }

    int idx(Point a, Point b) const {
        if (a == b) return 0;
        return a < b ? rows_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]
                     : rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    Dist dist(Point a, Point b) const { return D()[static_cast<std::size_t>(idx(a, b))]; }
    // Indices to points 0..p-1.
    const std::vector<std::uint8_t>& row(Point p) const { return rows_[static_cast<std::size_t>(p)]; }

    // Appends a point with the given distance indices to all existing points.
    // Only the D-graph conditions are checked here.
    Point append(std::vector<std::uint8_t> to_prev);

    friend bool operator==(const Space& a, const Space& b) {
        return a.D() == b.D() && a.rows_ == b.rows_;
    }

private:
    struct Meta {
        DistanceSet d;
        TriangleTable tt;
        explicit Meta(DistanceSet s) : d(std::move(s)), tt(d) {}
    };
    std::shared_ptr<const Meta> meta_;
    std::vector<std::vector<std::uint8_t>> rows_;
};

using DGraph = Space;

// Partial map from points to positive distances, values kept as D-indices.
class TypeFn {
public:
    TypeFn() = default;
    TypeFn(std::vector<std::pair<Point, int>> entries);

    // Builds from distance values; throws if a value is not a positive member.
    static TypeFn from_values(const DistanceSet& d, const std::vector<std::pair<Point, Dist>>& entries);

    std::size_t size() const { return e_.size(); }
    bool empty() const { return e_.empty(); }
    const std::vector<std::pair<Point, int>>& entries() const { return e_; }
    std::vector<Point> domain() const;
    std::optional<int> at(Point p) const;
    bool contains(Point p) const { return at(p).has_value(); }
    void set(Point p, int value_index);
    // Restriction to the given points.
    TypeFn restrict_to(const std::vector<Point>& pts) const;
    bool extends(const TypeFn& smaller) const;
    // Image under a point map.
    TypeFn mapped(const std::vector<Point>& f) const;

    friend bool operator==(const TypeFn&, const TypeFn&) = default;
    friend auto operator<=>(const TypeFn&, const TypeFn&) = default;

private:
    std::vector<std::pair<Point, int>> e_;  // sorted by point
};

bool is_metric(const Space& s);

struct Restriction {
    Space space;
    std::vector<Point> back;  // new id -> original id
};
Restriction restrict(const Space& s, const std::vector<Point>& pts);

bool is_katetov(const TypeFn& t, const Space& s);
Dist rank(const TypeFn& t, const DistanceSet& d);
int rank_index(const TypeFn& t);
std::vector<Point> orbit(const TypeFn& t, const Space& s);
bool realizes(const Space& s, Point y, const TypeFn& t);
// Katětov functions over exactly the points `a`, in lexicographic value order.
std::vector<TypeFn> enumerate_katetov(const Space& s, const std::vector<Point>& a);

// The profile of y over the given points: t(x) = δ(y,x).
TypeFn profile(const Space& s, Point y, const std::vector<Point>& over);

// How outside points are completed when a new point is appended.
struct Completion {
    enum class Mode { least, random } mode = Mode::least;
    std::uint64_t seed = 0;
    // Optional preferred index per existing point (-1 = none); used when admissible.
    const std::vector<int>* prefer = nullptr;
};

// Full row of distance indices for a new point realizing t, or nullopt when no
// metric completion exists. t must only mention existing points.
std::optional<std::vector<std::uint8_t>> complete(const Space& s, const TypeFn& t, const Completion& c = {});

struct Extension {
    Space space;
    Point point;
};
// Appends a point realizing the Katětov function t, completing the remaining
// distances with the least admissible values.
Extension extend(const Space& s, const TypeFn& t);

}  // namespace urforge
