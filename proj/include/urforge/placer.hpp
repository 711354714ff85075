#pragma once

#include "urforge/builder.hpp"
#include "urforge/colouring.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace urforge {

// Where images live: a space that may or may not grow, optionally coloured.
class Ambient {
public:
    virtual ~Ambient() = default;
    virtual const Space& space() const = 0;
    // Appends a realizer of t; nullopt when growth is impossible or over budget.
    virtual std::optional<Point> grow(const TypeFn& t, const std::vector<int>* prefer) = 0;
    virtual int colour(Point) { return -1; }
    virtual int grown() const { return 0; }
};

// An approximant grown in place under a point budget.
class GrowingAmbient : public Ambient {
public:
    GrowingAmbient(Approximant& a, int max_added, Colouring* chi = nullptr) : a_(a), max_(max_added), chi_(chi) {}
    const Space& space() const override { return a_.space; }
    std::optional<Point> grow(const TypeFn& t, const std::vector<int>* prefer) override;
    int colour(Point p) override { return chi_ ? (*chi_)(a_.space, p) : -1; }
    int grown() const override { return added_; }
    int remaining() const { return max_ - added_; }
    Approximant& approximant() { return a_; }

private:
    Approximant& a_;
    int max_;
    int added_ = 0;
    Colouring* chi_;
};

// A fixed space with fixed colours; never grows.
class FixedAmbient : public Ambient {
public:
    FixedAmbient(const Space& s, std::vector<int> colours) : s_(s), c_(std::move(colours)) {}
    const Space& space() const override { return s_; }
    std::optional<Point> grow(const TypeFn&, const std::vector<int>*) override { return std::nullopt; }
    int colour(Point p) override { return c_.empty() ? -1 : c_[static_cast<std::size_t>(p)]; }

private:
    const Space& s_;
    std::vector<int> c_;
};

// One source point to place.
struct Slot {
    Point source = 0;
    std::optional<Point> target;  // forced image
    TypeFn extra;                 // required distances to ambient points
    int group = -1;               // colour group, -1 for none
};

struct PlacementSpec {
    const Space* source = nullptr;
    std::vector<Slot> slots;       // processing order
    std::vector<Point> avoid;      // ambient points no image may use
    // Source ids double as ambient ids (the source is an ambient prefix):
    // identity is tried first and unplaced source ids are kept free.
    bool identity_first = false;
    std::vector<int> group_pref;   // preferred colour per group; any_colour takes the first member's
    std::vector<int> group_colour; // decided colour per group, -1 undecided
    bool allow_switch = true;      // an undecided group may take the other colour
    int attempts = 24;             // growth attempts per colour and slot
    bool scan_existing = true;
    // Extra entries added only to the function realized by a grown point.
    std::function<TypeFn(const TypeFn&)> grow_extra;
    // Ambient points no image may use, checked at the time of use (covers grown points).
    std::function<bool(Point)> forbid;
};

inline constexpr int any_colour = -2;

struct Placement {
    bool ok = false;
    std::vector<Point> image;      // per slot
    std::vector<int> group_colour;
    int grown = 0;
    std::string failure;
    TypeFn blocking;
    Embedding embedding() const;
    std::vector<Point> sources;
};

Placement place(Ambient& amb, const PlacementSpec& spec);

}  // namespace urforge
