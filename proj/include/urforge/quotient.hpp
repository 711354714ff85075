#pragma once

#include "urforge/builder.hpp"

#include <array>
#include <vector>

namespace urforge {

// The classes of x ~ y iff δ(x,y) <= r, in order of their first member.
struct Partition {
    Dist r;
    std::vector<std::vector<Point>> classes;
    std::vector<int> class_of;  // per point
};

// Thrown when <= r is not transitive; witness holds a, b, c with
// δ(a,b) <= r, δ(b,c) <= r and δ(a,c) > r.
struct TransitivityError : PreconditionError {
    TransitivityError(const std::string& what, std::array<Point, 3> w) : PreconditionError(what), witness(w) {}
    std::array<Point, 3> witness;
};

Partition classes(const Space& s, Dist r);

struct QuotientSpace {
    Space space;                          // over the realized minimum distances
    std::vector<std::vector<Point>> back; // class members per quotient point
};

QuotientSpace quotient_space(const Space& s, const Partition& p);

struct ClassStats {
    Dist min;
    Dist max;
    bool above_2r;     // every cross distance exceeds 2r
    bool spread_ok;    // max - min <= r
};

ClassStats class_stats(const Space& s, const Partition& p, int A, int B);

// Representatives a_i of the chosen classes with δ(a_i,a_j) = δ_min. Grown
// points belong to the class of the member they were placed next to.
std::vector<Point> lift_representatives(Approximant& a, const Partition& p, const std::vector<int>& chosen,
                                        int max_added = 1 << 16);

// Embedding of the first `prefix` points into the complement of the open
// m-ball around x.
Embedding drop_near_ball(Approximant& a, Point x, Dist m, int prefix, int max_added = 1 << 16);

struct QuotientOracle {
    DistanceSet set;
    int points = 0;
    int rounds = 0;
    std::uint64_t seed = 0;
};

// Distance set of the quotient by the first-block maximum, measured on
// approximants saturated around one pair of classes per cross distance.
DistanceSet quotient_distance_set(const DistanceSet& d);
QuotientOracle quotient_distance_oracle(const DistanceSet& d);

// Union of the classes named by q_copy (indices into p.classes), after
// checking that they form a copy prefix of the quotient at `depth`.
std::vector<Point> lift_copy(const Space& s, const Partition& p, const std::vector<int>& q_copy, int depth);

}  // namespace urforge
