#pragma once

#include "urforge/builder.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace urforge {

// Distances realizable between the orbits of two Katětov functions over the
// same domain.
struct RangeResult {
    std::vector<Dist> set;
    Dist min;
    Dist max;
};

// Symmetric distance table over family indices.
using IndexMetric = std::vector<std::vector<Dist>>;

// Chooses between predecessor(r) and r for index pairs whose δ_min is below r.
class LevellingPolicy {
public:
    static LevellingPolicy lower();
    static LevellingPolicy upper();
    static LevellingPolicy random(std::uint64_t seed);
    static LevellingPolicy custom(std::function<bool(int, int)> pick_upper);

    Dist choose(int i, int j, Dist r_minus, Dist r) const;

private:
    std::function<bool(int, int)> upper_;
};

// Range formula: {m ∈ D : max|s−t| ≤ m ≤ min(s+t)}. Domains must be equal
// and nonempty, both functions Katětov over s.
RangeResult distance_range(const Space& s, const TypeFn& a, const TypeFn& b);

struct Amalgam {
    DGraph graph;             // A in domain order, then one point per family index
    std::vector<Point> base;  // original ids of A
};

// Joins the base domain with one point per family member at the prescribed
// index distances. Throws PreconditionError naming the first bad pair.
Amalgam amalgamate(const Space& base, const std::vector<TypeFn>& family, const IndexMetric& idx);

// Points w_i realizing family[i] with δ(w_i,w_j) = idx(i,j) and w_k = v.
std::vector<Point> realize_family(Approximant& a, const std::vector<TypeFn>& family, const IndexMetric& idx,
                                  int anchor_index, Point anchor, int max_added = 1 << 16);

// Re-embeds A ∪ R fixing A so that members of orb(T[i]) ∩ R land in orb(ext[i]).
Embedding shrink_step(Approximant& a, const std::vector<Point>& A, const std::vector<Point>& B,
                      const std::vector<Point>& R, const std::vector<TypeFn>& T, const std::vector<TypeFn>& ext,
                      int max_added = 1 << 16);

// Embedding of the first `prefix` points, identity on dom(t_i), sending
// orb(t_i) into orb(s_i).
Embedding reduce(Approximant& a, const std::vector<std::pair<TypeFn, TypeFn>>& pairs, int prefix,
                 int max_added = 1 << 16);

IndexMetric min_distance_matrix(const Space& s, const std::vector<TypeFn>& family);

IndexMetric r_levelling(const Space& s, const std::vector<TypeFn>& family, Dist r, const LevellingPolicy& policy);

// The last family member duplicates an earlier one and is anchored at v.
std::vector<Point> levelled_realization(Approximant& a, const std::vector<TypeFn>& family, Dist r,
                                        const LevellingPolicy& policy, Point v, int max_added = 1 << 16);

bool is_metric(const IndexMetric& m);

}  // namespace urforge
