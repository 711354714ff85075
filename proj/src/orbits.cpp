#include "urforge/orbits.hpp"

#include "urforge/placer.hpp"
#include "urforge/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace urforge {

LevellingPolicy LevellingPolicy::lower() { return custom([](int, int) { return false; }); }
LevellingPolicy LevellingPolicy::upper() { return custom([](int, int) { return true; }); }

LevellingPolicy LevellingPolicy::random(std::uint64_t seed) {
    return custom([seed](int i, int j) {
        std::uint64_t k = static_cast<std::uint64_t>(i) * 0x10001u + static_cast<std::uint64_t>(j);
        return (mix64(seed ^ mix64(k)) & 1u) != 0;
    });
}

LevellingPolicy LevellingPolicy::custom(std::function<bool(int, int)> pick_upper) {
    LevellingPolicy p;
    p.upper_ = std::move(pick_upper);
    return p;
}

Dist LevellingPolicy::choose(int i, int j, Dist r_minus, Dist r) const {
    return upper_(std::min(i, j), std::max(i, j)) ? r : r_minus;
}

namespace {

Dist val(const DistanceSet& d, int i) { return d[static_cast<std::size_t>(i)]; }

void same_domain(const std::vector<TypeFn>& family) {
    if (family.empty()) throw PreconditionError("empty family");
    auto dom = family.front().domain();
    if (dom.empty()) throw PreconditionError("family domain must be nonempty");
    for (auto& t : family)
        if (t.domain() != dom) throw PreconditionError("family members must share one domain");
}

bool triangles_ok(const IndexMetric& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n || !m[i][i].is_zero()) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j] != m[j][i]) return false;
            for (std::size_t k = 0; k < n; ++k)
                if (m[i][j] > m[i][k] + m[k][j]) return false;
        }
    }
    return true;
}

Dist first_block_min(const DistanceSet& d) { return blocks(d).front().front(); }

}  // namespace

bool is_metric(const IndexMetric& m) {
    if (!triangles_ok(m)) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (i != j && m[i][j].is_zero()) return false;
    return true;
}

RangeResult distance_range(const Space& s, const TypeFn& a, const TypeFn& b) {
    if (a.domain() != b.domain()) throw PreconditionError("distance_range needs equal domains");
    if (a.empty()) throw PreconditionError("distance_range needs a nonempty domain");
    if (!is_katetov(a, s) || !is_katetov(b, s)) throw PreconditionError("distance_range needs Katětov functions");
    const auto& d = s.D();
    Dist lo(0);
    std::optional<Dist> hi;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Dist x = val(d, a.entries()[i].second), y = val(d, b.entries()[i].second);
        lo = std::max(lo, absdiff(x, y));
        if (!hi || x + y < *hi) hi = x + y;
    }
    RangeResult r;
    for (auto& m : d.members())
        if (lo <= m && m <= *hi) r.set.push_back(m);
    if (r.set.empty()) throw PreconditionError("empty distance range");
    r.min = r.set.front();
    r.max = r.set.back();
    return r;
}

Amalgam amalgamate(const Space& base, const std::vector<TypeFn>& family, const IndexMetric& idx) {
    same_domain(family);
    const std::size_t n = family.size();
    if (idx.size() != n) throw PreconditionError("index metric size does not match the family");
    for (auto& row : idx)
        if (row.size() != n) throw PreconditionError("index metric is not square");
    if (!is_metric(idx)) throw PreconditionError("index table is not a metric");
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_katetov(family[i], base))
            throw PreconditionError("family member " + std::to_string(i) + " is not Katětov");
        for (std::size_t j = 0; j < i; ++j) {
            auto r = distance_range(base, family[i], family[j]);
            if (std::find(r.set.begin(), r.set.end(), idx[i][j]) == r.set.end())
                throw PreconditionError("index distance " + idx[i][j].str() + " between " + std::to_string(j) + " and " +
                                        std::to_string(i) + " is outside their distance range");
        }
    }
    Amalgam out;
    out.base = family.front().domain();
    const std::size_t na = out.base.size();
    std::vector<std::vector<Dist>> m(na + n, std::vector<Dist>(na + n, Dist(0)));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) m[i][j] = base.dist(out.base[i], out.base[j]);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& e = family[k].entries();
        for (std::size_t i = 0; i < na; ++i) m[i][na + k] = m[na + k][i] = val(base.D(), e[i].second);
        for (std::size_t l = 0; l < n; ++l) m[na + k][na + l] = idx[k][l];
    }
    out.graph = Space::from_matrix(base.D(), m);
    if (!urforge::is_metric(out.graph)) throw std::logic_error("amalgam is not metric");
    return out;
}

std::vector<Point> realize_family(Approximant& a, const std::vector<TypeFn>& family, const IndexMetric& idx,
                                  int anchor_index, Point anchor, int max_added) {
    if (anchor_index < 0 || anchor_index >= static_cast<int>(family.size()))
        throw PreconditionError("anchor index out of range");
    if (!realizes(a.space, anchor, family[static_cast<std::size_t>(anchor_index)]))
        throw PreconditionError("anchor does not realize its family member");
    auto am = amalgamate(a.space, family, idx);
    const int na = static_cast<int>(am.base.size());
    PlacementSpec spec;
    spec.source = &am.graph;
    for (int i = 0; i < na; ++i) spec.slots.push_back(Slot{i, am.base[static_cast<std::size_t>(i)], {}, -1});
    spec.slots.push_back(Slot{na + anchor_index, anchor, {}, -1});
    for (int k = 0; k < static_cast<int>(family.size()); ++k)
        if (k != anchor_index) spec.slots.push_back(Slot{na + k, std::nullopt, {}, -1});
    GrowingAmbient amb(a, max_added);
    auto r = place(amb, spec);
    if (!r.ok) throw BudgetExhausted("realize_family: " + r.failure, r.blocking);
    auto e = r.embedding();
    std::vector<Point> w;
    for (int k = 0; k < static_cast<int>(family.size()); ++k) w.push_back(e(na + k));
    return w;
}

Embedding shrink_step(Approximant& a, const std::vector<Point>& A, const std::vector<Point>& B,
                      const std::vector<Point>& R, const std::vector<TypeFn>& T, const std::vector<TypeFn>& ext,
                      int max_added) {
    if (T.size() != ext.size()) throw PreconditionError("every function needs an extension");
    std::vector<Point> all = A;
    all.insert(all.end(), B.begin(), B.end());
    all.insert(all.end(), R.begin(), R.end());
    std::vector<Point> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("A, B and R must be disjoint");
    std::vector<Point> dom_a = A, dom_ab = A;
    std::sort(dom_a.begin(), dom_a.end());
    dom_ab.insert(dom_ab.end(), B.begin(), B.end());
    std::sort(dom_ab.begin(), dom_ab.end());
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (T[i].domain() != dom_a || ext[i].domain() != dom_ab || !ext[i].extends(T[i]))
            throw PreconditionError("extension " + std::to_string(i) + " has the wrong domain or disagrees on A");
        if (!is_katetov(T[i], a.space) || !is_katetov(ext[i], a.space))
            throw PreconditionError("shrink_step needs Katětov functions");
    }
    if (!A.empty())
        for (std::size_t i = 0; i < T.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (distance_range(a.space, T[i], T[j]).set != distance_range(a.space, ext[i], ext[j]).set)
                    throw PreconditionError("distance ranges of the functions and their extensions differ");

    const Space source = a.space;
    PlacementSpec spec;
    spec.source = &source;
    spec.avoid = B;
    for (Point p : A) spec.slots.push_back(Slot{p, p, {}, -1});
    std::vector<Slot> rest;
    for (Point y : R) {
        int owner = -1;
        for (std::size_t i = 0; i < T.size() && owner < 0; ++i)
            if (realizes(source, y, T[i])) owner = static_cast<int>(i);
        if (owner < 0) {
            rest.push_back(Slot{y, std::nullopt, {}, -1});
            continue;
        }
        spec.slots.push_back(Slot{y, std::nullopt, ext[static_cast<std::size_t>(owner)].restrict_to(B), -1});
    }
    spec.slots.insert(spec.slots.end(), rest.begin(), rest.end());
    GrowingAmbient amb(a, max_added);
    auto r = place(amb, spec);
    if (!r.ok) throw BudgetExhausted("shrink_step: " + r.failure, r.blocking);
    return r.embedding();
}

Embedding reduce(Approximant& a, const std::vector<std::pair<TypeFn, TypeFn>>& pairs, int prefix, int max_added) {
    if (pairs.empty()) throw PreconditionError("reduce needs at least one pair");
    const auto A = pairs.front().first.domain();
    const auto AB = pairs.front().second.domain();
    for (auto& [t, s] : pairs) {
        if (t.domain() != A || s.domain() != AB || !s.extends(t))
            throw PreconditionError("reduce needs t_i ⊆ s_i with common domains");
        if (!is_katetov(t, a.space) || !is_katetov(s, a.space)) throw PreconditionError("reduce needs Katětov functions");
    }
    if (A.empty()) throw PreconditionError("reduce needs a nonempty domain A");
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (distance_range(a.space, pairs[i].first, pairs[j].first).set !=
                distance_range(a.space, pairs[i].second, pairs[j].second).set)
                throw PreconditionError("distance ranges of t and s families differ");
    if (prefix > a.size()) throw PreconditionError("prefix exceeds the space");
    std::vector<Point> B;
    for (Point p : AB)
        if (std::find(A.begin(), A.end(), p) == A.end()) B.push_back(p);

    const Space source = a.space;
    PlacementSpec spec;
    spec.source = &source;
    spec.identity_first = true;
    spec.avoid = B;
    for (Point p : A) spec.slots.push_back(Slot{p, p, {}, -1});
    for (Point x = 0; x < prefix; ++x) {
        if (std::find(A.begin(), A.end(), x) != A.end()) continue;
        Slot slot{x, std::nullopt, {}, -1};
        for (auto& [t, s] : pairs)
            if (realizes(source, x, t)) {
                slot.extra = s.restrict_to(B);
                break;
            }
        spec.slots.push_back(slot);
    }
    GrowingAmbient amb(a, max_added);
    auto r = place(amb, spec);
    if (!r.ok) throw BudgetExhausted("reduce: " + r.failure, r.blocking);
    return r.embedding();
}

IndexMetric min_distance_matrix(const Space& s, const std::vector<TypeFn>& family) {
    same_domain(family);
    const std::size_t n = family.size();
    IndexMetric m(n, std::vector<Dist>(n, Dist(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) m[i][j] = m[j][i] = distance_range(s, family[i], family[j]).min;
    if (!triangles_ok(m)) throw std::logic_error("δ_min table violates the triangle inequality");
    return m;
}

IndexMetric r_levelling(const Space& s, const std::vector<TypeFn>& family, Dist r, const LevellingPolicy& policy) {
    const auto& d = s.D();
    const auto first = blocks(d).front();
    if (std::find(first.begin(), first.end(), r) == first.end() || r == first.front())
        throw PreconditionError("r must lie in the first block above its minimum");
    const Dist rm = predecessor(d, r);
    auto dmin = min_distance_matrix(s, family);
    const std::size_t n = family.size();
    IndexMetric m(n, std::vector<Dist>(n, Dist(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            m[i][j] = m[j][i] =
                dmin[i][j] >= r ? dmin[i][j] : policy.choose(static_cast<int>(i), static_cast<int>(j), rm, r);
    if (!is_metric(m)) throw std::logic_error("r-levelling is not metric");
    const Dist unit = first_block_min(d);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == k || j == k || i == j) continue;
                Dist bound = family[i] == family[j] ? unit : dmin[i][j];
                if (absdiff(m[k][i], m[k][j]) > bound) throw std::logic_error("r-levelling breaks the index inequality");
            }
    return m;
}

std::vector<Point> levelled_realization(Approximant& a, const std::vector<TypeFn>& family, Dist r,
                                        const LevellingPolicy& policy, Point v, int max_added) {
    same_domain(family);
    const std::size_t s = family.size() - 1;
    if (!realizes(a.space, v, family[s])) throw PreconditionError("anchor does not realize the last family member");
    if (s == 0) return {v};
    const Dist rm = predecessor(a.D(), r);
    for (std::size_t i = 1; i <= s; ++i) {
        Dist rk = rank(family[i], a.D());
        if (rk != r && rk != rm) throw PreconditionError("family rank outside {predecessor(r), r}");
    }
    if (std::find(family.begin(), family.end() - 1, family[s]) == family.end() - 1)
        throw PreconditionError("the anchored member must duplicate an earlier one");
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (family[i] == family[j]) throw PreconditionError("members before the anchor must be distinct");
    auto idx = r_levelling(a.space, family, r, policy);
    auto w = realize_family(a, family, idx, static_cast<int>(s), v, max_added);
    auto dmin = min_distance_matrix(a.space, family);
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                if (i == j || i == k || j == k) continue;
                if (absdiff(a.space.dist(w[k], w[i]), a.space.dist(w[k], w[j])) > dmin[i][j])
                    throw std::logic_error("levelled realization breaks the spread inequality");
            }
    return w;
}

}  // namespace urforge
