#include "urforge/quotient.hpp"

#include "urforge/placer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace urforge {

namespace {

int find(std::vector<int>& up, int x) {
    while (up[static_cast<std::size_t>(x)] != x) {
        up[static_cast<std::size_t>(x)] = up[static_cast<std::size_t>(up[static_cast<std::size_t>(x)])];
        x = up[static_cast<std::size_t>(x)];
    }
    return x;
}

std::array<Point, 3> bfs_witness(const Space& s, const std::vector<Point>& comp, Point a, Dist r) {
    std::vector<int> depth(static_cast<std::size_t>(s.size()), -1);
    std::vector<Point> parent(static_cast<std::size_t>(s.size()), -1);
    std::vector<Point> queue{a};
    depth[static_cast<std::size_t>(a)] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        Point u = queue[h];
        for (Point v : comp) {
            if (depth[static_cast<std::size_t>(v)] >= 0 || s.dist(u, v) > r) continue;
            depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
            parent[static_cast<std::size_t>(v)] = u;
            if (depth[static_cast<std::size_t>(v)] == 2) return {a, u, v};
            queue.push_back(v);
        }
    }
    throw std::logic_error("no transitivity witness found");
}

Dist cross_min(const Space& s, const std::vector<Point>& A, const std::vector<Point>& B) {
    Dist best = s.D().max();
    for (Point x : A)
        for (Point y : B) best = std::min(best, s.dist(x, y));
    return best;
}

}  // namespace

Partition classes(const Space& s, Dist r) {
    const int n = s.size();
    std::vector<int> up(static_cast<std::size_t>(n));
    std::iota(up.begin(), up.end(), 0);
    for (Point i = 0; i < n; ++i)
        for (Point j = 0; j < i; ++j)
            if (s.dist(i, j) <= r) up[static_cast<std::size_t>(find(up, i))] = find(up, j);
    Partition p;
    p.r = r;
    p.class_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> root_class(static_cast<std::size_t>(n), -1);
    for (Point i = 0; i < n; ++i) {
        int root = find(up, i);
        int& c = root_class[static_cast<std::size_t>(root)];
        if (c < 0) {
            c = static_cast<int>(p.classes.size());
            p.classes.emplace_back();
        }
        p.classes[static_cast<std::size_t>(c)].push_back(i);
        p.class_of[static_cast<std::size_t>(i)] = c;
    }
    for (auto& comp : p.classes)
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (s.dist(comp[i], comp[j]) > r) {
                    auto w = bfs_witness(s, comp, comp[j], r);
                    throw TransitivityError("relation <= " + r.str() + " is not transitive", w);
                }
    return p;
}

QuotientSpace quotient_space(const Space& s, const Partition& p) {
    const std::size_t k = p.classes.size();
    std::vector<std::vector<Dist>> m(k, std::vector<Dist>(k, Dist(0)));
    std::vector<Dist> realized;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            m[i][j] = m[j][i] = cross_min(s, p.classes[i], p.classes[j]);
            realized.push_back(m[i][j]);
        }
    QuotientSpace q;
    q.space = Space::from_matrix(DistanceSet(realized), m);
    q.back = p.classes;
    return q;
}

ClassStats class_stats(const Space& s, const Partition& p, int A, int B) {
    if (A == B) throw PreconditionError("class_stats needs two different classes");
    const auto& ca = p.classes.at(static_cast<std::size_t>(A));
    const auto& cb = p.classes.at(static_cast<std::size_t>(B));
    ClassStats st{s.D().max(), Dist(0), true, true};
    for (Point x : ca)
        for (Point y : cb) {
            Dist d = s.dist(x, y);
            st.min = std::min(st.min, d);
            st.max = std::max(st.max, d);
        }
    st.above_2r = st.min > p.r + p.r;
    st.spread_ok = absdiff(st.max, st.min) <= p.r;
    return st;
}

std::vector<Point> lift_representatives(Approximant& a, const Partition& p, const std::vector<int>& chosen,
                                        int max_added) {
    std::set<int> seen(chosen.begin(), chosen.end());
    if (seen.size() != chosen.size()) throw PreconditionError("classes must be pairwise distinct");
    if (chosen.empty()) return {};
    const auto cls = [&](int c) -> const std::vector<Point>& { return p.classes.at(static_cast<std::size_t>(c)); };
    const auto& d = a.D();
    const int ri = d.index_of(p.r).value();
    std::vector<Point> reps{cls(chosen[0]).front()};
    int added = 0;
    for (std::size_t k = 1; k < chosen.size(); ++k) {
        const auto& A = cls(chosen[k]);
        std::vector<std::pair<Point, int>> target;
        for (std::size_t i = 0; i < k; ++i)
            target.emplace_back(reps[i], d.index_of(cross_min(a.space, cls(chosen[i]), A)).value());
        TypeFn t(target);
        std::optional<Point> pick;
        for (Point y : A)
            if (realizes(a.space, y, t)) {
                pick = y;
                break;
            }
        for (std::size_t bi = 0; !pick && bi < A.size(); ++bi) {
            TypeFn q = t;
            q.set(A[bi], ri);
            if (!is_katetov(q, a.space)) continue;
            auto orb = orbit(q, a.space);
            if (!orb.empty()) {
                pick = orb.front();
            } else {
                if (added >= max_added) throw BudgetExhausted("lift_representatives: growth budget exhausted", q);
                pick = grow(a, q);
                ++added;
            }
        }
        if (!pick) throw PreconditionError("no class member admits the representative function");
        reps.push_back(*pick);
    }
    return reps;
}

Embedding drop_near_ball(Approximant& a, Point x, Dist m, int prefix, int max_added) {
    const auto& d = a.D();
    if (blocks(d).front().back() != m) throw PreconditionError("m must be the maximum of the first block");
    if (x < 0 || x >= a.size()) throw PreconditionError("centre is not a point");
    if (prefix > a.size()) throw PreconditionError("prefix exceeds the space");
    const int mi = d.index_of(m).value();
    const Space source = a.space;
    PlacementSpec spec;
    spec.source = &source;
    spec.identity_first = true;
    spec.forbid = [&a, x, m](Point p) { return p == x || a.space.dist(x, p) < m; };
    spec.grow_extra = [&a, x, mi](const TypeFn& f) {
        const auto& tt = a.space.table();
        for (int v = mi; v < static_cast<int>(a.D().size()); ++v) {
            bool ok = true;
            for (auto& [z, fz] : f.entries()) ok = ok && tt.ok(fz, v, a.space.idx(z, x));
            if (ok) return TypeFn({{x, v}});
        }
        return TypeFn{};
    };
    for (Point p = 0; p < prefix; ++p) spec.slots.push_back(Slot{p, std::nullopt, {}, -1});
    GrowingAmbient amb(a, max_added);
    auto r = place(amb, spec);
    if (!r.ok) throw BudgetExhausted("drop_near_ball: " + r.failure, r.blocking);
    return r.embedding();
}

QuotientOracle quotient_distance_oracle(const DistanceSet& d) {
    if (!is_universal(d).universal) throw NonUniversalError("distance set is not universal");
    auto bl = blocks(d);
    if (bl.size() < 2) throw PreconditionError("single-block distance set has no proper quotient");
    const Dist m = bl.front().back();
    QuotientOracle o;
    o.seed = 0x51ed;
    std::vector<Dist> mins;
    // One pair of classes per cross distance: realize every function over the
    // current closest pair until the cross minimum stops moving.
    for (std::size_t k = 1; k < d.size(); ++k) {
        if (d[k] <= m) continue;
        auto a = build(d, 1, o.seed);
        Point b = grow(a, TypeFn({{0, static_cast<int>(k)}}));
        std::pair<Point, Point> close{0, b};
        Dist best = d[k];
        for (int round = 0; round < 8; ++round) {
            saturate_over(a, {close.first, close.second});
            o.rounds = std::max(o.rounds, round + 1);
            auto p = classes(a.space, m);
            const auto& A = p.classes[static_cast<std::size_t>(p.class_of[0])];
            const auto& B = p.classes[static_cast<std::size_t>(p.class_of[static_cast<std::size_t>(b)])];
            std::pair<Point, Point> next = close;
            Dist now = best;
            for (Point x : A)
                for (Point y : B)
                    if (a.space.dist(x, y) < now) {
                        now = a.space.dist(x, y);
                        next = {std::min(x, y), std::max(x, y)};
                    }
            if (now == best && round > 0) break;
            best = now;
            close = next;
        }
        o.points = std::max(o.points, a.size());
        mins.push_back(best);
    }
    o.set = DistanceSet(mins);
    if (!is_universal(o.set).universal) throw std::logic_error("quotient distance set is not universal");
    return o;
}

DistanceSet quotient_distance_set(const DistanceSet& d) { return quotient_distance_oracle(d).set; }

std::vector<Point> lift_copy(const Space& s, const Partition& p, const std::vector<int>& q_copy, int depth) {
    auto q = quotient_space(s, p);
    if (!copy_check(q.space, q_copy, depth)) throw PreconditionError("quotient copy check failed");
    std::vector<Point> out;
    for (int c : q_copy) {
        const auto& cl = p.classes.at(static_cast<std::size_t>(c));
        out.insert(out.end(), cl.begin(), cl.end());
    }
    return out;
}

}  // namespace urforge
