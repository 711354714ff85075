#include "urforge/builder.hpp"

#include "urforge/placer.hpp"
#include "urforge/rng.hpp"

#include <algorithm>

namespace urforge {

Point Embedding::operator()(Point p) const {
    for (std::size_t i = 0; i < source.size(); ++i)
        if (source[i] == p) return target[i];
    throw PreconditionError("embedding undefined at point " + std::to_string(p));
}

bool Embedding::defined(Point p) const { return std::find(source.begin(), source.end(), p) != source.end(); }

bool is_embedding(const Space& src, const Space& tgt, const Embedding& e) {
    if (e.source.size() != e.target.size()) return false;
    std::vector<Point> t = e.target;
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) return false;
    std::vector<Point> s = e.source;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.source[i] < 0 || e.source[i] >= src.size() || e.target[i] < 0 || e.target[i] >= tgt.size()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (src.dist(e.source[i], e.source[j]) != tgt.dist(e.target[i], e.target[j])) return false;
    }
    return true;
}

Point grow(Approximant& a, const TypeFn& t, const std::vector<int>* prefer) {
    Completion c;
    c.mode = Completion::Mode::random;
    c.seed = mix64(a.seed ^ mix64(static_cast<std::uint64_t>(a.space.size()) + 0x2545f491u));
    c.prefer = prefer;
    auto row = complete(a.space, t, c);
    if (!row) throw PreconditionError("no metric realization for the requested type function");
    return a.space.append(std::move(*row));
}

namespace {

// Depth-first walk over the Katětov functions on `dom` (values in lexicographic
// order). `visit(fn, candidates)` is called at every leaf with the points
// outside dom realizing fn; it returns false to stop.
template <class Visit>
void walk(const Space& s, const std::vector<Point>& dom, Visit&& visit) {
    const int nd = static_cast<int>(s.D().size());
    const auto& tt = s.table();
    std::vector<Point> outside;
    {
        std::vector<char> in(static_cast<std::size_t>(s.size()), 0);
        for (Point p : dom) in[static_cast<std::size_t>(p)] = 1;
        for (Point p = 0; p < s.size(); ++p)
            if (!in[static_cast<std::size_t>(p)]) outside.push_back(p);
    }
    std::vector<int> val(dom.size(), 0);
    std::vector<std::vector<Point>> cand(dom.size() + 1);
    cand[0] = outside;
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (stop) return;
        if (i == dom.size()) {
            std::vector<std::pair<Point, int>> e;
            for (std::size_t k = 0; k < dom.size(); ++k) e.emplace_back(dom[k], val[k]);
            if (!visit(TypeFn(std::move(e)), cand[i])) stop = true;
            return;
        }
        for (int v = 1; v < nd && !stop; ++v) {
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) ok = tt.ok(v, val[k], s.idx(dom[i], dom[k]));
            if (!ok) continue;
            val[i] = v;
            auto& next = cand[i + 1];
            next.clear();
            for (Point y : cand[i])
                if (s.idx(y, dom[i]) == v) next.push_back(y);
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

std::vector<Point> prefix(int k) {
    std::vector<Point> p(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

}  // namespace

std::vector<TypeFn> unrealized(const Space& s, const std::vector<Point>& dom, std::size_t limit) {
    std::vector<TypeFn> out;
    if (limit == 0) return out;
    walk(s, dom, [&](TypeFn f, const std::vector<Point>& c) {
        if (c.empty()) out.push_back(std::move(f));
        return out.size() < limit;
    });
    return out;
}

bool saturated_at(const Space& s, int k) {
    if (k > s.size()) return false;
    if (k == 0) return s.size() > 0;
    return unrealized(s, prefix(k), 1).empty();
}

Saturation saturation_level(const Space& s) {
    Saturation out{0, {}};
    if (s.size() == 0) return out;
    int k = 0;
    while (k + 1 <= s.size() && saturated_at(s, k + 1)) ++k;
    out.level = k;
    out.certificate.level = k;
    for (int j = 1; j <= k; ++j)
        walk(s, prefix(j), [&](TypeFn f, const std::vector<Point>& c) {
            out.certificate.checks.push_back({j, std::move(f), c.front()});
            return true;
        });
    return out;
}

Approximant build(const DistanceSet& d, int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("build requires n >= 1");
    if (!is_universal(d).universal) throw NonUniversalError("distance set " + d.str() + " is not universal");
    Approximant a{Space(d), seed, 1};
    a.space.append({});
    build_more(a, n);
    return a;
}

void build_more(Approximant& a, int n) {
    while (a.size() < n) {
        int k = a.level;
        auto todo = unrealized(a.space, prefix(k), static_cast<std::size_t>(n - a.size()));
        if (todo.empty()) {
            ++a.level;
            continue;
        }
        for (auto& t : todo) grow(a, t);
    }
}

int saturate_over(Approximant& a, const std::vector<Point>& dom, int max_added) {
    auto todo = unrealized(a.space, dom);
    if (static_cast<int>(todo.size()) > max_added)
        throw BudgetExhausted("saturation needs " + std::to_string(todo.size()) + " points, budget " +
                                  std::to_string(max_added),
                              todo.front());
    for (auto& t : todo) grow(a, t);
    return static_cast<int>(todo.size());
}

Approximant saturate(Approximant a, int k, int max_added) {
    if (!is_universal(a.D()).universal) throw NonUniversalError("distance set " + a.D().str() + " is not universal");
    int start = a.size();
    if (a.size() < k) build_more(a, k);
    if (a.size() - start > max_added) throw BudgetExhausted("saturation budget exhausted");
    saturate_over(a, prefix(k), max_added - (a.size() - start));
    a.level = std::max(a.level, k + 1);
    return a;
}

Embedding extend_isometry(const Approximant& source, Approximant& target, const Embedding& partial, int upto,
                          int max_added) {
    if (!is_embedding(source.space, target.space, partial)) throw PreconditionError("partial map is not an isometry");
    if (upto > source.size()) throw PreconditionError("upto exceeds the source size");
    PlacementSpec spec;
    spec.source = &source.space;
    for (std::size_t i = 0; i < partial.size(); ++i) {
        Slot s;
        s.source = partial.source[i];
        s.target = partial.target[i];
        spec.slots.push_back(s);
    }
    for (Point p = 0; p < upto; ++p)
        if (!partial.defined(p)) spec.slots.push_back(Slot{p, std::nullopt, {}, -1});
    GrowingAmbient amb(target, max_added);
    auto r = place(amb, spec);
    if (!r.ok) throw BudgetExhausted("extend_isometry: " + r.failure, r.blocking);
    return r.embedding();
}

Embedding avoid(Approximant& a, const std::vector<Point>& fix, const std::vector<Point>& B, int upto, int max_added) {
    for (Point p : fix)
        if (std::find(B.begin(), B.end(), p) != B.end()) throw PreconditionError("avoid: A and B must be disjoint");
    Space source = a.space;
    PlacementSpec spec;
    spec.source = &source;
    spec.identity_first = true;
    spec.avoid = B;
    for (Point p : fix) spec.slots.push_back(Slot{p, p, {}, -1});
    for (Point p = 0; p < upto; ++p)
        if (std::find(fix.begin(), fix.end(), p) == fix.end()) spec.slots.push_back(Slot{p, std::nullopt, {}, -1});
    GrowingAmbient amb(a, max_added);
    auto r = place(amb, spec);
    if (!r.ok) throw BudgetExhausted("avoid: " + r.failure, r.blocking);
    return r.embedding();
}

bool copy_check(const Space& s, const std::vector<Point>& C, int depth) { return copy_check(s, C, depth, s.D()); }

bool copy_check(const Space& s, const std::vector<Point>& C, int depth, const DistanceSet& against) {
    std::vector<int> values;
    for (std::size_t i = 1; i < s.D().size(); ++i)
        if (against.contains(s.D()[i])) values.push_back(static_cast<int>(i));
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(std::max(depth, 0)), C.size());
    const auto& tt = s.table();
    std::vector<Point> dom(C.begin(), C.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<int> val(k, 0);
    // Each node is a Katětov function on a subset of dom; cand holds the
    // points of C realizing it so far (domain points excluded).
    auto rec = [&](auto&& self, std::size_t i, std::vector<int>& assigned, const std::vector<Point>& cand) -> bool {
        if (cand.empty()) return false;
        if (i == k) return true;
        if (!self(self, i + 1, assigned, cand)) return false;
        for (int v : values) {
            bool ok = true;
            for (int j : assigned) ok = ok && tt.ok(v, val[static_cast<std::size_t>(j)], s.idx(dom[i], dom[static_cast<std::size_t>(j)]));
            if (!ok) continue;
            val[i] = v;
            std::vector<Point> next;
            for (Point y : cand)
                if (y != dom[i] && s.idx(y, dom[i]) == v) next.push_back(y);
            assigned.push_back(static_cast<int>(i));
            bool good = self(self, i + 1, assigned, next);
            assigned.pop_back();
            if (!good) return false;
        }
        return true;
    };
    std::vector<int> assigned;
    return rec(rec, 0, assigned, C);
}

}  // namespace urforge
