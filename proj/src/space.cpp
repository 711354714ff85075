#include "urforge/space.hpp"

#include "urforge/rng.hpp"

#include <algorithm>
#include <bit>

namespace urforge {

Space::Space(DistanceSet d) : meta_(std::make_shared<const Meta>(std::move(d))) {}

Space Space::from_matrix(DistanceSet d, const std::vector<std::vector<Dist>>& m) {
    Space s(std::move(d));
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw PreconditionError("distance matrix is not square");
        if (!m[i][i].is_zero()) throw PreconditionError("nonzero diagonal entry");
        std::vector<std::uint8_t> row;
        for (std::size_t j = 0; j < i; ++j) {
            if (m[i][j] != m[j][i]) throw PreconditionError("distance matrix is not symmetric");
            auto k = s.D().index_of(m[i][j]);
            if (!k) throw PreconditionError("distance " + m[i][j].str() + " is not in D");
            row.push_back(static_cast<std::uint8_t>(*k));
        }
        s.append(std::move(row));
    }
    return s;
}

Point Space::append(std::vector<std::uint8_t> to_prev) {
    if (to_prev.size() != rows_.size()) throw PreconditionError("row length does not match point count");
    for (auto v : to_prev)
        if (v == 0 || v >= D().size()) throw PreconditionError("distance to an existing point must be a positive member of D");
    rows_.push_back(std::move(to_prev));
    return size() - 1;
}

TypeFn::TypeFn(std::vector<std::pair<Point, int>> entries) : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end());
    for (std::size_t i = 1; i < e_.size(); ++i)
        if (e_[i].first == e_[i - 1].first) throw PreconditionError("type function has a repeated point");
    for (auto& [p, v] : e_)
        if (v <= 0) throw PreconditionError("type function values must be positive");
}

TypeFn TypeFn::from_values(const DistanceSet& d, const std::vector<std::pair<Point, Dist>>& entries) {
    std::vector<std::pair<Point, int>> e;
    for (auto& [p, v] : entries) {
        auto k = d.index_of(v);
        if (!k || *k == 0) throw PreconditionError("value " + v.str() + " is not a positive member of D");
        e.emplace_back(p, *k);
    }
    return TypeFn(std::move(e));
}

std::vector<Point> TypeFn::domain() const {
    std::vector<Point> out;
    out.reserve(e_.size());
    for (auto& [p, v] : e_) out.push_back(p);
    return out;
}

std::optional<int> TypeFn::at(Point p) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), std::pair<Point, int>{p, 0});
    if (it == e_.end() || it->first != p) return std::nullopt;
    return it->second;
}

void TypeFn::set(Point p, int value_index) {
    if (value_index <= 0) throw PreconditionError("type function values must be positive");
    auto it = std::lower_bound(e_.begin(), e_.end(), std::pair<Point, int>{p, 0});
    if (it != e_.end() && it->first == p)
        it->second = value_index;
    else
        e_.insert(it, {p, value_index});
}

TypeFn TypeFn::restrict_to(const std::vector<Point>& pts) const {
    std::vector<std::pair<Point, int>> e;
    for (auto& pv : e_)
        if (std::find(pts.begin(), pts.end(), pv.first) != pts.end()) e.push_back(pv);
    return TypeFn(std::move(e));
}

bool TypeFn::extends(const TypeFn& smaller) const {
    for (auto& [p, v] : smaller.e_) {
        auto w = at(p);
        if (!w || *w != v) return false;
    }
    return true;
}

TypeFn TypeFn::mapped(const std::vector<Point>& f) const {
    std::vector<std::pair<Point, int>> e;
    for (auto& [p, v] : e_) e.emplace_back(f.at(static_cast<std::size_t>(p)), v);
    return TypeFn(std::move(e));
}

bool is_metric(const Space& s) {
    const int n = s.size();
    const auto& tt = s.table();
    for (int k = 2; k < n; ++k) {
        const auto& rk = s.row(k);
        for (int j = 1; j < k; ++j) {
            const auto& rj = s.row(j);
            const int dkj = rk[static_cast<std::size_t>(j)];
            for (int i = 0; i < j; ++i)
                if (!tt.ok(rk[static_cast<std::size_t>(i)], dkj, rj[static_cast<std::size_t>(i)])) return false;
        }
    }
    return true;
}

Restriction restrict(const Space& s, const std::vector<Point>& pts) {
    Restriction r{Space(s.D()), pts};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] < 0 || pts[i] >= s.size()) throw PreconditionError("restrict: point out of range");
        std::vector<std::uint8_t> row;
        row.reserve(i);
        for (std::size_t j = 0; j < i; ++j) {
            if (pts[i] == pts[j]) throw PreconditionError("restrict: repeated point");
            row.push_back(static_cast<std::uint8_t>(s.idx(pts[i], pts[j])));
        }
        r.space.append(std::move(row));
    }
    return r;
}

bool is_katetov(const TypeFn& t, const Space& s) {
    const auto& e = t.entries();
    const auto& tt = s.table();
    for (auto& [p, v] : e) {
        if (p < 0 || p >= s.size()) return false;
        if (v <= 0 || v >= static_cast<int>(s.D().size())) return false;
    }
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!tt.ok(e[i].second, e[j].second, s.idx(e[i].first, e[j].first))) return false;
    return true;
}

int rank_index(const TypeFn& t) {
    if (t.empty()) throw PreconditionError("rank of an empty type function is undefined");
    int r = t.entries().front().second;
    for (auto& [p, v] : t.entries()) r = std::min(r, v);
    return r;
}

Dist rank(const TypeFn& t, const DistanceSet& d) { return d[static_cast<std::size_t>(rank_index(t))]; }

bool realizes(const Space& s, Point y, const TypeFn& t) {
    for (auto& [p, v] : t.entries())
        if (p == y || s.idx(y, p) != v) return false;
    return true;
}

std::vector<Point> orbit(const TypeFn& t, const Space& s) {
    std::vector<Point> out;
    for (Point y = 0; y < s.size(); ++y)
        if (realizes(s, y, t)) out.push_back(y);
    return out;
}

std::vector<TypeFn> enumerate_katetov(const Space& s, const std::vector<Point>& a) {
    std::vector<Point> pts = a;
    std::sort(pts.begin(), pts.end());
    const int nd = static_cast<int>(s.D().size());
    const auto& tt = s.table();
    std::vector<TypeFn> out;
    std::vector<int> val(pts.size(), 0);
    // Depth-first in lexicographic order of the value vector.
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == pts.size()) {
            std::vector<std::pair<Point, int>> e;
            for (std::size_t k = 0; k < pts.size(); ++k) e.emplace_back(pts[k], val[k]);
            out.emplace_back(std::move(e));
            return;
        }
        for (int v = 1; v < nd; ++v) {
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) ok = tt.ok(v, val[k], s.idx(pts[i], pts[k]));
            if (!ok) continue;
            val[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

TypeFn profile(const Space& s, Point y, const std::vector<Point>& over) {
    std::vector<std::pair<Point, int>> e;
    for (Point x : over)
        if (x != y) e.emplace_back(x, s.idx(y, x));
    return TypeFn(std::move(e));
}

std::optional<std::vector<std::uint8_t>> complete(const Space& s, const TypeFn& t, const Completion& c) {
    const int n = s.size();
    const auto& tt = s.table();
    std::vector<int> val(static_cast<std::size_t>(n), -1);
    for (auto& [p, v] : t.entries()) {
        if (p < 0 || p >= n)
            throw PreconditionError("type function mentions point " + std::to_string(p) + " outside a space of " +
                                    std::to_string(n));
        val[static_cast<std::size_t>(p)] = v;
    }
    if (!is_katetov(t, s)) return std::nullopt;
    const auto dom = t.domain();
    std::vector<Point> free;
    for (Point p = 0; p < n; ++p)
        if (val[static_cast<std::size_t>(p)] < 0) free.push_back(p);

    Rng rng(c.seed);
    auto choose = [&](Point p, std::uint64_t mask) {
        if (c.prefer) {
            int w = (*c.prefer)[static_cast<std::size_t>(p)];
            if (w > 0 && ((mask >> w) & 1u)) return w;
        }
        if (c.mode == Completion::Mode::random) return rng.pick_bit(mask);
        return std::countr_zero(mask);
    };
    // Admissible values for free point p given everything assigned before it:
    // all points with smaller id, and the domain points with larger id.
    auto admissible = [&](Point p) {
        std::uint64_t m = tt.positive();
        const auto& row = s.row(p);
        for (Point q = 0; q < p && m; ++q) m &= tt.allowed(val[static_cast<std::size_t>(q)], row[static_cast<std::size_t>(q)]);
        for (Point q : dom)
            if (q > p) m &= tt.allowed(val[static_cast<std::size_t>(q)], s.idx(p, q));
        return m;
    };

    std::vector<std::uint64_t> remaining(free.size(), 0);
    std::size_t pos = 0;
    bool fresh = true;
    while (pos < free.size()) {
        Point p = free[pos];
        if (fresh) remaining[pos] = admissible(p);
        if (remaining[pos] == 0) {
            val[static_cast<std::size_t>(p)] = -1;
            if (pos == 0) return std::nullopt;
            --pos;
            fresh = false;
            continue;
        }
        int v = choose(p, remaining[pos]);
        remaining[pos] &= ~(std::uint64_t{1} << v);
        val[static_cast<std::size_t>(p)] = v;
        ++pos;
        fresh = true;
    }
    std::vector<std::uint8_t> row(static_cast<std::size_t>(n));
    for (Point p = 0; p < n; ++p) row[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(val[static_cast<std::size_t>(p)]);
    return row;
}

Extension extend(const Space& s, const TypeFn& t) {
    if (!is_katetov(t, s)) throw PreconditionError("extend requires a Katětov function");
    auto row = complete(s, t);
    if (!row) throw PreconditionError("no admissible completion exists");
    Extension e{s, 0};
    e.point = e.space.append(std::move(*row));
    return e;
}

}  // namespace urforge
