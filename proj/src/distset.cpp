#include "urforge/distset.hpp"

#include <algorithm>

namespace urforge {

DistanceSet::DistanceSet(std::vector<Dist> members) : v_(std::move(members)) {
    v_.push_back(Dist(0));
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    if (v_.size() > max_size) throw PreconditionError("distance set has more than 64 members");
}

Dist DistanceSet::min_positive() const {
    if (v_.size() < 2) throw PreconditionError("no positive distances");
    return v_[1];
}

std::optional<int> DistanceSet::index_of(Dist d) const {
    auto it = std::lower_bound(v_.begin(), v_.end(), d);
    if (it == v_.end() || *it != d) return std::nullopt;
    return static_cast<int>(it - v_.begin());
}

int DistanceSet::lower_index(Dist d) const {
    return static_cast<int>(std::lower_bound(v_.begin(), v_.end(), d) - v_.begin());
}

std::string DistanceSet::str() const {
    std::string s;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ',';
        s += v_[i].str();
    }
    return s;
}

Canonical canonicalize(const DistanceSet& d) {
    if (d.size() < 2) throw PreconditionError("no positive distances");
    Dist scale = d.min_positive();
    std::vector<Dist> out;
    out.reserve(d.size());
    for (const auto& x : d.members()) out.push_back(x / scale);
    return {DistanceSet(std::move(out)), scale};
}

Dist predecessor(const DistanceSet& d, Dist r) {
    if (r.is_zero()) throw PreconditionError("predecessor requires r > 0");
    int i = d.lower_index(r);
    return d[static_cast<std::size_t>(i - 1)];
}

Dist successor(const DistanceSet& d, Dist r) {
    if (r > d.max()) throw PreconditionError("successor requires r <= max D");
    if (r == d.max()) return r;
    auto it = std::upper_bound(d.members().begin(), d.members().end(), r);
    return *it;
}

bool is_jump(const DistanceSet& d, Dist r) {
    if (!d.contains(r) || r.is_zero()) throw PreconditionError("is_jump requires a positive member of D");
    return successor(d, r) > r + r;
}

UniversalityResult is_universal(const DistanceSet& d) {
    const int n = static_cast<int>(d.size());
    TriangleTable tt(d);
    // Triangles (a,b,c) with δ(b,c)=x, listed as (δ(a,b), δ(a,c)) and ordered
    // by (δ(a,c), δ(a,b)); pairs are scanned in that order per x.
    for (int x = 0; x < n; ++x) {
        std::vector<std::pair<int, int>> tri;  // (y, z) = (δ(a,b), δ(a,c))
        for (int z = 1; z < n; ++z)
            for (int y = 1; y < n; ++y) {
                if (x == 0 ? y == z : tt.ok(y, z, x)) tri.emplace_back(y, z);
            }
        for (auto [y0, z0] : tri)
            for (auto [y1, z1] : tri) {
                std::uint64_t m = tt.allowed(y0, y1) & tt.allowed(z0, z1) & tt.positive();
                if (m == 0) {
                    UniversalityWitness w{d[x], {d[y0], d[z0]}, {d[y1], d[z1]}, {}};
                    return {false, w};
                }
            }
    }
    return {true, std::nullopt};
}

std::vector<Block> blocks(const DistanceSet& d) {
    if (!is_universal(d).universal) throw PreconditionError("blocks undefined for non-universal sets");
    std::vector<Block> out;
    std::size_t i = 1;
    while (i < d.size()) {
        Block b{d[i]};
        Dist b0 = d[i];
        if (!(b0 > predecessor(d, b0) + predecessor(d, b0)))
            throw PreconditionError("blocks undefined for non-universal sets");
        ++i;
        while (i < d.size() && d[i] <= b.back() + b0) b.push_back(d[i++]);
        out.push_back(std::move(b));
    }
    return out;
}

TriangleTable::TriangleTable(const DistanceSet& d) : n_(d.size()), pos_(0), t_(n_ * n_, 0) {
    for (std::size_t k = 1; k < n_; ++k) pos_ |= std::uint64_t{1} << k;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            std::uint64_t m = 0;
            Dist lo = absdiff(d[i], d[j]), hi = d[i] + d[j];
            for (std::size_t k = 0; k < n_; ++k)
                if (lo <= d[k] && d[k] <= hi) m |= std::uint64_t{1} << k;
            t_[i * n_ + j] = m;
        }
}

}  // namespace urforge
