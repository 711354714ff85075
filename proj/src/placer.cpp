#include "urforge/placer.hpp"

#include <algorithm>

namespace urforge {

std::optional<Point> GrowingAmbient::grow(const TypeFn& t, const std::vector<int>* prefer) {
    if (added_ >= max_) return std::nullopt;
    Point p = urforge::grow(a_, t, prefer);
    ++added_;
    return p;
}

Embedding Placement::embedding() const {
    Embedding e;
    e.source = sources;
    e.target = image;
    return e;
}

namespace {

struct Marks {
    std::vector<char> v;
    bool get(Point p) const { return static_cast<std::size_t>(p) < v.size() && v[static_cast<std::size_t>(p)]; }
    void set(Point p, bool on) {
        if (static_cast<std::size_t>(p) >= v.size()) v.resize(static_cast<std::size_t>(p) + 1, 0);
        v[static_cast<std::size_t>(p)] = on;
    }
};

}  // namespace

Placement place(Ambient& amb, const PlacementSpec& spec) {
    const Space& src = *spec.source;
    Placement out;
    out.group_colour = spec.group_colour;
    int ngroups = 0;
    for (auto& s : spec.slots) ngroups = std::max(ngroups, s.group + 1);
    if (static_cast<int>(out.group_colour.size()) < ngroups) out.group_colour.resize(static_cast<std::size_t>(ngroups), -1);
    auto pref = [&](int g) {
        return static_cast<std::size_t>(g) < spec.group_pref.size() ? spec.group_pref[static_cast<std::size_t>(g)] : 0;
    };

    Marks used, avoid, reserved;
    for (Point p : spec.avoid) avoid.set(p, true);
    if (spec.identity_first)
        for (auto& s : spec.slots) reserved.set(s.source, true);

    std::vector<std::pair<Point, Point>> placed;  // (source, image)
    const int start_size = amb.space().size();
    (void)start_size;

    for (const Slot& slot : spec.slots) {
        const Point u = slot.source;
        std::vector<std::pair<Point, int>> fe;
        fe.reserve(placed.size() + slot.extra.size());
        for (auto& [y, img] : placed) fe.emplace_back(img, src.idx(u, y));
        for (auto& pv : slot.extra.entries()) fe.push_back(pv);
        std::sort(fe.begin(), fe.end());
        bool clash = false;
        for (std::size_t i = 1; i < fe.size(); ++i)
            if (fe[i].first == fe[i - 1].first) clash = true;
        if (clash) {
            out.failure = "required distances name an image point twice";
            return out;
        }
        TypeFn f(std::move(fe));

        std::vector<int> options;
        if (slot.group < 0) {
            options.push_back(-1);
        } else if (out.group_colour[static_cast<std::size_t>(slot.group)] >= 0) {
            options.push_back(out.group_colour[static_cast<std::size_t>(slot.group)]);
        } else {
            options.push_back(pref(slot.group));
            if (spec.allow_switch && pref(slot.group) >= 0) options.push_back(1 - pref(slot.group));
        }

        auto colour_ok = [&](Point p, int c) {
            if (spec.forbid && spec.forbid(p)) return false;
            return c < 0 || amb.colour(p) == c;
        };
        std::optional<Point> chosen;
        int chosen_colour = -1;
        bool budget_out = false;

        if (slot.target) {
            Point p = *slot.target;
            if (p < amb.space().size() && !used.get(p) && realizes(amb.space(), p, f)) {
                for (int c : options)
                    if (colour_ok(p, c)) {
                        chosen = p;
                        chosen_colour = c == any_colour ? amb.colour(p) : c;
                        break;
                    }
            }
            if (!chosen) {
                out.failure = "forced image does not satisfy its constraints";
                out.blocking = f;
                return out;
            }
        }

        for (std::size_t oi = 0; !chosen && oi < options.size() && !budget_out; ++oi) {
            int c = options[oi];
            const Space& s = amb.space();
            if (spec.identity_first && u < s.size() && !used.get(u) && !avoid.get(u) && realizes(s, u, f) &&
                colour_ok(u, c)) {
                chosen = u;
            }
            if (!chosen && spec.scan_existing) {
                for (Point p = 0; p < s.size(); ++p) {
                    if (used.get(p) || avoid.get(p) || reserved.get(p)) continue;
                    if (realizes(s, p, f) && colour_ok(p, c)) {
                        chosen = p;
                        break;
                    }
                }
            }
            if (!chosen) {
                TypeFn g = f;
                if (spec.grow_extra) {
                    const TypeFn extra = spec.grow_extra(f);
                    for (auto& [p, v] : extra.entries()) g.set(p, v);
                }
                std::vector<int> prefer;
                if (spec.identity_first) {
                    prefer.assign(static_cast<std::size_t>(amb.space().size()), -1);
                    for (auto& sl : spec.slots)
                        if (reserved.get(sl.source) && sl.source != u && sl.source < amb.space().size())
                            prefer[static_cast<std::size_t>(sl.source)] = src.idx(u, sl.source);
                }
                int tries = (c == -1 && !spec.forbid) ? 1 : spec.attempts;
                for (int k = 0; k < tries && !chosen; ++k) {
                    if (!prefer.empty()) prefer.resize(static_cast<std::size_t>(amb.space().size()), -1);
                    auto p = amb.grow(g, prefer.empty() ? nullptr : &prefer);
                    if (!p) {
                        budget_out = true;
                        break;
                    }
                    if (colour_ok(*p, c)) chosen = *p;
                }
            }
            if (chosen) chosen_colour = c == any_colour ? amb.colour(*chosen) : c;
        }
        if (!chosen) {
            out.failure = budget_out ? "growth budget exhausted" : "no realization of the required colour";
            out.blocking = f;
            out.grown = amb.grown();
            return out;
        }
        if (slot.group >= 0 && chosen_colour >= 0) out.group_colour[static_cast<std::size_t>(slot.group)] = chosen_colour;
        used.set(*chosen, true);
        reserved.set(u, false);
        placed.emplace_back(u, *chosen);
        out.sources.push_back(u);
        out.image.push_back(*chosen);
    }
    out.ok = true;
    out.grown = amb.grown();
    return out;
}

}  // namespace urforge
