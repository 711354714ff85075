#include "urforge/engine.hpp"

#include "urforge/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace urforge {

using nlohmann::json;

namespace {

std::vector<Point> prefix(int n) {
    std::vector<Point> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

void ensure_size(Approximant& a, int n, GameBudget& b) {
    if (n <= a.size()) return;
    if (n - a.size() > b.remaining())
        throw BudgetExhausted("a horizon of " + std::to_string(n) + " points exceeds the point budget");
    const int before = a.size();
    build_more(a, n);
    b.used += a.size() - before;
}

// Realizes every Katětov function over each pair of class representatives in
// the first n points. Uniform growth mostly fills the large classes; this
// gives every class shell points at each cross distance.
void enrich_classes(Approximant& a, Dist m, int n, GameBudget& b) {
    const auto part = classes(restrict(a.space, prefix(n)).space, m);
    for (std::size_t i = 0; i < part.classes.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<Point> dom{part.classes[j].front(), part.classes[i].front()};
            const int before = a.size();
            try {
                saturate_over(a, dom, b.remaining());
            } catch (const BudgetExhausted&) {
                b.used += a.size() - before;
                throw;
            }
            b.used += a.size() - before;
        }
}

Placement run(Approximant& a, Colouring& chi, GameBudget& b, PlacementSpec& spec) {
    GrowingAmbient amb(a, b.remaining(), &chi);
    spec.attempts = b.attempts;
    auto r = place(amb, spec);
    b.used += amb.grown();
    return r;
}

std::vector<Point> in_source_order(const Placement& pl, int horizon) {
    std::vector<Point> img(static_cast<std::size_t>(horizon), -1);
    for (std::size_t i = 0; i < pl.sources.size(); ++i) img[static_cast<std::size_t>(pl.sources[i])] = pl.image[i];
    return img;
}

void check_horizon(const Approximant& a, int horizon) {
    if (horizon < 1 || horizon > a.size()) throw PreconditionError("horizon outside the space");
}

// Realizers of t, grown up to probe_samples of them; nullopt when the budget runs out.
std::optional<std::vector<Point>> sample(Approximant& a, const TypeFn& t, GameBudget& b) {
    auto orb = orbit(t, a.space);
    while (static_cast<int>(orb.size()) < b.probe_samples) {
        if (b.remaining() == 0) return std::nullopt;
        orb.push_back(grow(a, t));
        ++b.used;
    }
    return orb;
}

// Places the first `horizon` points fixing dom(q), with the q-orbit in `colour`.
Placement place_orbit(Approximant& a, Colouring& chi, GameBudget& b, const Space& src, int horizon, const TypeFn& q,
                      int colour) {
    PlacementSpec spec;
    spec.source = &src;
    spec.identity_first = true;
    spec.allow_switch = false;
    spec.group_colour = {colour};
    for (Point x : q.domain()) spec.slots.push_back(Slot{x, x, {}, -1});
    for (Point y = 0; y < horizon; ++y)
        if (!q.contains(y)) spec.slots.push_back(Slot{y, std::nullopt, {}, realizes(src, y, q) ? 0 : -1});
    return run(a, chi, b, spec);
}

json budget_json(const GameBudget& b) {
    return {{"max_points", b.max_points}, {"used", b.used}, {"attempts", b.attempts},
            {"probe_candidates", b.probe_candidates}, {"probe_samples", b.probe_samples}};
}

Certificate orbit_certificate(const std::string& kind, Approximant& a, Colouring& chi, const Space& src,
                              const Placement& pl, int horizon, const TypeFn& q, int colour, json info,
                              const GameBudget& b) {
    CertificateWriter w(kind, a.space, chi);
    auto img = in_source_order(pl, horizon);
    std::vector<Point> X;
    for (Point y = 0; y < horizon; ++y)
        if (!q.contains(y) && realizes(src, y, q)) X.push_back(img[static_cast<std::size_t>(y)]);
    w.embedding(src, pl.sources, pl.image, q.domain());
    w.set("image", img);
    w.set("X", X);
    w.check({{"type", "orbit"}, {"set", "X"}, {"fn", w.fn(q)}});
    w.check({{"type", "orbit_colour"}, {"within", "image"}, {"fn", w.fn(q)}, {"colour", colour}});
    w.check({{"type", "monochromatic"}, {"set", "X"}, {"colour", colour}});
    info["horizon"] = horizon;
    info["budget"] = budget_json(b);
    for (auto& [k, v] : info.items()) w.info(k, v);
    return w.finish();
}

}  // namespace

OrbitColouring monochromatize_rank1(Approximant& a, Colouring& chi, const TypeFn& p, int horizon, GameBudget& b) {
    const auto& d = a.D();
    if (p.empty() || rank(p, d) != d.min_positive()) throw PreconditionError("p must have rank min(D\\{0})");
    auto dom = p.domain();
    for (std::size_t i = 0; i < dom.size(); ++i)
        if (dom[i] != static_cast<Point>(i)) throw PreconditionError("dom(p) must be a prefix");
    check_horizon(a, horizon);
    if (horizon < static_cast<int>(dom.size())) throw PreconditionError("horizon shorter than dom(p)");
    if (!is_katetov(p, a.space)) throw PreconditionError("p is not a Katětov function");
    const Space src = a.space;

    // Case 1: an extension s of p whose realizers all have colour 0.
    std::optional<TypeFn> s;
    int probes = 0;
    bool budget_out = false;
    for (Point x = static_cast<Point>(dom.size()); x < horizon && !s && !budget_out && probes < b.probe_candidates; ++x)
        for (int v = 1; v < static_cast<int>(d.size()) && !s && probes < b.probe_candidates; ++v) {
            TypeFn t = p;
            t.set(x, v);
            if (!is_katetov(t, a.space)) continue;
            ++probes;
            auto orb = sample(a, t, b);
            if (!orb) {
                budget_out = true;
                break;
            }
            if (!orb->empty() && std::all_of(orb->begin(), orb->end(), [&](Point y) { return chi(a.space, y) == 0; })) s = t;
        }

    OrbitColouring out;
    out.colour = s ? 0 : 1;
    out.branch = s ? "extension" : "greedy";
    auto pl = place_orbit(a, chi, b, src, horizon, p, out.colour);
    if (!pl.ok) {
        out.colour = 1 - out.colour;
        out.branch += "+fallback";
        pl = place_orbit(a, chi, b, src, horizon, p, out.colour);
    }
    if (!pl.ok) throw BudgetExhausted("monochromatize_rank1: " + pl.failure, pl.blocking);
    out.embedding = pl.embedding();
    json info{{"branch", out.branch}, {"probes", probes}};
    if (s) {
        json ext = json::array();
        for (auto& [x, v] : s->entries()) ext.push_back(json::array({x, d[static_cast<std::size_t>(v)].str()}));
        info["extension"] = ext;
    }
    out.certificate = orbit_certificate("mono-orbit", a, chi, src, pl, horizon, p, out.colour, info, b);
    return out;
}

UniformEnumeration uniformize(Approximant& a, Colouring& chi, Dist r, int from, int horizon, GameBudget& b) {
    const auto& d = a.D();
    const auto first = blocks(d).front();
    if (std::find(first.begin(), first.end(), r) == first.end()) throw PreconditionError("r must lie in the first block");
    check_horizon(a, horizon);
    if (from < 0 || from > horizon) throw PreconditionError("from outside the horizon");
    const Space src = a.space;
    PlacementSpec spec;
    spec.source = &src;
    spec.identity_first = true;
    std::map<std::pair<int, TypeFn>, int> roots;
    for (Point y = 0; y < horizon; ++y) {
        if (y < from) {
            spec.slots.push_back(Slot{y, y, {}, -1});
            continue;
        }
        // Group by the function over the shortest prefix beyond `from` on
        // which y already has rank <= r; only rank exactly r matters.
        int group = -1;
        Dist low = d.max();
        for (Point x = 0; x < y; ++x) {
            low = std::min(low, src.dist(y, x));
            const int k = x + 1;
            if (k <= from || low > r) continue;
            if (low == r) {
                auto key = std::make_pair(k, profile(src, y, prefix(k)));
                group = roots.emplace(key, static_cast<int>(roots.size())).first->second;
            }
            break;
        }
        spec.slots.push_back(Slot{y, std::nullopt, {}, group});
    }
    spec.group_pref.assign(roots.size(), any_colour);
    auto pl = run(a, chi, b, spec);
    if (!pl.ok) throw BudgetExhausted("uniformize: " + pl.failure, pl.blocking);

    UniformEnumeration out;
    out.embedding = pl.embedding();
    out.enumeration = in_source_order(pl, horizon);
    CertificateWriter w("uniform-enum", a.space, chi);
    w.embedding(src, pl.sources, pl.image, prefix(from));
    w.set("E", out.enumeration);
    w.check({{"type", "uniform"}, {"set", "E"}, {"from", from}, {"rank", r.str()}});
    w.info("groups", roots.size());
    w.info("horizon", horizon);
    w.info("budget", budget_json(b));
    out.certificate = w.finish();
    return out;
}

Probe extendibility_probe(Approximant& a, Colouring& chi, const TypeFn& p, int colour, GameBudget& b) {
    const auto& d = a.D();
    if (p.empty() || !is_katetov(p, a.space)) throw PreconditionError("p must be a nonempty Katětov function");
    const Dist r = rank(p, d);
    for (const auto& bl : blocks(d))
        if (std::find(bl.begin(), bl.end(), r) != bl.end() && bl.front() == r)
            throw PreconditionError("rank(p) must exceed the least member of its block");
    const int rm = *d.index_of(predecessor(d, r));
    Probe out;
    for (Point x = 0; x < a.size() && out.tried < b.probe_candidates; ++x) {
        if (p.contains(x)) continue;
        TypeFn g = p;
        g.set(x, rm);
        if (!is_katetov(g, a.space)) continue;
        ++out.tried;
        auto s = sample(a, g, b);
        if (!s) {
            out.verdict = Probe::Verdict::exhausted;
            out.g = g;
            return out;
        }
        if (!s->empty() && std::all_of(s->begin(), s->end(), [&](Point y) { return chi(a.space, y) == colour; })) {
            out.verdict = Probe::Verdict::witness;
            out.g = g;
            out.sample = *s;
            return out;
        }
    }
    out.verdict = Probe::Verdict::refuted;
    return out;
}

CentralExtension central_extension(Approximant& a, Colouring& chi, const TypeFn& q, int colour, int horizon,
                                   GameBudget& b) {
    check_horizon(a, horizon);
    if (colour != 0 && colour != 1) throw PreconditionError("colour must be 0 or 1");
    if (!is_katetov(q, a.space)) throw PreconditionError("q is not a Katětov function");
    for (Point x : q.domain())
        if (x >= horizon) throw PreconditionError("dom(q) must lie inside the horizon");
    const Space src = a.space;
    auto pl = place_orbit(a, chi, b, src, horizon, q, colour);
    if (!pl.ok) throw BudgetExhausted("central_extension: " + pl.failure, pl.blocking);
    CentralExtension out;
    out.embedding = pl.embedding();
    out.C = in_source_order(pl, horizon);
    int depth = 0;
    for (int k = 2; k >= 1 && depth == 0; --k)
        if (copy_check(a.space, out.C, k)) depth = k;
    json info{{"colour", colour}, {"copy_depth", depth}};
    auto cert = orbit_certificate("central-ext", a, chi, src, pl, horizon, q, colour, info, b);
    if (depth > 0) {
        // Re-issue with the copy claim on the image.
        CertificateWriter w("central-ext", a.space, chi);
        w.embedding(src, pl.sources, pl.image, q.domain());
        w.set("C", out.C);
        w.check({{"type", "orbit_colour"}, {"within", "C"}, {"fn", w.fn(q)}, {"colour", colour}});
        json against = json::array();
        for (auto& v : a.D().members()) against.push_back(v.str());
        w.check({{"type", "copy"}, {"set", "C"}, {"depth", depth}, {"against", against}});
        for (auto& [k, v] : cert.doc.at("info").items()) w.info(k, v);
        cert = w.finish();
    }
    out.certificate = std::move(cert);
    return out;
}

MonochromaticOrbit monochromatic_orbit(Approximant& a, Colouring& chi, int target, GameBudget& b, int depth) {
    const auto& d = a.D();
    const Dist m = blocks(d).front().back();
    MonochromaticOrbit out;
    out.p = TypeFn({{0, *d.index_of(m)}});
    std::vector<Dist> dp;
    for (auto& v : d.members())
        if (v <= m + m) dp.push_back(v);
    const DistanceSet Dp(dp);

    // Horizon: a prefix whose p-orbit is large enough and copy-like.
    int n = std::max(a.size(), target + 2);
    std::vector<Point> O;
    for (;;) {
        ensure_size(a, n, b);
        O.clear();
        for (Point y = 1; y < n; ++y)
            if (realizes(a.space, y, out.p)) O.push_back(y);
        if (static_cast<int>(O.size()) >= target && copy_check(a.space, O, depth, Dp)) break;
        n += std::max(4, n / 4);
    }
    out.horizon = n;
    const Space src = a.space;

    Embedding e;
    if (m == d.min_positive()) {
        auto r = monochromatize_rank1(a, chi, out.p, n, b);
        out.colour = r.colour;
        out.branch = "rank-1 " + r.branch;
        e = r.embedding;
    } else {
        auto pr = extendibility_probe(a, chi, out.p, 0, b);
        if (pr.verdict == Probe::Verdict::exhausted)
            throw BudgetExhausted("extendibility probe ran out of budget", pr.g);
        out.colour = pr.verdict == Probe::Verdict::witness ? 0 : 1;
        out.branch = pr.verdict == Probe::Verdict::witness ? "extendible into colour 0"
                                                           : "not extendible into colour 0 within budget";
        try {
            e = central_extension(a, chi, out.p, out.colour, n, b).embedding;
        } catch (const BudgetExhausted&) {
            out.colour = 1 - out.colour;
            out.branch += "; fell back to colour " + std::to_string(out.colour);
            e = central_extension(a, chi, out.p, out.colour, n, b).embedding;
        }
    }
    for (Point y : O) out.X.push_back(e(y));

    CertificateWriter w("mono-orbit", a.space, chi);
    std::vector<Point> img;
    for (Point y = 0; y < n; ++y) img.push_back(e(y));
    w.embedding(src, e.source, e.target, {0});
    w.set("image", img);
    w.set("X", out.X);
    w.check({{"type", "orbit"}, {"set", "X"}, {"fn", w.fn(out.p)}});
    w.check({{"type", "orbit_colour"}, {"within", "image"}, {"fn", w.fn(out.p)}, {"colour", out.colour}});
    w.check({{"type", "monochromatic"}, {"set", "X"}, {"colour", out.colour}});
    w.check({{"type", "size"}, {"set", "X"}, {"min", target}});
    json against = json::array();
    for (auto& v : Dp.members()) against.push_back(v.str());
    w.check({{"type", "copy"}, {"set", "X"}, {"depth", depth}, {"against", against}});
    w.info("branch", out.branch);
    w.info("horizon", n);
    w.info("budget", budget_json(b));
    out.certificate = w.finish();
    return out;
}

MonochromaticClasses monochromatic_classes(Approximant& a, Colouring& chi, int horizon, GameBudget& b) {
    const auto& d = a.D();
    const auto bl = blocks(d);
    if (bl.size() < 2) throw PreconditionError("monochromatic_classes needs at least two blocks");
    check_horizon(a, horizon);
    const Dist m = bl.front().back();
    const Space src = a.space;
    const auto part = classes(restrict(src, prefix(horizon)).space, m);
    const std::size_t k = part.classes.size();

    PlacementSpec spec;
    spec.source = &src;
    spec.identity_first = true;
    spec.group_pref.assign(k, any_colour);
    for (Point y = 0; y < horizon; ++y) {
        const int c = part.class_of[static_cast<std::size_t>(y)];
        const Point v = part.classes[static_cast<std::size_t>(c)].front();
        spec.slots.push_back(Slot{y, std::nullopt, {}, src.dist(v, y) == m ? c : -1});
    }
    auto pl = run(a, chi, b, spec);
    if (!pl.ok) throw BudgetExhausted("monochromatic_classes: " + pl.failure, pl.blocking);

    MonochromaticClasses out;
    out.m = m;
    out.embedding = pl.embedding();
    out.shells.resize(k);
    out.colours.assign(k, -1);
    auto img = in_source_order(pl, horizon);
    std::vector<Point> Y;
    for (Point y = 0; y < horizon; ++y) {
        const auto c = static_cast<std::size_t>(part.class_of[static_cast<std::size_t>(y)]);
        if (src.dist(part.classes[c].front(), y) != m) continue;
        out.shells[c].push_back(img[static_cast<std::size_t>(y)]);
        out.colours[c] = pl.group_colour[c];
        Y.push_back(img[static_cast<std::size_t>(y)]);
    }
    const auto nonempty = std::count_if(out.shells.begin(), out.shells.end(), [](auto& s) { return !s.empty(); });
    CertificateWriter w("mono-classes", a.space, chi);
    w.embedding(src, pl.sources, pl.image, {});
    w.set("image", img);
    w.set("Y", Y);
    w.check({{"type", "classes_monochromatic"}, {"set", "Y"}, {"r", m.str()}, {"classes", nonempty}});
    w.info("horizon", horizon);
    w.info("classes", k);
    w.info("budget", budget_json(b));
    out.certificate = w.finish();
    return out;
}

namespace {

struct Pick {
    int colour = -1;
    std::vector<int> shells;  // indices into the shell list, in copy order
    std::size_t points = 0;
};

// Candidate monochromatic shell selections, largest first. The quotient has
// one point per shell at the least cross distance and is placed into itself
// under colour constraints without growth (no identity preference, since every
// quotient point is also a source point); multi-block quotients recurse on
// their own classes.
std::vector<Pick> pick_shells(const Space& amb, const std::vector<std::vector<Point>>& shells, const std::vector<int>& colours,
                 int level, int max_depth) {
    if (level > max_depth) throw BudgetExhausted("block recursion deeper than the configured maximum");
    const std::size_t k = shells.size();
    std::vector<std::vector<Dist>> mat(k, std::vector<Dist>(k, Dist(0)));
    std::vector<Dist> realized;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Dist best = amb.D().max();
            for (Point x : shells[i])
                for (Point y : shells[j]) best = std::min(best, amb.dist(x, y));
            mat[i][j] = mat[j][i] = best;
            realized.push_back(best);
        }
    const Space Q = Space::from_matrix(DistanceSet(realized), mat);
    FixedAmbient fixed(Q, colours);
    auto size_of = [&](const std::vector<int>& sel) {
        std::size_t n = 0;
        for (int s : sel) n += shells[static_cast<std::size_t>(s)].size();
        return n;
    };

    std::vector<Block> qb;
    if (Q.size() > 1 && is_universal(Q.D()).universal) qb = blocks(Q.D());
    std::vector<Pick> out;
    auto by_size = [](const Pick& x, const Pick& y) { return x.points > y.points; };
    if (qb.size() <= 1) {
        for (int c = 0; c < 2; ++c) {
            PlacementSpec spec;
            spec.source = &Q;
            spec.allow_switch = false;
            spec.group_colour = {c};
            for (Point u = 0; u < Q.size(); ++u) spec.slots.push_back(Slot{u, std::nullopt, {}, 0});
            auto pl = place(fixed, spec);  // a failed placement still holds its placed prefix
            Pick cand{c, std::vector<int>(pl.image.begin(), pl.image.end()), 0};
            cand.points = size_of(cand.shells);
            if (cand.points > 0) out.push_back(std::move(cand));
        }
        std::stable_sort(out.begin(), out.end(), by_size);
        return out;
    }

    const Dist mq = qb.front().back();
    const auto part = classes(Q, mq);
    PlacementSpec spec;
    spec.source = &Q;
    spec.group_pref.assign(part.classes.size(), any_colour);
    for (Point u = 0; u < Q.size(); ++u) {
        const int c = part.class_of[static_cast<std::size_t>(u)];
        const Point v = part.classes[static_cast<std::size_t>(c)].front();
        spec.slots.push_back(Slot{u, std::nullopt, {}, Q.dist(v, u) == mq ? c : -1});
    }
    auto pl = place(fixed, spec);
    // Next level: one merged shell per quotient class, from placed shell slots.
    std::vector<std::vector<int>> members(part.classes.size());
    for (std::size_t i = 0; i < pl.sources.size(); ++i) {
        const Point u = pl.sources[i];
        const int c = part.class_of[static_cast<std::size_t>(u)];
        if (Q.dist(part.classes[static_cast<std::size_t>(c)].front(), u) == mq)
            members[static_cast<std::size_t>(c)].push_back(pl.image[i]);
    }
    std::vector<std::vector<Point>> merged;
    std::vector<std::vector<int>> origin;
    std::vector<int> mcol;
    for (std::size_t c = 0; c < members.size(); ++c) {
        if (members[c].empty()) continue;
        std::vector<Point> pts;
        for (int s : members[c]) pts.insert(pts.end(), shells[static_cast<std::size_t>(s)].begin(), shells[static_cast<std::size_t>(s)].end());
        merged.push_back(std::move(pts));
        origin.push_back(members[c]);
        mcol.push_back(pl.group_colour[c]);
    }
    if (merged.empty()) return out;
    for (auto& sub : pick_shells(amb, merged, mcol, level + 1, max_depth)) {
        Pick p{sub.colour, {}, 0};
        for (int s : sub.shells)
            p.shells.insert(p.shells.end(), origin[static_cast<std::size_t>(s)].begin(), origin[static_cast<std::size_t>(s)].end());
        p.points = size_of(p.shells);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

MonochromaticCopy find_monochromatic_copy(Approximant& a, Colouring& chi, int target, GameBudget& b, int depth) {
    const auto& d = a.D();
    if (!is_universal(d).universal) throw NonUniversalError("distance set " + d.str() + " is not universal");
    if (target < 1) throw PreconditionError("target must be positive");
    if (depth < 1) throw PreconditionError("depth must be positive");
    const auto bl = blocks(d);
    MonochromaticCopy out;
    out.depth = depth;
    Certificate part;
    json route;
    if (bl.size() == 1) {
        auto mo = monochromatic_orbit(a, chi, target, b, depth);
        out.colour = mo.colour;
        out.points = mo.X;
        part = mo.certificate;
        route = {{"route", "single block"}, {"branch", mo.branch}, {"horizon", mo.horizon}};
    } else {
        int n = std::max(a.size(), 4 * target);
        for (int round = 0;; ++round) {
            ensure_size(a, n, b);
            auto mc = monochromatic_classes(a, chi, n, b);
            std::vector<std::vector<Point>> shells;
            std::vector<int> colours;
            for (std::size_t c = 0; c < mc.shells.size(); ++c)
                if (!mc.shells[c].empty()) {
                    shells.push_back(mc.shells[c]);
                    colours.push_back(mc.colours[c]);
                }
            auto picks = pick_shells(a.space, shells, colours, 1, b.max_depth);
            // Fallback: every shell of one colour.
            for (int c = 0; c < 2; ++c) {
                Pick all{c, {}, 0};
                for (std::size_t s = 0; s < shells.size(); ++s)
                    if (colours[s] == c) all.shells.push_back(static_cast<int>(s));
                if (!all.shells.empty()) picks.push_back(std::move(all));
            }
            bool done = false;
            for (const auto& pick : picks) {
                std::vector<Point> X;
                for (int s : pick.shells)
                    X.insert(X.end(), shells[static_cast<std::size_t>(s)].begin(), shells[static_cast<std::size_t>(s)].end());
                if (static_cast<int>(X.size()) < target || !copy_check(a.space, X, depth)) continue;
                out.colour = pick.colour;
                out.points = std::move(X);
                part = mc.certificate;
                route = {{"route", "classes"}, {"blocks", bl.size()}, {"horizon", n}, {"rounds", round + 1},
                         {"shells", pick.shells.size()}};
                done = true;
                break;
            }
            if (done) break;
            enrich_classes(a, mc.m, n, b);
            n = std::max(n + n / 2, a.size());
        }
    }

    CertificateWriter w("mono-copy", a.space, chi);
    w.set("X", out.points);
    w.check({{"type", "monochromatic"}, {"set", "X"}, {"colour", out.colour}});
    w.check({{"type", "size"}, {"set", "X"}, {"min", target}});
    json against = json::array();
    for (auto& v : d.members()) against.push_back(v.str());
    w.check({{"type", "copy"}, {"set", "X"}, {"depth", depth}, {"against", against}});
    for (auto& [k, v] : route.items()) w.info(k, v);
    w.info("colour", out.colour);
    w.info("target", target);
    w.info("seed", a.seed);
    w.info("budget", budget_json(b));
    w.part(part);
    out.certificate = w.finish();
    return out;
}

MonochromaticCopy find_monochromatic_copy(const DistanceSet& d, Colouring& chi, int target, GameBudget& b,
                                          std::uint64_t seed, int depth) {
    if (!is_universal(d).universal) throw NonUniversalError("distance set " + d.str() + " is not universal");
    auto a = build(d, 1, seed);
    return find_monochromatic_copy(a, chi, target, b, depth);
}

}  // namespace urforge
