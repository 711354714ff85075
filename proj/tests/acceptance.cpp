// Acceptance battery. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
//   acceptance <path-to-urforge-cli> <scratch-dir>

#include "oracles.hpp"
#include "urforge/engine.hpp"
#include "urforge/io.hpp"
#include "urforge/orbits.hpp"
#include "urforge/quotient.hpp"
#include "urforge/rng.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

using namespace urforge;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double c1_seconds = 60;
constexpr double c4_seconds = 300;
constexpr double c7_seconds = 600;
constexpr int c1_max = 12;           // largest member of a canonical set
constexpr int c1_positive = 4;       // |D| <= 5
constexpr int c4_instances = 200;
constexpr int c4_max_points = 30;
constexpr int c5_instances = 50;
constexpr int c6_max_prefix = 6;
constexpr int c7_target = 10;
constexpr int c7_depth = 1;
constexpr int c7_budget = 2000;
constexpr std::size_t c8_process_tampers = 12;  // per certificate, separate process
constexpr std::size_t c8_local_tampers = 400;   // per certificate, in process

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string cli;
fs::path scratch;

int run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli + "' " + args + " >/dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

// Metric soundness ledger shared by every criterion that produces spaces.
struct Soundness {
    int checked = 0;
    int bad = 0;
    std::string first;
    void space(const Space& s, const std::string& what) { matrix(oracle::matrix(s), what); }
    void matrix(const oracle::Matrix& m, const std::string& what) {
        ++checked;
        if (!oracle::metric(m)) {
            if (!bad) first = what;
            ++bad;
        }
    }
} soundness;

std::vector<DistanceSet> canonical_battery() {
    std::vector<DistanceSet> out;
    for (auto& v : oracle::small_sets(c1_max, c1_positive)) {
        int g = 0;
        for (auto& x : v) g = std::gcd(g, static_cast<int>(x.num()));
        if (g == 1) out.emplace_back(v);
    }
    return out;
}

std::vector<DistanceSet> universal_battery() {
    std::vector<DistanceSet> out;
    for (auto& d : canonical_battery())
        if (is_universal(d).universal) out.push_back(d);
    return out;
}

// The two triangles of a witness admit no common completion.
bool witness_verifies(const UniversalityWitness& w, const DistanceSet& d) {
    using oracle::Matrix;
    Matrix t0{{0, w.a0[0], w.a0[1]}, {w.a0[0], 0, w.bc}, {w.a0[1], w.bc, 0}};
    Matrix t1{{0, w.a1[0], w.a1[1]}, {w.a1[0], 0, w.bc}, {w.a1[1], w.bc, 0}};
    if (w.bc.is_zero() || !oracle::metric(t0) || !oracle::metric(t1)) return false;
    for (auto& t : d.members()) {
        if (t.is_zero()) continue;
        Matrix m{{0, t, w.a0[0], w.a0[1]}, {t, 0, w.a1[0], w.a1[1]}, {w.a0[0], w.a1[0], 0, w.bc},
                 {w.a0[1], w.a1[1], w.bc, 0}};
        if (oracle::metric(m)) return false;
    }
    return true;
}

Outcome criterion1() {
    Outcome o;
    auto t0 = Clock::now();
    auto sets = canonical_battery();
    int universal = 0;
    for (auto& d : sets) {
        bool lib = is_universal(d).universal;
        bool brute = oracle::failing_amalgams(d.members()).empty();
        if (lib != brute) o.fail("disagreement on " + d.str());
        universal += lib;
    }
    for (int m = 1; m <= 6; ++m) {
        std::vector<Dist> v;
        for (int i = 0; i <= m; ++i) v.push_back(i);
        if (!is_universal(DistanceSet(v)).universal) o.fail("{0..." + std::to_string(m) + "} reported non-universal");
    }
    DistanceSet bad{1, 2, 4};
    auto r = is_universal(bad);
    if (r.universal || !r.witness || !witness_verifies(*r.witness, bad)) o.fail("{0,1,2,4} lacks a verifying witness");
    double secs = since(t0);
    if (secs >= c1_seconds) o.fail("runtime over the limit");
    std::ostringstream s;
    s << sets.size() << " canonical sets, " << universal << " universal, " << secs << " s";
    if (o.pass) o.detail = s.str();
    else o.detail += " (" + s.str() + ")";
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto sets = universal_battery();
    int pairs = 0;
    for (auto& d : sets) {
        const auto& v = d.members();
        auto bl = blocks(d);
        // Partition of D \ {0} in increasing order.
        std::vector<Dist> flat;
        for (auto& b : bl) flat.insert(flat.end(), b.begin(), b.end());
        if (flat != std::vector<Dist>(v.begin() + 1, v.end())) o.fail("blocks do not partition " + d.str());
        for (std::size_t i = 0; i < bl.size(); ++i) {
            const auto& b = bl[i];
            if (b.empty()) {
                o.fail("empty block in " + d.str());
                continue;
            }
            Dist b0 = b.front();
            Dist p0 = oracle::pred(v, b0);
            if (!(b0 > p0 + p0)) o.fail("block start not past twice its predecessor in " + d.str());
            for (std::size_t k = 0; k + 1 < b.size(); ++k) {
                if (!(Dist(0) < b[k] && b[k] < b[k + 1])) o.fail("block not increasing in " + d.str());
                if (b[k + 1] != oracle::succ(v, b[k])) o.fail("block skips a member in " + d.str());
                if (b[k] + b0 < b[k + 1]) o.fail("block step exceeds its minimum in " + d.str());
            }
            if (i + 1 < bl.size()) {
                if (!(b.back() < bl[i + 1].front())) o.fail("blocks out of order in " + d.str());
                if (!(b.back() + b.back() < bl[i + 1].front())) o.fail("no factor-2 gap in " + d.str());
            }
        }
        // The least r with successor(r) > m + r is a jump number.
        for (std::size_t mi = 1; mi < v.size(); ++mi) {
            Dist m = v[mi];
            std::optional<Dist> least;
            for (auto& r : v)
                if (oracle::succ(v, r) > m + r) {
                    least = r;
                    break;
                }
            ++pairs;
            if (least) {
                Dist up = oracle::succ(v, *least);
                if (!(up > *least + *least)) o.fail("min S is not a jump number for " + d.str());
            }
        }
    }
    if (o.pass) o.detail = std::to_string(sets.size()) + " universal sets, " + std::to_string(pairs) + " (D, m) pairs";
    return o;
}

const std::vector<DistanceSet>& game_sets() {
    static const std::vector<DistanceSet> s{DistanceSet{1}, DistanceSet{1, 2}, DistanceSet{1, 3},
                                            DistanceSet{1, 2, 5, 6}};
    return s;
}

std::vector<Point> random_domain(Rng& rng, int n, int k) {
    std::vector<Point> dom;
    while (static_cast<int>(dom.size()) < k) {
        Point p = static_cast<Point>(rng.below(static_cast<std::uint64_t>(n)));
        if (std::find(dom.begin(), dom.end(), p) == dom.end()) dom.push_back(p);
    }
    std::sort(dom.begin(), dom.end());
    return dom;
}

// Range formula against the realization oracle.
Outcome criterion4() {
    Outcome o;
    auto t0 = Clock::now();
    const std::vector<DistanceSet> ds{DistanceSet{1, 2}, DistanceSet{1, 3}, DistanceSet{1, 2, 3},
                                      DistanceSet{1, 2, 5, 6}, DistanceSet{1, 2, 3, 4}, DistanceSet{2, 3, 4}};
    Rng rng(4001);
    int done = 0;
    for (int inst = 0; inst < c4_instances; ++inst) {
        const auto& d = ds[rng.below(ds.size())];
        int n = 5 + static_cast<int>(rng.below(c4_max_points - 4));
        auto a = build(d, n, rng.next() % 1000);
        soundness.space(a.space, "build");
        auto dom = random_domain(rng, a.size(), 1 + static_cast<int>(rng.below(3)));
        auto fns = enumerate_katetov(a.space, dom);
        const auto& s = fns[rng.below(fns.size())];
        const auto& t = fns[rng.below(fns.size())];
        auto formula = distance_range(a.space, s, t);
        auto inside = [&](Dist x) { return std::find(formula.set.begin(), formula.set.end(), x) != formula.set.end(); };
        for (Point x : orbit(s, a.space))
            for (Point y : orbit(t, a.space))
                if (!inside(a.space.dist(x, y))) o.fail("realized distance outside the formula on " + d.str());
        auto orb = orbit(s, a.space);
        Point x = orb.empty() ? grow(a, s) : orb.front();
        auto over = dom;
        over.push_back(x);
        std::sort(over.begin(), over.end());
        saturate_over(a, over);
        soundness.space(a.space, "saturate_over");
        std::set<Dist> seen;
        for (Point y : orbit(t, a.space)) {
            seen.insert(a.space.dist(x, y));
            if (!inside(a.space.dist(x, y))) o.fail("realized distance outside the formula after growth on " + d.str());
        }
        if (!seen.count(formula.min) || !seen.count(formula.max)) o.fail("formula extreme not realized on " + d.str());
        ++done;
    }
    double secs = since(t0);
    if (secs >= c4_seconds) o.fail("runtime over the limit");
    if (o.pass) o.detail = std::to_string(done) + " instances, " + std::to_string(secs) + " s";
    return o;
}

// Orbits carry distances up to twice the rank and pass copy_check after growth.
Outcome criterion5() {
    Outcome o;
    const std::vector<DistanceSet> ds{DistanceSet{1, 2}, DistanceSet{1, 3}, DistanceSet{1, 2, 3},
                                      DistanceSet{1, 2, 5, 6}, DistanceSet{1, 2, 3, 4}};
    Rng rng(5001);
    int done = 0;
    for (int inst = 0; inst < c5_instances; ++inst) {
        const auto& d = ds[rng.below(ds.size())];
        int level = 2 + static_cast<int>(rng.below(2));
        auto a = saturate(build(d, 1, rng.next() % 1000), level);
        soundness.space(a.space, "saturate");
        auto dom = random_domain(rng, level, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(level))));
        auto fns = enumerate_katetov(a.space, dom);
        const auto t = fns[rng.below(fns.size())];
        const Dist r = rank(t, d);
        std::vector<Dist> dt;
        for (auto& x : d.members())
            if (x <= r + r) dt.push_back(x);
        const DistanceSet Dt(dt);
        auto orb = orbit(t, a.space);
        if (orb.empty()) {
            o.fail("saturated approximant misses an orbit over " + d.str());
            continue;
        }
        for (Point x : orb)
            for (Point y : orb)
                if (!Dt.contains(a.space.dist(x, y))) o.fail("orbit distance beyond twice the rank on " + d.str());
        auto over = dom;
        over.push_back(orb.front());
        std::sort(over.begin(), over.end());
        saturate_over(a, over);
        soundness.space(a.space, "saturate_over");
        auto grown = orbit(t, a.space);
        std::stable_partition(grown.begin(), grown.end(), [&](Point p) { return p == orb.front(); });
        if (!copy_check(a.space, grown, 1, Dt)) o.fail("orbit fails copy_check against D_t on " + d.str());
        ++done;
    }
    if (o.pass) o.detail = std::to_string(done) + " Katětov functions";
    return o;
}

bool orbit_contained(const Space& before, const Space& after, const Embedding& e,
                     const std::vector<std::pair<TypeFn, TypeFn>>& pairs, const std::vector<Point>& pts) {
    for (Point x : pts)
        for (auto& [t, s] : pairs)
            if (realizes(before, x, t) && !realizes(after, e(x), s)) return false;
    return true;
}

// reduce and shrink_step over every admissible family of one or two pairs.
Outcome criterion6() {
    Outcome o;
    int emitted = 0, skipped = 0;
    for (auto d : {DistanceSet{1, 2}, DistanceSet{1, 3}}) {
        const auto base = saturate(build(d, 1, 6), 3);
        soundness.space(base.space, "saturate");
        for (int na : {1, 2}) {
            std::vector<Point> A, B{na};
            for (Point p = 0; p < na; ++p) A.push_back(p);
            std::vector<Point> AB = A;
            AB.push_back(na);
            std::vector<std::pair<TypeFn, TypeFn>> all;
            for (auto& t : enumerate_katetov(base.space, A))
                for (auto& s : enumerate_katetov(base.space, AB))
                    if (s.extends(t)) all.emplace_back(t, s);
            std::vector<std::vector<std::pair<TypeFn, TypeFn>>> families;
            for (std::size_t i = 0; i < all.size(); ++i) {
                families.push_back({all[i]});
                for (std::size_t j = i + 1; j < all.size(); ++j)
                    if (all[i].first != all[j].first) families.push_back({all[i], all[j]});
            }
            for (auto& fam : families)
                for (int prefix = na + 2; prefix <= c6_max_prefix; ++prefix) {
                    {
                        auto a = base;
                        try {
                            auto e = reduce(a, fam, prefix);
                            ++emitted;
                            soundness.space(a.space, "reduce");
                            std::vector<Point> pts;
                            for (Point x = 0; x < prefix; ++x) pts.push_back(x);
                            if (!is_embedding(base.space, a.space, e)) o.fail("reduce output is not an embedding");
                            for (Point p : A)
                                if (e(p) != p) o.fail("reduce moves A");
                            if (!orbit_contained(base.space, a.space, e, fam, pts)) o.fail("reduce breaks orbit containment");
                        } catch (const BudgetExhausted& ex) {
                            o.fail(std::string("reduce: ") + ex.what());
                        } catch (const PreconditionError&) {
                            ++skipped;
                        }
                    }
                    {
                        auto a = base;
                        std::vector<Point> R;
                        for (Point x = na + 1; x < prefix; ++x) R.push_back(x);
                        std::vector<TypeFn> T, ext;
                        for (auto& [t, s] : fam) {
                            T.push_back(t);
                            ext.push_back(s);
                        }
                        try {
                            auto e = shrink_step(a, A, B, R, T, ext);
                            ++emitted;
                            soundness.space(a.space, "shrink_step");
                            if (!is_embedding(base.space, a.space, e)) o.fail("shrink_step output is not an embedding");
                            for (Point p : A)
                                if (e(p) != p) o.fail("shrink_step moves A");
                            if (!orbit_contained(base.space, a.space, e, fam, R))
                                o.fail("shrink_step breaks orbit containment");
                            for (Point y : R)
                                for (Point b : B)
                                    if (e(y) == b) o.fail("shrink_step maps onto B");
                        } catch (const BudgetExhausted& ex) {
                            o.fail(std::string("shrink_step: ") + ex.what());
                        } catch (const PreconditionError&) {
                            ++skipped;
                        }
                    }
                }
        }
    }
    if (emitted == 0) o.fail("no embeddings emitted");
    if (o.pass)
        o.detail = std::to_string(emitted) + " embeddings, " + std::to_string(skipped) + " families outside the preconditions";
    return o;
}

const std::vector<std::string>& strategies() {
    static const std::vector<std::string> s{"const:0",  "const:1",  "random:1", "random:2",
                                            "random:3", "random:4", "parity",   "profile-hash"};
    return s;
}

struct GameRun {
    std::string name;
    json doc;
};
std::vector<GameRun> game_runs;

Outcome criterion7() {
    Outcome o;
    auto t0 = Clock::now();
    int ok = 0, max_used = 0;
    for (auto& d : game_sets())
        for (auto& st : strategies()) {
            auto chi = Colouring::parse(st);
            GameBudget b;
            b.max_points = c7_budget;
            auto a = build(d, 1, 42);
            std::string tag = d.str() + " " + st;
            try {
                auto r = find_monochromatic_copy(a, chi, c7_target, b, c7_depth);
                soundness.space(a.space, "game ambient");
                auto v = verify_certificate(r.certificate);
                bool mono = true;
                for (Point p : r.points) mono = mono && chi(a.space, p) == r.colour;
                if (!v.ok) o.fail(tag + ": " + v.failure);
                else if (static_cast<int>(r.points.size()) < c7_target) o.fail(tag + ": too few points");
                else if (!mono) o.fail(tag + ": not monochromatic");
                else if (!copy_check(a.space, r.points, c7_depth)) o.fail(tag + ": copy_check fails");
                else if (b.used > c7_budget) o.fail(tag + ": over budget");
                else ++ok;
                max_used = std::max(max_used, b.used);
                game_runs.push_back({tag, r.certificate.doc});
            } catch (const std::exception& e) {
                o.fail(tag + ": " + e.what());
            }
        }
    double secs = since(t0);
    if (secs >= c7_seconds) o.fail("runtime over the limit");
    std::ostringstream s;
    s << ok << "/" << game_sets().size() * strategies().size() << " runs, at most " << max_used << " points grown, "
      << secs << " s";
    if (o.pass) o.detail = s.str();
    else o.detail += " (" + s.str() + ")";
    return o;
}

// Certificates of the intermediate constructions.
std::vector<GameRun> stage_certificates() {
    std::vector<GameRun> out;
    {
        auto a = build(DistanceSet{1, 2}, 14, 3);
        auto chi = Colouring::parse("random:9");
        GameBudget b;
        out.push_back({"uniform-enum", uniformize(a, chi, 1, 2, 14, b).certificate.doc});
    }
    {
        auto a = build(DistanceSet{1, 2}, 20, 3);
        auto chi = Colouring::parse("random:3");
        GameBudget b;
        auto p = TypeFn::from_values(a.D(), {{0, Dist(2)}});
        auto pr = extendibility_probe(a, chi, p, 0, b);
        int i = pr.verdict == Probe::Verdict::witness ? 0 : 1;
        out.push_back({"central-ext", central_extension(a, chi, p, i, 20, b).certificate.doc});
    }
    {
        auto a = build(DistanceSet{1}, 1, 2);
        auto chi = Colouring::parse("parity");
        GameBudget b;
        out.push_back({"mono-orbit", monochromatic_orbit(a, chi, 10, b).certificate.doc});
    }
    {
        auto a = build(DistanceSet{1, 2, 5, 6}, 30, 2);
        auto chi = Colouring::parse("random:2");
        GameBudget b;
        out.push_back({"mono-classes", monochromatic_classes(a, chi, 30, b).certificate.doc});
    }
    return out;
}

// Changes one leaf so that it differs from the original.
json altered(const json& v) {
    if (v.is_boolean()) return !v.get<bool>();
    if (v.is_number_integer()) return v.get<std::int64_t>() + 1;
    if (v.is_number()) return v.get<double>() + 1;
    if (v.is_string()) {
        auto s = v.get<std::string>();
        return s == "1" ? std::string("2") : s == "0" ? std::string("1") : s + "1";
    }
    if (v.is_null()) return 0;
    return nullptr;
}

// Leaf pointers spread over the document, every top-level field included.
std::vector<json::json_pointer> tamper_sites(const json& doc, std::size_t want) {
    auto flat = doc.flatten();
    std::vector<std::string> keys;
    for (auto it = flat.begin(); it != flat.end(); ++it) keys.push_back(it.key());
    std::vector<json::json_pointer> out;
    std::set<std::string> tops;
    const std::size_t step = std::max<std::size_t>(1, keys.size() / want);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto top = keys[i].substr(1, keys[i].find('/', 1) - 1);
        if (i % step == 0 || !tops.count(top)) out.emplace_back(keys[i]);
        tops.insert(top);
    }
    return out;
}

Outcome criterion8() {
    Outcome o;
    auto all = game_runs;
    try {
        for (auto& s : stage_certificates()) all.push_back(s);
    } catch (const std::exception& e) {
        o.fail(std::string("stage certificate: ") + e.what());
    }
    const auto dir = scratch / "certificates";
    fs::create_directories(dir);
    int verified = 0, local = 0, spawned = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto& [name, doc] = all[i];
        auto path = dir / ("cert" + std::to_string(i) + ".json");
        spit(path, doc.dump(2));
        if (run("verify '" + path.string() + "'") != 0) o.fail(name + ": rejected by the separate verifier");
        else ++verified;

        auto local_sites = tamper_sites(doc, c8_local_tampers);
        for (auto& ptr : local_sites) {
            json t = doc;
            t[ptr] = altered(t[ptr]);
            ++local;
            if (verify_certificate(t).ok) o.fail(name + ": tamper at " + ptr.to_string() + " accepted");
        }
        auto sites = tamper_sites(doc, c8_process_tampers);
        for (std::size_t k = 0; k < sites.size(); k += std::max<std::size_t>(1, sites.size() / c8_process_tampers)) {
            json t = doc;
            t[sites[k]] = altered(t[sites[k]]);
            auto tp = dir / ("tamper" + std::to_string(i) + "_" + std::to_string(k) + ".json");
            spit(tp, t.dump(2));
            ++spawned;
            if (run("verify '" + tp.string() + "'") != 1)
                o.fail(name + ": separate verifier accepted a tamper at " + sites[k].to_string());
        }
        // Resealed recolouring of a copy point: the replayed checks must catch it.
        if (doc.contains("sets") && doc["sets"].contains("X") && !doc["sets"]["X"].empty()) {
            json t = doc;
            const auto ids = t["ambient"]["ids"].get<std::vector<Point>>();
            Point x = t["sets"]["X"][0];
            auto pos = std::find(ids.begin(), ids.end(), x) - ids.begin();
            t["colours"][pos] = 1 - t["colours"][pos].get<int>();
            t["digest"] = certificate_digest(t);
            ++local;
            if (verify_certificate(t).ok) o.fail(name + ": resealed recolouring accepted");
        }
    }
    if (all.empty()) o.fail("no certificates");
    if (o.pass)
        o.detail = std::to_string(verified) + "/" + std::to_string(all.size()) + " verified in a separate process, " +
                   std::to_string(local) + " in-process and " + std::to_string(spawned) + " separate-process tampers rejected";
    return o;
}

Outcome criterion9() {
    Outcome o;
    int compared = 0;
    for (auto& d : game_sets()) {
        if (!(build(d, 25, 7).space == build(d, 25, 7).space)) o.fail("build differs on " + d.str());
        auto s1 = saturate(build(d, 1, 7), 2), s2 = saturate(build(d, 1, 7), 2);
        if (space_json(s1.space).dump() != space_json(s2.space).dump()) o.fail("saturate differs on " + d.str());
        compared += 2;
        for (std::string st : {"random:3", "profile-hash"}) {
            std::string text[2];
            for (auto& t : text) {
                auto chi = Colouring::parse(st);
                GameBudget b;
                t = find_monochromatic_copy(d, chi, c7_target, b, 11).certificate.doc.dump();
            }
            if (text[0] != text[1]) o.fail("game certificate differs on " + d.str() + " " + st);
            ++compared;
        }
    }
    // Separate processes, byte for byte.
    const auto dir = scratch / "determinism";
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, std::string>> cmds{
        {"gen -D 0,1,3 -n 20 --seed 5", ""},
        {"gen -D 0,1,2,5,6 -n 20", "URFORGE_SEED=9"},
        {"game -D 0,1,2 --strategy random:2 --seed 3 --no-timestamp", ""},
        {"game -D 0,1,2,5,6 --strategy parity --no-timestamp", "URFORGE_SEED=4"},
    };
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        std::string out[2];
        for (int k = 0; k < 2; ++k) {
            auto p = dir / ("run" + std::to_string(i) + "_" + std::to_string(k) + ".json");
            if (run(cmds[i].first + " -o '" + p.string() + "'", cmds[i].second) != 0) o.fail("cli run failed: " + cmds[i].first);
            out[k] = slurp(p);
        }
        if (out[0].empty() || out[0] != out[1]) o.fail("cli output differs: " + cmds[i].first);
        ++compared;
    }
    if (o.pass) o.detail = std::to_string(compared) + " repeated runs byte-identical";
    return o;
}

// Spaces from every construction named by the soundness criterion.
Outcome criterion3() {
    Outcome o;
    Rng rng(3001);
    for (auto& d : universal_battery()) {
        if (rng.below(4) != 0) continue;
        auto a = build(d, 12, rng.next() % 100);
        soundness.space(a.space, "build " + d.str());
        auto dom = random_domain(rng, a.size(), 2);
        auto fns = enumerate_katetov(a.space, dom);
        auto e = extend(a.space, fns[rng.below(fns.size())]);
        soundness.space(e.space, "extend " + d.str());
    }
    for (auto d : {DistanceSet{1, 2, 3}, DistanceSet{1, 3}, DistanceSet{1, 2, 5, 6}, DistanceSet{1, 2, 5, 6, 13}}) {
        auto a = build(d, 40, 2);
        soundness.space(a.space, "build");
        auto fs = enumerate_katetov(a.space, {0, 2});
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<TypeFn> fam;
            for (int i = 0; i < 3; ++i) fam.push_back(fs[rng.below(fs.size())]);
            auto idx = min_distance_matrix(a.space, fam);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    if (i != j && idx[i][j].is_zero()) idx[i][j] = distance_range(a.space, fam[i], fam[j]).set.at(1);
            if (is_metric(idx)) soundness.space(amalgamate(a.space, fam, idx).graph, "amalgamate");
            // Levelling distinct members yields a metric on the family.
            std::vector<TypeFn> distinct = fam;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            soundness.matrix(min_distance_matrix(a.space, distinct), "min_distance_matrix");
            const auto first = blocks(d).front();
            for (std::size_t ri = 1; ri < first.size(); ++ri) {
                const Dist r = first[ri];
                for (auto pol : {LevellingPolicy::lower(), LevellingPolicy::upper(), LevellingPolicy::random(rep)})
                    soundness.matrix(r_levelling(a.space, distinct, r, pol), "r_levelling");
            }
        }
        if (blocks(d).size() > 1) {
            auto q = quotient_space(a.space, classes(a.space, blocks(d).front().back()));
            soundness.space(q.space, "quotient_space");
        }
    }
    if (soundness.bad) o.fail(std::to_string(soundness.bad) + " non-metric outputs, first from " + soundness.first);
    if (o.pass) o.detail = std::to_string(soundness.checked) + " spaces and index metrics pass the triangle scan";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <urforge-cli> <scratch-dir>\n";
        return 2;
    }
    cli = argv[1];
    scratch = argv[2];
    fs::create_directories(scratch);

    using Fn = Outcome (*)();
    const std::vector<std::pair<int, Fn>> order{{1, criterion1}, {2, criterion2}, {4, criterion4}, {5, criterion5},
                                                {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9},
                                                {3, criterion3}};
    std::map<int, Outcome> results;
    for (auto& [k, f] : order) {
        auto t0 = Clock::now();
        try {
            results[k] = f();
        } catch (const std::exception& e) {
            results[k].fail(std::string("exception: ") + e.what());
        }
        std::cerr << "criterion " << k << " done in " << since(t0) << " s\n";
    }
    bool all = true;
    for (auto& [k, r] : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << r.detail << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
