#include "urforge/engine.hpp"
#include "urforge/io.hpp"
#include "urforge/quotient.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace urforge;

namespace {

enum Exit { ok = 0, verify_fail = 1, usage = 2, non_universal = 3, budget = 4 };

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    const char* env = std::getenv("URFORGE_SEED");
    if (!env || !*env) return 0;
    try {
        std::size_t used = 0;
        auto v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw Usage(std::string("URFORGE_SEED is not an unsigned integer: ") + env);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Usage("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json read_json(const std::string& path) {
    auto text = read_file(path);
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw Usage("'" + path + "' is empty");
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw Usage("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Usage("cannot write '" + path + "'");
    out << text;
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

Json jdist(Dist d) { return d.str(); }

Json dist_report(const DistanceSet& d) {
    auto u = is_universal(d);
    auto c = canonicalize(d);
    Json j{{"D", distance_set_json(d)}, {"universal", u.universal}, {"canonical", distance_set_json(c.set)},
           {"scale", c.scale.str()}};
    Json jumps = Json::array();
    for (std::size_t i = 1; i < d.size(); ++i)
        if (is_jump(d, d[i])) jumps.push_back(jdist(d[i]));
    j["jumps"] = jumps;
    if (u.witness) {
        const auto& w = *u.witness;
        j["witness"] = {{"bc", jdist(w.bc)},
                        {"a0", {jdist(w.a0[0]), jdist(w.a0[1])}},
                        {"a1", {jdist(w.a1[0]), jdist(w.a1[1])}}};
    } else {
        Json bl = Json::array();
        for (auto& b : blocks(d)) {
            Json one = Json::array();
            for (auto& x : b) one.push_back(jdist(x));
            bl.push_back(one);
        }
        j["blocks"] = bl;
    }
    return j;
}

Json saturation_json(const Space& s, const Saturation& sat) {
    Json entries = Json::array();
    for (auto& e : sat.certificate.checks) {
        Json fn = Json::array();
        for (auto& [p, v] : e.fn.entries()) fn.push_back(Json::array({p, s.D()[static_cast<std::size_t>(v)].str()}));
        entries.push_back({{"prefix", e.prefix}, {"fn", fn}, {"realizer", e.realizer}});
    }
    return {{"level", sat.level}, {"checks", entries}};
}

std::string now_utc() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

DistanceSet universal_or_exit(const std::string& text) {
    auto d = parse_distance_set(text);
    if (!is_universal(d).universal) throw NonUniversalError("distance set " + d.str() + " is not universal");
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Urysohn spaces over finite distance sets: generation, quotients and colouring games"};
    app.require_subcommand(1);

    std::string D, in, out, strategy = "random:0", radius;
    int n = 0, target = 10, depth = 1, level = -1;
    GameBudget gb;
    std::uint64_t seed = 0;
    bool no_timestamp = false, seed_given = false;

    auto* dist = app.add_subcommand("dist", "Analyse a distance set");
    dist->require_subcommand(1);
    auto* dcheck = dist->add_subcommand("check", "Universality report");
    auto* dblocks = dist->add_subcommand("blocks", "Block decomposition");
    for (auto* c : {dcheck, dblocks}) c->add_option("D", D, "Distance set, e.g. 0,1,5/2,4 or [0,1,2]")->required();

    auto add_seed = [&](CLI::App* c) {
        c->add_option("--seed", seed, "Seed (default: URFORGE_SEED or 0)")->each([&](const std::string&) { seed_given = true; });
    };

    auto* gen = app.add_subcommand("gen", "Generate an approximant");
    gen->add_option("-D,--distances", D, "Distance set")->required();
    gen->add_option("-n,--points", n, "Number of points")->required();
    add_seed(gen);
    gen->add_option("-o,--output", out, "Output file (default stdout)");

    auto* sat = app.add_subcommand("sat", "Saturation level of a space, or saturate a fresh approximant");
    sat->add_option("-i,--input", in, "Space JSON");
    sat->add_option("-D,--distances", D, "Distance set for a fresh approximant");
    sat->add_option("--level", level, "Saturate to this level");
    sat->add_option("--max-points", gb.max_points, "Growth budget for --level");
    add_seed(sat);
    sat->add_option("-o,--output", out, "Output file (default stdout)");

    auto* quo = app.add_subcommand("quotient", "Quotient by a jump number");
    quo->add_option("-i,--input", in, "Space JSON")->required();
    quo->add_option("-r,--radius", radius, "Jump number (default: first block maximum)");
    quo->add_option("-o,--output", out, "Output file (default stdout)");

    auto* game = app.add_subcommand("game", "Find a monochromatic copy against a colouring");
    game->add_option("-D,--distances", D, "Distance set")->required();
    game->add_option("--strategy", strategy,
                     "const:0|const:1|random:SEED|parity|profile-hash[:SEED]|class-alternating|file:PATH");
    game->add_option("--target", target, "Required number of points");
    game->add_option("--depth", depth, "copy_check depth");
    game->add_option("--budget-points", gb.max_points, "Maximum points grown");
    game->add_option("--attempts", gb.attempts, "Growth attempts per slot and colour");
    add_seed(game);
    game->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field");
    game->add_option("-o,--output", out, "Certificate file (default stdout)");

    auto* ver = app.add_subcommand("verify", "Replay a certificate");
    ver->add_option("file", in, "Certificate JSON")->required();

    auto* exp = app.add_subcommand("export", "Export a space");
    exp->require_subcommand(1);
    auto* edot = exp->add_subcommand("dot", "Graphviz DOT");
    edot->add_option("-i,--input", in, "Space JSON")->required();
    edot->add_option("-o,--output", out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (!seed_given) seed = default_seed();

        if (dist->parsed()) {
            auto d = parse_distance_set(D);
            auto r = dist_report(d);
            if (dblocks->parsed()) r.erase("jumps");
            write("", pretty(r));
            return r.at("universal").get<bool>() ? ok : non_universal;
        }
        if (gen->parsed()) {
            if (n < 1) throw Usage("-n must be at least 1");
            auto d = universal_or_exit(D);
            auto a = build(d, n, seed);
            auto s = saturation_level(a);
            auto j = approximant_json(a, s.level);
            j["certificate"] = saturation_json(a.space, s);
            write(out, pretty(j));
            return ok;
        }
        if (sat->parsed()) {
            if (!in.empty() == !D.empty()) throw Usage("sat needs exactly one of --input or --distances");
            Approximant a;
            if (!in.empty()) {
                a = approximant_from_json(read_json(in));
            } else {
                a = build(universal_or_exit(D), 1, seed);
            }
            if (level >= 0) a = saturate(std::move(a), level, gb.max_points);
            auto s = saturation_level(a);
            auto j = approximant_json(a, s.level);
            j["certificate"] = saturation_json(a.space, s);
            write(out, pretty(j));
            return ok;
        }
        if (quo->parsed()) {
            auto a = approximant_from_json(read_json(in));
            Dist r = radius.empty() ? blocks(a.D()).front().back() : parse_dist(radius);
            if (!is_jump(a.D(), r)) throw Usage(r.str() + " is not a jump number of " + a.D().str());
            auto q = quotient_space(a.space, classes(a.space, r));
            auto j = quotient_json(q);
            j["r"] = r.str();
            write(out, pretty(j));
            return ok;
        }
        if (game->parsed()) {
            auto d = universal_or_exit(D);
            auto chi = Colouring::parse(strategy);
            if (target < 1 || depth < 1) throw Usage("--target and --depth must be positive");
            if (gb.max_points < 0) throw Usage("--budget-points must be non-negative");
            auto r = find_monochromatic_copy(d, chi, target, gb, seed, depth);
            auto doc = r.certificate.doc;
            if (!no_timestamp) doc["timestamp"] = now_utc();
            auto v = verify_certificate(doc);
            write(out, pretty(doc));
            std::cerr << "colour " << r.colour << ", " << r.points.size() << " points, " << gb.used
                      << " points grown" << (v.ok ? ", verified" : ", VERIFICATION FAILED: " + v.failure) << "\n";
            return v.ok ? ok : verify_fail;
        }
        if (ver->parsed()) {
            auto doc = read_json(in);
            auto v = verify_certificate(doc);
            if (!v.ok) {
                std::cerr << "rejected: " << v.failure << "\n";
                return verify_fail;
            }
            std::cout << "verified " << doc.value("kind", std::string("?")) << " (" << v.checks << " checks)\n";
            return ok;
        }
        if (edot->parsed()) {
            auto a = approximant_from_json(read_json(in));
            write(out, dot(a.space));
            return ok;
        }
    } catch (const NonUniversalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return non_universal;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return budget;
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
