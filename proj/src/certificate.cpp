#include "urforge/certificate.hpp"

#include "urforge/rng.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>

namespace urforge {

using nlohmann::json;

CertificateWriter::CertificateWriter(std::string kind, const Space& ambient, Colouring& chi)
    : kind_(std::move(kind)), amb_(ambient), chi_(chi) {}

void CertificateWriter::points(const std::vector<Point>& pts) {
    for (Point p : pts) {
        if (p < 0 || p >= amb_.size()) throw PreconditionError("certificate point outside the ambient space");
        if (static_cast<std::size_t>(p) >= mark_.size()) mark_.resize(static_cast<std::size_t>(p) + 1, 0);
        mark_[static_cast<std::size_t>(p)] = 1;
    }
}

void CertificateWriter::set(const std::string& name, const std::vector<Point>& pts) {
    points(pts);
    sets_[name] = pts;
}

void CertificateWriter::check(json c) { checks_.push_back(std::move(c)); }

void CertificateWriter::info(const std::string& key, json v) { info_[key] = std::move(v); }

void CertificateWriter::part(const Certificate& c) { parts_.push_back(c.doc); }

json CertificateWriter::fn(const TypeFn& t) const {
    json j = json::array();
    for (auto& [p, v] : t.entries()) j.push_back(json::array({p, amb_.D()[static_cast<std::size_t>(v)].str()}));
    return j;
}

void CertificateWriter::embedding(const Space& source, const std::vector<Point>& src, const std::vector<Point>& img,
                                  const std::vector<Point>& fixed) {
    points(img);
    json rows = json::array();
    for (Point a : src) {
        json r = json::array();
        for (Point b : src) r.push_back(source.dist(a, b).str());
        rows.push_back(std::move(r));
    }
    check({{"type", "embedding"}, {"source", rows}, {"src", src}, {"map", img}, {"fixed", fixed}});
}

Certificate CertificateWriter::finish(std::optional<std::string> timestamp) const {
    std::vector<Point> ids;
    for (std::size_t p = 0; p < mark_.size(); ++p)
        if (mark_[p]) ids.push_back(static_cast<Point>(p));
    json rows = json::array();
    json colours = json::array();
    for (Point a : ids) {
        json r = json::array();
        for (Point b : ids) r.push_back(amb_.dist(a, b).str());
        rows.push_back(std::move(r));
        colours.push_back(chi_(amb_, a));
    }
    json D = json::array();
    for (auto& d : amb_.D().members()) D.push_back(d.str());
    json checks = json::array({{{"type", "metric"}}});
    const auto k = chi_.kind();
    if (k == Colouring::Kind::constant || k == Colouring::Kind::random || k == Colouring::Kind::parity)
        checks.push_back({{"type", "colours"}});
    for (auto& c : checks_) checks.push_back(c);
    Certificate c;
    c.doc = {{"format", "urforge-certificate/1"},
             {"kind", kind_},
             {"D", D},
             {"ambient", {{"ids", ids}, {"dist", rows}}},
             {"colours", colours},
             {"strategy", chi_.name()},
             {"sets", sets_},
             {"checks", checks},
             {"info", info_}};
    if (!parts_.empty()) c.doc["parts"] = parts_;
    c.doc["digest"] = certificate_digest(c.doc);
    if (timestamp) c.doc["timestamp"] = *timestamp;
    return c;
}

std::string certificate_digest(const json& doc) {
    json body = doc;
    if (body.is_object()) {
        body.erase("digest");
        body.erase("timestamp");
    }
    const std::string text = body.dump();
    unsigned char md[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), md);
    std::string hex;
    char buf[3];
    for (unsigned char b : md) {
        std::snprintf(buf, sizeof buf, "%02x", b);
        hex += buf;
    }
    return hex;
}

// The verifier below deliberately avoids the library's space, distance set
// and builder code: it works on its own rational matrix.
namespace {

using Q = boost::rational<std::int64_t>;

// Comparisons against plain integers recurse forever under C++20 rewriting.
const Q zero(0);

struct Reject {
    std::string why;
};

[[noreturn]] void reject(const std::string& why) { throw Reject{why}; }

std::int64_t to_int(std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) reject("malformed rational '" + std::string(s) + "'");
    return v;
}

Q rational(const json& v) {
    if (!v.is_string()) reject("distances must be rational strings");
    const auto& s = v.get_ref<const std::string&>();
    auto slash = s.find('/');
    std::int64_t n = to_int(std::string_view(s).substr(0, slash));
    std::int64_t d = slash == std::string::npos ? 1 : to_int(std::string_view(s).substr(slash + 1));
    if (d <= 0 || n < 0) reject("malformed rational '" + s + "'");
    return Q(n, d);
}

struct Doc {
    std::vector<Q> D;
    std::vector<std::int64_t> ids;
    std::map<std::int64_t, std::size_t> pos;
    std::vector<std::vector<Q>> dist;
    std::vector<int> colour;
    std::map<std::string, std::vector<std::size_t>> sets;  // positions

    const Q& d(std::size_t a, std::size_t b) const { return dist[a][b]; }
    std::size_t at(const json& id) const {
        if (!id.is_number_integer()) reject("point ids must be integers");
        auto it = pos.find(id.get<std::int64_t>());
        if (it == pos.end()) reject("point " + id.dump() + " is not in the ambient subspace");
        return it->second;
    }
    const std::vector<std::size_t>& set(const json& c, const char* key) const {
        if (!c.contains(key) || !c.at(key).is_string()) reject(std::string("check needs a set name in '") + key + "'");
        auto it = sets.find(c.at(key).get<std::string>());
        if (it == sets.end()) reject("unknown set '" + c.at(key).get<std::string>() + "'");
        return it->second;
    }
    bool in_D(const Q& q) const { return std::find(D.begin(), D.end(), q) != D.end(); }
};

bool triangle(const Q& a, const Q& b, const Q& c) { return a <= b + c && b <= a + c && c <= a + b; }

std::vector<std::pair<std::size_t, Q>> read_fn(const Doc& doc, const json& c) {
    if (!c.contains("fn") || !c.at("fn").is_array()) reject("orbit check needs fn");
    std::vector<std::pair<std::size_t, Q>> f;
    for (auto& e : c.at("fn")) {
        if (!e.is_array() || e.size() != 2) reject("fn entries are [point, distance]");
        f.emplace_back(doc.at(e[0]), rational(e[1]));
    }
    return f;
}

bool realizes(const Doc& doc, std::size_t y, const std::vector<std::pair<std::size_t, Q>>& f) {
    for (auto& [x, v] : f)
        if (x == y || doc.d(y, x) != v) return false;
    return true;
}

void check_metric(const Doc& doc) {
    const std::size_t n = doc.ids.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if ((a == b) != (doc.d(a, b) == zero)) reject("zero distances must sit exactly on the diagonal");
            if (doc.d(a, b) != doc.d(b, a)) reject("distance matrix is not symmetric");
            if (!doc.in_D(doc.d(a, b))) reject("distance outside D");
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (!triangle(doc.d(a, b), doc.d(b, c), doc.d(a, c)))
                    reject("triangle inequality fails on points " + std::to_string(doc.ids[a]) + ", " +
                           std::to_string(doc.ids[b]) + ", " + std::to_string(doc.ids[c]));
}

void check_colours(const Doc& doc, const std::string& strategy) {
    auto colon = strategy.find(':');
    std::string head = strategy.substr(0, colon);
    for (std::size_t i = 0; i < doc.ids.size(); ++i) {
        auto p = static_cast<std::uint64_t>(doc.ids[i]);
        int want;
        if (head == "const") {
            want = strategy == "const:1";
        } else if (head == "parity") {
            want = static_cast<int>(p & 1);
        } else if (head == "random") {
            std::uint64_t seed = static_cast<std::uint64_t>(to_int(std::string_view(strategy).substr(colon + 1)));
            want = static_cast<int>(mix64(seed ^ mix64(p)) & 1u);
        } else {
            reject("colours of strategy '" + strategy + "' cannot be recomputed from point ids");
        }
        if (doc.colour[i] != want) reject("colour of point " + std::to_string(doc.ids[i]) + " disagrees with " + strategy);
    }
}

void check_embedding(const Doc& doc, const json& c) {
    const auto& rows = c.at("source");
    const auto& src = c.at("src");
    const auto& map = c.at("map");
    const std::size_t k = src.size();
    if (map.size() != k || rows.size() != k) reject("embedding sizes disagree");
    std::vector<std::size_t> img;
    std::set<std::size_t> seen;
    for (auto& t : map) {
        img.push_back(doc.at(t));
        if (!seen.insert(img.back()).second) reject("embedding is not injective");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!rows[i].is_array() || rows[i].size() != k) reject("source matrix is not square");
        for (std::size_t j = 0; j < k; ++j)
            if (rational(rows[i][j]) != doc.d(img[i], img[j]))
                reject("embedding does not preserve the distance between source points " + src[i].dump() + " and " +
                       src[j].dump());
    }
    for (auto& f : c.at("fixed")) {
        bool ok = false;
        for (std::size_t i = 0; i < k; ++i) ok = ok || (src[i] == f && map[i] == f);
        if (!ok) reject("embedding does not fix point " + f.dump());
    }
}

void check_copy(const Doc& doc, const json& c) {
    const auto& X = doc.set(c, "set");
    const auto depth = c.at("depth").get<std::size_t>();
    std::vector<Q> values;
    for (auto& v : c.at("against")) {
        Q q = rational(v);
        if (q > zero && doc.in_D(q)) values.push_back(q);
    }
    const std::size_t k = std::min(depth, X.size());
    if (X.empty()) reject("copy check on an empty set");
    std::vector<Q> t(k);
    // Every choice of values over the first k points that a new point could
    // take must be realized inside X.
    auto rec = [&](auto&& self, std::size_t i, const std::vector<std::size_t>& cand) -> void {
        if (cand.empty()) reject("copy check at depth " + std::to_string(depth) + " finds an unrealized function");
        if (i == k) return;
        self(self, i + 1, cand);  // leave point i out of the domain
        for (const Q& v : values) {
            bool kat = true;
            for (std::size_t j = 0; j < i && kat; ++j)
                if (t[j] > zero) kat = triangle(v, t[j], doc.d(X[i], X[j]));
            if (!kat) continue;
            t[i] = v;
            std::vector<std::size_t> next;
            for (std::size_t y : cand)
                if (y != X[i] && doc.d(y, X[i]) == v) next.push_back(y);
            self(self, i + 1, next);
            t[i] = zero;
        }
    };
    rec(rec, 0, X);
}

void check_uniform(const Doc& doc, const json& c) {
    const auto& E = doc.set(c, "set");
    const auto from = c.at("from").get<std::size_t>();
    const Q r = rational(c.at("rank"));
    for (std::size_t k = from + 1; k <= E.size(); ++k) {
        std::map<std::vector<Q>, int> seen;
        for (std::size_t y = k; y < E.size(); ++y) {
            std::vector<Q> prof;
            for (std::size_t x = 0; x < k; ++x) prof.push_back(doc.d(E[y], E[x]));
            const Q low = *std::min_element(prof.begin(), prof.end());
            if (low != r) continue;
            auto [it, fresh] = seen.emplace(prof, doc.colour[E[y]]);
            if (!fresh && it->second != doc.colour[E[y]])
                reject("a rank " + c.at("rank").get<std::string>() + " function over the first " + std::to_string(k) +
                       " points has realizers of both colours");
        }
    }
}

void check_classes(const Doc& doc, const json& c) {
    const auto& Y = doc.set(c, "set");
    const Q r = rational(c.at("r"));
    std::size_t classes = 0;
    std::vector<char> done(Y.size(), 0);
    for (std::size_t i = 0; i < Y.size(); ++i) {
        if (done[i]) continue;
        ++classes;
        for (std::size_t j = i; j < Y.size(); ++j) {
            bool close = doc.d(Y[i], Y[j]) <= r;
            if (!close) continue;
            if (done[j]) reject("relation <= r is not transitive on the set");
            done[j] = 1;
            if (doc.colour[Y[j]] != doc.colour[Y[i]]) reject("a class has points of both colours");
            for (std::size_t l = 0; l < Y.size(); ++l)
                if ((doc.d(Y[j], Y[l]) <= r) != (doc.d(Y[i], Y[l]) <= r))
                    reject("relation <= r is not transitive on the set");
        }
    }
    if (c.contains("classes") && c.at("classes").get<std::size_t>() != classes) reject("class count disagrees");
}

Doc load(const json& d) {
    if (!d.is_object()) reject("certificate must be a JSON object");
    for (const char* k : {"format", "kind", "D", "ambient", "colours", "strategy", "sets", "checks", "digest"})
        if (!d.contains(k)) reject(std::string("missing field '") + k + "'");
    if (d.at("format") != "urforge-certificate/1") reject("unknown certificate format");
    if (!d.at("digest").is_string() || d.at("digest").get<std::string>() != certificate_digest(d))
        reject("digest does not match the document");
    if (d.contains("timestamp") && !d.at("timestamp").is_string()) reject("timestamp must be a string");
    Doc doc;
    for (auto& v : d.at("D")) doc.D.push_back(rational(v));
    if (doc.D.empty() || doc.D.front() != zero || !std::is_sorted(doc.D.begin(), doc.D.end()) ||
        std::adjacent_find(doc.D.begin(), doc.D.end()) != doc.D.end())
        reject("D must be strictly increasing and start at 0");
    const auto& amb = d.at("ambient");
    const auto& ids = amb.at("ids");
    const auto& rows = amb.at("dist");
    const auto& col = d.at("colours");
    if (!ids.is_array() || !rows.is_array() || !col.is_array() || rows.size() != ids.size() || col.size() != ids.size())
        reject("ambient ids, matrix and colours disagree in size");
    for (auto& id : ids) {
        if (!id.is_number_integer() || id.get<std::int64_t>() < 0) reject("point ids must be non-negative integers");
        if (!doc.pos.emplace(id.get<std::int64_t>(), doc.ids.size()).second) reject("duplicate point id");
        doc.ids.push_back(id.get<std::int64_t>());
    }
    for (auto& r : rows) {
        if (!r.is_array() || r.size() != ids.size()) reject("ambient matrix is not square");
        std::vector<Q> row;
        for (auto& v : r) row.push_back(rational(v));
        doc.dist.push_back(std::move(row));
    }
    for (auto& c : col) {
        if (!c.is_number_integer() || (c.get<int>() != 0 && c.get<int>() != 1)) reject("colours must be 0 or 1");
        doc.colour.push_back(c.get<int>());
    }
    if (!d.at("sets").is_object()) reject("sets must be an object");
    for (auto& [name, pts] : d.at("sets").items()) {
        if (!pts.is_array()) reject("set '" + name + "' must be an array");
        std::vector<std::size_t> v;
        std::set<std::size_t> seen;
        for (auto& p : pts) {
            v.push_back(doc.at(p));
            if (!seen.insert(v.back()).second) reject("set '" + name + "' repeats a point");
        }
        doc.sets[name] = std::move(v);
    }
    return doc;
}

}  // namespace

Verdict verify_certificate(const json& d) {
    Verdict out;
    try {
        Doc doc = load(d);
        if (!d.at("checks").is_array() || d.at("checks").empty()) reject("no checks to replay");
        bool metric = false;
        for (auto& c : d.at("checks")) {
            if (!c.is_object() || !c.contains("type") || !c.at("type").is_string()) reject("malformed check");
            const std::string type = c.at("type");
            if (type == "metric") {
                check_metric(doc);
                metric = true;
            } else if (type == "colours") {
                check_colours(doc, d.at("strategy").get<std::string>());
            } else if (type == "embedding") {
                check_embedding(doc, c);
            } else if (type == "orbit") {
                auto f = read_fn(doc, c);
                for (std::size_t y : doc.set(c, "set"))
                    if (!realizes(doc, y, f)) reject("point " + std::to_string(doc.ids[y]) + " is not in the orbit");
            } else if (type == "orbit_colour") {
                auto f = read_fn(doc, c);
                const int want = c.at("colour").get<int>();
                std::size_t hits = 0;
                for (std::size_t y : doc.set(c, "within"))
                    if (realizes(doc, y, f)) {
                        ++hits;
                        if (doc.colour[y] != want) reject("orbit point " + std::to_string(doc.ids[y]) + " has the wrong colour");
                    }
                if (c.contains("at_least") && hits < c.at("at_least").get<std::size_t>()) reject("orbit is too small");
            } else if (type == "monochromatic") {
                const int want = c.at("colour").get<int>();
                for (std::size_t y : doc.set(c, "set"))
                    if (doc.colour[y] != want) reject("point " + std::to_string(doc.ids[y]) + " has the wrong colour");
            } else if (type == "classes_monochromatic") {
                check_classes(doc, c);
            } else if (type == "size") {
                if (doc.set(c, "set").size() < c.at("min").get<std::size_t>()) reject("set is smaller than claimed");
            } else if (type == "copy") {
                check_copy(doc, c);
            } else if (type == "uniform") {
                check_uniform(doc, c);
            } else {
                reject("unknown check type '" + type + "'");
            }
            ++out.checks;
        }
        if (!metric) reject("certificate does not check the metric");
        if (d.contains("parts")) {
            if (!d.at("parts").is_array()) reject("parts must be an array");
            std::size_t k = 0;
            for (auto& p : d.at("parts")) {
                auto v = verify_certificate(p);
                if (!v.ok) reject("part " + std::to_string(k) + ": " + v.failure);
                out.checks += v.checks;
                ++k;
            }
        }
        out.ok = true;
    } catch (const Reject& r) {
        out.failure = r.why;
    } catch (const json::exception& e) {
        out.failure = std::string("malformed certificate: ") + e.what();
    } catch (const std::exception& e) {
        out.failure = e.what();
    }
    return out;
}

}  // namespace urforge
