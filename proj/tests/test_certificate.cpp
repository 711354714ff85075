#include "urforge/engine.hpp"

#include <doctest.h>

using namespace urforge;
using nlohmann::json;

namespace {

Certificate sample(const char* strategy = "random:3") {
    auto chi = Colouring::parse(strategy);
    GameBudget b;
    return find_monochromatic_copy(DistanceSet{1, 3}, chi, 10, b, 5).certificate;
}

json resealed(json doc) {
    doc["digest"] = certificate_digest(doc);
    return doc;
}

}  // namespace

TEST_SUITE("certificate") {

TEST_CASE("fresh certificates verify") {
    auto c = sample();
    auto v = verify_certificate(c);
    CHECK(v.ok);
    CHECK(v.checks > 5);
    CHECK(c.kind() == "mono-copy");
    CHECK(c.doc.at("parts").size() == 1);
}

TEST_CASE("digest ignores the timestamp only") {
    auto c = sample();
    auto d = c.doc;
    d["timestamp"] = "2026-01-01T00:00:00Z";
    CHECK(certificate_digest(d) == c.doc.at("digest"));
    CHECK(verify_certificate(d).ok);
    d["info"]["target"] = 11;
    CHECK(certificate_digest(d) != c.doc.at("digest"));
}

TEST_CASE("tampered colour is rejected") {
    auto c = sample();
    auto d = c.doc;
    auto& col = d["colours"];
    col[0] = 1 - col[0].get<int>();
    auto v = verify_certificate(d);
    CHECK_FALSE(v.ok);
    CHECK(v.failure.find("digest") != std::string::npos);
    // With a recomputed digest the replayed checks still catch it.
    auto r = verify_certificate(resealed(d));
    CHECK_FALSE(r.ok);
}

TEST_CASE("recolouring a point of X is caught by monochromaticity") {
    auto chi = Colouring::parse("profile-hash");
    GameBudget b;
    auto c = find_monochromatic_copy(DistanceSet{1, 2}, chi, 10, b, 5).certificate;
    auto d = c.doc;
    const auto ids = d["ambient"]["ids"].get<std::vector<Point>>();
    const Point x = d["sets"]["X"][0];
    auto pos = std::find(ids.begin(), ids.end(), x) - ids.begin();
    d["colours"][pos] = 1 - d["colours"][pos].get<int>();
    auto v = verify_certificate(resealed(d));
    CHECK_FALSE(v.ok);
    CHECK(v.failure.find("colour") != std::string::npos);
}

TEST_CASE("tampered distance is rejected") {
    auto c = sample();
    auto d = c.doc;
    auto& rows = d["ambient"]["dist"];
    REQUIRE(rows.size() >= 3);
    rows[0][1] = rows[0][1] == "1" ? "3" : "1";
    CHECK_FALSE(verify_certificate(d).ok);
    auto v = verify_certificate(resealed(d));
    CHECK_FALSE(v.ok);
    rows[1][0] = rows[0][1];
    CHECK_FALSE(verify_certificate(resealed(d)).ok);
}

TEST_CASE("structural tampering") {
    auto c = sample();
    for (const char* field : {"kind", "D", "ambient", "colours", "sets", "checks", "digest", "format"}) {
        auto d = c.doc;
        d.erase(field);
        CHECK_FALSE(verify_certificate(d).ok);
    }
    auto d = c.doc;
    d["checks"].push_back({{"type", "size"}, {"set", "X"}, {"min", 100000}});
    CHECK_FALSE(verify_certificate(resealed(d)).ok);
    d = c.doc;
    d["checks"].push_back({{"type", "teleport"}});
    CHECK_FALSE(verify_certificate(resealed(d)).ok);
    d = c.doc;
    d["sets"]["X"].push_back(d["sets"]["X"][0]);
    CHECK_FALSE(verify_certificate(resealed(d)).ok);
    d = c.doc;
    d["parts"][0]["colours"][0] = 1 - d["parts"][0]["colours"][0].get<int>();
    CHECK_FALSE(verify_certificate(resealed(d)).ok);
    CHECK_FALSE(verify_certificate(json::array()).ok);
    CHECK_FALSE(verify_certificate(json::object()).ok);
}

TEST_CASE("copy check in the verifier") {
    // Three points at distance 1 and one at 3: a copy prefix at depth 1 over
    // {0,1,3} needs partners at 1 and 3 from the first point.
    Space s = Space::from_matrix(DistanceSet{1, 3}, {{0, 1, 1, 3}, {1, 0, 1, 3}, {1, 1, 0, 3}, {3, 3, 3, 0}});
    auto chi = Colouring::parse("const:0");
    for (bool with_far : {true, false}) {
        CertificateWriter w("mono-copy", s, chi);
        std::vector<Point> X{0, 1, 2};
        if (with_far) X.push_back(3);
        w.set("X", X);
        w.check({{"type", "copy"}, {"set", "X"}, {"depth", 1}, {"against", {"0", "1", "3"}}});
        CHECK(verify_certificate(w.finish()).ok == with_far);
    }
    CertificateWriter w("mono-copy", s, chi);
    w.set("X", {0, 1, 2});
    w.check({{"type", "copy"}, {"set", "X"}, {"depth", 2}, {"against", {"0", "1"}}});
    CHECK(verify_certificate(w.finish()).ok);
}

TEST_CASE("uniform and class checks in the verifier") {
    Space s = Space::from_matrix(DistanceSet{1, 3}, {{0, 1, 3, 3}, {1, 0, 3, 3}, {3, 3, 0, 1}, {3, 3, 1, 0}});
    auto split = Colouring::from_table({{2, 1}, {3, 1}});
    CertificateWriter w("mono-classes", s, split);
    w.set("Y", {0, 1, 2, 3});
    w.check({{"type", "classes_monochromatic"}, {"set", "Y"}, {"r", "1"}, {"classes", 2}});
    CHECK(verify_certificate(w.finish()).ok);
    auto mixed = Colouring::from_table({{1, 1}});
    CertificateWriter m("mono-classes", s, mixed);
    m.set("Y", {0, 1, 2, 3});
    m.check({{"type", "classes_monochromatic"}, {"set", "Y"}, {"r", "1"}});
    CHECK_FALSE(verify_certificate(m.finish()).ok);

    // Points 2 and 3 realize (0 ↦ 3) over the first point; rank 3.
    CertificateWriter u("uniform-enum", s, mixed);
    u.set("E", {0, 1, 2, 3});
    u.check({{"type", "uniform"}, {"set", "E"}, {"from", 0}, {"rank", "3"}});
    CHECK(verify_certificate(u.finish()).ok);
    auto odd = Colouring::from_table({{3, 1}});
    CertificateWriter u2("uniform-enum", s, odd);
    u2.set("E", {0, 1, 2, 3});
    u2.check({{"type", "uniform"}, {"set", "E"}, {"from", 0}, {"rank", "3"}});
    CHECK_FALSE(verify_certificate(u2.finish()).ok);
}

TEST_CASE("colours of id-based strategies are recomputed") {
    auto c = sample("parity");
    CHECK(c.doc.at("checks")[1].at("type") == "colours");
    auto d = c.doc;
    const int c0 = d["colours"][0];
    d["strategy"] = "const:" + std::to_string(1 - c0);
    CHECK_FALSE(verify_certificate(resealed(d)).ok);
}

}  // TEST_SUITE
