#include "oracles.hpp"
#include "urforge/distset.hpp"

#include <doctest.h>

using namespace urforge;

TEST_SUITE("distset") {

TEST_CASE("canonicalize clears denominators and scales") {
    auto c = canonicalize(DistanceSet{Dist(1, 2), Dist(1)});
    CHECK(c.set == DistanceSet{1, 2});
    CHECK(c.scale == Dist(1, 2));
    auto c2 = canonicalize(DistanceSet{1, 3});
    CHECK(c2.set == DistanceSet{1, 3});
    CHECK(c2.scale == Dist(1));
    auto c3 = canonicalize(DistanceSet{2, 6});
    CHECK(c3.set == DistanceSet{1, 3});
    CHECK(c3.scale == Dist(2));
    CHECK_THROWS_WITH_AS(canonicalize(DistanceSet{}), "no positive distances", PreconditionError);
}

TEST_CASE("predecessor and successor") {
    DistanceSet d{1, 3};
    CHECK(predecessor(d, 3) == Dist(1));
    CHECK(predecessor(d, 1) == Dist(0));
    CHECK(predecessor(d, 2) == Dist(1));
    CHECK(successor(d, 1) == Dist(3));
    CHECK(successor(d, 3) == Dist(3));
    CHECK(successor(DistanceSet{1, 2, 5, 6}, 2) == Dist(5));
    CHECK_THROWS_AS(successor(d, 4), PreconditionError);
    CHECK_THROWS_AS(predecessor(d, 0), PreconditionError);
}

TEST_CASE("jump numbers") {
    CHECK(is_jump(DistanceSet{1, 3}, 1));
    CHECK_FALSE(is_jump(DistanceSet{1, 2}, 1));
    CHECK(is_jump(DistanceSet{1, 2, 5, 6}, 2));
    CHECK_FALSE(is_jump(DistanceSet{1, 3}, 3));
    CHECK_THROWS_AS(is_jump(DistanceSet{1, 3}, 2), PreconditionError);
}

TEST_CASE("universality examples") {
    CHECK(is_universal(DistanceSet{1}).universal);
    CHECK(is_universal(DistanceSet{1, 2, 3}).universal);
    auto r = is_universal(DistanceSet{1, 2, 4});
    REQUIRE_FALSE(r.universal);
    REQUIRE(r.witness);
    CHECK(r.witness->bc == Dist(2));
    CHECK(r.witness->a0 == std::array<Dist, 2>{Dist(1), Dist(1)});
    CHECK(r.witness->a1 == std::array<Dist, 2>{Dist(4), Dist(2)});
    CHECK(r.witness->admissible.empty());
}

TEST_CASE("witness is a genuine failure") {
    for (auto& v : oracle::small_sets(8, 3)) {
        DistanceSet d(v);
        auto r = is_universal(d);
        if (r.universal) continue;
        auto& w = *r.witness;
        bool listed = false;
        for (auto& f : oracle::failing_amalgams(v))
            listed = listed || (f.bc == w.bc && f.a0b == w.a0[0] && f.a0c == w.a0[1] && f.a1b == w.a1[0] && f.a1c == w.a1[1]);
        CHECK_MESSAGE(listed, d.str());
    }
}

TEST_CASE("universality agrees with the 4-point scan") {
    for (auto& v : oracle::small_sets(9, 3)) {
        DistanceSet d(v);
        CHECK_MESSAGE(is_universal(d).universal == oracle::failing_amalgams(v).empty(), d.str());
        CHECK(is_universal(d).universal == is_universal(canonicalize(d).set).universal);
    }
}

TEST_CASE("initial segments are universal") {
    for (int m = 1; m <= 6; ++m) {
        std::vector<Dist> v;
        for (int i = 0; i <= m; ++i) v.push_back(i);
        CHECK(is_universal(DistanceSet(v)).universal);
    }
}

TEST_CASE("block examples") {
    CHECK(blocks(DistanceSet{1}) == std::vector<Block>{{1}});
    CHECK(blocks(DistanceSet{1, 2, 5, 6}) == std::vector<Block>{{1, 2}, {5, 6}});
    CHECK(blocks(DistanceSet{1, 2, 3}) == std::vector<Block>{{1, 2, 3}});
    CHECK_THROWS_WITH_AS(blocks(DistanceSet{1, 2, 4}), "blocks undefined for non-universal sets", PreconditionError);
}

TEST_CASE("rational distance sets") {
    DistanceSet d{Dist(1, 2), Dist(1), Dist(5, 2)};
    CHECK(is_universal(d).universal == is_universal(canonicalize(d).set).universal);
    CHECK(successor(d, Dist(1, 2)) == Dist(1));
    CHECK(parse_dist("5/2") == Dist(5, 2));
    CHECK(parse_dist(" 4 ") == Dist(4));
    CHECK_THROWS_AS(parse_dist("x"), ParseError);
    CHECK_THROWS_AS(parse_dist("1/0"), ParseError);
    CHECK(Dist(6, 4).str() == "3/2");
}

TEST_CASE("triangle table matches arithmetic") {
    DistanceSet d{Dist(1, 2), 1, 2, 5};
    TriangleTable tt(d);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            for (std::size_t k = 0; k < d.size(); ++k) {
                bool arith = absdiff(d[i], d[j]) <= d[k] && d[k] <= d[i] + d[j];
                CHECK(tt.ok(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)) == arith);
            }
}

}  // TEST_SUITE
