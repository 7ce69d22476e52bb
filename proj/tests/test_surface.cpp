#include <doctest.h>

#include <random>

#include "flipsurf/errors.hpp"
#include "flipsurf/surface.hpp"

using namespace flipsurf;

TEST_CASE("rank formula") {
    CHECK(MarkedSurface{1, {1}, 0}.rank() == 4);
    CHECK(MarkedSurface{0, {7}, 0}.rank() == 4);  // heptagon
    CHECK(MarkedSurface{0, {4}, 1}.rank() == 4);  // once-punctured square
    CHECK(MarkedSurface{0, {5}, 0}.rank() == 2);
    CHECK(MarkedSurface{2, {1}, 0}.rank() == 10);
}

TEST_CASE("validation") {
    CHECK(validate(MarkedSurface{0, {3}, 0}).has_value());  // rank 0
    CHECK(validate(MarkedSurface{0, {}, 2}).has_value());   // closed
    CHECK(validate(MarkedSurface{0, {2, 0}, 0}).has_value()); // empty component
    CHECK(!validate(MarkedSurface{0, {2, 2}, 0}));
    CHECK(MarkedSurface{0, {2, 2}, 0}.rank() == 4);
    CHECK(!validate(MarkedSurface{0, {1}, 2}));
    // the once-punctured monogon passes the rank cut; the builder rejects it
    CHECK(!validate(MarkedSurface{0, {1}, 1}));
    CHECK(MarkedSurface{0, {1}, 1}.rank() == 1);
}

TEST_CASE("classification") {
    CHECK(classify_type(MarkedSurface{0, {8}, 0}) == ClusterType{SurfaceClass::TypeA, 5});
    CHECK(classify_type(MarkedSurface{0, {5}, 1}) == ClusterType{SurfaceClass::TypeD, 5});
    CHECK(classify_type(MarkedSurface{0, {2, 2}, 0}).kind == SurfaceClass::Other);
    CHECK(classify_type(MarkedSurface{1, {1}, 0}).kind == SurfaceClass::Other);
}

TEST_CASE("classified rank matches the type index") {
    for (int m = 4; m <= 12; ++m) {
        ClusterType ct = classify_type(MarkedSurface{0, {m}, 0});
        CHECK(ct.kind == SurfaceClass::TypeA);
        CHECK(ct.n == MarkedSurface{0, {m}, 0}.rank());
    }
    for (int m = 2; m <= 12; ++m) {
        ClusterType ct = classify_type(MarkedSurface{0, {m}, 1});
        CHECK(ct.kind == SurfaceClass::TypeD);
        CHECK(ct.n == MarkedSurface{0, {m}, 1}.rank());
    }
}

TEST_CASE("rank is monotone under the three growth moves") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> genus(0, 3), boundaries(1, 4), marks(1, 5),
        punctures(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        MarkedSurface s;
        s.genus = genus(rng);
        int b = boundaries(rng);
        for (int y = 0; y < b; ++y) s.boundaries.push_back(marks(rng));
        s.punctures = punctures(rng);

        MarkedSurface plus_mark = s;
        plus_mark.boundaries[0] += 1;
        CHECK(plus_mark.rank() == s.rank() + 1);

        MarkedSurface plus_component = s;
        plus_component.boundaries.push_back(1);
        CHECK(plus_component.rank() == s.rank() + 4);

        MarkedSurface plus_puncture = s;
        plus_puncture.punctures += 1;
        CHECK(plus_puncture.rank() == s.rank() + 3);
    }
}

TEST_CASE("surface text round trip") {
    for (const char* text : {"0,1:[8],0", "1,2:[3,1],2", "0,1:[4],1"}) {
        MarkedSurface s = parse_surface(text);
        CHECK(format_surface(s) == text);
    }
    CHECK_THROWS_AS(parse_surface("nonsense"), UnsupportedSurface);
    CHECK_THROWS_AS(parse_surface("0,2:[1],0"), UnsupportedSurface);
}

TEST_CASE("vertex ids") {
    MarkedSurface s{0, {3, 2}, 2};
    CHECK(s.marked_vertex(0, 2) == 2);
    CHECK(s.marked_vertex(1, 0) == 3);
    CHECK(s.puncture_vertex(1) == 6);
    CHECK(s.locate_marked(4) == std::pair(1, 1));
    CHECK(s.is_puncture_vertex(5));
    CHECK(!s.is_puncture_vertex(4));
}
