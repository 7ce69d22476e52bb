#include <doctest.h>

#include "flipsurf/errors.hpp"
#include "flipsurf/json_io.hpp"
#include "flipsurf/proofkit.hpp"

using namespace flipsurf;

TEST_CASE("surface json round trip") {
    MarkedSurface s = parse_surface("1,2:[3,1],2");
    CHECK(surface_from_json(surface_to_json(s)) == s);
}

TEST_CASE("triangulation json round trips across surface kinds") {
    for (const char* text :
         {"0,1:[6],0", "0,1:[4],1", "0,2:[2,1],0", "1,1:[1],0", "0,1:[2],2"}) {
        TaggedTriangulation t = build_canonical_triangulation(parse_surface(text)).t;
        TaggedTriangulation back = triangulation_from_json(triangulation_to_json(t));
        // vertices are reconstructed from the combinatorics, so the round
        // trip must reproduce the exact same labeled structure
        CHECK(back == t);
    }
}

TEST_CASE("signs survive the round trip") {
    TaggedTriangulation t = build_canonical_triangulation(parse_surface("0,1:[4],1")).t;
    t = t.flipped(1); // wander somewhere with possibly nontrivial signs
    t = t.flipped(2);
    TaggedTriangulation back = triangulation_from_json(triangulation_to_json(t));
    CHECK(back.signs == t.signs);
    CHECK(back == t);
}

TEST_CASE("loader rejects broken complexes") {
    TaggedTriangulation t = build_canonical_triangulation(parse_surface("0,1:[6],0")).t;
    auto j = triangulation_to_json(t);

    auto broken = j;
    broken["triangles"][0][0] = 99;
    CHECK_THROWS_AS(triangulation_from_json(broken), InvalidTriangulation);

    auto missing = j;
    missing["triangles"].erase(0);
    CHECK_THROWS_AS(triangulation_from_json(missing), InvalidTriangulation);

    auto badfold = j;
    badfold["folds"].push_back({0, 1});
    CHECK_THROWS_AS(triangulation_from_json(badfold), InvalidTriangulation);
}

TEST_CASE("file io failures carry the io error type") {
    CHECK_THROWS_AS(read_file("/nonexistent/path/x.json"), IoFailure);
}
