#include <doctest.h>

#include <random>
#include <set>

#include "flipsurf/errors.hpp"
#include "flipsurf/explorer.hpp"
#include "flipsurf/models.hpp"
#include "flipsurf/mutation.hpp"

using namespace flipsurf;

namespace {

MarkedSurface polygon(int m) { return {0, {m}, 0}; }
MarkedSurface punctured(int m) { return {0, {m}, 1}; }
MarkedSurface annulus(int p, int q) { return {0, {p, q}, 0}; }

} // namespace

TEST_CASE("model selection") {
    CHECK(model_kind(polygon(5)) == ModelKind::TypeA);
    CHECK(model_kind(punctured(3)) == ModelKind::TypeD);
    CHECK(model_kind(annulus(2, 2)) == ModelKind::Annulus);
    CHECK_THROWS_AS(model_kind(parse_surface("1,1:[1],0")), UnsupportedSurface);
    CHECK_THROWS_AS(model_kind(punctured(1)), UnsupportedSurface);
}

TEST_CASE("arc counts") {
    CHECK(enumerate_arcs(polygon(5)).size() == 5);   // m(m-3)/2
    CHECK(enumerate_arcs(polygon(8)).size() == 20);
    CHECK(enumerate_arcs(punctured(2)).size() == 4); // n^2
    CHECK(enumerate_arcs(punctured(3)).size() == 9);
    CHECK(enumerate_arcs(punctured(4)).size() == 16);
    CHECK(enumerate_arcs(punctured(8)).size() == 64);
}

TEST_CASE("punctured-polygon crossing rules, pinned cases") {
    MarkedSurface s = punctured(5);
    auto chord = [](int a, int b) { return ModelArc(DArc::chord(a, b)); };
    auto radius = [](int v, bool n) { return ModelArc(DArc::radius(v, n)); };

    // same underlying pair, opposite sides of the puncture: a digon
    CHECK(compatible(s, chord(0, 2), chord(2, 0)));
    // nested with a shared endpoint
    CHECK(compatible(s, chord(0, 2), chord(0, 3)));
    // shared endpoint but forced through the other's cut interval
    CHECK(!compatible(s, chord(1, 4), chord(4, 2)));
    // proper overlap
    CHECK(!compatible(s, chord(0, 3), chord(2, 0)));
    // radius against a chord: blocked exactly inside the cut interval
    CHECK(!compatible(s, radius(1, false), chord(0, 2)));
    CHECK(compatible(s, radius(0, false), chord(0, 2)));
    CHECK(compatible(s, radius(3, true), chord(0, 2)));
    // radii: tags must agree at the shared puncture unless parallel
    CHECK(compatible(s, radius(0, false), radius(0, true)));
    CHECK(compatible(s, radius(0, true), radius(2, true)));
    CHECK(!compatible(s, radius(0, true), radius(2, false)));
}

TEST_CASE("pentagon flip against the frozen unique completion") {
    ModelTriangulation fan = fan_triangulation(polygon(5)); // {0-2, 0-3}
    CHECK(is_model_triangulation(fan));
    ModelTriangulation f1 = model_flip(fan, 1);
    CHECK(f1.arcs[0] == ModelArc(PolygonArc{1, 3}));
    CHECK(f1.arcs[1] == ModelArc(PolygonArc{0, 3}));
    ModelTriangulation back = model_flip(f1, 1);
    CHECK(back == fan);
}

TEST_CASE("digon fold flip toggles the tag") {
    ModelTriangulation t;
    t.surface = punctured(2);
    t.arcs = {DArc::radius(0, false), DArc::radius(0, true)};
    CHECK(is_model_triangulation(t));
    ModelTriangulation f = model_flip(t, 1);
    CHECK(f.arcs[0] == ModelArc(DArc::radius(1, true)));
    CHECK(f.arcs[1] == ModelArc(DArc::radius(0, true)));
}

TEST_CASE("model flips are involutions") {
    std::mt19937 rng(31);
    for (MarkedSurface s : {polygon(6), punctured(4)}) {
        ModelTriangulation t = fan_triangulation(s);
        for (int step = 0; step < 250; ++step) {
            int label = 1 + static_cast<int>(rng() % t.arcs.size());
            ModelTriangulation f = model_flip(t, label);
            CHECK(is_model_triangulation(f));
            CHECK(model_flip(f, label) == t);
            t = std::move(f);
        }
    }
}

TEST_CASE("rotation orders in type A") {
    for (int n = 1; n <= 8; ++n) {
        RotationOrder ord = rotation_order(polygon(n + 3));
        CHECK(ord.finite);
        CHECK(ord.order == n + 3);
    }
}

TEST_CASE("rotation orders in type D") {
    for (int n = 3; n <= 8; ++n) {
        RotationOrder ord = rotation_order(punctured(n));
        CHECK(ord.finite);
        CHECK(ord.order == (n % 2 == 0 ? n : 2 * n));
    }
}

TEST_CASE("annulus rotation has infinite order") {
    RotationOrder ord = rotation_order(annulus(1, 1));
    CHECK(!ord.finite);

    OrbitResult orb = orbit(annulus(1, 1), AnnulusArc::bridge(0, 0), 50);
    CHECK(!orb.first_repetition);
    std::set<ModelArc> seen(orb.arcs.begin(), orb.arcs.end());
    CHECK(seen.size() == 50);
}

TEST_CASE("orbit lengths") {
    OrbitResult a = orbit(polygon(5), PolygonArc{0, 2}, 6);
    CHECK(a.first_repetition == 5);

    OrbitResult d = orbit(punctured(3), DArc::radius(0, false), 7);
    CHECK(d.first_repetition == 6); // odd case: twice the polygon size
}

TEST_CASE("rotation is a compatibility-preserving permutation") {
    for (MarkedSurface s : {polygon(6), punctured(4)}) {
        std::vector<ModelArc> arcs = enumerate_arcs(s);
        std::set<ModelArc> image;
        for (const ModelArc& x : arcs) image.insert(model_rotate(s, x));
        CHECK(image.size() == arcs.size());
        for (const ModelArc& x : arcs)
            for (const ModelArc& y : arcs)
                CHECK(compatible(s, x, y) ==
                      compatible(s, model_rotate(s, x), model_rotate(s, y)));
    }
}

TEST_CASE("combinatorial shadow of model triangulations validates and matches flips") {
    for (MarkedSurface s : {polygon(6), punctured(4)}) {
        std::vector<ModelTriangulation> all = enumerate_triangulations(s);
        for (const ModelTriangulation& t : all) {
            TaggedTriangulation shadow = to_tagged(t);
            shadow.validate();
            for (int label = 1; label <= s.rank(); ++label) {
                // flipping in the model and flipping the shadow agree
                CHECK(canonical_key(to_tagged(model_flip(t, label))) ==
                      canonical_key(shadow.flipped(label)));
            }
        }
    }
}

TEST_CASE("bridge crossing numbers on the annulus") {
    MarkedSurface s = annulus(1, 1);
    auto bridge = [](int o, int i) { return ModelArc(AnnulusArc::bridge(o, i)); };
    CHECK(compatible(s, bridge(0, 0), bridge(0, 1)));
    CHECK(compatible(s, bridge(0, 0), bridge(0, -1)));
    CHECK(!compatible(s, bridge(0, 0), bridge(0, 2)));
    CHECK(!compatible(s, bridge(0, 5), bridge(0, 0)));

    MarkedSurface s22 = annulus(2, 2);
    CHECK(compatible(s22, AnnulusArc::bridge(0, 0), AnnulusArc::bridge(1, 0)));
    CHECK(compatible(s22, AnnulusArc::bridge(0, 0), AnnulusArc::outer_loop(0)));
    CHECK(!compatible(s22, AnnulusArc::bridge(1, 0), AnnulusArc::outer_loop(0)));
    CHECK(compatible(s22, AnnulusArc::outer_loop(0), AnnulusArc::inner_loop(1)));
    CHECK(!compatible(s22, AnnulusArc::outer_loop(0), AnnulusArc::outer_loop(1)));
}

TEST_CASE("annulus flips walk the bridge ladder") {
    ModelTriangulation t = fan_triangulation(annulus(1, 1));
    CHECK(t.arcs == std::vector<ModelArc>{AnnulusArc::bridge(0, 0),
                                          AnnulusArc::bridge(0, 1)});
    ModelTriangulation up = model_flip(t, 1);
    CHECK(up.arcs[0] == ModelArc(AnnulusArc::bridge(0, 2)));
    ModelTriangulation down = model_flip(t, 2);
    CHECK(down.arcs[1] == ModelArc(AnnulusArc::bridge(0, -1)));
    CHECK(model_flip(up, 1) == t);
}

TEST_CASE("endpoint replay rejects non-green and non-terminal sequences") {
    ModelTriangulation start = fan_triangulation(polygon(5));
    CHECK_THROWS_AS(green_endpoint_matches_rotation(start, {1, 1}), NotMaximalGreen);
    CHECK_THROWS_AS(green_endpoint_matches_rotation(start, {1}), NotMaximalGreen);
    GreenSearchResult res =
        find_maximal_green_sequences(b_matrix(to_tagged(start)), 8);
    for (const auto& seq : res.sequences)
        CHECK(green_endpoint_matches_rotation(start, seq));
}

TEST_CASE("arc text round trip") {
    MarkedSurface d = punctured(4);
    for (const char* text : {"r0+", "r3-", "c0>2", "c3>1"})
        CHECK(arc_to_string(parse_arc(d, text)) == text);
    CHECK(arc_to_string(parse_arc(polygon(6), "2-5")) == "2-5");
    CHECK(arc_to_string(parse_arc(annulus(2, 2), "b1:3")) == "b1:3");
    CHECK_THROWS_AS(parse_arc(d, "x7"), UnsupportedSurface);
}
