#include <doctest.h>

#include <random>

#include "flipsurf/errors.hpp"
#include "flipsurf/explorer.hpp"
#include "flipsurf/mcg.hpp"
#include "flipsurf/models.hpp"
#include "flipsurf/proofkit.hpp"

using namespace flipsurf;

TEST_CASE("group laws") {
    MarkedSurface s{0, {3, 2}, 2};
    std::mt19937 rng(11);
    auto random_element = [&]() {
        MappingClassElement g = identity_element(s);
        for (int& r : g.rotation_powers) r = static_cast<int>(rng() % 7) - 3;
        for (int& t : g.tag_signs) t = rng() % 2 ? 1 : -1;
        return g;
    };
    for (int trial = 0; trial < 50; ++trial) {
        MappingClassElement a = random_element(), b = random_element(),
                            c = random_element();
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, inverse(a)) == identity_element(s));
        CHECK(compose(inverse(a), a) == identity_element(s));
        CHECK(compose(a, identity_element(s)) == a);
    }
    CHECK(power(random_element(), 2).tag_signs == std::vector<int>{1, 1});
}

TEST_CASE("boundary rotation cycles the marked points") {
    MarkedSurface pentagon{0, {5}, 0};
    MappingClassElement rho = boundary_rotation(pentagon, 0);
    int v = 0;
    for (int k = 0; k < 5; ++k) v = act_on_marked(pentagon, rho, 0, v);
    CHECK(v == 0);
    CHECK(act_on_marked(pentagon, rho, 0, 3) == 4);
    CHECK_THROWS_AS(boundary_rotation(pentagon, 1), IndexOutOfRange);
}

TEST_CASE("rotation of one annulus component fixes the other") {
    MarkedSurface annulus{0, {3, 1}, 0};
    MappingClassElement rho_outer = boundary_rotation(annulus, 0);
    CHECK(act_on_marked(annulus, rho_outer, 1, 0) == 0);
    CHECK(act_on_marked(annulus, rho_outer, 0, 2) == 0);
}

TEST_CASE("full boundary rotation acts on bridges as the twist") {
    MarkedSurface annulus{0, {3, 2}, 0};
    ModelArc bridge = AnnulusArc::bridge_winding(annulus, 1, 1, 0);

    // m_Y-th power of either rotation adds one unit of winding
    MappingClassElement outer_twist = power(boundary_rotation(annulus, 0), 3);
    CHECK(act_on_arc(annulus, outer_twist, bridge) ==
          ModelArc(AnnulusArc::bridge_winding(annulus, 1, 1, 1)));
    MappingClassElement inner_twist = power(boundary_rotation(annulus, 1), 2);
    CHECK(act_on_arc(annulus, inner_twist, bridge) ==
          ModelArc(AnnulusArc::bridge_winding(annulus, 1, 1, 1)));
}

TEST_CASE("tag switch is an involution moving only its puncture") {
    MarkedSurface disc{0, {4}, 1};
    MappingClassElement delta = tag_switch(disc, 0);
    CHECK(compose(delta, delta) == identity_element(disc));

    ModelArc chord = DArc::chord(0, 2);
    CHECK(act_on_arc(disc, delta, chord) == chord);
    CHECK(act_on_arc(disc, delta, ModelArc(DArc::radius(1, false))) ==
          ModelArc(DArc::radius(1, true)));
    CHECK_THROWS_AS(tag_switch(disc, 1), IndexOutOfRange);
}

TEST_CASE("tagged rotation composes rotations and switches") {
    MarkedSurface s{0, {2, 2}, 0};
    CHECK(tagged_rotation(s) ==
          compose(boundary_rotation(s, 0), boundary_rotation(s, 1)));

    MarkedSurface d{0, {4}, 1};
    CHECK(tagged_rotation(d) == compose(boundary_rotation(d, 0), tag_switch(d, 0)));
    // squared rotation has a trivial sign component
    CHECK(power(tagged_rotation(d), 2).tag_signs == std::vector<int>{1});
}

TEST_CASE("rotation snapshot on the disc with one inner boundary and on legs") {
    // outer end hops one marked point, the inner end drags a full winding
    MarkedSurface annulus{0, {4, 1}, 0};
    ModelArc bridge = AnnulusArc::bridge_winding(annulus, 0, 0, 0);
    ModelArc once = model_rotate(annulus, bridge);
    CHECK(once == ModelArc(AnnulusArc::bridge_winding(annulus, 1, 0, 1)));

    // a leg to the puncture moves to the next vertex and toggles its tag
    MarkedSurface disc{0, {4}, 1};
    CHECK(model_rotate(disc, DArc::radius(0, false)) ==
          ModelArc(DArc::radius(1, true)));
}

TEST_CASE("acting on a combinatorial triangulation") {
    MarkedSurface s = parse_surface("0,1:[4],1");
    TaggedTriangulation t = build_canonical_triangulation(s).t;
    MappingClassElement rho = tagged_rotation(s);

    CHECK(act(s, identity_element(s), t) == t);

    TaggedTriangulation rotated = act(s, rho, t);
    rotated.validate();
    CHECK(b_matrix(rotated) == b_matrix(t)); // relabeling preserves adjacency

    // full turn with even puncture crossings restores the triangulation
    TaggedTriangulation full = t;
    for (int k = 0; k < 4; ++k) full = act(s, rho, full);
    CHECK(full == t);

    MarkedSurface other = parse_surface("0,1:[5],1");
    CHECK_THROWS_AS(act(other, tagged_rotation(other), t), SurfaceMismatch);
}

TEST_CASE("rotation equivariance is exhaustive on the small models") {
    for (MarkedSurface s : {MarkedSurface{0, {5}, 0}, MarkedSurface{0, {6}, 0},
                            MarkedSurface{0, {3}, 1}, MarkedSurface{0, {4}, 1}}) {
        MappingClassElement rho = tagged_rotation(s);
        std::vector<ModelTriangulation> all = enumerate_triangulations(s);
        for (const ModelTriangulation& t : all)
            for (int label = 1; label <= s.rank(); ++label)
                CHECK(model_key(act(s, rho, model_flip(t, label))) ==
                      model_key(model_flip(act(s, rho, t), label)));
    }
}

TEST_CASE("rotated triangulations have permutation-equivalent adjacency") {
    for (MarkedSurface s : {MarkedSurface{0, {6}, 0}, MarkedSurface{0, {4}, 1}}) {
        MappingClassElement rho = tagged_rotation(s);
        ModelTriangulation t = fan_triangulation(s);
        for (int step = 0; step < 6; ++step) {
            CHECK(permutation_equivalent(b_matrix(to_tagged(t)),
                                         b_matrix(to_tagged(act(s, rho, t)))));
            t = model_flip(t, 1 + step % s.rank());
        }
    }
}

TEST_CASE("tag switch fixes a fold as a set of tagged arcs") {
    MarkedSurface s = parse_surface("0,1:[2],1");
    TaggedTriangulation fold = build_canonical_triangulation(s).t.flipped(1);
    if (fold.pattern.folds.empty()) fold = fold.flipped(2);
    REQUIRE(!fold.pattern.folds.empty());
    CHECK(canonical_key(act(s, tag_switch(s, 0), fold)) == canonical_key(fold));
}

TEST_CASE("rotation commutes with combinatorial flips") {
    std::mt19937 rng(23);
    for (const char* text : {"0,2:[2,2],0", "1,1:[1],0", "0,1:[3],1"}) {
        MarkedSurface s = parse_surface(text);
        MappingClassElement rho = tagged_rotation(s);
        TaggedTriangulation t = build_canonical_triangulation(s).t;
        int samples = text == std::string("0,2:[2,2],0") ? 500 : 150;
        for (int step = 0; step < samples; ++step) {
            int arc = 1 + static_cast<int>(rng() % t.pattern.arc_count());
            CHECK(canonical_key(act(s, rho, t.flipped(arc))) ==
                  canonical_key(act(s, rho, t).flipped(arc)));
            t = t.flipped(arc);
        }
    }
}
