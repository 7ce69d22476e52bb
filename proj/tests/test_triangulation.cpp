#include <doctest.h>

#include <random>
#include <set>

#include "flipsurf/errors.hpp"
#include "flipsurf/mutation.hpp"
#include "flipsurf/proofkit.hpp"
#include "flipsurf/triangulation.hpp"

using namespace flipsurf;

namespace {

TaggedTriangulation square_with_diagonal() {
    IdealTriangulation pat;
    pat.surface = {0, {4}, 0};
    pat.tris = {
        Triangle{{boundary_side(0), boundary_side(1), 1}, {0, 1, 2}},
        Triangle{{1, boundary_side(2), boundary_side(3)}, {0, 2, 3}},
    };
    pat.refresh_folds();
    return TaggedTriangulation::plain(std::move(pat));
}

TaggedTriangulation annulus_two_bridges() {
    IdealTriangulation pat;
    pat.surface = {0, {1, 1}, 0};
    pat.tris = {
        Triangle{{boundary_side(1), 1, 2}, {1, 1, 0}},
        Triangle{{boundary_side(0), 1, 2}, {0, 0, 1}},
    };
    pat.refresh_folds();
    return TaggedTriangulation::plain(std::move(pat));
}

// once-punctured digon, self-folded pattern: loop 2 around the puncture with
// radius 1, based at marked point 0
TaggedTriangulation digon_fold() {
    IdealTriangulation pat;
    pat.surface = {0, {2}, 1};
    pat.tris = {
        Triangle{{2, 1, 1}, {0, 0, 2}},
        Triangle{{boundary_side(0), boundary_side(1), 2}, {0, 1, 0}},
    };
    pat.refresh_folds();
    return TaggedTriangulation::plain(std::move(pat));
}

// once-punctured digon, two plain radii
TaggedTriangulation digon_star() {
    IdealTriangulation pat;
    pat.surface = {0, {2}, 1};
    pat.tris = {
        Triangle{{boundary_side(0), 2, 1}, {0, 1, 2}},
        Triangle{{boundary_side(1), 1, 2}, {1, 0, 2}},
    };
    pat.refresh_folds();
    return TaggedTriangulation::plain(std::move(pat));
}

} // namespace

TEST_CASE("hand-built complexes validate") {
    square_with_diagonal().validate();
    annulus_two_bridges().validate();
    digon_fold().validate();
    digon_star().validate();
}

TEST_CASE("square flip is the other diagonal and an involution") {
    TaggedTriangulation t = square_with_diagonal();
    TaggedTriangulation f = t.flipped(1);
    f.validate();
    // the new diagonal joins vertices 1 and 3
    CHECK(f.tagged_endpoints(1) == std::pair(1, 3));
    CHECK(canonical_key(f.flipped(1)) == canonical_key(t));
}

TEST_CASE("annulus adjacency is the double arrow and flips negate it") {
    TaggedTriangulation t = annulus_two_bridges();
    BMatrix b = b_matrix(t);
    CHECK(b.skew_symmetric());
    CHECK(std::abs(b(1, 2)) == 2);
    for (int arc : {1, 2}) {
        TaggedTriangulation f = t.flipped(arc);
        f.validate();
        BMatrix fb = b_matrix(f);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) CHECK(fb(i, j) == -b(i, j));
    }
}

TEST_CASE("self-folded digon: adjacency vanishes in both encodings") {
    CHECK(b_matrix(digon_fold()) == BMatrix(2));
    CHECK(b_matrix(digon_star()) == BMatrix(2));
}

TEST_CASE("fold flips realize the tag toggle") {
    TaggedTriangulation fold = digon_fold();
    CHECK(fold.pattern.fold_with_radius(1) != nullptr);
    CHECK(fold.tagged_endpoints(1) == std::pair(0, 2));
    CHECK(fold.tagged_endpoints(2) == std::pair(0, 2)); // the notched companion

    // flipping the notched companion opens the fold with plain tagging
    TaggedTriangulation open_plus = fold.flipped(2);
    open_plus.validate();
    CHECK(open_plus.pattern.folds.empty());
    CHECK(open_plus.signs == std::vector<int>{+1});
    CHECK(open_plus.tagged_endpoints(2) == std::pair(1, 2));
    CHECK(open_plus.tagged_endpoints(1) == std::pair(0, 2));

    // flipping the plain radius opens it with notched tagging
    TaggedTriangulation open_minus = fold.flipped(1);
    open_minus.validate();
    CHECK(open_minus.pattern.folds.empty());
    CHECK(open_minus.signs == std::vector<int>{-1});
    CHECK(open_minus.tagged_endpoints(1) == std::pair(1, 2));

    // involutions through the fold in both directions
    CHECK(canonical_key(open_plus.flipped(2)) == canonical_key(fold));
    CHECK(canonical_key(open_minus.flipped(1)) == canonical_key(fold));

    // the four tagged triangulations of the digon form a cycle
    std::set<std::string> seen{canonical_key(fold)};
    TaggedTriangulation cur = fold;
    for (int step = 0; step < 3; ++step) {
        cur = cur.flipped(step % 2 + 1);
        CHECK(seen.insert(canonical_key(cur)).second);
    }
}

TEST_CASE("ideal flip rejects the fold radius, tagged flip does not") {
    TaggedTriangulation fold = digon_fold();
    CHECK_THROWS_AS(fold.pattern.flipped(1), NotFlippable);
    CHECK_NOTHROW(fold.flipped(1));
    CHECK_THROWS_AS(fold.pattern.flipped(7), UnknownArc);
}

TEST_CASE("flips commute with mutation along random walks") {
    std::mt19937 rng(20240817);
    for (const char* text : {"0,1:[7],0", "0,1:[4],1", "0,2:[2,2],0", "1,1:[1],0",
                             "0,1:[2],2"}) {
        TaggedTriangulation t = build_canonical_triangulation(parse_surface(text)).t;
        const int n = t.pattern.arc_count();
        for (int step = 0; step < 60; ++step) {
            int arc = 1 + static_cast<int>(rng() % n);
            TaggedTriangulation next = t.flipped(arc);
            next.validate(); // occurrence and Euler invariants survive
            CHECK(b_matrix(next) == mutate_b(b_matrix(t), arc));
            CHECK(canonical_key(next.flipped(arc)) == canonical_key(t));
            t = std::move(next);
        }
    }
}

TEST_CASE("tagged flips are total on a punctured surface walk") {
    std::mt19937 rng(5);
    TaggedTriangulation t = build_canonical_triangulation(parse_surface("0,1:[4],1")).t;
    for (int step = 0; step < 200; ++step) {
        for (int arc = 1; arc <= t.pattern.arc_count(); ++arc) CHECK_NOTHROW(t.flipped(arc));
        t = t.flipped(1 + static_cast<int>(rng() % t.pattern.arc_count()));
    }
}

TEST_CASE("adjacency quivers have no loops or two-cycles") {
    for (const char* text : {"0,1:[7],0", "0,1:[4],1", "1,1:[2],0"}) {
        TaggedTriangulation t = build_canonical_triangulation(parse_surface(text)).t;
        BMatrix b = b_matrix(t);
        Quiver q = quiver(b);
        for (const auto& [ij, mult] : q.arrows) {
            CHECK(ij.first != ij.second);
            CHECK(q.arrows.find({ij.second, ij.first}) == q.arrows.end());
            CHECK(mult <= 2);
        }
    }
}

TEST_CASE("an interior triangle contributes a three-cycle") {
    // hexagon triangulated by a central triangle: its three sides are arcs
    IdealTriangulation pat;
    pat.surface = {0, {6}, 0};
    pat.tris = {
        Triangle{{1, 2, 3}, {0, 2, 4}},
        Triangle{{boundary_side(0), boundary_side(1), 1}, {0, 1, 2}},
        Triangle{{boundary_side(2), boundary_side(3), 2}, {2, 3, 4}},
        Triangle{{boundary_side(4), boundary_side(5), 3}, {4, 5, 0}},
    };
    pat.refresh_folds();
    TaggedTriangulation t = TaggedTriangulation::plain(std::move(pat));
    t.validate();
    BMatrix b = b_matrix(t);
    Quiver q = quiver(b);
    CHECK(q.arrows.size() == 3);
    // one cyclic orientation through all three vertices
    CHECK(q.arrows.count({2, 1}) + q.arrows.count({1, 2}) == 1);
    for (const auto& [ij, mult] : q.arrows) CHECK(mult == 1);
    int indeg[4] = {0, 0, 0, 0}, outdeg[4] = {0, 0, 0, 0};
    for (const auto& [ij, mult] : q.arrows) {
        outdeg[ij.first] += mult;
        indeg[ij.second] += mult;
    }
    for (int v = 1; v <= 3; ++v) {
        CHECK(indeg[v] == 1);
        CHECK(outdeg[v] == 1);
    }
}

TEST_CASE("canonical key ignores arc labels but not marked points") {
    TaggedTriangulation t = build_canonical_triangulation(parse_surface("0,1:[6],0")).t;
    TaggedTriangulation relabeled = t;
    relabeled.pattern.swap_arc_labels(1, 3);
    CHECK(canonical_key(relabeled) == canonical_key(t));

    TaggedTriangulation other = t.flipped(1);
    CHECK(canonical_key(other) != canonical_key(t));
}
