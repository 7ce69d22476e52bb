#pragma once

#include <string>
#include <vector>

#include "flipsurf/surface.hpp"
#include "flipsurf/triangulation.hpp"

namespace flipsurf {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool all_pass() const;
    void add(std::string name, bool pass, std::string detail = "");
};

/*
  Local source-flip configurations: an arc joining two boundary marked points
  flanked by the two triangles over its rotated neighbours, and an arc from a
  boundary point to the puncture together with an enclosing chord and either
  the plain or the notched companion radius.  In each configuration the arc
  must be a source of the quiver (only outgoing arrows) and its tagged flip
  must equal its image under the tagged rotation.
*/
enum class SourceFlipCase { CaseI, CaseIIPlain, CaseIITagged };

CheckReport source_flip_check(SourceFlipCase which);

// Existence form over whole models: every arc with two distinct endpoints at
// least one of which is marked admits a triangulation in which it is a
// source and its flip realizes the rotation.  Checked by direct search over
// all triangulations of the polygon / punctured polygon.
CheckReport source_flip_model_sweep(const MarkedSurface& s);

// Mutation replay on the genus-one loop configuration: three mutations of
// the rank-5 exchange matrix against the pinned quivers, and the same three
// flips performed on the surface realization.
CheckReport genus_mutation_replay();

enum class ArcType { LemmaI, LemmaII, Loop, Other };

std::string arc_type_name(ArcType t);

struct BuiltTriangulation {
    TaggedTriangulation t;
    // labels certified as non-contractible loops by the construction
    std::vector<bool> loop_mark; // indexed 0..n, entry 0 unused
};

/*
  Inductive construction: a basic triangulation for the surface's class
  (polygon, two-boundary annulus, twice-punctured disc, punctured digon or
  the 4g-gon presentation with every arc a non-contractible loop), then
  additions of marked points, boundary components and punctures inside a
  triangle with a boundary edge.  Every arc of the result has either two
  distinct endpoints with at least one marked, or is a certified loop.
*/
BuiltTriangulation build_canonical_triangulation(const MarkedSurface& s);

ArcType classify_arc_type(const BuiltTriangulation& bt, int arc);

std::vector<MarkedSurface> sweep_surfaces(int max_rank, int max_genus, int max_boundary,
                                          int max_punctures);

CheckReport canonical_sweep(int max_rank, int max_genus = 2, int max_boundary = 3,
                            int max_punctures = 2);

} // namespace flipsurf
