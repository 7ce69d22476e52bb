#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "flipsurf/bmatrix.hpp"
#include "flipsurf/surface.hpp"

namespace flipsurf {

/*
  Triangulations are stored as oriented combinatorial maps.  Each triangle
  lists its three sides in counterclockwise order with respect to the fixed
  orientation of the surface; corner[i] is the vertex at which side[i]
  starts.  A side is either an arc (labels 1..n, each used by exactly two
  triangle slots, traversed in opposite directions) or a boundary segment
  (used by exactly one slot, traversed along the induced boundary
  orientation).

  Side encoding: label > 0 is an arc, label < 0 is boundary segment -(label+1).

  A self-folded triangle carries one arc twice (the radius) plus the
  enclosing loop; the vertex wedged between the two radius slots is the
  enclosed puncture.
*/

inline int boundary_side(int seg) { return -(seg + 1); }
inline bool is_arc_side(int side) { return side > 0; }
inline int segment_of_side(int side) { return -side - 1; }

struct Triangle {
    std::array<int, 3> side{};
    std::array<int, 3> corner{};

    bool operator==(const Triangle&) const = default;
};

struct Fold {
    int tri = -1;     // index of the self-folded triangle
    int radius = 0;   // arc label appearing twice in it
    int loop = 0;     // arc label of the enclosing loop
    int puncture = 0; // puncture id (0-based) enclosed by the loop

    bool operator==(const Fold&) const = default;
};

struct SideOcc {
    int tri = -1;
    int slot = -1;

    bool valid() const { return tri >= 0; }
    bool operator==(const SideOcc&) const = default;
};

class IdealTriangulation {
public:
    MarkedSurface surface;
    std::vector<Triangle> tris;
    std::vector<Fold> folds;

    int arc_count() const { return surface.rank(); }

    // both slots using the arc; throws UnknownArc
    std::pair<SideOcc, SideOcc> occurrences(int arc) const;
    SideOcc segment_occurrence(int seg) const;

    // unordered endpoint vertex ids of an arc (as a curve of the pattern)
    std::pair<int, int> arc_endpoints(int arc) const;

    const Fold* fold_with_radius(int arc) const;
    const Fold* fold_with_loop(int arc) const;

    // scan triangles for repeated arc sides and rebuild the fold list
    void refresh_folds();

    // full structural check; throws InvalidTriangulation with a reason
    void validate() const;

    // flip of a non-radius arc; the new arc inherits the label.
    // throws UnknownArc, NotFlippable
    IdealTriangulation flipped(int arc) const;

    void swap_arc_labels(int a, int b);

    bool operator==(const IdealTriangulation&) const = default;
};

/*
  Tagged triangulation as an ideal pattern plus one sign per puncture.
  Arc ends at puncture P carry the sign of P, except inside the digon of a
  self-folded triangle, where the radius label stays plain and the loop label
  denotes the parallel arc notched at P.  Signs of enclosed punctures are
  normalized to +1, which makes the encoding one-to-one.
*/
class TaggedTriangulation {
public:
    IdealTriangulation pattern;
    std::vector<int> signs; // one per puncture, +1 or -1

    static TaggedTriangulation plain(IdealTriangulation pattern);

    // endpoints of the tagged arc carried by this label (a fold loop stands
    // for the notched radius, so its endpoints are base and puncture)
    std::pair<int, int> tagged_endpoints(int arc) const;

    void normalize_signs();
    void validate() const;

    // tagged flip; defined for every arc.  throws UnknownArc
    TaggedTriangulation flipped(int arc) const;

    bool operator==(const TaggedTriangulation&) const = default;
};

// Signed adjacency matrix.  Within every non-self-folded triangle each
// counterclockwise-consecutive pair of arc sides (x then y) contributes an
// arrow y -> x (arrows run clockwise inside a triangle), radii inheriting
// the adjacencies of their enclosing loop.
BMatrix b_matrix(const IdealTriangulation& t);
BMatrix b_matrix(const TaggedTriangulation& t);

// Deterministic key equal for two triangulations exactly when they agree as
// labeled-by-marked-point structures (arc labels are quotiented out, vertex
// and boundary-segment identities are not).
std::string canonical_key(const IdealTriangulation& t);
std::string canonical_key(const TaggedTriangulation& t);

} // namespace flipsurf
