#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flipsurf/mcg.hpp"
#include "flipsurf/surface.hpp"
#include "flipsurf/triangulation.hpp"

namespace flipsurf {

/*
  Explicit arc models with decidable isotopy: the polygon (disc, type A), the
  once-punctured polygon (type D) and the annulus.  Arcs are normal forms;
  equality of normal forms is equality of isotopy classes.
*/

// chord of an m-gon, normalized u < v, non-adjacent mod m
struct PolygonArc {
    int u = 0, v = 0;

    auto operator<=>(const PolygonArc&) const = default;
};

/*
  Once-punctured m-gon.  A radius joins a boundary vertex to the puncture and
  carries a plain/notched tag.  A chord is an ordered pair (a,b): the arc
  from a to b keeping the puncture on its left, i.e. cutting off the
  counterclockwise open interval (a,b) away from the puncture.  (a,a+1) is
  isotopic to a boundary segment and therefore excluded; (a,b) and (b,a) are
  the two isotopy classes around the puncture.
*/
struct DArc {
    enum class Kind { Radius, Chord };
    Kind kind = Kind::Radius;
    int a = 0;           // radius vertex / chord source
    int b = 0;           // chord target (unused for radii)
    bool notched = false; // radius tag (unused for chords)

    static DArc radius(int v, bool notched) { return {Kind::Radius, v, 0, notched}; }
    static DArc chord(int a, int b) { return {Kind::Chord, a, b, false}; }

    auto operator<=>(const DArc&) const = default;
};

/*
  Annulus with p outer and q inner marked points.  Bridges join the two
  boundary components and are encoded in universal coordinates (O, I) with
  O in [0,p): unrolling the annulus, one deck transformation shifts O by p
  and I by -q, so normalizing O pins a unique representative.  The winding
  of (o,i,w) relative to the straight bridge 0-0 corresponds to I = i + w*q.
  Chords stay on one boundary component and cut off a hole-free disc;
  loops encircle the core and exist once their component has a second
  marked point.
*/
struct AnnulusArc {
    enum class Kind { Bridge, OuterChord, InnerChord, OuterLoop, InnerLoop };
    Kind kind = Kind::Bridge;
    int a = 0; // bridge: outer index O; chords: source; loops: base vertex
    int b = 0; // bridge: universal inner coordinate I; chords: target

    static AnnulusArc bridge(int outer, int inner_universal) {
        return {Kind::Bridge, outer, inner_universal};
    }
    static AnnulusArc bridge_winding(const MarkedSurface& s, int o, int i, int w) {
        return bridge(o, i + w * s.boundaries[1]);
    }
    static AnnulusArc outer_chord(int a, int b) { return {Kind::OuterChord, a, b}; }
    static AnnulusArc inner_chord(int a, int b) { return {Kind::InnerChord, a, b}; }
    static AnnulusArc outer_loop(int v) { return {Kind::OuterLoop, v}; }
    static AnnulusArc inner_loop(int v) { return {Kind::InnerLoop, v}; }

    auto operator<=>(const AnnulusArc&) const = default;
};

using ModelArc = std::variant<PolygonArc, DArc, AnnulusArc>;

enum class ModelKind { TypeA, TypeD, Annulus };

// throws UnsupportedSurface for anything but a polygon (m>=4), a
// once-punctured polygon (m>=2) or an annulus
ModelKind model_kind(const MarkedSurface& s);

std::string arc_to_string(const ModelArc& arc);
ModelArc parse_arc(const MarkedSurface& s, const std::string& text);

// isotopy-minimal crossing test
bool compatible(const MarkedSurface& s, const ModelArc& x, const ModelArc& y);

// all arcs of the model; the annulus is infinite, so bridges are listed
// within |winding| <= winding_window
std::vector<ModelArc> enumerate_arcs(const MarkedSurface& s, int winding_window = 2);

// action of a rotation/tag-switch word; model_rotate is act with the
// tagged rotation
ModelArc act_on_arc(const MarkedSurface& s, const MappingClassElement& g,
                    const ModelArc& arc);
ModelArc model_rotate(const MarkedSurface& s, const ModelArc& arc);

struct ModelTriangulation {
    MarkedSurface surface;
    std::vector<ModelArc> arcs; // slot i holds the arc labeled i+1

    bool operator==(const ModelTriangulation&) const = default;
};

// fan-shaped starting triangulations
ModelTriangulation fan_triangulation(const MarkedSurface& s);

bool is_model_triangulation(const ModelTriangulation& t);

// replaces the arc holding the given label by the unique other compatible
// completion; the replacement inherits the label.  throws UnknownArc
ModelTriangulation model_flip(const ModelTriangulation& t, int label);

ModelTriangulation act(const MarkedSurface& s, const MappingClassElement& g,
                       const ModelTriangulation& t);

// combinatorial shadow of a polygon / punctured-polygon model triangulation;
// arc labels are slot+1.  throws UnsupportedSurface for the annulus
TaggedTriangulation to_tagged(const ModelTriangulation& t);

std::string model_key(const ModelTriangulation& t);

struct RotationOrder {
    bool finite = true;
    std::int64_t order = 0; // meaningful when finite
};

// order of the tagged rotation as a permutation of the arc set; the annulus
// answer is certified by exhibiting pairwise-distinct iterates of a bridge
RotationOrder rotation_order(const MarkedSurface& s);

struct OrbitResult {
    std::vector<ModelArc> arcs;          // arc, rho(arc), rho^2(arc), ...
    std::optional<int> first_repetition; // index k with arcs[k] == arcs[0]
};

OrbitResult orbit(const MarkedSurface& s, const ModelArc& arc, int count);

// Replays a mutation sequence as model flips (slot k flips the arc currently
// holding label k) and compares the final arc set with the rotated start.
// Throws NotMaximalGreen when seq is not a maximal green sequence for the
// exchange matrix of t.
bool green_endpoint_matches_rotation(const ModelTriangulation& t,
                                     const std::vector<int>& seq);

} // namespace flipsurf
