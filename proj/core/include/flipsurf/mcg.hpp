#pragma once

#include <vector>

#include "flipsurf/surface.hpp"
#include "flipsurf/triangulation.hpp"

namespace flipsurf {

/*
  The subgroup of the tagged mapping class group generated by one-step
  boundary rotations and per-puncture tag switches.  Rotations of distinct
  components commute and never move punctures, so composition is coordinate-
  wise: powers add, signs multiply.
*/
struct MappingClassElement {
    std::vector<int> rotation_powers; // per boundary component
    std::vector<int> tag_signs;       // per puncture, +1 or -1

    bool operator==(const MappingClassElement&) const = default;
};

MappingClassElement identity_element(const MarkedSurface& s);

// throws IndexOutOfRange
MappingClassElement boundary_rotation(const MarkedSurface& s, int component);
MappingClassElement tag_switch(const MarkedSurface& s, int puncture);

// product of all one-step boundary rotations and all tag switches
MappingClassElement tagged_rotation(const MarkedSurface& s);

MappingClassElement compose(const MappingClassElement& a, const MappingClassElement& b);
MappingClassElement inverse(const MappingClassElement& a);
MappingClassElement power(const MappingClassElement& a, int k);

// image of a marked point under the element
int act_on_marked(const MarkedSurface& s, const MappingClassElement& g, int component,
                  int index);

// relabels marked-point incidences and multiplies puncture signs; throws
// SurfaceMismatch when g and t live on different surfaces
TaggedTriangulation act(const MarkedSurface& s, const MappingClassElement& g,
                        const TaggedTriangulation& t);

} // namespace flipsurf
