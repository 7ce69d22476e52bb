#pragma once

#include <optional>
#include <string>
#include <vector>

namespace flipsurf {

/*
  An oriented surface with marked points on the boundary and punctures in the
  interior.  Boundary components are ordered, and the marked points on each
  component are numbered 0..m_i-1 along the orientation induced by the surface
  (the surface lies to the left of every boundary component; on the outer
  boundary of a planar picture that direction is counterclockwise).

  Vertex ids are global: marked point j of component Y gets id
  boundary_offset(Y)+j, punctures follow after all marked points.
  Boundary segment (Y,j) runs from marked point (Y,j) to (Y,j+1 mod m_Y) and
  shares the global index of its start point.
*/
struct MarkedSurface {
    int genus = 0;
    std::vector<int> boundaries; // marked-point count per boundary component
    int punctures = 0;

    int boundary_components() const { return static_cast<int>(boundaries.size()); }
    int marked_total() const;
    int boundary_offset(int component) const;

    // 6g + 3p + 3b + m - 6
    int rank() const;

    // global vertex ids
    int marked_vertex(int component, int index) const;
    int puncture_vertex(int puncture) const;
    bool is_puncture_vertex(int vertex) const;
    int vertex_count() const { return marked_total() + punctures; }

    // component/index of a marked vertex or segment id
    std::pair<int, int> locate_marked(int vertex) const;

    bool operator==(const MarkedSurface&) const = default;
};

// nullopt means the surface satisfies all structural requirements;
// otherwise the reason for rejection.
std::optional<std::string> validate(const MarkedSurface& s);

void require_valid(const MarkedSurface& s); // throws UnsupportedSurface

enum class SurfaceClass { TypeA, TypeD, Other };

struct ClusterType {
    SurfaceClass kind = SurfaceClass::Other;
    int n = 0; // rank, meaningful for TypeA / TypeD

    bool operator==(const ClusterType&) const = default;
};

// A(n): disc, no puncture, m = n+3.  D(n): once-punctured disc, m = n.
ClusterType classify_type(const MarkedSurface& s);

// Command-line syntax "g,b:[m1,...,mb],p", e.g. "0,1:[8],0".
MarkedSurface parse_surface(const std::string& text);
std::string format_surface(const MarkedSurface& s);

} // namespace flipsurf
