#include "flipsurf/surface.hpp"

#include <numeric>
#include <sstream>

#include "flipsurf/errors.hpp"

namespace flipsurf {

int MarkedSurface::marked_total() const {
    return std::accumulate(boundaries.begin(), boundaries.end(), 0);
}

int MarkedSurface::boundary_offset(int component) const {
    int off = 0;
    for (int y = 0; y < component; ++y) off += boundaries[y];
    return off;
}

int MarkedSurface::rank() const {
    return 6 * genus + 3 * punctures + 3 * boundary_components() + marked_total() - 6;
}

int MarkedSurface::marked_vertex(int component, int index) const {
    return boundary_offset(component) + index;
}

int MarkedSurface::puncture_vertex(int puncture) const {
    return marked_total() + puncture;
}

bool MarkedSurface::is_puncture_vertex(int vertex) const {
    return vertex >= marked_total();
}

std::pair<int, int> MarkedSurface::locate_marked(int vertex) const {
    int off = 0;
    for (int y = 0; y < boundary_components(); ++y) {
        if (vertex < off + boundaries[y]) return {y, vertex - off};
        off += boundaries[y];
    }
    throw IndexOutOfRange("locate_marked: vertex " + std::to_string(vertex) +
                          " is not a boundary marked point");
}

std::optional<std::string> validate(const MarkedSurface& s) {
    if (s.genus < 0) return "negative genus";
    if (s.punctures < 0) return "negative puncture count";
    if (s.boundaries.empty()) return "empty boundary (closed surfaces are excluded)";
    for (int m : s.boundaries)
        if (m < 1) return "boundary component without a marked point";
    if (s.rank() < 1)
        return "rank " + std::to_string(s.rank()) + " (need at least 1)";
    return std::nullopt;
}

void require_valid(const MarkedSurface& s) {
    if (auto reason = validate(s))
        throw UnsupportedSurface("invalid surface " + format_surface(s) + ": " + *reason);
}

ClusterType classify_type(const MarkedSurface& s) {
    if (s.genus == 0 && s.boundary_components() == 1 && s.punctures == 0)
        return {SurfaceClass::TypeA, s.rank()};
    if (s.genus == 0 && s.boundary_components() == 1 && s.punctures == 1)
        return {SurfaceClass::TypeD, s.rank()};
    return {SurfaceClass::Other, 0};
}

MarkedSurface parse_surface(const std::string& text) {
    // g,b:[m1,...,mb],p
    MarkedSurface s;
    std::istringstream in(text);
    char c = 0;
    int b = 0;
    auto fail = [&](const std::string& why) -> void {
        throw UnsupportedSurface("cannot parse surface '" + text + "': " + why);
    };
    if (!(in >> s.genus)) fail("missing genus");
    if (!(in >> c) || c != ',') fail("expected ',' after genus");
    if (!(in >> b)) fail("missing boundary count");
    if (!(in >> c) || c != ':') fail("expected ':' after boundary count");
    if (!(in >> c) || c != '[') fail("expected '['");
    for (int i = 0; i < b; ++i) {
        int m = 0;
        if (!(in >> m)) fail("missing marked-point count");
        s.boundaries.push_back(m);
        if (!(in >> c)) fail("unterminated boundary list");
        if (i + 1 < b && c != ',') fail("expected ',' in boundary list");
        if (i + 1 == b && c != ']') fail("expected ']'");
    }
    if (b == 0) {
        if (!(in >> c) || c != ']') fail("expected ']'");
    }
    if (!(in >> c) || c != ',') fail("expected ',' before puncture count");
    if (!(in >> s.punctures)) fail("missing puncture count");
    if (in >> c) fail("trailing input");
    return s;
}

std::string format_surface(const MarkedSurface& s) {
    std::ostringstream out;
    out << s.genus << "," << s.boundary_components() << ":[";
    for (int y = 0; y < s.boundary_components(); ++y) {
        if (y) out << ",";
        out << s.boundaries[y];
    }
    out << "]," << s.punctures;
    return out.str();
}

} // namespace flipsurf
