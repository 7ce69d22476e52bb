#include "flipsurf/mcg.hpp"

#include <string>

#include "flipsurf/errors.hpp"

namespace flipsurf {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

} // namespace

MappingClassElement identity_element(const MarkedSurface& s) {
    MappingClassElement g;
    g.rotation_powers.assign(s.boundary_components(), 0);
    g.tag_signs.assign(s.punctures, +1);
    return g;
}

MappingClassElement boundary_rotation(const MarkedSurface& s, int component) {
    if (component < 0 || component >= s.boundary_components())
        throw IndexOutOfRange("boundary component " + std::to_string(component) +
                              " out of range");
    MappingClassElement g = identity_element(s);
    g.rotation_powers[component] = 1;
    return g;
}

MappingClassElement tag_switch(const MarkedSurface& s, int puncture) {
    if (puncture < 0 || puncture >= s.punctures)
        throw IndexOutOfRange("puncture " + std::to_string(puncture) + " out of range");
    MappingClassElement g = identity_element(s);
    g.tag_signs[puncture] = -1;
    return g;
}

MappingClassElement tagged_rotation(const MarkedSurface& s) {
    MappingClassElement g;
    g.rotation_powers.assign(s.boundary_components(), 1);
    g.tag_signs.assign(s.punctures, -1);
    return g;
}

MappingClassElement compose(const MappingClassElement& a, const MappingClassElement& b) {
    MappingClassElement g = a;
    for (size_t y = 0; y < g.rotation_powers.size(); ++y)
        g.rotation_powers[y] += b.rotation_powers[y];
    for (size_t p = 0; p < g.tag_signs.size(); ++p) g.tag_signs[p] *= b.tag_signs[p];
    return g;
}

MappingClassElement inverse(const MappingClassElement& a) {
    MappingClassElement g = a;
    for (int& r : g.rotation_powers) r = -r;
    return g;
}

MappingClassElement power(const MappingClassElement& a, int k) {
    MappingClassElement g = a;
    for (int& r : g.rotation_powers) r *= k;
    for (int& s : g.tag_signs)
        if (k % 2 == 0) s = +1;
    return g;
}

int act_on_marked(const MarkedSurface& s, const MappingClassElement& g, int component,
                  int index) {
    return mod(index + g.rotation_powers[component], s.boundaries[component]);
}

TaggedTriangulation act(const MarkedSurface& s, const MappingClassElement& g,
                        const TaggedTriangulation& t) {
    if (t.pattern.surface != s ||
        static_cast<int>(g.rotation_powers.size()) != s.boundary_components() ||
        static_cast<int>(g.tag_signs.size()) != s.punctures)
        throw SurfaceMismatch("element and triangulation live on different surfaces");

    auto mapped_vertex = [&](int v) {
        if (s.is_puncture_vertex(v)) return v;
        auto [comp, idx] = s.locate_marked(v);
        return s.marked_vertex(comp, act_on_marked(s, g, comp, idx));
    };
    auto mapped_side = [&](int side) {
        if (is_arc_side(side)) return side;
        int seg = segment_of_side(side);
        auto [comp, idx] = s.locate_marked(seg);
        return boundary_side(s.marked_vertex(comp, act_on_marked(s, g, comp, idx)));
    };

    TaggedTriangulation out = t;
    for (Triangle& tr : out.pattern.tris)
        for (int i = 0; i < 3; ++i) {
            tr.side[i] = mapped_side(tr.side[i]);
            tr.corner[i] = mapped_vertex(tr.corner[i]);
        }
    out.pattern.refresh_folds();
    for (int p = 0; p < s.punctures; ++p) out.signs[p] *= g.tag_signs[p];
    // a switch at an enclosed puncture exchanges the plain and notched
    // members of the digon pair, so the fold labels trade places
    std::vector<std::pair<int, int>> swaps;
    for (const Fold& f : out.pattern.folds)
        if (out.signs[f.puncture] == -1) {
            swaps.push_back({f.radius, f.loop});
            out.signs[f.puncture] = +1;
        }
    for (auto [radius, loop] : swaps) out.pattern.swap_arc_labels(radius, loop);
    return out;
}

} // namespace flipsurf
