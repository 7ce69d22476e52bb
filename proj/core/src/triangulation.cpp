#include "flipsurf/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "flipsurf/errors.hpp"

namespace flipsurf {

namespace {

std::string side_str(int side) {
    if (is_arc_side(side)) return std::to_string(side);
    return "s" + std::to_string(segment_of_side(side));
}

// union-find over triangle corners
struct CornerClasses {
    std::vector<int> parent;

    explicit CornerClasses(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

int corner_id(int tri, int slot) { return 3 * tri + slot; }

} // namespace

std::pair<SideOcc, SideOcc> IdealTriangulation::occurrences(int arc) const {
    std::pair<SideOcc, SideOcc> out;
    int found = 0;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
        for (int s = 0; s < 3; ++s)
            if (tris[t].side[s] == arc) {
                if (found == 0)
                    out.first = {t, s};
                else if (found == 1)
                    out.second = {t, s};
                ++found;
            }
    if (found != 2)
        throw UnknownArc("arc " + std::to_string(arc) + " occurs " +
                         std::to_string(found) + " times (expected 2)");
    return out;
}

SideOcc IdealTriangulation::segment_occurrence(int seg) const {
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
        for (int s = 0; s < 3; ++s)
            if (tris[t].side[s] == boundary_side(seg)) return {t, s};
    throw InvalidTriangulation("boundary segment " + std::to_string(seg) + " missing");
}

std::pair<int, int> IdealTriangulation::arc_endpoints(int arc) const {
    auto [o1, o2] = occurrences(arc);
    (void)o2;
    const Triangle& t = tris[o1.tri];
    int u = t.corner[o1.slot], v = t.corner[(o1.slot + 1) % 3];
    return {std::min(u, v), std::max(u, v)};
}

const Fold* IdealTriangulation::fold_with_radius(int arc) const {
    for (const Fold& f : folds)
        if (f.radius == arc) return &f;
    return nullptr;
}

const Fold* IdealTriangulation::fold_with_loop(int arc) const {
    for (const Fold& f : folds)
        if (f.loop == arc) return &f;
    return nullptr;
}

void IdealTriangulation::refresh_folds() {
    folds.clear();
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        const Triangle& tr = tris[t];
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3;
            if (is_arc_side(tr.side[i]) && tr.side[i] == tr.side[j]) {
                Fold f;
                f.tri = t;
                f.radius = tr.side[i];
                f.loop = tr.side[3 - i - j];
                // the vertex wedged between the two radius slots
                f.puncture = tr.corner[j] - surface.marked_total();
                folds.push_back(f);
            }
        }
    }
}

void IdealTriangulation::swap_arc_labels(int a, int b) {
    for (Triangle& t : tris)
        for (int s = 0; s < 3; ++s) {
            if (t.side[s] == a)
                t.side[s] = b;
            else if (t.side[s] == b)
                t.side[s] = a;
        }
    refresh_folds();
}

void IdealTriangulation::validate() const {
    auto fail = [](const std::string& why) -> void { throw InvalidTriangulation(why); };

    if (auto reason = flipsurf::validate(surface)) fail("surface: " + *reason);

    const int n = arc_count();
    const int segs = surface.marked_total();
    if (static_cast<int>(tris.size()) * 3 != 2 * n + segs)
        fail("triangle count " + std::to_string(tris.size()) + " != (2n+segments)/3");

    // occurrence counts
    std::vector<int> arc_occ(n + 1, 0), seg_occ(segs, 0);
    for (const Triangle& t : tris)
        for (int side : t.side) {
            if (is_arc_side(side)) {
                if (side > n) fail("arc label " + std::to_string(side) + " exceeds rank");
                ++arc_occ[side];
            } else {
                int seg = segment_of_side(side);
                if (seg < 0 || seg >= segs) fail("bad boundary segment " + side_str(side));
                ++seg_occ[seg];
            }
        }
    for (int a = 1; a <= n; ++a)
        if (arc_occ[a] != 2)
            fail("arc " + std::to_string(a) + " occurs " + std::to_string(arc_occ[a]) +
                 " times");
    for (int s = 0; s < segs; ++s)
        if (seg_occ[s] != 1)
            fail("segment " + std::to_string(s) + " occurs " + std::to_string(seg_occ[s]) +
                 " times");

    // arcs traversed once in each direction, with matching endpoints
    std::vector<std::vector<SideOcc>> occ(n + 1);
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
        for (int s = 0; s < 3; ++s)
            if (is_arc_side(tris[t].side[s])) occ[tris[t].side[s]].push_back({t, s});
    for (int a = 1; a <= n; ++a) {
        auto [t1, s1] = occ[a][0];
        auto [t2, s2] = occ[a][1];
        int u1 = tris[t1].corner[s1], v1 = tris[t1].corner[(s1 + 1) % 3];
        int u2 = tris[t2].corner[s2], v2 = tris[t2].corner[(s2 + 1) % 3];
        if (u1 != v2 || v1 != u2)
            fail("arc " + std::to_string(a) + " is not traversed consistently");
    }

    // boundary segments run along the induced orientation
    for (int s = 0; s < segs; ++s) {
        SideOcc o = segment_occurrence(s);
        const Triangle& t = tris[o.tri];
        auto [comp, idx] = surface.locate_marked(s);
        int from = surface.marked_vertex(comp, idx);
        int to = surface.marked_vertex(comp, (idx + 1) % surface.boundaries[comp]);
        if (t.corner[o.slot] != from || t.corner[(o.slot + 1) % 3] != to)
            fail("segment " + std::to_string(s) + " endpoints disagree with the boundary");
    }

    // declared folds match the triangles
    IdealTriangulation copy = *this;
    copy.refresh_folds();
    auto key = [](const Fold& f) { return std::tuple(f.tri, f.radius, f.loop, f.puncture); };
    auto sorted = [&](std::vector<Fold> fs) {
        std::sort(fs.begin(), fs.end(),
                  [&](const Fold& a, const Fold& b) { return key(a) < key(b); });
        return fs;
    };
    if (sorted(folds) != sorted(copy.folds)) fail("fold marks disagree with triangle data");
    for (const Fold& f : folds) {
        if (f.puncture < 0 || f.puncture >= surface.punctures)
            fail("fold encloses vertex that is not a puncture");
        auto [u, v] = arc_endpoints(f.loop);
        if (u != v) fail("fold loop " + std::to_string(f.loop) + " is not a loop");
    }

    // corner classes = vertices
    CornerClasses cc(tris.size() * 3);
    for (int a = 1; a <= n; ++a) {
        auto [o1, o2] = std::pair(occ[a][0], occ[a][1]);
        cc.unite(corner_id(o1.tri, (o1.slot + 1) % 3), corner_id(o2.tri, o2.slot));
        cc.unite(corner_id(o2.tri, (o2.slot + 1) % 3), corner_id(o1.tri, o1.slot));
    }
    std::map<int, int> class_vertex;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
        for (int s = 0; s < 3; ++s) {
            int root = cc.find(corner_id(t, s));
            int v = tris[t].corner[s];
            auto [it, inserted] = class_vertex.try_emplace(root, v);
            if (!inserted && it->second != v)
                fail("corner classes carry conflicting vertex ids " +
                     std::to_string(it->second) + " vs " + std::to_string(v));
        }
    std::set<int> vertex_ids;
    for (auto& [root, v] : class_vertex) {
        if (v < 0 || v >= surface.vertex_count()) fail("vertex id out of range");
        if (!vertex_ids.insert(v).second)
            fail("vertex " + std::to_string(v) + " split into several corner classes");
    }
    if (static_cast<int>(vertex_ids.size()) != surface.vertex_count())
        fail("triangulation does not touch every marked point and puncture");

    // Euler characteristic pins the topology
    int V = surface.vertex_count();
    int E = n + segs;
    int F = static_cast<int>(tris.size());
    int chi = 2 - 2 * surface.genus - surface.boundary_components();
    if (V - E + F != chi)
        fail("Euler characteristic " + std::to_string(V - E + F) + " != " +
             std::to_string(chi));

    // connectivity (one surface, one complex)
    if (!tris.empty()) {
        std::vector<bool> seen(tris.size(), false);
        std::vector<int> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int s = 0; s < 3; ++s) {
                int side = tris[t].side[s];
                if (!is_arc_side(side)) continue;
                for (SideOcc o : {occ[side][0], occ[side][1]})
                    if (!seen[o.tri]) {
                        seen[o.tri] = true;
                        stack.push_back(o.tri);
                    }
            }
        }
        if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
            fail("triangulation is disconnected");
    }
}

IdealTriangulation IdealTriangulation::flipped(int arc) const {
    auto [o1, o2] = occurrences(arc);
    if (o1.tri == o2.tri)
        throw NotFlippable("arc " + std::to_string(arc) +
                           " is the radius of a self-folded triangle");

    // rotate both triangles so the shared side sits in slot 0
    auto rotated = [&](SideOcc o) {
        Triangle t = tris[o.tri];
        Triangle r;
        for (int s = 0; s < 3; ++s) {
            r.side[s] = t.side[(o.slot + s) % 3];
            r.corner[s] = t.corner[(o.slot + s) % 3];
        }
        return r;
    };
    Triangle d1 = rotated(o1); // e: P->Q, x: Q->R, y: R->P
    Triangle d2 = rotated(o2); // e: Q->P, z: P->S, w: S->Q

    int x = d1.side[1], y = d1.side[2];
    int z = d2.side[1], w = d2.side[2];
    int Q = d1.corner[1], R = d1.corner[2];
    int P = d2.corner[1], S = d2.corner[2];

    IdealTriangulation out = *this;
    out.tris[o1.tri] = Triangle{{arc, y, z}, {S, R, P}};
    out.tris[o2.tri] = Triangle{{arc, w, x}, {R, S, Q}};
    out.refresh_folds();
    return out;
}

TaggedTriangulation TaggedTriangulation::plain(IdealTriangulation pattern) {
    TaggedTriangulation t;
    t.pattern = std::move(pattern);
    t.signs.assign(t.pattern.surface.punctures, +1);
    t.normalize_signs();
    return t;
}

std::pair<int, int> TaggedTriangulation::tagged_endpoints(int arc) const {
    if (const Fold* f = pattern.fold_with_loop(arc)) {
        auto [base, same] = pattern.arc_endpoints(arc);
        (void)same;
        return {base, pattern.surface.puncture_vertex(f->puncture)};
    }
    return pattern.arc_endpoints(arc);
}

void TaggedTriangulation::normalize_signs() {
    for (const Fold& f : pattern.folds) signs[f.puncture] = +1;
}

void TaggedTriangulation::validate() const {
    pattern.validate();
    if (static_cast<int>(signs.size()) != pattern.surface.punctures)
        throw InvalidTriangulation("sign vector size mismatch");
    for (int s : signs)
        if (s != 1 && s != -1) throw InvalidTriangulation("sign must be +1 or -1");
    for (const Fold& f : pattern.folds)
        if (signs[f.puncture] != +1)
            throw InvalidTriangulation("enclosed puncture must carry the normalized sign");
}

TaggedTriangulation TaggedTriangulation::flipped(int arc) const {
    TaggedTriangulation out = *this;
    if (const Fold* f = pattern.fold_with_radius(arc)) {
        // flipping the plain radius: flip the loop instead, hand its label to
        // the new arc and toggle the tagging at the released puncture
        int loop = f->loop;
        int punc = f->puncture;
        out.pattern = pattern.flipped(loop);
        out.pattern.swap_arc_labels(arc, loop);
        out.signs[punc] = -out.signs[punc];
        out.normalize_signs();
        return out;
    }
    out.pattern = pattern.flipped(arc);
    if (const Fold* created = out.pattern.fold_with_loop(arc)) {
        int punc = created->puncture;
        if (signs[punc] == -1) {
            // under a negative tagging the flipped-in arc is the plain
            // radius, so the fold labels trade places
            out.pattern.swap_arc_labels(arc, created->radius);
        }
        out.signs[punc] = +1;
    }
    return out;
}

namespace {

void accumulate_b(const IdealTriangulation& t, BMatrix& b) {
    const int n = t.arc_count();
    std::vector<std::vector<int>> expand(n + 1);
    for (int a = 1; a <= n; ++a) expand[a] = {a};
    for (const Fold& f : t.folds) expand[f.loop] = {f.loop, f.radius};

    std::vector<bool> folded(t.tris.size(), false);
    for (const Fold& f : t.folds) folded[f.tri] = true;

    for (int ti = 0; ti < static_cast<int>(t.tris.size()); ++ti) {
        if (folded[ti]) continue;
        const Triangle& tr = t.tris[ti];
        for (int s = 0; s < 3; ++s) {
            int x = tr.side[s], y = tr.side[(s + 1) % 3];
            if (!is_arc_side(x) || !is_arc_side(y)) continue;
            for (int a : expand[x])
                for (int c : expand[y]) {
                    b(c, a) += 1;
                    b(a, c) -= 1;
                }
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (b(i, j) < -2 || b(i, j) > 2)
                throw InvalidTriangulation("adjacency entry out of {0,±1,±2}");
}

} // namespace

BMatrix b_matrix(const IdealTriangulation& t) {
    BMatrix b(t.arc_count());
    accumulate_b(t, b);
    return b;
}

BMatrix b_matrix(const TaggedTriangulation& t) { return b_matrix(t.pattern); }

std::string canonical_key(const IdealTriangulation& t) {
    // deterministic traversal anchored at boundary segment 0; arc labels are
    // renamed in visit order, vertices and segments keep their identities
    SideOcc anchor = t.segment_occurrence(0);

    std::vector<std::vector<SideOcc>> occ(t.arc_count() + 1);
    for (int ti = 0; ti < static_cast<int>(t.tris.size()); ++ti)
        for (int s = 0; s < 3; ++s)
            if (is_arc_side(t.tris[ti].side[s])) occ[t.tris[ti].side[s]].push_back({ti, s});

    std::vector<int> canon(t.arc_count() + 1, 0);
    int next = 0;
    std::vector<int> entry_slot(t.tris.size(), -1);
    std::vector<int> order;
    entry_slot[anchor.tri] = anchor.slot;
    order.push_back(anchor.tri);

    std::ostringstream out;
    for (size_t head = 0; head < order.size(); ++head) {
        int ti = order[head];
        int base = entry_slot[ti];
        out << "(";
        for (int s = 0; s < 3; ++s) {
            int slot = (base + s) % 3;
            int side = t.tris[ti].side[slot];
            if (is_arc_side(side)) {
                if (!canon[side]) canon[side] = ++next;
                out << "a" << canon[side];
                for (SideOcc o : occ[side])
                    if (entry_slot[o.tri] < 0) {
                        entry_slot[o.tri] = o.slot;
                        order.push_back(o.tri);
                    }
            } else {
                out << "s" << segment_of_side(side);
            }
            out << ":" << t.tris[ti].corner[slot] << (s < 2 ? "," : "");
        }
        out << ")";
    }
    return out.str();
}

std::string canonical_key(const TaggedTriangulation& t) {
    std::ostringstream out;
    out << canonical_key(t.pattern) << "|";
    for (int s : t.signs) out << (s > 0 ? "+" : "-");
    return out.str();
}

} // namespace flipsurf
