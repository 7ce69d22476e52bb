#include "flipsurf/proofkit.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "flipsurf/errors.hpp"
#include "flipsurf/explorer.hpp"
#include "flipsurf/mcg.hpp"
#include "flipsurf/models.hpp"
#include "flipsurf/mutation.hpp"

namespace flipsurf {

bool CheckReport::all_pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const CheckItem& i) { return i.pass; });
}

void CheckReport::add(std::string name, bool pass, std::string detail) {
    items.push_back({std::move(name), pass, std::move(detail)});
}

namespace {

std::string arrows_str(const Quiver& q) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [ij, mult] : q.arrows) {
        if (!first) out << ", ";
        first = false;
        out << ij.first << (mult > 1 ? "=>" : "->") << ij.second;
        if (mult > 2) out << "(x" << mult << ")";
    }
    return out.str();
}

bool is_source(const BMatrix& b, int label) {
    for (int j = 1; j <= b.size(); ++j)
        if (b(label, j) < 0) return false; // an incoming arrow
    return true;
}

// source-flip check of one arc inside one model triangulation
bool source_flip_holds(const ModelTriangulation& t, int label, std::string* why) {
    BMatrix b = b_matrix(to_tagged(t));
    if (!is_source(b, label)) {
        if (why) *why = "not a source: " + arrows_str(quiver(b));
        return false;
    }
    ModelArc expected = model_rotate(t.surface, t.arcs[label - 1]);
    ModelArc got = model_flip(t, label).arcs[label - 1];
    if (got != expected) {
        if (why)
            *why = "flip gave " + arc_to_string(got) + ", rotation gives " +
                   arc_to_string(expected);
        return false;
    }
    if (why) *why = "source with " + arrows_str(quiver(b)) + "; flip = rotation image";
    return true;
}

MarkedSurface polygon_surface(int m) { return {0, {m}, 0}; }
MarkedSurface punctured_polygon_surface(int m) { return {0, {m}, 1}; }

} // namespace

CheckReport source_flip_check(SourceFlipCase which) {
    CheckReport rep;
    switch (which) {
    case SourceFlipCase::CaseI: {
        // square: the diagonal flips to the rotated diagonal
        ModelTriangulation square = fan_triangulation(polygon_surface(4));
        std::string why;
        rep.add("square diagonal", source_flip_holds(square, 1, &why), why);

        // hexagon fan: the short diagonal has a neighbour, so being a source
        // is a real condition here
        ModelTriangulation hex = fan_triangulation(polygon_surface(6));
        rep.add("hexagon fan arc 0-2", source_flip_holds(hex, 1, &why), why);
        break;
    }
    case SourceFlipCase::CaseIIPlain: {
        ModelTriangulation t;
        t.surface = punctured_polygon_surface(3);
        t.arcs = {DArc::radius(0, false), DArc::radius(1, false), DArc::chord(1, 0)};
        std::string why;
        rep.add("radius with plain companion",
                is_model_triangulation(t) && source_flip_holds(t, 1, &why), why);
        break;
    }
    case SourceFlipCase::CaseIITagged: {
        ModelTriangulation t;
        t.surface = punctured_polygon_surface(3);
        t.arcs = {DArc::radius(0, false), DArc::radius(0, true), DArc::chord(1, 0)};
        std::string why;
        rep.add("radius with notched companion",
                is_model_triangulation(t) && source_flip_holds(t, 1, &why), why);
        break;
    }
    }
    return rep;
}

CheckReport source_flip_model_sweep(const MarkedSurface& s) {
    CheckReport rep;
    std::vector<ModelTriangulation> all = enumerate_triangulations(s);
    for (const ModelArc& arc : enumerate_arcs(s)) {
        bool found = false;
        for (const ModelTriangulation& t : all) {
            auto it = std::find(t.arcs.begin(), t.arcs.end(), arc);
            if (it == t.arcs.end()) continue;
            int label = static_cast<int>(it - t.arcs.begin()) + 1;
            if (source_flip_holds(t, label, nullptr)) {
                found = true;
                break;
            }
        }
        rep.add("arc " + arc_to_string(arc), found,
                found ? "admits a source triangulation whose flip realizes the rotation"
                      : "no witnessing triangulation found");
    }
    return rep;
}

namespace {

// rank-5 loop configuration: a genus-one surface with one boundary component
// carrying two marked points, the handle cut along arcs 2 and 3, the loop to
// flip labeled 1, and the remaining region a triangle over the second
// boundary segment
BuiltTriangulation genus_loop_fixture() {
    BuiltTriangulation bt;
    IdealTriangulation pat;
    pat.surface = {1, {2}, 0};
    pat.tris = {
        Triangle{{1, 2, 3}, {0, 0, 0}},
        Triangle{{2, 3, 5}, {0, 0, 0}},
        Triangle{{boundary_side(0), 4, 1}, {0, 1, 0}},
        Triangle{{5, 4, boundary_side(1)}, {0, 0, 1}},
    };
    pat.refresh_folds();
    bt.t = TaggedTriangulation::plain(std::move(pat));
    bt.loop_mark.assign(6, false);
    bt.loop_mark[1] = bt.loop_mark[2] = bt.loop_mark[3] = bt.loop_mark[5] = true;
    return bt;
}

Quiver drop_hidden_pair(Quiver q) {
    // the 4-5 adjacency lies behind the cut and plays no role in the replay
    q.arrows.erase({4, 5});
    q.arrows.erase({5, 4});
    return q;
}

} // namespace

CheckReport genus_mutation_replay() {
    CheckReport rep;

    // pinned quivers; mutated vertices keep their slot (1, 2, 3)
    BMatrix q1 = BMatrix::from_arrows(
        5, {{2, 1}, {2, 5}, {1, 4}, {1, 3}, {5, 3}, {3, 2}, {3, 2}});
    BMatrix q2 = BMatrix::from_arrows(
        5, {{1, 2}, {4, 1}, {3, 1}, {2, 5}, {5, 3}, {3, 2}, {2, 4}});
    BMatrix q3 = BMatrix::from_arrows(
        5, {{5, 2}, {2, 3}, {2, 1}, {3, 4}, {3, 1}, {4, 2}, {1, 5}});
    BMatrix q4 = BMatrix::from_arrows(
        5, {{5, 2}, {3, 2}, {2, 1}, {2, 1}, {4, 3}, {1, 3}, {1, 5}});

    BMatrix m1 = mutate_b(q1, 1);
    BMatrix m2 = mutate_b(m1, 2);
    BMatrix m3 = mutate_b(m2, 3);
    rep.add("matrix mutation 1", m1 == q2,
            "expected " + arrows_str(quiver(q2)) + "; got " + arrows_str(quiver(m1)));
    rep.add("matrix mutation 2", m2 == q3,
            "expected " + arrows_str(quiver(q3)) + "; got " + arrows_str(quiver(m2)));
    rep.add("matrix mutation 3", m3 == q4,
            "expected " + arrows_str(quiver(q4)) + "; got " + arrows_str(quiver(m3)));

    // surface realization: the same mutations as flips
    BuiltTriangulation fixture = genus_loop_fixture();
    TaggedTriangulation t = fixture.t;
    t.validate();

    BMatrix surface_b = b_matrix(t);
    rep.add("surface start matches the pinned quiver",
            drop_hidden_pair(quiver(surface_b)) == quiver(q1),
            arrows_str(quiver(surface_b)));

    const BMatrix targets[3] = {q2, q3, q4};
    for (int step = 1; step <= 3; ++step) {
        TaggedTriangulation next = t.flipped(step);
        next.validate();
        BMatrix expected = mutate_b(b_matrix(t), step);
        BMatrix got = b_matrix(next);
        bool commutes = got == expected;
        bool pinned = drop_hidden_pair(quiver(got)) == quiver(targets[step - 1]);
        rep.add("surface flip " + std::to_string(step), commutes && pinned,
                arrows_str(drop_hidden_pair(quiver(got))));
        t = std::move(next);
    }
    return rep;
}

std::string arc_type_name(ArcType t) {
    switch (t) {
    case ArcType::LemmaI: return "endpoint-pair";
    case ArcType::LemmaII: return "puncture-leg";
    case ArcType::Loop: return "loop";
    case ArcType::Other: return "other";
    }
    return "other";
}

namespace {

void remap_ids(TaggedTriangulation& t, const MarkedSurface& old_s,
               const MarkedSurface& new_s) {
    auto new_vertex = [&](int v) {
        if (v < old_s.marked_total()) {
            auto [c, i] = old_s.locate_marked(v);
            return new_s.marked_vertex(c, i);
        }
        return new_s.puncture_vertex(v - old_s.marked_total());
    };
    for (Triangle& tr : t.pattern.tris)
        for (int k = 0; k < 3; ++k) {
            if (!is_arc_side(tr.side[k]))
                tr.side[k] = boundary_side(new_vertex(segment_of_side(tr.side[k])));
            tr.corner[k] = new_vertex(tr.corner[k]);
        }
    t.pattern.surface = new_s;
    t.pattern.refresh_folds();
}

// rotate a triangle so the given slot comes first
Triangle rotated_triangle(const Triangle& t, int slot) {
    Triangle r;
    for (int s = 0; s < 3; ++s) {
        r.side[s] = t.side[(slot + s) % 3];
        r.corner[s] = t.corner[(slot + s) % 3];
    }
    return r;
}

// --- basic cases ------------------------------------------------------

BuiltTriangulation from_model(const ModelTriangulation& m) {
    BuiltTriangulation bt;
    bt.t = to_tagged(m);
    bt.loop_mark.assign(m.surface.rank() + 1, false);
    return bt;
}

BuiltTriangulation basic_case_polygon() {
    ModelTriangulation sq = fan_triangulation(MarkedSurface{0, {4}, 0});
    return from_model(sq);
}

BuiltTriangulation basic_case_punctured_digon() {
    ModelTriangulation t;
    t.surface = MarkedSurface{0, {2}, 1};
    t.arcs = {DArc::radius(0, false), DArc::radius(1, false)};
    return from_model(t);
}

BuiltTriangulation basic_case_annulus() {
    BuiltTriangulation bt;
    IdealTriangulation pat;
    pat.surface = MarkedSurface{0, {1, 1}, 0};
    // two bridges between the boundary components; the strip around the
    // inner circle and the strip inside the outer circle
    pat.tris = {
        Triangle{{boundary_side(1), 1, 2}, {1, 1, 0}},
        Triangle{{boundary_side(0), 1, 2}, {0, 0, 1}},
    };
    pat.refresh_folds();
    bt.t = TaggedTriangulation::plain(std::move(pat));
    bt.loop_mark.assign(3, false);
    return bt;
}

BuiltTriangulation basic_case_twice_punctured_disc() {
    BuiltTriangulation bt;
    IdealTriangulation pat;
    pat.surface = MarkedSurface{0, {1}, 2};
    // arcs 1,2: the two boundary-to-second-puncture arcs around the first
    // puncture; arc 3: radius to the first puncture; arc 4: its enclosing
    // loop.  vertex ids: marked 0, punctures 1 and 2
    pat.tris = {
        Triangle{{4, 3, 3}, {0, 0, 1}},
        Triangle{{2, 1, 4}, {0, 2, 0}},
        Triangle{{boundary_side(0), 1, 2}, {0, 0, 2}},
    };
    pat.refresh_folds();
    bt.t = TaggedTriangulation::plain(std::move(pat));
    bt.loop_mark.assign(5, false);
    return bt;
}

BuiltTriangulation basic_case_genus(int g) {
    // 4g-gon with all corners identified to the single marked point, the
    // boundary circle wedged between the two copies of the middle spoke;
    // every arc is a non-contractible loop
    BuiltTriangulation bt;
    IdealTriangulation pat;
    pat.surface = MarkedSurface{g, {1}, 0};
    const int N = 4 * g;
    const int n = 6 * g - 2;

    auto edge_arc = [&](int t) {
        t = ((t % N) + N) % N;
        int handle = t / 4;
        return (t % 2 == 0) ? 2 * handle + 1 : 2 * handle + 2;
    };
    const int lo = n - 1, hi = n; // the doubled middle spoke
    auto chord_label = [&](int j) {
        return j < 2 * g ? 2 * g + (j - 1) : 2 * g + (j - 2);
    };
    auto spoke_fwd = [&](int j) {   // side from v0 to v_j as used by fan j
        if (j == 1) return edge_arc(0);
        if (j == 2 * g) return hi;
        return chord_label(j);
    };
    auto spoke_rev = [&](int j) { // side from v_j to v0 as used by fan j-1
        if (j == N - 1) return edge_arc(N - 1);
        if (j == 2 * g) return lo;
        return chord_label(j);
    };

    for (int j = 1; j <= N - 2; ++j)
        pat.tris.push_back(Triangle{{spoke_fwd(j), edge_arc(j), spoke_rev(j + 1)}, {0, 0, 0}});
    pat.tris.push_back(Triangle{{lo, hi, boundary_side(0)}, {0, 0, 0}});

    pat.refresh_folds();
    bt.t = TaggedTriangulation::plain(std::move(pat));
    bt.loop_mark.assign(n + 1, true);
    bt.loop_mark[0] = false;
    return bt;
}

// --- the three additions ----------------------------------------------

// new marked point appended to a boundary component, splitting the triangle
// over the wrap-around segment with an arc to the opposite vertex
void add_marked_point(BuiltTriangulation& bt, int comp) {
    TaggedTriangulation& t = bt.t;
    MarkedSurface old_s = t.pattern.surface;
    const int m = old_s.boundaries[comp];
    const int n = old_s.rank();

    MarkedSurface new_s = old_s;
    new_s.boundaries[comp] += 1;
    remap_ids(t, old_s, new_s);

    int seg1_vertex = new_s.marked_vertex(comp, m - 1);
    int C = new_s.marked_vertex(comp, m);
    SideOcc occ = t.pattern.segment_occurrence(seg1_vertex);
    Triangle d = rotated_triangle(t.pattern.tris[occ.tri], occ.slot);
    int x = d.side[1], y = d.side[2];
    int F = d.corner[0], T = d.corner[1], V = d.corner[2];

    int gamma = n + 1;
    t.pattern.tris[occ.tri] = Triangle{{boundary_side(C), x, gamma}, {C, T, V}};
    t.pattern.tris.push_back(Triangle{{boundary_side(seg1_vertex), gamma, y}, {F, C, V}});
    t.pattern.refresh_folds();
    bt.loop_mark.push_back(false);
}

// new boundary component with one marked point, inserted into the triangle
// over segment 0
void add_boundary_component(BuiltTriangulation& bt) {
    TaggedTriangulation& t = bt.t;
    MarkedSurface old_s = t.pattern.surface;
    const int n = old_s.rank();

    MarkedSurface new_s = old_s;
    new_s.boundaries.push_back(1);
    remap_ids(t, old_s, new_s);

    int C = new_s.marked_vertex(new_s.boundary_components() - 1, 0);
    SideOcc occ = t.pattern.segment_occurrence(0);
    Triangle d = rotated_triangle(t.pattern.tris[occ.tri], occ.slot);
    int eb = d.side[0], x = d.side[1], y = d.side[2];
    int F = d.corner[0], T = d.corner[1], V = d.corner[2];

    int u = n + 1, v = n + 2, wl = n + 3, wr = n + 4;
    t.pattern.tris[occ.tri] = Triangle{{eb, v, u}, {F, T, C}};
    t.pattern.tris.push_back(Triangle{{u, wl, y}, {F, C, V}});
    t.pattern.tris.push_back(Triangle{{v, x, wr}, {C, T, V}});
    t.pattern.tris.push_back(Triangle{{wr, wl, boundary_side(C)}, {C, V, C}});
    t.pattern.refresh_folds();
    for (int k = 0; k < 4; ++k) bt.loop_mark.push_back(false);
}

// new puncture inside the triangle over segment 0: a tagged pair of legs
// from the segment's start plus a second arc to the opposite vertex
void add_puncture(BuiltTriangulation& bt) {
    TaggedTriangulation& t = bt.t;
    MarkedSurface& s = t.pattern.surface;
    const int n = s.rank();
    s.punctures += 1; // marked ids and existing puncture ids are unchanged
    int D = s.puncture_vertex(s.punctures - 1);

    SideOcc occ = t.pattern.segment_occurrence(0);
    Triangle d = rotated_triangle(t.pattern.tris[occ.tri], occ.slot);
    int eb = d.side[0], x = d.side[1], y = d.side[2];
    int F = d.corner[0], T = d.corner[1], V = d.corner[2];

    int r = n + 1, loop = n + 2, h = n + 3;
    t.pattern.tris[occ.tri] = Triangle{{loop, r, r}, {F, F, D}};
    t.pattern.tris.push_back(Triangle{{y, loop, h}, {V, F, F}});
    t.pattern.tris.push_back(Triangle{{eb, x, h}, {F, T, V}});
    t.pattern.refresh_folds();
    t.signs.push_back(+1);

    bt.loop_mark.push_back(false); // r
    bt.loop_mark.push_back(false); // loop (a puncture leg as a tagged arc)
    bt.loop_mark.push_back(F == V); // h is a loop exactly over the 4g-gon base
}

} // namespace

BuiltTriangulation build_canonical_triangulation(const MarkedSurface& s) {
    require_valid(s);
    if (s.genus == 0 && s.boundary_components() == 1 && s.punctures == 1 &&
        s.marked_total() == 1)
        throw UnsupportedSurface("once-punctured monogon admits no triangulation");

    BuiltTriangulation bt;
    if (s.genus > 0)
        bt = basic_case_genus(s.genus);
    else if (s.boundary_components() >= 2)
        bt = basic_case_annulus();
    else if (s.punctures >= 2)
        bt = basic_case_twice_punctured_disc();
    else if (s.punctures == 1)
        bt = basic_case_punctured_digon();
    else
        bt = basic_case_polygon();

    while (bt.t.pattern.surface.boundary_components() < s.boundary_components())
        add_boundary_component(bt);
    while (bt.t.pattern.surface.punctures < s.punctures) add_puncture(bt);
    for (int comp = 0; comp < s.boundary_components(); ++comp)
        while (bt.t.pattern.surface.boundaries[comp] < s.boundaries[comp])
            add_marked_point(bt, comp);

    if (bt.t.pattern.surface != s)
        throw UnsupportedSurface("surface " + format_surface(s) +
                                 " is not reachable from a basic case");
    return bt;
}

ArcType classify_arc_type(const BuiltTriangulation& bt, int arc) {
    const MarkedSurface& s = bt.t.pattern.surface;
    auto [u, v] = bt.t.tagged_endpoints(arc);
    bool pu = s.is_puncture_vertex(u), pv = s.is_puncture_vertex(v);
    if (u != v) {
        if (!pu && !pv) return ArcType::LemmaI;
        if (pu != pv) return ArcType::LemmaII;
        return ArcType::Other;
    }
    if (!pu && arc < static_cast<int>(bt.loop_mark.size()) && bt.loop_mark[arc])
        return ArcType::Loop;
    return ArcType::Other;
}

std::vector<MarkedSurface> sweep_surfaces(int max_rank, int max_genus, int max_boundary,
                                          int max_punctures) {
    std::vector<MarkedSurface> out;
    for (int g = 0; g <= max_genus; ++g)
        for (int b = 1; b <= max_boundary; ++b)
            for (int p = 0; p <= max_punctures; ++p)
                for (int n = 1; n <= max_rank; ++n) {
                    int m_total = n + 6 - 6 * g - 3 * p - 3 * b;
                    if (m_total < b) continue;
                    // ordered compositions of m_total into b positive parts
                    std::vector<int> parts(b, 1);
                    int excess = m_total - b;
                    std::function<void(int, int)> place = [&](int idx, int left) {
                        if (idx == b - 1) {
                            parts[idx] = 1 + left;
                            MarkedSurface s{g, parts, p};
                            if (!validate(s) &&
                                !(g == 0 && b == 1 && p == 1 && m_total == 1))
                                out.push_back(s);
                            return;
                        }
                        for (int take = 0; take <= left; ++take) {
                            parts[idx] = 1 + take;
                            place(idx + 1, left - take);
                        }
                    };
                    place(0, excess);
                }
    return out;
}

CheckReport canonical_sweep(int max_rank, int max_genus, int max_boundary,
                            int max_punctures) {
    CheckReport rep;
    for (const MarkedSurface& s :
         sweep_surfaces(max_rank, max_genus, max_boundary, max_punctures)) {
        std::string name = format_surface(s);
        try {
            BuiltTriangulation bt = build_canonical_triangulation(s);
            bt.t.validate();

            bool boundary_triangle = false;
            for (const Triangle& tr : bt.t.pattern.tris)
                for (int side : tr.side)
                    if (!is_arc_side(side)) boundary_triangle = true;

            int counts[3] = {0, 0, 0};
            bool classified = true;
            for (int a = 1; a <= s.rank(); ++a) {
                ArcType ty = classify_arc_type(bt, a);
                if (ty == ArcType::Other) {
                    classified = false;
                    rep.add(name + " arc " + std::to_string(a), false,
                            "classified as other");
                } else {
                    ++counts[static_cast<int>(ty)];
                }
            }
            std::ostringstream detail;
            detail << "rank " << s.rank() << ": " << counts[0] << " endpoint-pair, "
                   << counts[1] << " puncture-leg, " << counts[2] << " loop";
            rep.add(name, classified && boundary_triangle, detail.str());
        } catch (const std::exception& e) {
            rep.add(name, false, e.what());
        }
    }
    return rep;
}

} // namespace flipsurf
