#include "flipsurf/models.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "flipsurf/errors.hpp"
#include "flipsurf/mutation.hpp"

namespace flipsurf {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
    return n >= 0 ? n / d : -((-n + d - 1) / d);
}

std::int64_t ceil_div(std::int64_t n, std::int64_t d) { return floor_div(n + d - 1, d); }

// x strictly inside the counterclockwise interval (a,b); a==b means the full
// circle minus the base point
bool in_open(int x, int a, int b, int m) {
    if (a == b) return x != a;
    int d = mod(b - a, m);
    int dx = mod(x - a, m);
    return dx > 0 && dx < d;
}

int interval_len(int a, int b, int m) { return a == b ? m : mod(b - a, m); }

// crossing of two hole-hugging ordered chords on an m-cycle
bool chords_cross(int m, int a, int b, int c, int d) {
    if (std::minmax(a, b) == std::minmax(c, d)) return false; // same or reversed pair
    bool t1 = in_open(c, a, b, m) != in_open(d, a, b, m);
    bool t2 = in_open(a, c, d, m) != in_open(b, c, d, m);
    return t1 && t2;
}

// number of integers strictly between n1/d1 and n2/d2
std::int64_t integers_strictly_between(std::int64_t n1, std::int64_t d1, std::int64_t n2,
                                       std::int64_t d2) {
    if (n1 * d2 > n2 * d1) {
        std::swap(n1, n2);
        std::swap(d1, d2);
    }
    std::int64_t lo = floor_div(n1, d1) + 1;
    std::int64_t hi = ceil_div(n2, d2) - 1;
    return std::max<std::int64_t>(0, hi - lo + 1);
}

struct AnnulusShape {
    int outer = 0, inner = 0;
};

AnnulusShape annulus_shape(const MarkedSurface& s) {
    return {s.boundaries[0], s.boundaries[1]};
}

bool annulus_crossing(const AnnulusShape& sh, const AnnulusArc& x, const AnnulusArc& y) {
    using K = AnnulusArc::Kind;
    const AnnulusArc& u = x.kind <= y.kind ? x : y;
    const AnnulusArc& v = x.kind <= y.kind ? y : x;
    const int p = sh.outer, q = sh.inner;

    switch (u.kind) {
    case K::Bridge:
        switch (v.kind) {
        case K::Bridge: {
            if (u == v) return false;
            // lifts of u cross the fixed lift of v at integers strictly
            // between (v.O-u.O)/p and (u.I-v.I)/q
            return integers_strictly_between(v.a - u.a, p, u.b - v.b, q) > 0;
        }
        case K::OuterChord:
            return in_open(u.a, v.a, v.b, p);
        case K::InnerChord:
            return in_open(mod(u.b, q), v.a, v.b, q);
        case K::OuterLoop:
            return u.a != v.a;
        case K::InnerLoop:
            return mod(u.b, q) != v.a;
        }
        break;
    case K::OuterChord:
        switch (v.kind) {
        case K::OuterChord:
            return chords_cross(p, u.a, u.b, v.a, v.b);
        case K::OuterLoop:
            return in_open(v.a, u.a, u.b, p);
        default:
            return false; // inner objects live on the far side of the core
        }
        break;
    case K::InnerChord:
        switch (v.kind) {
        case K::InnerChord:
            return chords_cross(q, u.a, u.b, v.a, v.b);
        case K::InnerLoop:
            return in_open(v.a, u.a, u.b, q);
        default:
            return false;
        }
        break;
    case K::OuterLoop:
        return v.kind == K::OuterLoop ? u.a != v.a : false;
    case K::InnerLoop:
        return v.kind == K::InnerLoop ? u.a != v.a : false;
    }
    return false;
}

bool annulus_arc_valid(const AnnulusShape& sh, const AnnulusArc& arc) {
    using K = AnnulusArc::Kind;
    switch (arc.kind) {
    case K::Bridge:
        return arc.a >= 0 && arc.a < sh.outer;
    case K::OuterChord:
        return arc.a >= 0 && arc.a < sh.outer && arc.b >= 0 && arc.b < sh.outer &&
               arc.a != arc.b && mod(arc.b - arc.a, sh.outer) != 1;
    case K::InnerChord:
        return arc.a >= 0 && arc.a < sh.inner && arc.b >= 0 && arc.b < sh.inner &&
               arc.a != arc.b && mod(arc.b - arc.a, sh.inner) != 1;
    case K::OuterLoop:
        return sh.outer >= 2 && arc.a >= 0 && arc.a < sh.outer;
    case K::InnerLoop:
        return sh.inner >= 2 && arc.a >= 0 && arc.a < sh.inner;
    }
    return false;
}

} // namespace

ModelKind model_kind(const MarkedSurface& s) {
    require_valid(s);
    ClusterType ct = classify_type(s);
    if (ct.kind == SurfaceClass::TypeA) return ModelKind::TypeA;
    if (ct.kind == SurfaceClass::TypeD) {
        if (s.marked_total() < 2)
            throw UnsupportedSurface("once-punctured monogon has no arc model");
        return ModelKind::TypeD;
    }
    if (s.genus == 0 && s.boundary_components() == 2 && s.punctures == 0)
        return ModelKind::Annulus;
    throw UnsupportedSurface("no arc model for surface " + format_surface(s));
}

std::string arc_to_string(const ModelArc& arc) {
    std::ostringstream out;
    if (const auto* a = std::get_if<PolygonArc>(&arc)) {
        out << a->u << "-" << a->v;
    } else if (const auto* d = std::get_if<DArc>(&arc)) {
        if (d->kind == DArc::Kind::Radius)
            out << "r" << d->a << (d->notched ? "-" : "+");
        else
            out << "c" << d->a << ">" << d->b;
    } else {
        const auto& an = std::get<AnnulusArc>(arc);
        using K = AnnulusArc::Kind;
        switch (an.kind) {
        case K::Bridge: out << "b" << an.a << ":" << an.b; break;
        case K::OuterChord: out << "oc" << an.a << ">" << an.b; break;
        case K::InnerChord: out << "ic" << an.a << ">" << an.b; break;
        case K::OuterLoop: out << "ol" << an.a; break;
        case K::InnerLoop: out << "il" << an.a; break;
        }
    }
    return out.str();
}

ModelArc parse_arc(const MarkedSurface& s, const std::string& text) {
    ModelKind kind = model_kind(s);
    auto fail = [&]() -> ModelArc {
        throw UnsupportedSurface("cannot parse arc '" + text + "' for surface " +
                                 format_surface(s));
    };
    std::istringstream in(text);
    if (kind == ModelKind::TypeA) {
        int u, v;
        char dash;
        if (!(in >> u >> dash >> v) || dash != '-') return fail();
        return PolygonArc{std::min(u, v), std::max(u, v)};
    }
    if (kind == ModelKind::TypeD) {
        char c;
        if (!(in >> c)) return fail();
        if (c == 'r') {
            int v;
            char tag;
            if (!(in >> v >> tag) || (tag != '+' && tag != '-')) return fail();
            return DArc::radius(v, tag == '-');
        }
        if (c == 'c') {
            int a, b;
            char gt;
            if (!(in >> a >> gt >> b) || gt != '>') return fail();
            return DArc::chord(a, b);
        }
        return fail();
    }
    char c;
    if (!(in >> c)) return fail();
    if (c == 'b') {
        int o, i;
        char colon;
        if (!(in >> o >> colon >> i) || colon != ':') return fail();
        return AnnulusArc::bridge(o, i);
    }
    return fail();
}

bool compatible(const MarkedSurface& s, const ModelArc& x, const ModelArc& y) {
    switch (model_kind(s)) {
    case ModelKind::TypeA: {
        const auto &a = std::get<PolygonArc>(x), &b = std::get<PolygonArc>(y);
        if (a == b) return true;
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return true;
        const int m = s.marked_total();
        return in_open(b.u, a.u, a.v, m) == in_open(b.v, a.u, a.v, m);
    }
    case ModelKind::TypeD: {
        const auto &a = std::get<DArc>(x), &b = std::get<DArc>(y);
        const int m = s.marked_total();
        if (a == b) return true;
        if (a.kind == DArc::Kind::Radius && b.kind == DArc::Kind::Radius)
            return a.a == b.a || a.notched == b.notched;
        if (a.kind == DArc::Kind::Radius)
            return !in_open(a.a, b.a, b.b, m);
        if (b.kind == DArc::Kind::Radius)
            return !in_open(b.a, a.a, a.b, m);
        return !chords_cross(m, a.a, a.b, b.a, b.b);
    }
    case ModelKind::Annulus: {
        const auto &a = std::get<AnnulusArc>(x), &b = std::get<AnnulusArc>(y);
        if (a == b) return true;
        return !annulus_crossing(annulus_shape(s), a, b);
    }
    }
    return false;
}

std::vector<ModelArc> enumerate_arcs(const MarkedSurface& s, int winding_window) {
    std::vector<ModelArc> out;
    switch (model_kind(s)) {
    case ModelKind::TypeA: {
        const int m = s.marked_total();
        for (int u = 0; u < m; ++u)
            for (int v = u + 2; v < m; ++v)
                if (!(u == 0 && v == m - 1)) out.push_back(PolygonArc{u, v});
        break;
    }
    case ModelKind::TypeD: {
        const int m = s.marked_total();
        for (int v = 0; v < m; ++v) {
            out.push_back(DArc::radius(v, false));
            out.push_back(DArc::radius(v, true));
        }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (a != b && mod(b - a, m) != 1) out.push_back(DArc::chord(a, b));
        break;
    }
    case ModelKind::Annulus: {
        AnnulusShape sh = annulus_shape(s);
        for (int o = 0; o < sh.outer; ++o)
            for (int i = 0; i < sh.inner; ++i)
                for (int w = -winding_window; w <= winding_window; ++w)
                    out.push_back(AnnulusArc::bridge_winding(s, o, i, w));
        for (int a = 0; a < sh.outer; ++a) {
            if (sh.outer >= 2) out.push_back(AnnulusArc::outer_loop(a));
            for (int b = 0; b < sh.outer; ++b) {
                AnnulusArc c = AnnulusArc::outer_chord(a, b);
                if (annulus_arc_valid(sh, c)) out.push_back(c);
            }
        }
        for (int a = 0; a < sh.inner; ++a) {
            if (sh.inner >= 2) out.push_back(AnnulusArc::inner_loop(a));
            for (int b = 0; b < sh.inner; ++b) {
                AnnulusArc c = AnnulusArc::inner_chord(a, b);
                if (annulus_arc_valid(sh, c)) out.push_back(c);
            }
        }
        break;
    }
    }
    return out;
}

ModelArc act_on_arc(const MarkedSurface& s, const MappingClassElement& g,
                    const ModelArc& arc) {
    switch (model_kind(s)) {
    case ModelKind::TypeA: {
        const int m = s.marked_total();
        const int k = g.rotation_powers[0];
        auto a = std::get<PolygonArc>(arc);
        int u = mod(a.u + k, m), v = mod(a.v + k, m);
        return PolygonArc{std::min(u, v), std::max(u, v)};
    }
    case ModelKind::TypeD: {
        const int m = s.marked_total();
        const int k = g.rotation_powers[0];
        auto d = std::get<DArc>(arc);
        if (d.kind == DArc::Kind::Radius)
            return DArc::radius(mod(d.a + k, m), d.notched != (g.tag_signs[0] < 0));
        return DArc::chord(mod(d.a + k, m), mod(d.b + k, m));
    }
    case ModelKind::Annulus: {
        AnnulusShape sh = annulus_shape(s);
        const int ko = g.rotation_powers[0], ki = g.rotation_powers[1];
        auto a = std::get<AnnulusArc>(arc);
        using K = AnnulusArc::Kind;
        switch (a.kind) {
        case K::Bridge: {
            // one deck transformation shifts (O, I) by (p, -q)
            std::int64_t O = a.a + ko, I = a.b + ki;
            std::int64_t decks = floor_div(O, sh.outer);
            return AnnulusArc::bridge(static_cast<int>(O - decks * sh.outer),
                                      static_cast<int>(I + decks * sh.inner));
        }
        case K::OuterChord:
            return AnnulusArc::outer_chord(mod(a.a + ko, sh.outer), mod(a.b + ko, sh.outer));
        case K::InnerChord:
            return AnnulusArc::inner_chord(mod(a.a + ki, sh.inner), mod(a.b + ki, sh.inner));
        case K::OuterLoop:
            return AnnulusArc::outer_loop(mod(a.a + ko, sh.outer));
        case K::InnerLoop:
            return AnnulusArc::inner_loop(mod(a.a + ki, sh.inner));
        }
        break;
    }
    }
    return arc;
}

ModelArc model_rotate(const MarkedSurface& s, const ModelArc& arc) {
    return act_on_arc(s, tagged_rotation(s), arc);
}

ModelTriangulation fan_triangulation(const MarkedSurface& s) {
    ModelTriangulation t;
    t.surface = s;
    switch (model_kind(s)) {
    case ModelKind::TypeA: {
        const int m = s.marked_total();
        for (int v = 2; v <= m - 2; ++v) t.arcs.push_back(PolygonArc{0, v});
        break;
    }
    case ModelKind::TypeD: {
        const int m = s.marked_total();
        for (int v = 2; v < m; ++v) t.arcs.push_back(DArc::chord(0, v));
        t.arcs.push_back(DArc::radius(0, false));
        t.arcs.push_back(DArc::radius(0, true));
        break;
    }
    case ModelKind::Annulus: {
        AnnulusShape sh = annulus_shape(s);
        if (sh.outer != 1 || sh.inner != 1)
            throw UnsupportedSurface("annulus fan implemented for one marked point per "
                                     "boundary component");
        t.arcs.push_back(AnnulusArc::bridge(0, 0));
        t.arcs.push_back(AnnulusArc::bridge(0, 1));
        break;
    }
    }
    return t;
}

bool is_model_triangulation(const ModelTriangulation& t) {
    if (static_cast<int>(t.arcs.size()) != t.surface.rank()) return false;
    for (size_t i = 0; i < t.arcs.size(); ++i)
        for (size_t j = i + 1; j < t.arcs.size(); ++j) {
            if (t.arcs[i] == t.arcs[j]) return false;
            if (!compatible(t.surface, t.arcs[i], t.arcs[j])) return false;
        }
    return true;
}

ModelTriangulation model_flip(const ModelTriangulation& t, int label) {
    if (label < 1 || label > static_cast<int>(t.arcs.size()))
        throw UnknownArc("no arc with label " + std::to_string(label));
    const size_t slot = static_cast<size_t>(label - 1);

    int window = 2;
    if (model_kind(t.surface) == ModelKind::Annulus) {
        int q = t.surface.boundaries[1];
        int maxI = 0;
        for (const ModelArc& a : t.arcs)
            if (const auto* an = std::get_if<AnnulusArc>(&a))
                if (an->kind == AnnulusArc::Kind::Bridge)
                    maxI = std::max(maxI, std::abs(an->b));
        window = maxI / q + 2;
    }

    std::vector<ModelArc> replacements;
    for (const ModelArc& cand : enumerate_arcs(t.surface, window)) {
        if (cand == t.arcs[slot]) continue;
        bool ok = true;
        for (size_t j = 0; j < t.arcs.size() && ok; ++j)
            if (j != slot) ok = compatible(t.surface, cand, t.arcs[j]) && cand != t.arcs[j];
        if (ok) replacements.push_back(cand);
    }
    if (replacements.size() != 1)
        throw InvalidTriangulation("flip of " + arc_to_string(t.arcs[slot]) + " found " +
                                   std::to_string(replacements.size()) + " completions");
    ModelTriangulation out = t;
    out.arcs[slot] = replacements.front();
    return out;
}

ModelTriangulation act(const MarkedSurface& s, const MappingClassElement& g,
                       const ModelTriangulation& t) {
    if (t.surface != s) throw SurfaceMismatch("triangulation lives on another surface");
    ModelTriangulation out = t;
    for (ModelArc& a : out.arcs) a = act_on_arc(s, g, a);
    return out;
}

std::string model_key(const ModelTriangulation& t) {
    std::vector<std::string> parts;
    parts.reserve(t.arcs.size());
    for (const ModelArc& a : t.arcs) parts.push_back(arc_to_string(a));
    std::sort(parts.begin(), parts.end());
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) out << (i ? "|" : "") << parts[i];
    return out.str();
}

namespace {

TaggedTriangulation polygon_to_tagged(const ModelTriangulation& t) {
    const int m = t.surface.marked_total();
    std::map<std::pair<int, int>, int> chord_label;
    for (size_t i = 0; i < t.arcs.size(); ++i) {
        const auto& a = std::get<PolygonArc>(t.arcs[i]);
        chord_label[{a.u, a.v}] = static_cast<int>(i) + 1;
    }
    auto edge_side = [&](int x, int y) -> std::optional<int> {
        if (y == x + 1) return boundary_side(x);
        auto it = chord_label.find({x, y});
        if (it != chord_label.end()) return it->second;
        return std::nullopt;
    };

    IdealTriangulation pat;
    pat.surface = t.surface;
    std::function<void(int, int, int)> emit = [&](int a, int b, int closing) {
        if (b - a < 2) return;
        for (int c = a + 1; c < b; ++c) {
            auto s1 = edge_side(a, c), s2 = edge_side(c, b);
            if (!s1 || !s2) continue;
            pat.tris.push_back(Triangle{{*s1, *s2, closing}, {a, c, b}});
            if (is_arc_side(*s1)) emit(a, c, *s1);
            if (is_arc_side(*s2)) emit(c, b, *s2);
            return;
        }
        throw InvalidTriangulation("polygon region " + std::to_string(a) + ".." +
                                   std::to_string(b) + " has no ear");
    };
    emit(0, m - 1, boundary_side(m - 1));
    pat.refresh_folds();
    return TaggedTriangulation::plain(std::move(pat));
}

TaggedTriangulation punctured_to_tagged(const ModelTriangulation& t) {
    const int m = t.surface.marked_total();
    const int punct = t.surface.puncture_vertex(0);

    // sort the tagged arcs into pattern roles
    std::map<int, std::vector<std::pair<int, bool>>> radii; // vertex -> (label, notched)
    std::map<std::pair<int, int>, int> chord_label;         // (start, length) -> label
    for (size_t i = 0; i < t.arcs.size(); ++i) {
        const auto& a = std::get<DArc>(t.arcs[i]);
        int label = static_cast<int>(i) + 1;
        if (a.kind == DArc::Kind::Radius)
            radii[a.a].push_back({label, a.notched});
        else
            chord_label[{a.a, interval_len(a.a, a.b, m)}] = label;
    }

    int fold_vertex = -1, radius_label = 0, loop_label = 0;
    int sign = +1;
    for (auto& [v, list] : radii) {
        if (list.size() == 2) {
            fold_vertex = v;
            for (auto [label, notched] : list) (notched ? loop_label : radius_label) = label;
        }
    }
    if (fold_vertex >= 0) {
        if (radii.size() != 1 || !radius_label || !loop_label)
            throw InvalidTriangulation("inconsistent digon pair at the puncture");
    } else {
        bool first = true, notched = false;
        for (auto& [v, list] : radii) {
            if (list.size() != 1) throw InvalidTriangulation("conflicting radii");
            if (first) notched = list[0].second, first = false;
            if (list[0].second != notched)
                throw InvalidTriangulation("radius tags disagree at the puncture");
        }
        if (first) throw InvalidTriangulation("no arc reaches the puncture");
        sign = notched ? -1 : +1;
    }

    IdealTriangulation pat;
    pat.surface = t.surface;

    auto side_in_interval = [&](int x, int y) -> std::optional<int> {
        if (y - x == 1) return boundary_side(mod(x, m));
        auto it = chord_label.find({mod(x, m), y - x});
        if (it != chord_label.end()) return it->second;
        return std::nullopt;
    };
    // linear corners a..a+d, closed off by `closing` traversed end-to-start
    std::function<void(int, int, int)> emit_interval = [&](int a, int d, int closing) {
        if (d < 2) return;
        for (int c = a + 1; c < a + d; ++c) {
            auto s1 = side_in_interval(a, c), s2 = side_in_interval(c, a + d);
            if (!s1 || !s2) continue;
            pat.tris.push_back(
                Triangle{{*s1, *s2, closing}, {mod(a, m), mod(c, m), mod(a + d, m)}});
            if (is_arc_side(*s1)) emit_interval(a, c - a, *s1);
            if (is_arc_side(*s2)) emit_interval(c, a + d - c, *s2);
            return;
        }
        throw InvalidTriangulation("punctured-polygon region has no ear");
    };

    if (fold_vertex >= 0) {
        pat.tris.push_back(Triangle{{loop_label, radius_label, radius_label},
                                    {fold_vertex, fold_vertex, punct}});
        emit_interval(fold_vertex, m, loop_label);
    } else {
        auto radius_at = [&](int v) {
            auto it = radii.find(v);
            if (it == radii.end())
                throw InvalidTriangulation("core corner " + std::to_string(v) +
                                           " has no radius");
            return it->second[0].first;
        };
        // maximal chords and uncovered boundary edges wall off the core
        std::vector<std::tuple<int, int, int>> chords; // (start, len, label)
        for (auto& [key, label] : chord_label) chords.push_back({key.first, key.second, label});
        int walled = 0;
        for (auto& [a, d, label] : chords) {
            bool nested = false;
            for (auto& [a2, d2, label2] : chords)
                if (label2 != label && mod(a - a2, m) + d <= d2) nested = true;
            if (nested) continue;
            emit_interval(a, d, label);
            int b = mod(a + d, m);
            pat.tris.push_back(Triangle{{label, radius_at(b), radius_at(a)}, {a, b, punct}});
            walled += d;
        }
        for (int i = 0; i < m; ++i) {
            bool covered = false;
            for (auto& [a, d, label] : chords)
                if (mod(i - a, m) < d) covered = true;
            if (covered) continue;
            int j = mod(i + 1, m);
            pat.tris.push_back(
                Triangle{{boundary_side(i), radius_at(j), radius_at(i)}, {i, j, punct}});
            walled += 1;
        }
        if (walled != m) throw InvalidTriangulation("core walls do not close up");
    }
    pat.refresh_folds();

    TaggedTriangulation out;
    out.pattern = std::move(pat);
    out.signs = {sign};
    out.normalize_signs();
    return out;
}

} // namespace

TaggedTriangulation to_tagged(const ModelTriangulation& t) {
    switch (model_kind(t.surface)) {
    case ModelKind::TypeA: return polygon_to_tagged(t);
    case ModelKind::TypeD: return punctured_to_tagged(t);
    default:
        throw UnsupportedSurface("no combinatorial bridge for annulus models");
    }
}

RotationOrder rotation_order(const MarkedSurface& s) {
    if (model_kind(s) == ModelKind::Annulus) {
        // infinite order, certified on a bridge orbit
        ModelArc a = AnnulusArc::bridge(0, 0);
        std::set<ModelArc> seen{a};
        for (int k = 0; k < 50; ++k) {
            a = model_rotate(s, a);
            if (!seen.insert(a).second)
                throw InvalidTriangulation("bridge orbit unexpectedly closed");
        }
        return {false, 0};
    }
    std::vector<ModelArc> arcs = enumerate_arcs(s);
    std::map<ModelArc, int> index;
    for (size_t i = 0; i < arcs.size(); ++i) index[arcs[i]] = static_cast<int>(i);
    std::vector<int> perm(arcs.size());
    for (size_t i = 0; i < arcs.size(); ++i) perm[i] = index.at(model_rotate(s, arcs[i]));

    std::vector<bool> seen(arcs.size(), false);
    std::int64_t order = 1;
    for (size_t i = 0; i < arcs.size(); ++i) {
        if (seen[i]) continue;
        std::int64_t len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    // the rotation also cycles the marked points themselves; on the square
    // both diagonals return after two steps while the rotation needs four
    order = std::lcm(order, static_cast<std::int64_t>(s.marked_total()));
    return {true, order};
}

OrbitResult orbit(const MarkedSurface& s, const ModelArc& arc, int count) {
    OrbitResult out;
    out.arcs.push_back(arc);
    ModelArc cur = arc;
    for (int k = 1; k < count; ++k) {
        cur = model_rotate(s, cur);
        if (!out.first_repetition && cur == arc) out.first_repetition = k;
        out.arcs.push_back(cur);
    }
    return out;
}

bool green_endpoint_matches_rotation(const ModelTriangulation& t,
                                     const std::vector<int>& seq) {
    FramedSeed seed = FramedSeed::initial(b_matrix(to_tagged(t)));
    for (int k : seq) {
        if (!is_green(seed, k))
            throw NotMaximalGreen("step " + std::to_string(k) + " is not green");
        seed = mutate_framed(seed, k);
    }
    if (!all_red(seed)) throw NotMaximalGreen("sequence does not end all-red");

    ModelTriangulation cur = t;
    for (int k : seq) cur = model_flip(cur, k);

    std::set<ModelArc> reached(cur.arcs.begin(), cur.arcs.end());
    std::set<ModelArc> rotated;
    for (const ModelArc& a : t.arcs) rotated.insert(model_rotate(t.surface, a));
    return reached == rotated;
}

} // namespace flipsurf
