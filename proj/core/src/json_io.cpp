#include "flipsurf/json_io.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "flipsurf/errors.hpp"

namespace flipsurf {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json surface_to_json(const MarkedSurface& s) {
    ordered_json j;
    j["genus"] = s.genus;
    j["boundaries"] = s.boundaries;
    j["punctures"] = s.punctures;
    return j;
}

MarkedSurface surface_from_json(const json& j) {
    MarkedSurface s;
    s.genus = j.at("genus").get<int>();
    s.boundaries = j.at("boundaries").get<std::vector<int>>();
    s.punctures = j.at("punctures").get<int>();
    return s;
}

namespace {

ordered_json side_to_json(const MarkedSurface& s, int side) {
    if (is_arc_side(side)) return side;
    auto [comp, idx] = s.locate_marked(segment_of_side(side));
    return "b" + std::to_string(comp) + ":" + std::to_string(idx);
}

int side_from_json(const MarkedSurface& s, const json& j) {
    if (j.is_number_integer()) return j.get<int>();
    std::string text = j.get<std::string>();
    int comp = 0, idx = 0;
    char b = 0, colon = 0;
    std::istringstream in(text);
    if (!(in >> b >> comp >> colon >> idx) || b != 'b' || colon != ':')
        throw InvalidTriangulation("bad side encoding '" + text + "'");
    return boundary_side(s.marked_vertex(comp, idx));
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

ordered_json triangulation_to_json(const TaggedTriangulation& t) {
    const MarkedSurface& s = t.pattern.surface;
    ordered_json j;
    j["surface"] = surface_to_json(s);
    ordered_json tris = ordered_json::array();
    for (const Triangle& tr : t.pattern.tris)
        tris.push_back({side_to_json(s, tr.side[0]), side_to_json(s, tr.side[1]),
                        side_to_json(s, tr.side[2])});
    j["triangles"] = std::move(tris);
    ordered_json folds = ordered_json::array();
    for (const Fold& f : t.pattern.folds) folds.push_back({f.tri, f.radius});
    j["folds"] = std::move(folds);
    ordered_json signs = ordered_json::object();
    for (size_t p = 0; p < t.signs.size(); ++p)
        signs[std::to_string(p)] = t.signs[p];
    j["signs"] = std::move(signs);
    return j;
}

TaggedTriangulation triangulation_from_json(const json& j) {
    MarkedSurface s = surface_from_json(j.at("surface"));
    require_valid(s);

    IdealTriangulation pat;
    pat.surface = s;
    for (const auto& tj : j.at("triangles")) {
        if (tj.size() != 3) throw InvalidTriangulation("triangle needs three sides");
        Triangle tr;
        for (int k = 0; k < 3; ++k) tr.side[k] = side_from_json(s, tj.at(k));
        tr.corner = {-1, -1, -1};
        pat.tris.push_back(tr);
    }

    // recover the vertex at every corner: corners related through shared arc
    // sides form one vertex; boundary segments pin marked points and the
    // remaining classes are punctures in order of first appearance
    const int T = static_cast<int>(pat.tris.size());
    auto cid = [](int tri, int slot) { return 3 * tri + slot; };
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int t = 0; t < T; ++t)
        for (int k = 0; k < 3; ++k)
            if (is_arc_side(pat.tris[t].side[k])) occ[pat.tris[t].side[k]].push_back({t, k});

    UnionFind uf(static_cast<size_t>(T) * 3);
    for (auto& [arc, slots] : occ) {
        if (slots.size() != 2)
            throw InvalidTriangulation("arc " + std::to_string(arc) + " occurs " +
                                       std::to_string(slots.size()) + " times");
        auto [t1, k1] = slots[0];
        auto [t2, k2] = slots[1];
        uf.unite(cid(t1, (k1 + 1) % 3), cid(t2, k2));
        uf.unite(cid(t2, (k2 + 1) % 3), cid(t1, k1));
    }

    std::map<int, int> class_vertex;
    for (int t = 0; t < T; ++t)
        for (int k = 0; k < 3; ++k) {
            int side = pat.tris[t].side[k];
            if (is_arc_side(side)) continue;
            int seg = segment_of_side(side);
            auto [comp, idx] = s.locate_marked(seg);
            class_vertex[uf.find(cid(t, k))] = s.marked_vertex(comp, idx);
            class_vertex[uf.find(cid(t, (k + 1) % 3))] =
                s.marked_vertex(comp, (idx + 1) % s.boundaries[comp]);
        }
    int next_puncture = 0;
    for (int t = 0; t < T; ++t)
        for (int k = 0; k < 3; ++k) {
            int root = uf.find(cid(t, k));
            auto it = class_vertex.find(root);
            if (it == class_vertex.end()) {
                if (next_puncture >= s.punctures)
                    throw InvalidTriangulation("more interior vertices than punctures");
                class_vertex[root] = s.puncture_vertex(next_puncture++);
            }
            pat.tris[t].corner[k] = class_vertex[root];
        }
    pat.refresh_folds();

    // declared folds must agree
    std::set<std::pair<int, int>> declared, derived;
    for (const auto& fj : j.at("folds"))
        declared.insert({fj.at(0).get<int>(), fj.at(1).get<int>()});
    for (const Fold& f : pat.folds) derived.insert({f.tri, f.radius});
    if (declared != derived)
        throw InvalidTriangulation("fold marks disagree with the triangle data");

    TaggedTriangulation out;
    out.pattern = std::move(pat);
    out.signs.assign(s.punctures, +1);
    if (j.contains("signs"))
        for (auto& [key, val] : j.at("signs").items()) {
            int p = std::stoi(key);
            if (p < 0 || p >= s.punctures)
                throw InvalidTriangulation("sign for unknown puncture " + key);
            out.signs[p] = val.get<int>();
        }
    out.normalize_signs();
    out.validate();
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot write " + path);
    out << content;
}

} // namespace flipsurf
