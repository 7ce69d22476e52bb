#include "flipsurf/explorer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "flipsurf/errors.hpp"

namespace flipsurf {

using nlohmann::ordered_json;

bool ExchangeGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const ExchangeEdge& e : edges)
        if (e.from == u && e.to == v) return true;
    return false;
}

namespace {

// generic BFS over any world with key/flip
template <typename T, typename KeyFn, typename FlipFn>
ExchangeGraph bfs(const T& start, int degree, int max_vertices, KeyFn key, FlipFn flip,
                  std::vector<T>* reps) {
    ExchangeGraph g;
    g.degree = degree;
    g.complete = true;

    std::vector<T> store;
    auto intern = [&](const T& t) {
        std::string k = key(t);
        auto it = g.index.find(k);
        if (it != g.index.end()) return std::pair(it->second, false);
        int id = g.vertex_count();
        g.index.emplace(std::move(k), id);
        g.keys.push_back(key(t));
        store.push_back(t);
        return std::pair(id, true);
    };

    intern(start);
    std::set<std::pair<int, int>> seen_edges;
    for (int head = 0; head < static_cast<int>(store.size()); ++head) {
        for (int label = 1; label <= degree; ++label) {
            T next = flip(store[head], label);
            auto k = key(next);
            auto it = g.index.find(k);
            int to;
            if (it != g.index.end()) {
                to = it->second;
            } else if (g.vertex_count() >= max_vertices) {
                g.complete = false;
                continue;
            } else {
                to = intern(next).first;
            }
            int u = std::min(head, to), v = std::max(head, to);
            if (seen_edges.insert({u, v}).second) g.edges.push_back({u, label, v});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (reps) *reps = std::move(store);
    return g;
}

} // namespace

ExchangeGraph bfs_exchange_graph(const ModelTriangulation& start, int max_vertices,
                                 std::vector<ModelTriangulation>* reps) {
    return bfs(
        start, start.surface.rank(), max_vertices,
        [](const ModelTriangulation& t) { return model_key(t); },
        [](const ModelTriangulation& t, int label) { return model_flip(t, label); }, reps);
}

ExchangeGraph bfs_exchange_graph(const TaggedTriangulation& start, int max_vertices,
                                 std::vector<TaggedTriangulation>* reps) {
    return bfs(
        start, start.pattern.arc_count(), max_vertices,
        [](const TaggedTriangulation& t) { return canonical_key(t); },
        [](const TaggedTriangulation& t, int label) { return t.flipped(label); }, reps);
}

std::string export_dot(const ExchangeGraph& g) {
    std::ostringstream out;
    out << "graph exchange {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  t" << v << " [label=\"" << g.keys[v] << "\"];\n";
    for (const ExchangeEdge& e : g.edges)
        out << "  t" << e.from << " -- t" << e.to << " [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string export_json(const ExchangeGraph& g) {
    ordered_json j;
    j["schema"] = 1;
    j["vertices"] = g.keys;
    ordered_json edges = ordered_json::array();
    for (const ExchangeEdge& e : g.edges) edges.push_back({e.from, e.label, e.to});
    j["edges"] = std::move(edges);
    j["root"] = g.root;
    j["degree"] = g.degree;
    j["complete"] = g.complete;
    return j.dump(2);
}

ExchangeGraph import_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ExchangeGraph g;
    g.keys = j.at("vertices").get<std::vector<std::string>>();
    for (int v = 0; v < g.vertex_count(); ++v) g.index[g.keys[v]] = v;
    for (const auto& e : j.at("edges"))
        g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    g.root = j.at("root").get<int>();
    g.degree = j.at("degree").get<int>();
    g.complete = j.at("complete").get<bool>();
    return g;
}

std::vector<ModelTriangulation> enumerate_triangulations(const MarkedSurface& s) {
    ModelKind kind = model_kind(s);
    if (kind == ModelKind::Annulus)
        throw UnsupportedSurface("annulus has infinitely many triangulations");
    const int n = s.rank();
    std::vector<ModelArc> arcs = enumerate_arcs(s);
    const int total = static_cast<int>(arcs.size());

    std::vector<std::vector<bool>> ok(total, std::vector<bool>(total, false));
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j)
            ok[i][j] = i == j || compatible(s, arcs[i], arcs[j]);

    std::vector<ModelTriangulation> out;
    std::vector<int> chosen;
    std::function<void(int)> extend = [&](int from) {
        if (static_cast<int>(chosen.size()) == n) {
            ModelTriangulation t;
            t.surface = s;
            for (int i : chosen) t.arcs.push_back(arcs[i]);
            out.push_back(std::move(t));
            return;
        }
        for (int i = from; i < total; ++i) {
            bool fits = true;
            for (int c : chosen)
                if (!ok[c][i]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            chosen.push_back(i);
            extend(i + 1);
            chosen.pop_back();
        }
    };
    extend(0);
    return out;
}

} // namespace flipsurf
