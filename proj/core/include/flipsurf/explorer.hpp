#pragma once

#include <map>
#include <string>
#include <vector>

#include "flipsurf/models.hpp"
#include "flipsurf/triangulation.hpp"

namespace flipsurf {

/*
  Breadth-first closure of a triangulation under flips, with vertices
  deduplicated by canonical key.  Model starts give the exact exchange graph
  of the polygon / punctured-polygon / annulus; combinatorial starts identify
  triangulations as labeled-by-marked-point structures, which is a quotient
  of the exchange graph on more general surfaces.
*/
struct ExchangeEdge {
    int from = 0;
    int label = 0; // flipped arc label
    int to = 0;

    auto operator<=>(const ExchangeEdge&) const = default;
};

struct ExchangeGraph {
    std::vector<std::string> keys; // vertex index -> canonical key
    std::map<std::string, int> index;
    std::vector<ExchangeEdge> edges; // one per unordered flip pair, from < to or from==to
    int root = 0;
    int degree = 0;  // arcs per triangulation
    bool complete = false;

    int vertex_count() const { return static_cast<int>(keys.size()); }
    bool has_edge(int u, int v) const;
};

ExchangeGraph bfs_exchange_graph(const ModelTriangulation& start, int max_vertices,
                                 std::vector<ModelTriangulation>* reps = nullptr);

ExchangeGraph bfs_exchange_graph(const TaggedTriangulation& start, int max_vertices,
                                 std::vector<TaggedTriangulation>* reps = nullptr);

std::string export_dot(const ExchangeGraph& g);
std::string export_json(const ExchangeGraph& g);
ExchangeGraph import_json(const std::string& text);

// independent oracle: all n-element pairwise-compatible arc sets of a finite
// model, found by direct enumeration
std::vector<ModelTriangulation> enumerate_triangulations(const MarkedSurface& s);

} // namespace flipsurf
