#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dlhom {

// Simple undirected graph on dense vertex indices 0..n-1. Edges are stored
// with the smaller endpoint first and kept sorted; well-formedness (no loops,
// no duplicates, endpoints in range) is checked by validation, not enforced
// by the type, so that malformed inputs can be reported instead of crashing.
struct UndirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    UndirectedGraph() = default;
    UndirectedGraph(int n_, std::vector<std::pair<int, int>> edges_);

    bool has_edge(int u, int v) const;
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Issues that make a graph malformed; empty means well-formed.
std::vector<std::string> graph_violations(const UndirectedGraph& g);

std::vector<std::vector<int>> adjacency_lists(const UndirectedGraph& g);

struct GraphQueries {
    std::vector<int> component;                       // per-vertex component id
    int component_count = 0;
    std::optional<std::vector<int>> two_coloring;     // per-vertex side 0/1, iff bipartite
    std::optional<std::vector<int>> odd_closed_walk;  // closed walk of odd length, iff not
    std::vector<std::vector<int>> dist;               // BFS distances, -1 across components
};

// Connected components, a two-coloring or an odd-closed-walk witness, and all
// pairwise distances. Component ids are assigned in order of lowest vertex;
// the lowest vertex of each component gets colour 0.
GraphQueries graph_queries(const UndirectedGraph& g);

// Induced subgraph on `vertices` (sorted ascending); the i-th kept vertex
// becomes vertex i. Returns the subgraph and the kept-vertex list.
UndirectedGraph induced_subgraph(const UndirectedGraph& g, const std::vector<int>& vertices);

// Complement view: all vertices except `removed`.
std::vector<int> complement_vertices(int n, const std::vector<int>& removed);

}  // namespace dlhom
