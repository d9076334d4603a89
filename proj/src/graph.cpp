#include "dlhom/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dlhom {

UndirectedGraph::UndirectedGraph(int n_, std::vector<std::pair<int, int>> edges_)
    : n(n_), edges(std::move(edges_)) {
    for (auto& e : edges)
        if (e.first > e.second)
            std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool UndirectedGraph::has_edge(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::string> graph_violations(const UndirectedGraph& g) {
    std::vector<std::string> out;
    if (g.n < 0)
        out.push_back("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u < 0 || u >= g.n || v < 0 || v >= g.n) {
            out.push_back("edge endpoint out of range: {" + std::to_string(u) + "," +
                          std::to_string(v) + "}");
            continue;
        }
        if (u == v)
            out.push_back("self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            out.push_back("parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    return out;
}

std::vector<std::vector<int>> adjacency_lists(const UndirectedGraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end());
    return adj;
}

GraphQueries graph_queries(const UndirectedGraph& g) {
    GraphQueries q;
    auto adj = adjacency_lists(g);
    q.component.assign(g.n, -1);
    std::vector<int> colour(g.n, -1), parent(g.n, -1);
    bool bip = true;
    std::pair<int, int> bad_edge{-1, -1};

    for (int s = 0; s < g.n; ++s) {
        if (q.component[s] != -1)
            continue;
        int cid = q.component_count++;
        q.component[s] = cid;
        colour[s] = 0;
        std::deque<int> bfs{s};
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop_front();
            for (int v : adj[u]) {
                if (q.component[v] == -1) {
                    q.component[v] = cid;
                    colour[v] = colour[u] ^ 1;
                    parent[v] = u;
                    bfs.push_back(v);
                } else if (colour[v] == colour[u] && bip) {
                    bip = false;
                    bad_edge = {u, v};
                }
            }
        }
    }

    if (bip) {
        q.two_coloring = colour;
    } else {
        // Walk root->u, edge u-v, v->root: closed, length d(u)+d(v)+1 which is
        // odd because u and v got equal colours.
        auto path_to_root = [&](int x) {
            std::vector<int> p{x};
            while (parent[p.back()] != -1)
                p.push_back(parent[p.back()]);
            return p;
        };
        auto [u, v] = bad_edge;
        std::vector<int> up = path_to_root(u);   // u ... root
        std::vector<int> vp = path_to_root(v);   // v ... root
        std::vector<int> walk(up.rbegin(), up.rend());  // root ... u
        walk.insert(walk.end(), vp.begin(), vp.end());  // u-v, v ... root
        q.odd_closed_walk = walk;
    }

    q.dist.assign(g.n, std::vector<int>(g.n, -1));
    for (int s = 0; s < g.n; ++s) {
        auto& d = q.dist[s];
        d[s] = 0;
        std::deque<int> bfs{s};
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop_front();
            for (int v : adj[u])
                if (d[v] == -1) {
                    d[v] = d[u] + 1;
                    bfs.push_back(v);
                }
        }
    }
    return q;
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g, const std::vector<int>& vertices) {
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        pos[vertices[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (pos[u] != -1 && pos[v] != -1)
            edges.emplace_back(pos[u], pos[v]);
    return UndirectedGraph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<int> complement_vertices(int n, const std::vector<int>& removed) {
    std::vector<bool> gone(n, false);
    for (int v : removed)
        gone[v] = true;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (!gone[v])
            out.push_back(v);
    return out;
}

}  // namespace dlhom
