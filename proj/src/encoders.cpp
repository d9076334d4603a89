#include "dlhom/encoders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dlhom {

namespace {

BipartiteTarget single_vertex_target() {
    return BipartiteTarget(UndirectedGraph(1, {}), {Side::Top});
}

BipartiteTarget single_edge_target() {
    return BipartiteTarget(UndirectedGraph(2, {{0, 1}}), {Side::Top, Side::Bottom});
}

BipartiteTarget matching_target(int d) {
    std::vector<std::pair<int, int>> edges;
    std::vector<Side> side;
    for (int i = 0; i < d; ++i) {
        edges.emplace_back(2 * i, 2 * i + 1);
        side.push_back(Side::Top);
        side.push_back(Side::Bottom);
    }
    return BipartiteTarget(UndirectedGraph(2 * d, std::move(edges)), std::move(side));
}

}  // namespace

EncodedProblem encode_vertex_cover(const UndirectedGraph& g, int k) {
    EncodedProblem p;
    p.kind = EncodedKind::VertexCover;
    p.source = g;
    p.instance.g = g;
    p.instance.h = single_vertex_target();
    p.instance.l = ListAssignment::full(g.n, 1);
    p.instance.k = k;
    return p;
}

EncodedProblem encode_oct(const UndirectedGraph& g, int k) {
    EncodedProblem p;
    p.kind = EncodedKind::OddCycleTransversal;
    p.source = g;
    p.instance.g = g;
    p.instance.h = single_edge_target();
    p.instance.l = ListAssignment::full(g.n, 2);
    p.instance.k = k;
    return p;
}

EncodedProblem encode_multiway_cut(const UndirectedGraph& g, const std::vector<int>& terminals,
                                   int k) {
    if (terminals.size() < 2)
        throw std::invalid_argument("multiway cut needs at least two terminals");
    std::set<int> seen;
    for (int t : terminals) {
        if (t < 0 || t >= g.n)
            throw std::invalid_argument("terminal out of range");
        if (!seen.insert(t).second)
            throw std::invalid_argument("terminals must be distinct");
    }
    int d = static_cast<int>(terminals.size());

    // subdivide every edge; edge r in sorted order becomes vertex n + r
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < g.edge_count(); ++r) {
        auto [u, v] = g.edges[r];
        edges.emplace_back(u, g.n + r);
        edges.emplace_back(g.n + r, v);
    }
    EncodedProblem p;
    p.kind = EncodedKind::MultiwayCut;
    p.source = g;
    p.terminals = terminals;
    p.instance.g = UndirectedGraph(g.n + g.edge_count(), std::move(edges));
    p.instance.h = matching_target(d);
    p.instance.l = ListAssignment::full(p.instance.g.n, 2 * d);
    for (int i = 0; i < d; ++i)
        p.instance.l.lists[terminals[i]] = {2 * i, 2 * i + 1};
    p.instance.k = k;
    return p;
}

std::vector<int> EncodedProblem::map_back(const std::vector<int>& deleted) const {
    if (kind != EncodedKind::MultiwayCut) {
        auto out = deleted;
        std::sort(out.begin(), out.end());
        return out;
    }
    std::set<int> out;
    std::vector<int> subdivided;
    for (int v : deleted) {
        if (v < source.n)
            out.insert(v);
        else
            subdivided.push_back(v);
    }
    for (int v : subdivided) {
        auto [a, b] = source.edges[v - source.n];
        if (!out.count(a))
            out.insert(a);
        else if (!out.count(b))
            out.insert(b);
        // both endpoints already deleted: the edge is covered anyway
    }
    return {out.begin(), out.end()};
}

}  // namespace dlhom
