#include "dlhom/target_structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace dlhom {

namespace {

bool is_path6(const UndirectedGraph& g) {
    if (g.n != 6 || g.edge_count() != 5)
        return false;
    auto q = graph_queries(g);
    if (q.component_count != 1)
        return false;
    auto adj = adjacency_lists(g);
    for (auto& a : adj)
        if (a.size() > 2)
            return false;
    return true;
}

bool is_cycle6(const UndirectedGraph& g) {
    if (g.n != 6 || g.edge_count() != 6)
        return false;
    auto q = graph_queries(g);
    if (q.component_count != 1)
        return false;
    auto adj = adjacency_lists(g);
    for (auto& a : adj)
        if (a.size() != 2)
            return false;
    return true;
}

}  // namespace

ForbiddenCheck check_forbidden(const BipartiteTarget& h) {
    ForbiddenCheck out;
    int n = h.n();
    if (n < 6) {
        out.decomposable_candidate = true;
        return out;
    }
    std::vector<int> pick(6);
    for (int i = 0; i < 6; ++i)
        pick[i] = i;
    while (true) {
        auto sub = induced_subgraph(h.graph, pick);
        if (is_path6(sub)) {
            out.witness = ForbiddenWitness{ForbiddenWitness::Kind::P6, pick};
            return out;
        }
        if (is_cycle6(sub)) {
            out.witness = ForbiddenWitness{ForbiddenWitness::Kind::C6, pick};
            return out;
        }
        int i;
        for (i = 5; i >= 0; --i)
            if (pick[i] < n - (6 - i))
                break;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < 6; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    out.decomposable_candidate = true;
    return out;
}

SkewDecompTree SkewDecompTree::clone() const {
    SkewDecompTree t;
    t.kind = kind;
    t.leaf_vertex = leaf_vertex;
    t.leaf_side = leaf_side;
    t.vertices = vertices;
    if (left)
        t.left = std::make_unique<SkewDecompTree>(left->clone());
    if (right)
        t.right = std::make_unique<SkewDecompTree>(right->clone());
    return t;
}

namespace {

using Mask = std::uint64_t;

struct DecompSearch {
    const BipartiteTarget& h;
    std::vector<Mask> hadj;
    std::map<Mask, std::optional<SkewDecompTree>> memo;

    explicit DecompSearch(const BipartiteTarget& target) : h(target) {
        hadj.assign(h.n(), 0);
        for (auto [a, b] : h.graph.edges) {
            hadj[a] |= Mask{1} << b;
            hadj[b] |= Mask{1} << a;
        }
    }

    std::vector<int> mask_vertices(Mask m) const {
        std::vector<int> out;
        while (m) {
            out.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return out;
    }

    Mask top_of(Mask m) const {
        Mask t = 0;
        for (int v : mask_vertices(m))
            if (h.side[v] == Side::Top)
                t |= Mask{1} << v;
        return t;
    }

    std::vector<Mask> components_of(Mask m) const {
        std::vector<Mask> comps;
        Mask rest = m;
        while (rest) {
            Mask comp = Mask{1} << std::countr_zero(rest);
            while (true) {
                Mask grown = comp;
                Mask scan = comp;
                while (scan) {
                    grown |= hadj[std::countr_zero(scan)] & m;
                    scan &= scan - 1;
                }
                if (grown == comp)
                    break;
                comp = grown;
            }
            comps.push_back(comp);
            rest &= ~comp;
        }
        return comps;
    }

    // Cross edges between disjoint masks a and b must be exactly T_a x B_b.
    bool skew_cross_ok(Mask a, Mask b) const {
        Mask ta = top_of(a);
        Mask bb = b & ~top_of(b);
        if (ta == 0 || bb == 0)
            return false;
        for (int v : mask_vertices(a)) {
            Mask expect = (Mask{1} << v) & ta ? bb : Mask{0};
            if ((hadj[v] & b) != expect)
                return false;
        }
        return true;
    }

    std::optional<SkewDecompTree> solve(Mask m) {
        auto it = memo.find(m);
        if (it != memo.end())
            return it->second ? std::optional<SkewDecompTree>(it->second->clone())
                              : std::nullopt;
        auto result = search(m);
        memo[m] = result ? std::optional<SkewDecompTree>(result->clone()) : std::nullopt;
        return result;
    }

    std::optional<SkewDecompTree> make_node(SkewDecompTree::Kind kind, Mask m,
                                            Mask a, Mask b) {
        auto lt = solve(a);
        if (!lt)
            return std::nullopt;
        auto rt = solve(b);
        if (!rt)
            return std::nullopt;
        SkewDecompTree t;
        t.kind = kind;
        t.vertices = mask_vertices(m);
        t.left = std::make_unique<SkewDecompTree>(std::move(*lt));
        t.right = std::make_unique<SkewDecompTree>(std::move(*rt));
        return t;
    }

    std::optional<SkewDecompTree> search(Mask m) {
        auto verts = mask_vertices(m);
        if (verts.size() == 1) {
            SkewDecompTree t;
            t.kind = SkewDecompTree::Kind::Leaf;
            t.leaf_vertex = verts[0];
            t.leaf_side = h.side[verts[0]];
            t.vertices = verts;
            return t;
        }
        auto comps = components_of(m);
        if (comps.size() > 1) {
            // canonical grouping first: lowest component vs the rest
            if (auto t = make_node(SkewDecompTree::Kind::Union, m, comps[0], m & ~comps[0]))
                return t;
            int c = static_cast<int>(comps.size());
            for (int pick = 1; pick < (1 << (c - 1)); ++pick) {
                Mask a = comps[0];
                for (int i = 1; i < c; ++i)
                    if (pick & (1 << (i - 1)))
                        a |= comps[i];
                if (a == m || a == comps[0])
                    continue;
                if (auto t = make_node(SkewDecompTree::Kind::Union, m, a, m & ~a))
                    return t;
            }
        }
        // special-sum splits; fix the lowest vertex into the left part so each
        // unordered 2-partition is visited once per orientation
        int anchor = verts[0];
        int rest = static_cast<int>(verts.size()) - 1;
        for (int pick = 0; pick < (1 << rest); ++pick) {
            Mask a = Mask{1} << anchor;
            for (int i = 0; i < rest; ++i)
                if (pick & (1 << i))
                    a |= Mask{1} << verts[i + 1];
            Mask b = m & ~a;
            if (b == 0)
                continue;
            if (skew_cross_ok(a, b))
                if (auto t = make_node(SkewDecompTree::Kind::SkewSum, m, a, b))
                    return t;
            if (skew_cross_ok(b, a))
                if (auto t = make_node(SkewDecompTree::Kind::SkewSum, m, b, a))
                    return t;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<SkewDecompTree> skew_decompose(const BipartiteTarget& h) {
    if (h.n() == 0)
        return std::nullopt;
    if (h.n() > 64)
        throw std::invalid_argument("skew_decompose supports at most 64 vertices");
    DecompSearch s(h);
    return s.solve((h.n() == 64 ? ~Mask{0} : (Mask{1} << h.n()) - 1));
}

namespace {

struct EvalPiece {
    std::vector<int> vertices;  // sorted original ids
    std::vector<std::pair<int, int>> edges;
    std::map<int, Side> side;
};

EvalPiece evaluate_rec(const SkewDecompTree& t) {
    if (t.kind == SkewDecompTree::Kind::Leaf) {
        if (t.leaf_vertex < 0)
            throw std::invalid_argument("leaf without a vertex");
        EvalPiece p;
        p.vertices = {t.leaf_vertex};
        p.side[t.leaf_vertex] = t.leaf_side;
        return p;
    }
    if (!t.left || !t.right)
        throw std::invalid_argument("inner node missing a child");
    EvalPiece a = evaluate_rec(*t.left);
    EvalPiece b = evaluate_rec(*t.right);
    for (int v : b.vertices)
        if (a.side.count(v))
            throw std::invalid_argument("children overlap at vertex " + std::to_string(v));
    EvalPiece p;
    p.vertices = a.vertices;
    p.vertices.insert(p.vertices.end(), b.vertices.begin(), b.vertices.end());
    std::sort(p.vertices.begin(), p.vertices.end());
    p.edges = a.edges;
    p.edges.insert(p.edges.end(), b.edges.begin(), b.edges.end());
    p.side = a.side;
    p.side.insert(b.side.begin(), b.side.end());
    if (t.kind == SkewDecompTree::Kind::SkewSum) {
        std::vector<int> t1, b2;
        for (int v : a.vertices)
            if (a.side.at(v) == Side::Top)
                t1.push_back(v);
        for (int v : b.vertices)
            if (b.side.at(v) == Side::Bottom)
                b2.push_back(v);
        if (t1.empty() || b2.empty())
            throw std::invalid_argument("special sum with empty T1 or B2");
        for (int u : t1)
            for (int v : b2)
                p.edges.emplace_back(u, v);
    }
    return p;
}

}  // namespace

BipartiteTarget evaluate_decomposition(const SkewDecompTree& t) {
    EvalPiece p = evaluate_rec(t);
    int n = static_cast<int>(p.vertices.size());
    for (int i = 0; i < n; ++i)
        if (p.vertices[i] != i)
            throw std::invalid_argument("tree must cover vertices 0..m-1 exactly");
    std::vector<Side> side(n);
    for (auto [v, s] : p.side)
        side[v] = s;
    return BipartiteTarget(UndirectedGraph(n, std::move(p.edges)), std::move(side));
}

bool ArcRepresentation::arc_contains(int vertex, int position) const {
    auto [s, e] = arcs[vertex];
    int span = ((e - s) % circle_size + circle_size) % circle_size;
    int off = ((position - s) % circle_size + circle_size) % circle_size;
    return off <= span;
}

bool ArcRepresentation::arcs_intersect(int u, int v) const {
    return arc_contains(u, arcs[v].first) || arc_contains(v, arcs[u].first);
}

ArcValidation validate_arc_representation(const BipartiteTarget& h,
                                          const ArcRepresentation& rep) {
    ArcValidation out;
    if (rep.circle_size <= 1)
        return {false, "circle has fewer than two positions", {-1, -1}};
    auto in_range = [&](int p) { return p >= 0 && p < rep.circle_size; };
    if (!in_range(rep.north) || !in_range(rep.south))
        return {false, "pole position out of range", {-1, -1}};
    if (rep.north == rep.south)
        return {false, "poles coincide", {-1, -1}};
    if (static_cast<int>(rep.arcs.size()) != h.n())
        return {false, "arc count does not match |V(H)|", {-1, -1}};
    for (int v = 0; v < h.n(); ++v) {
        if (!in_range(rep.arcs[v].first) || !in_range(rep.arcs[v].second))
            return {false, "arc endpoint out of range at vertex " + std::to_string(v), {v, v}};
        bool has_n = rep.arc_contains(v, rep.north);
        bool has_s = rep.arc_contains(v, rep.south);
        if (has_n == has_s)
            return {false, "arc of vertex " + std::to_string(v) +
                           " must contain exactly one pole", {v, v}};
        if ((h.side[v] == Side::Top) != has_n)
            return {false, "side convention broken at vertex " + std::to_string(v) +
                           " (northern arcs are Top)", {v, v}};
    }
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v) {
            bool edge = h.graph.has_edge(u, v);
            bool meet = rep.arcs_intersect(u, v);
            if (edge == meet)
                return {false,
                        edge ? "edge between intersecting arcs" : "non-edge between disjoint arcs",
                        {u, v}};
        }
    out.ok = true;
    return out;
}

ChainTarget build_chain_target(int ell) {
    if (ell < 1)
        throw std::invalid_argument("build_chain_target requires ell >= 1");
    ChainTarget out;
    int m = 8 * ell + 16;
    int north = 0;
    int south = m / 2;
    auto q_at = [&](int i) { return 2 + 2 * i; };          // q_0..q_ell in (N, S)
    auto p_at = [&](int i) { return south + 2 + 2 * i; };  // p_0..p_ell in (S, N)
    int e_pt = south - 1;                                  // between q_ell and S
    int f_pt = south + 1;                                  // between S and p_0

    std::vector<std::pair<int, int>> arcs;
    out.value_vertex.resize(ell + 1);
    for (int i = 0; i <= ell; ++i) {
        out.value_vertex[i] = static_cast<int>(arcs.size());
        arcs.emplace_back(p_at(i), q_at(i));  // value arc a_i, crosses N
    }
    out.gadget.assign(ell, std::vector<ChainGadgetArcs>(ell));
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) {
            ChainGadgetArcs g;
            g.u1 = static_cast<int>(arcs.size());
            arcs.emplace_back(south, p_at(i));     // includes p_i, not p_{i+1}
            g.u2 = static_cast<int>(arcs.size());
            arcs.emplace_back(e_pt, south);        // stops before q_ell
            g.v1 = static_cast<int>(arcs.size());
            arcs.emplace_back(f_pt, north);        // crosses the p side
            g.v2 = static_cast<int>(arcs.size());
            arcs.emplace_back(north, e_pt);        // crosses the q side
            g.w1 = static_cast<int>(arcs.size());
            arcs.emplace_back(south, f_pt);        // includes f, not p_0
            g.w2 = static_cast<int>(arcs.size());
            arcs.emplace_back(q_at(j + 1), south); // includes q_{j+1}, not q_j
            out.gadget[i][j] = g;
        }

    int n = static_cast<int>(arcs.size());
    out.rep.circle_size = m;
    out.rep.north = north;
    out.rep.south = south;
    out.rep.arcs = std::move(arcs);

    std::vector<Side> side(n);
    for (int v = 0; v < n; ++v)
        side[v] = out.rep.arc_contains(v, north) ? Side::Top : Side::Bottom;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!out.rep.arcs_intersect(u, v))
                edges.emplace_back(u, v);
    out.h = BipartiteTarget(UndirectedGraph(n, std::move(edges)), std::move(side));
    return out;
}

}  // namespace dlhom
