#include "dlhom/fsfc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dlhom/lhom.hpp"

namespace dlhom {

namespace {

bool vc_decide(const std::vector<std::pair<int, int>>& edges, std::vector<bool>& alive,
               int budget, std::vector<int>& cover) {
    const std::pair<int, int>* pick = nullptr;
    for (auto& e : edges)
        if (alive[e.first] && alive[e.second]) {
            pick = &e;
            break;
        }
    if (!pick)
        return true;
    if (budget == 0)
        return false;
    for (int x : {pick->first, pick->second}) {
        alive[x] = false;
        cover.push_back(x);
        if (vc_decide(edges, alive, budget - 1, cover))
            return true;
        cover.pop_back();
        alive[x] = true;
    }
    return false;
}

}  // namespace

VertexCoverResult min_vertex_cover(const UndirectedGraph& g, int cap) {
    for (int b = 0; b <= cap; ++b) {
        std::vector<bool> alive(g.n, true);
        std::vector<int> cover;
        if (vc_decide(g.edges, alive, b, cover)) {
            std::sort(cover.begin(), cover.end());
            return {false, static_cast<int>(cover.size()), cover};
        }
    }
    return {true, 0, {}};
}

namespace {

bool same_target(const BipartiteTarget& a, const BipartiteTarget& b) {
    return a.graph.n == b.graph.n && a.graph.edges == b.graph.edges && a.side == b.side;
}

// A sub-instance carries the original vertex ids so branches can report
// deletions in the caller's numbering.
struct Sub {
    UndirectedGraph g;
    ListAssignment l;
    std::vector<int> orig;
};

Sub restrict_sub(const Sub& s, const std::vector<int>& keep) {
    Sub out;
    out.g = induced_subgraph(s.g, keep);
    out.l.lists.reserve(keep.size());
    out.orig.reserve(keep.size());
    for (int v : keep) {
        out.l.lists.push_back(s.l.lists[v]);
        out.orig.push_back(s.orig[v]);
    }
    return out;
}

struct FsfcSolver {
    const BipartiteTarget& h;
    ChildDlhomSolver child;

    std::set<int> tops(const std::vector<int>& verts) const {
        std::set<int> out;
        for (int v : verts)
            if (h.side[v] == Side::Top)
                out.insert(v);
        return out;
    }

    static bool subset_of(const std::vector<int>& list, const std::set<int>& set) {
        for (int a : list)
            if (!set.count(a))
                return false;
        return true;
    }

    // Full deletion solve on one child target, smallest budget first
    // (Lemma 12's d(C_i), at most budget+1 child runs).
    std::optional<std::pair<int, std::vector<int>>> component_minimum(
        const Sub& s, const SkewDecompTree& child_node, int budget) const {
        std::vector<int> keep_target = child_node.vertices;
        std::vector<int> hpos(h.n(), -1);
        for (size_t i = 0; i < keep_target.size(); ++i)
            hpos[keep_target[i]] = static_cast<int>(i);
        DlhomInstance sub;
        sub.g = s.g;
        sub.h.graph = induced_subgraph(h.graph, keep_target);
        sub.h.side.reserve(keep_target.size());
        for (int v : keep_target)
            sub.h.side.push_back(h.side[v]);
        sub.l.lists.resize(s.g.n);
        for (int v = 0; v < s.g.n; ++v)
            for (int a : s.l.lists[v])
                sub.l.lists[v].push_back(hpos[a]);
        for (int b = 0; b <= budget; ++b) {
            sub.k = b;
            if (auto sol = child(sub)) {
                std::vector<int> deleted;
                for (int v : sol->deleted)
                    deleted.push_back(s.orig[v]);
                return std::make_pair(b, deleted);
            }
        }
        return std::nullopt;
    }

    // Disjoint-union handling shared by Union nodes and the tail of the
    // special-sum case: every component fits inside one child.
    std::optional<std::vector<int>> solve_union(const Sub& s, const SkewDecompTree& left,
                                                const SkewDecompTree& right, int budget) const {
        std::set<int> lv(left.vertices.begin(), left.vertices.end());
        std::set<int> rv(right.vertices.begin(), right.vertices.end());
        auto q = graph_queries(s.g);
        std::vector<std::vector<int>> comps(q.component_count);
        for (int v = 0; v < s.g.n; ++v)
            comps[q.component[v]].push_back(v);

        std::vector<int> deleted;
        int spent = 0;
        for (auto& cv : comps) {
            bool in_left = true, in_right = true;
            for (int v : cv)
                for (int a : s.l.lists[v]) {
                    if (!lv.count(a))
                        in_left = false;
                    if (!rv.count(a))
                        in_right = false;
                }
            if (!in_left && !in_right)
                throw std::logic_error("component spans both children of a union node");
            const SkewDecompTree& node = in_left ? left : right;
            auto d = component_minimum(restrict_sub(s, cv), node, budget - spent);
            if (!d)
                return std::nullopt;
            spent += d->first;
            if (spent > budget)
                return std::nullopt;
            deleted.insert(deleted.end(), d->second.begin(), d->second.end());
        }
        return deleted;
    }

    std::optional<std::vector<int>> solve_node(Sub s, const SkewDecompTree& node,
                                               int budget) const {
        // empty lists force deletion
        std::vector<int> forced, keep;
        for (int v = 0; v < s.g.n; ++v)
            (s.l.lists[v].empty() ? forced : keep).push_back(v);
        if (static_cast<int>(forced.size()) > budget)
            return std::nullopt;
        std::vector<int> base;
        if (!forced.empty()) {
            budget -= static_cast<int>(forced.size());
            for (int v : forced)
                base.push_back(s.orig[v]);
            s = restrict_sub(s, keep);
        }

        std::optional<std::vector<int>> rest;
        switch (node.kind) {
        case SkewDecompTree::Kind::Leaf: {
            auto vc = min_vertex_cover(s.g, budget);
            if (vc.exceeds)
                return std::nullopt;
            rest = std::vector<int>{};
            for (int v : vc.cover)
                rest->push_back(s.orig[v]);
            break;
        }
        case SkewDecompTree::Kind::Union:
            rest = solve_union(s, *node.left, *node.right, budget);
            break;
        case SkewDecompTree::Kind::SkewSum: {
            auto t1 = tops(node.left->vertices);
            auto b2down = [&] {
                std::set<int> out;
                for (int v : node.right->vertices)
                    if (h.side[v] == Side::Bottom)
                        out.insert(v);
                return out;
            }();
            std::set<int> top_all = tops(node.vertices);
            std::set<int> b1, t2;
            for (int v : node.left->vertices)
                if (h.side[v] == Side::Bottom)
                    b1.insert(v);
            for (int v : node.right->vertices)
                if (h.side[v] == Side::Top)
                    t2.insert(v);

            // Lemma 13 trimming: prefer T1 for top lists, B2 for bottom lists
            for (int v = 0; v < s.g.n; ++v) {
                auto& list = s.l.lists[v];
                bool all_top = subset_of(list, top_all);
                if (all_top) {
                    std::vector<int> cut;
                    for (int a : list)
                        if (t1.count(a))
                            cut.push_back(a);
                    if (!cut.empty())
                        list = cut;
                } else {
                    bool all_bottom = true;
                    for (int a : list)
                        if (h.side[a] == Side::Top)
                            all_bottom = false;
                    if (all_bottom) {
                        std::vector<int> cut;
                        for (int a : list)
                            if (b2down.count(a))
                                cut.push_back(a);
                        if (!cut.empty())
                            list = cut;
                    }
                }
            }

            // bad edge: one endpoint in B1, the other in T2; delete one of them
            for (auto [u, v] : s.g.edges) {
                bool bad = (subset_of(s.l.lists[u], b1) && subset_of(s.l.lists[v], t2)) ||
                           (subset_of(s.l.lists[u], t2) && subset_of(s.l.lists[v], b1));
                if (!bad)
                    continue;
                if (budget == 0)
                    return std::nullopt;
                for (int x : {u, v}) {
                    Sub branch = restrict_sub(s, complement_vertices(s.g.n, {x}));
                    if (auto sol = solve_node(std::move(branch), node, budget - 1)) {
                        sol->push_back(s.orig[x]);
                        rest = std::move(sol);
                        break;
                    }
                }
                if (!rest)
                    return std::nullopt;
                break;
            }
            if (rest)
                break;

            // edges inside the complete T1 x B2 cross are always satisfied
            std::vector<std::pair<int, int>> kept_edges;
            for (auto [u, v] : s.g.edges) {
                bool cross = (subset_of(s.l.lists[u], t1) && subset_of(s.l.lists[v], b2down)) ||
                             (subset_of(s.l.lists[u], b2down) && subset_of(s.l.lists[v], t1));
                if (!cross)
                    kept_edges.push_back({u, v});
            }
            s.g = UndirectedGraph(s.g.n, std::move(kept_edges));
            rest = solve_union(s, *node.left, *node.right, budget);
            break;
        }
        }
        if (!rest)
            return std::nullopt;
        base.insert(base.end(), rest->begin(), rest->end());
        return base;
    }
};

}  // namespace

std::vector<std::string> fsfc_violations(const FsfcInstance& inst) {
    std::vector<std::string> out;
    auto vr = validate_instance(inst.inst);
    out.insert(out.end(), vr.violations.begin(), vr.violations.end());
    if (!out.empty())
        return out;

    try {
        BipartiteTarget rebuilt = evaluate_decomposition(inst.decomposition);
        if (!same_target(rebuilt, inst.inst.h))
            out.push_back("decomposition does not evaluate to H");
    } catch (const std::exception& e) {
        out.push_back(std::string("malformed decomposition: ") + e.what());
        return out;
    }

    auto hcomp = inst.inst.h.components();
    auto gq = graph_queries(inst.inst.g);
    std::vector<int> comp_of_gcomp(gq.component_count, -1);
    for (int v = 0; v < inst.inst.g.n; ++v) {
        const auto& list = inst.inst.l.lists[v];
        if (list.empty())
            continue;
        int hc = hcomp[list[0]];
        Side side = inst.inst.h.side[list[0]];
        for (int a : list) {
            if (hcomp[a] != hc)
                out.push_back("list of vertex " + std::to_string(v) +
                              " spans two components of H");
            if (inst.inst.h.side[a] != side)
                out.push_back("list of vertex " + std::to_string(v) + " spans both sides");
        }
        int& forced = comp_of_gcomp[gq.component[v]];
        if (forced == -1)
            forced = hc;
        else if (forced != hc)
            out.push_back("component of G mixes two components of H (vertex " +
                          std::to_string(v) + ")");
    }
    return out;
}

std::optional<DeletionSolution> solve_fsfc(const FsfcInstance& inst,
                                           const ChildDlhomSolver& child_solver) {
    auto bad = fsfc_violations(inst);
    if (!bad.empty())
        throw std::invalid_argument("not a fixed-side fixed-component instance: " + bad[0]);

    FsfcSolver solver{inst.inst.h,
                      child_solver ? child_solver
                                   : ChildDlhomSolver([](const DlhomInstance& sub) {
                                         return solve_exact_oracle(sub);
                                     })};
    Sub root;
    root.g = inst.inst.g;
    root.l = inst.inst.l;
    root.orig.resize(inst.inst.g.n);
    for (int v = 0; v < inst.inst.g.n; ++v)
        root.orig[v] = v;

    for (int b = 0; b <= inst.inst.k; ++b) {
        auto w = solver.solve_node(root, inst.decomposition, b);
        if (!w)
            continue;
        std::sort(w->begin(), w->end());
        auto keep = complement_vertices(inst.inst.g.n, *w);
        ListAssignment kl;
        for (int v : keep)
            kl.lists.push_back(inst.inst.l.lists[v]);
        auto hom = lhom_decide(induced_subgraph(inst.inst.g, keep), kl, inst.inst.h);
        if (!hom)
            throw std::logic_error("fsfc produced a non-extendable deletion set");
        DeletionSolution sol;
        sol.deleted = *w;
        sol.hom.assign(inst.inst.g.n, -1);
        for (size_t i = 0; i < keep.size(); ++i)
            sol.hom[keep[i]] = (*hom)[i];
        return sol;
    }
    return std::nullopt;
}

}  // namespace dlhom
