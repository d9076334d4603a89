#include "dlhom/pipeline.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "dlhom/lhom.hpp"

namespace dlhom {

namespace {

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

std::vector<int> remap_set(const std::vector<int>& old_ids, const std::vector<int>& keep) {
    // old_ids and keep are sorted vertex sets of the same graph; returns the
    // positions in keep of the members that survive
    std::vector<int> out;
    for (size_t i = 0; i < keep.size(); ++i)
        if (std::binary_search(old_ids.begin(), old_ids.end(), keep[i]))
            out.push_back(static_cast<int>(i));
    return out;
}

struct ListSideInfo {
    int hcomp = -1;
    Side side = Side::Top;
};

ListSideInfo classify_list(const std::vector<int>& list, const std::vector<int>& hcomp,
                           const std::vector<Side>& hside) {
    ListSideInfo info;
    if (list.empty())
        return info;
    info.hcomp = hcomp[list[0]];
    info.side = hside[list[0]];
    return info;
}

std::vector<int> shortest_path(const UndirectedGraph& g, int from, int to) {
    auto adj = adjacency_lists(g);
    std::vector<int> parent(g.n, -2);
    parent[from] = -1;
    std::deque<int> bfs{from};
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop_front();
        if (u == to)
            break;
        for (int v : adj[u])
            if (parent[v] == -2) {
                parent[v] = u;
                bfs.push_back(v);
            }
    }
    std::vector<int> path;
    for (int x = to; x != -1; x = parent[x])
        path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// Conflict detection shared by the public op and the solver's internal state.
std::vector<Conflict> find_conflicts(const UndirectedGraph& g, const ListAssignment& l,
                                     const std::vector<int>& n0, const BipartiteTarget& h) {
    auto gq = graph_queries(g);
    if (!gq.two_coloring)
        throw std::invalid_argument("conflict detection requires a bipartite G");
    auto hcomp = h.components();
    std::vector<Conflict> out;
    for (size_t i = 0; i < n0.size(); ++i)
        for (size_t j = i + 1; j < n0.size(); ++j) {
            int u = n0[i], v = n0[j];
            if (gq.component[u] != gq.component[v])
                continue;
            auto cu = classify_list(l.lists[u], hcomp, h.side);
            auto cv = classify_list(l.lists[v], hcomp, h.side);
            if (cu.hcomp != cv.hcomp) {
                out.push_back({u, v, Conflict::Kind::Component});
                continue;
            }
            bool same_g_side = (*gq.two_coloring)[u] == (*gq.two_coloring)[v];
            bool same_h_side = cu.side == cv.side;
            if (same_g_side != same_h_side)
                out.push_back({u, v, Conflict::Kind::Parity});
        }
    return out;
}

// L' of the no-conflict case: every vertex of a component holding n0 vertices
// is forced onto one side of one component of H.
ListAssignment restricted_lists(const UndirectedGraph& g, const ListAssignment& l,
                                const std::vector<int>& n0, const BipartiteTarget& h) {
    auto gq = graph_queries(g);
    auto hcomp = h.components();
    std::vector<int> anchor(gq.component_count, -1);
    for (int v : n0)
        if (anchor[gq.component[v]] == -1)
            anchor[gq.component[v]] = v;

    ListAssignment out = l;
    for (int u = 0; u < g.n; ++u) {
        int a = anchor[gq.component[u]];
        if (a == -1)
            continue;
        auto ca = classify_list(l.lists[a], hcomp, h.side);
        bool same_g_side = (*gq.two_coloring)[u] == (*gq.two_coloring)[a];
        Side want = same_g_side ? ca.side : flip(ca.side);
        std::vector<int> cut;
        for (int x : l.lists[u])
            if (hcomp[x] == ca.hcomp && h.side[x] == want)
                cut.push_back(x);
        out.lists[u] = cut;
    }
    return out;
}

struct PipelineSolver {
    const BipartiteTarget& h;

    // FS-FC-IG by branching: a component holding n0 vertices that cannot be
    // coloured must lose a vertex.
    std::optional<std::vector<int>> fsfcig_branch(const Sub& s, const std::vector<int>& n0,
                                                  int budget) const {
        auto gq = graph_queries(s.g);
        std::vector<bool> has_n0(gq.component_count, false);
        for (int v : n0)
            has_n0[gq.component[v]] = true;
        std::vector<std::vector<int>> comps(gq.component_count);
        for (int v = 0; v < s.g.n; ++v)
            comps[gq.component[v]].push_back(v);

        for (auto& cv : comps) {
            if (cv.empty() || !has_n0[gq.component[cv[0]]])
                continue;
            Sub piece = restrict_sub(s, cv);
            if (lhom_decide(piece.g, piece.l, h))
                continue;
            // cv is the lowest failing component; some vertex of it must go
            if (budget == 0)
                return std::nullopt;
            for (int x : cv) {
                auto keep = complement_vertices(s.g.n, {x});
                auto branched = fsfcig_branch(restrict_sub(s, keep), remap_set(n0, keep),
                                              budget - 1);
                if (branched) {
                    branched->push_back(s.orig[x]);
                    return branched;
                }
            }
            return std::nullopt;
        }
        return std::vector<int>{};
    }

    // The bipartite-compression case split: drop components without n0
    // vertices (phi0 colours them), branch along a shortest conflicting path
    // if a conflict exists, otherwise restrict to fixed sides and solve the
    // FS-FC-IG relaxation.
    std::optional<std::vector<int>> solve_bipcomp(Sub s, std::vector<int> n0,
                                                  int budget) const {
        if (budget < 0)
            return std::nullopt;
        auto gq = graph_queries(s.g);
        std::vector<bool> keep_comp(gq.component_count, false);
        for (int v : n0)
            keep_comp[gq.component[v]] = true;
        std::vector<int> keep;
        for (int v = 0; v < s.g.n; ++v)
            if (keep_comp[gq.component[v]])
                keep.push_back(v);
        if (static_cast<int>(keep.size()) != s.g.n) {
            n0 = remap_set(n0, keep);
            s = restrict_sub(s, keep);
        }
        if (s.g.n == 0)
            return std::vector<int>{};

        auto conflicts = find_conflicts(s.g, s.l, n0, h);
        if (conflicts.empty()) {
            Sub restricted = s;
            restricted.l = restricted_lists(s.g, s.l, n0, h);
            return fsfcig_branch(restricted, n0, budget);
        }
        // Lemma 6: the deletion set must separate the pair, so it meets every
        // path between them (endpoints included)
        if (budget == 0)
            return std::nullopt;
        auto path = shortest_path(s.g, conflicts[0].u, conflicts[0].v);
        for (int x : path) {
            auto keep2 = complement_vertices(s.g.n, {x});
            auto sol = solve_bipcomp(restrict_sub(s, keep2), remap_set(n0, keep2), budget - 1);
            if (sol) {
                sol->push_back(s.orig[x]);
                return sol;
            }
        }
        return std::nullopt;
    }

    // DL-Hom(H)-Disjoint-Compression: W avoids w0 entirely, so a partial
    // homomorphism on G[w0] is guessed and its consequences trimmed into the
    // neighbour lists.
    std::optional<std::vector<int>> disjoint_step(const Sub& s, const std::vector<int>& w0,
                                                  int budget) const {
        auto candidates = guess_partial_homs(s.g, s.l, w0, h);
        std::set<int> w0set(w0.begin(), w0.end());
        for (const auto& cand : candidates) {
            if (static_cast<int>(cand.forced_deletions.size()) > budget)
                continue;
            std::vector<int> drop = cand.forced_deletions;
            drop.insert(drop.end(), w0.begin(), w0.end());
            std::sort(drop.begin(), drop.end());
            auto keep = complement_vertices(s.g.n, drop);

            std::vector<int> n0;
            auto adj = adjacency_lists(s.g);
            for (int v : w0)
                for (int u : adj[v])
                    if (!w0set.count(u))
                        n0.push_back(u);
            std::sort(n0.begin(), n0.end());
            n0.erase(std::unique(n0.begin(), n0.end()), n0.end());
            std::vector<int> n0_alive;
            for (int u : n0)
                if (std::binary_search(keep.begin(), keep.end(), u))
                    n0_alive.push_back(u);

            Sub inner;
            inner.g = induced_subgraph(s.g, keep);
            inner.orig.reserve(keep.size());
            inner.l.lists.reserve(keep.size());
            for (int v : keep) {
                inner.orig.push_back(s.orig[v]);
                inner.l.lists.push_back(cand.trimmed.lists[v]);
            }
            auto sol = solve_bipcomp(std::move(inner), remap_set(n0_alive, keep),
                                     budget - static_cast<int>(cand.forced_deletions.size()));
            if (sol) {
                for (int v : cand.forced_deletions)
                    sol->push_back(s.orig[v]);
                return sol;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::vector<Conflict> detect_conflicts(const BipCompInstance& inst) {
    return find_conflicts(inst.g, inst.l, inst.n0, inst.h);
}

FsfcIgInstance restrict_to_fixed_side(const BipCompInstance& inst) {
    if (!detect_conflicts(inst).empty())
        throw std::logic_error("restrict_to_fixed_side requires a conflict-free instance");
    auto gq = graph_queries(inst.g);
    std::vector<bool> has_n0(gq.component_count, false);
    for (int v : inst.n0)
        has_n0[gq.component[v]] = true;
    for (int v = 0; v < inst.g.n; ++v)
        if (!has_n0[gq.component[v]])
            throw std::logic_error("components without N0 vertices must be removed first");
    FsfcIgInstance out;
    out.g = inst.g;
    out.h = inst.h;
    out.l = restricted_lists(inst.g, inst.l, inst.n0, inst.h);
    out.n0 = inst.n0;
    out.k = inst.k;
    return out;
}

PruneResult prune_bad_components(const FsfcIgInstance& inst, const std::vector<int>& z) {
    std::vector<bool> in_z(inst.g.n, false);
    for (int v : z)
        in_z[v] = true;
    auto zsub = induced_subgraph(inst.g, z);
    auto zq = graph_queries(zsub);
    auto adj = adjacency_lists(inst.g);

    std::vector<bool> comp_bad(zq.component_count, false);
    for (int c = 0; c < zq.component_count; ++c) {
        std::vector<int> cv;
        for (size_t i = 0; i < z.size(); ++i)
            if (zq.component[i] == c)
                cv.push_back(static_cast<int>(i));
        auto piece = induced_subgraph(zsub, cv);
        ListAssignment pl;
        for (int i : cv)
            pl.lists.push_back(inst.l.lists[z[i]]);
        comp_bad[c] = !lhom_decide(piece, pl, inst.h).has_value();
    }

    std::set<int> bad_vertices, x_set;
    for (size_t i = 0; i < z.size(); ++i)
        if (comp_bad[zq.component[i]]) {
            bad_vertices.insert(z[i]);
            for (int u : adj[z[i]])
                if (!in_z[u])
                    x_set.insert(u);
        }

    PruneResult out;
    out.forced.assign(x_set.begin(), x_set.end());
    out.k = inst.k - static_cast<int>(x_set.size());
    if (out.k < 0) {
        out.infeasible = true;
        return out;
    }
    std::vector<int> drop(bad_vertices.begin(), bad_vertices.end());
    drop.insert(drop.end(), x_set.begin(), x_set.end());
    std::sort(drop.begin(), drop.end());
    out.kept_vertices = complement_vertices(inst.g.n, drop);
    out.g = induced_subgraph(inst.g, out.kept_vertices);
    for (int v : out.kept_vertices)
        out.l.lists.push_back(inst.l.lists[v]);
    out.n0 = remap_set(inst.n0, out.kept_vertices);
    return out;
}

std::vector<PartialHomCandidate> guess_partial_homs(const UndirectedGraph& g,
                                                    const ListAssignment& l,
                                                    const std::vector<int>& w0,
                                                    const BipartiteTarget& h) {
    std::vector<PartialHomCandidate> out;
    std::vector<int> w0s = w0;
    std::sort(w0s.begin(), w0s.end());
    int m = static_cast<int>(w0s.size());
    auto adj = adjacency_lists(g);
    std::set<int> w0set(w0s.begin(), w0s.end());

    std::vector<int> choice(m, 0);
    while (true) {
        bool list_ok = true;
        for (int i = 0; i < m && list_ok; ++i)
            if (l.lists[w0s[i]].empty())
                list_ok = false;
        if (!list_ok)
            return out;  // a w0 vertex with an empty list admits no guess

        std::vector<int> gamma(m);
        for (int i = 0; i < m; ++i)
            gamma[i] = l.lists[w0s[i]][choice[i]];
        bool hom = true;
        for (int i = 0; i < m && hom; ++i)
            for (int j = i + 1; j < m && hom; ++j)
                if (g.has_edge(w0s[i], w0s[j]) && !h.graph.has_edge(gamma[i], gamma[j]))
                    hom = false;

        if (hom) {
            PartialHomCandidate cand;
            cand.trimmed = l;
            for (int i = 0; i < m; ++i) {
                cand.gamma.emplace_back(w0s[i], gamma[i]);
                cand.trimmed.lists[w0s[i]] = {gamma[i]};
            }
            for (int i = 0; i < m; ++i)
                for (int u : adj[w0s[i]]) {
                    if (w0set.count(u))
                        continue;
                    std::vector<int> cut;
                    for (int a : cand.trimmed.lists[u])
                        if (h.graph.has_edge(a, gamma[i]))
                            cut.push_back(a);
                    cand.trimmed.lists[u] = cut;
                }
            for (int i = 0; i < m; ++i)
                for (int u : adj[w0s[i]])
                    if (!w0set.count(u) && cand.trimmed.lists[u].empty())
                        cand.forced_deletions.push_back(u);
            std::sort(cand.forced_deletions.begin(), cand.forced_deletions.end());
            cand.forced_deletions.erase(
                std::unique(cand.forced_deletions.begin(), cand.forced_deletions.end()),
                cand.forced_deletions.end());
            out.push_back(std::move(cand));
        }

        int i = m - 1;
        while (i >= 0 && choice[i] + 1 >= static_cast<int>(l.lists[w0s[i]].size()))
            --i;
        if (i < 0)
            break;
        ++choice[i];
        for (int j = i + 1; j < m; ++j)
            choice[j] = 0;
    }
    return out;
}

std::optional<std::vector<int>> disjoint_compression(const DlhomInstance& inst,
                                                     const std::vector<int>& w0,
                                                     const DisjointStep& step) {
    std::vector<int> w0s = w0;
    std::sort(w0s.begin(), w0s.end());
    int m = static_cast<int>(w0s.size());
    for (int pick = 0; pick < (1 << m); ++pick) {
        std::vector<int> isect;
        for (int i = 0; i < m; ++i)
            if (pick & (1 << i))
                isect.push_back(w0s[i]);
        if (static_cast<int>(isect.size()) > inst.k)
            continue;
        auto keep = complement_vertices(inst.g.n, isect);
        DlhomInstance sub;
        sub.g = induced_subgraph(inst.g, keep);
        sub.h = inst.h;
        for (int v : keep)
            sub.l.lists.push_back(inst.l.lists[v]);
        sub.k = inst.k - static_cast<int>(isect.size());
        std::vector<int> w0_rest;
        for (size_t i = 0; i < keep.size(); ++i)
            if (std::binary_search(w0s.begin(), w0s.end(), keep[i]) &&
                !std::binary_search(isect.begin(), isect.end(), keep[i]))
                w0_rest.push_back(static_cast<int>(i));
        if (auto sol = step(sub, w0_rest)) {
            std::vector<int> full = isect;
            for (int v : *sol)
                full.push_back(keep[v]);
            std::sort(full.begin(), full.end());
            return full;
        }
    }
    return std::nullopt;
}

std::optional<DeletionSolution> iterative_compression_drive(const DlhomInstance& inst,
                                                            const CompressionStep& step) {
    auto report = validate_instance(inst);
    if (!report.ok())
        throw std::invalid_argument("invalid instance: " + report.violations[0]);

    // vertices with empty lists are already removed and k reduced accordingly
    std::vector<int> forced, keep;
    for (int v = 0; v < inst.g.n; ++v)
        (inst.l.lists[v].empty() ? forced : keep).push_back(v);
    int k = inst.k - static_cast<int>(forced.size());
    if (k < 0)
        return std::nullopt;
    UndirectedGraph g = induced_subgraph(inst.g, keep);
    ListAssignment l;
    for (int v : keep)
        l.lists.push_back(inst.l.lists[v]);

    std::vector<int> x;  // solution for the current prefix, prefix ids
    for (int i = 0; i < g.n; ++i) {
        if (i == 0)
            continue;  // a single vertex with a nonempty list needs no deletion
        std::vector<int> prefix(i + 1);
        for (int v = 0; v <= i; ++v)
            prefix[v] = v;
        DlhomInstance pre;
        pre.g = induced_subgraph(g, prefix);
        pre.h = inst.h;
        for (int v = 0; v <= i; ++v)
            pre.l.lists.push_back(l.lists[v]);
        pre.k = k;
        std::vector<int> w0 = x;
        w0.push_back(i);
        auto next = step(pre, w0);
        if (!next)
            return std::nullopt;
        x = *next;
        std::sort(x.begin(), x.end());
    }

    DeletionSolution sol;
    for (int v : forced)
        sol.deleted.push_back(v);
    for (int v : x)
        sol.deleted.push_back(keep[v]);
    std::sort(sol.deleted.begin(), sol.deleted.end());
    auto alive = complement_vertices(inst.g.n, sol.deleted);
    ListAssignment al;
    for (int v : alive)
        al.lists.push_back(inst.l.lists[v]);
    auto hom = lhom_decide(induced_subgraph(inst.g, alive), al, inst.h);
    if (!hom)
        throw std::logic_error("compression step returned a non-extendable solution");
    sol.hom.assign(inst.g.n, -1);
    for (size_t i = 0; i < alive.size(); ++i)
        sol.hom[alive[i]] = (*hom)[i];
    return sol;
}

namespace {

std::optional<DeletionSolution> solve_dlhom_budget(const DlhomInstance& inst) {
    PipelineSolver solver{inst.h};
    CompressionStep step = [&](const DlhomInstance& prefix,
                               const std::vector<int>& w0) -> std::optional<std::vector<int>> {
        DisjointStep disjoint = [&](const DlhomInstance& sub, const std::vector<int>& w0_rest)
            -> std::optional<std::vector<int>> {
            Sub s;
            s.g = sub.g;
            s.l = sub.l;
            s.orig.resize(sub.g.n);
            for (int v = 0; v < sub.g.n; ++v)
                s.orig[v] = v;
            return solver.disjoint_step(s, w0_rest, sub.k);
        };
        return disjoint_compression(prefix, w0, disjoint);
    };
    return iterative_compression_drive(inst, step);
}

}  // namespace

std::optional<DeletionSolution> solve_dlhom(const DlhomInstance& inst) {
    auto report = validate_instance(inst);
    if (!report.ok())
        throw std::invalid_argument("invalid instance: " + report.violations[0]);
    for (int b = 0; b <= inst.k; ++b) {
        DlhomInstance at = inst;
        at.k = b;
        if (auto sol = solve_dlhom_budget(at))
            return sol;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> solve_fsfcig_exact(const FsfcIgInstance& inst) {
    PipelineSolver solver{inst.h};
    Sub s;
    s.g = inst.g;
    s.l = inst.l;
    s.orig.resize(inst.g.n);
    for (int v = 0; v < inst.g.n; ++v)
        s.orig[v] = v;
    auto sol = solver.fsfcig_branch(s, inst.n0, inst.k);
    if (sol)
        std::sort(sol->begin(), sol->end());
    return sol;
}

std::optional<DeletionSolution> solve_fsfc_pipeline(const FsfcInstance& inst) {
    return solve_fsfc(inst, [](const DlhomInstance& sub) { return solve_dlhom(sub); });
}

}  // namespace dlhom
