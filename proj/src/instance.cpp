#include "dlhom/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dlhom {

ListAssignment ListAssignment::full(int g_n, int h_n) {
    ListAssignment l;
    std::vector<int> all(h_n);
    std::iota(all.begin(), all.end(), 0);
    l.lists.assign(g_n, all);
    return l;
}

ValidationReport validate_instance(const DlhomInstance& inst) {
    ValidationReport r;
    for (auto& v : graph_violations(inst.g))
        r.violations.push_back("G: " + v);
    for (auto& v : graph_violations(inst.h.graph))
        r.violations.push_back("H: " + v);

    if (static_cast<int>(inst.h.side.size()) != inst.h.n()) {
        r.violations.push_back("H: side labelling has wrong length");
    } else {
        for (auto [a, b] : inst.h.graph.edges)
            if (a >= 0 && b >= 0 && a < inst.h.n() && b < inst.h.n() &&
                inst.h.side[a] == inst.h.side[b])
                r.violations.push_back("H: edge within side {" + std::to_string(a) + "," +
                                       std::to_string(b) + "}");
    }

    if (inst.l.size() != inst.g.n) {
        r.violations.push_back("lists do not cover every vertex of G");
    } else {
        for (int v = 0; v < inst.g.n; ++v) {
            std::set<int> seen;
            for (int a : inst.l.lists[v]) {
                if (a < 0 || a >= inst.h.n())
                    r.violations.push_back("list entry out of range at vertex " +
                                           std::to_string(v));
                else if (!seen.insert(a).second)
                    r.violations.push_back("duplicate list entry at vertex " + std::to_string(v));
            }
        }
    }

    if (inst.k < 0)
        r.violations.push_back("negative budget k");
    return r;
}

VerifyResult verify_solution(const DlhomInstance& inst, const DeletionSolution& sol) {
    if (static_cast<int>(sol.deleted.size()) > inst.k)
        return {false, "deletion set larger than k"};
    std::vector<bool> deleted(inst.g.n, false);
    for (int v : sol.deleted) {
        if (v < 0 || v >= inst.g.n)
            return {false, "deleted vertex out of range"};
        if (deleted[v])
            return {false, "vertex deleted twice"};
        deleted[v] = true;
    }
    if (static_cast<int>(sol.hom.size()) != inst.g.n)
        return {false, "hom has wrong length"};
    for (int v = 0; v < inst.g.n; ++v) {
        if (deleted[v]) {
            if (sol.hom[v] != -1)
                return {false, "hom defined on deleted vertex " + std::to_string(v)};
            continue;
        }
        int a = sol.hom[v];
        if (a == -1)
            return {false, "hom undefined on surviving vertex " + std::to_string(v)};
        if (!std::binary_search(inst.l.lists[v].begin(), inst.l.lists[v].end(), a))
            return {false, "image of vertex " + std::to_string(v) + " not in its list"};
    }
    for (auto [u, v] : inst.g.edges) {
        if (deleted[u] || deleted[v])
            continue;
        if (!inst.h.graph.has_edge(sol.hom[u], sol.hom[v]))
            return {false, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} maps to a non-edge of H"};
    }
    return {true, ""};
}

bool is_list_homomorphism(const UndirectedGraph& g, const ListAssignment& l,
                          const BipartiteTarget& h, const std::vector<int>& image) {
    if (static_cast<int>(image.size()) != g.n)
        return false;
    for (int v = 0; v < g.n; ++v)
        if (!std::binary_search(l.lists[v].begin(), l.lists[v].end(), image[v]))
            return false;
    for (auto [u, v] : g.edges)
        if (!h.graph.has_edge(image[u], image[v]))
            return false;
    return true;
}

}  // namespace dlhom
