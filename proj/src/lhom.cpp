#include "dlhom/lhom.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace dlhom {

namespace {

// Solvers work on 64-bit list masks; targets in this artifact stay small
// (H_3 has 58 vertices).
void require_mask_width(const BipartiteTarget& h) {
    if (h.n() > 64)
        throw std::invalid_argument("lhom engine supports targets with at most 64 vertices");
}

std::vector<std::uint64_t> target_adjacency(const BipartiteTarget& h) {
    std::vector<std::uint64_t> adj(h.n(), 0);
    for (auto [a, b] : h.graph.edges) {
        adj[a] |= std::uint64_t{1} << b;
        adj[b] |= std::uint64_t{1} << a;
    }
    return adj;
}

std::vector<std::uint64_t> list_masks(const ListAssignment& l) {
    std::vector<std::uint64_t> m(l.lists.size(), 0);
    for (size_t v = 0; v < l.lists.size(); ++v)
        for (int a : l.lists[v])
            m[v] |= std::uint64_t{1} << a;
    return m;
}

std::vector<int> mask_to_list(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        int a = std::countr_zero(m);
        out.push_back(a);
        m &= m - 1;
    }
    return out;
}

// In-place AC over the mask representation; returns false if a list empties.
bool propagate_masks(const std::vector<std::vector<int>>& gadj,
                     const std::vector<std::uint64_t>& hadj,
                     std::vector<std::uint64_t>& lists) {
    int n = static_cast<int>(lists.size());
    std::vector<bool> queued(n, true);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        queue.push_back(v);
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        queued[u] = false;
        for (int v : gadj[u]) {
            // supported values of v: those adjacent in H to something in L(u)
            std::uint64_t support = 0;
            std::uint64_t lu = lists[u];
            while (lu) {
                support |= hadj[std::countr_zero(lu)];
                lu &= lu - 1;
            }
            std::uint64_t next = lists[v] & support;
            if (next != lists[v]) {
                lists[v] = next;
                if (next == 0)
                    return false;
                if (!queued[v]) {
                    queued[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    return true;
}

bool decide_masks(const std::vector<std::vector<int>>& gadj,
                  const std::vector<std::uint64_t>& hadj,
                  std::vector<std::uint64_t> lists, std::vector<int>& out) {
    if (!propagate_masks(gadj, hadj, lists))
        return false;
    // pick the undecided vertex with the smallest list, lowest index on ties
    int best = -1, best_size = 65;
    for (size_t v = 0; v < lists.size(); ++v) {
        int sz = std::popcount(lists[v]);
        if (sz > 1 && sz < best_size) {
            best = static_cast<int>(v);
            best_size = sz;
        }
    }
    if (best == -1) {
        for (size_t v = 0; v < lists.size(); ++v)
            out[v] = std::countr_zero(lists[v]);
        return true;
    }
    std::uint64_t options = lists[best];
    while (options) {
        int a = std::countr_zero(options);
        options &= options - 1;
        auto branch = lists;
        branch[best] = std::uint64_t{1} << a;
        if (decide_masks(gadj, hadj, std::move(branch), out))
            return true;
    }
    return false;
}

}  // namespace

PropagationState arc_consistency(const UndirectedGraph& g, const ListAssignment& l,
                                 const BipartiteTarget& h) {
    require_mask_width(h);
    auto gadj = adjacency_lists(g);
    auto hadj = target_adjacency(h);
    auto lists = list_masks(l);
    bool nonempty = propagate_masks(gadj, hadj, lists);
    PropagationState st;
    st.lists.lists.resize(g.n);
    st.emptied = false;
    for (int v = 0; v < g.n; ++v) {
        st.lists.lists[v] = mask_to_list(lists[v]);
        if (lists[v] == 0)
            st.emptied = true;
    }
    if (!nonempty)
        st.emptied = true;
    return st;
}

std::optional<std::vector<int>> lhom_decide(const UndirectedGraph& g, const ListAssignment& l,
                                            const BipartiteTarget& h) {
    require_mask_width(h);
    if (g.n == 0)
        return std::vector<int>{};
    auto gadj = adjacency_lists(g);
    auto hadj = target_adjacency(h);
    auto lists = list_masks(l);
    for (auto m : lists)
        if (m == 0)
            return std::nullopt;
    std::vector<int> out(g.n, -1);
    if (decide_masks(gadj, hadj, std::move(lists), out))
        return out;
    return std::nullopt;
}

namespace {

// Enumerates r-subsets of 0..n-1 in lexicographic order.
bool next_subset(std::vector<int>& s, int n) {
    int r = static_cast<int>(s.size());
    for (int i = r - 1; i >= 0; --i) {
        if (s[i] < n - (r - i)) {
            ++s[i];
            for (int j = i + 1; j < r; ++j)
                s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<DeletionSolution> solve_exact_oracle(const DlhomInstance& inst) {
    require_mask_width(inst.h);
    for (int r = 0; r <= inst.k && r <= inst.g.n; ++r) {
        std::vector<int> w(r);
        for (int i = 0; i < r; ++i)
            w[i] = i;
        do {
            auto keep = complement_vertices(inst.g.n, w);
            auto sub = induced_subgraph(inst.g, keep);
            ListAssignment subl;
            subl.lists.reserve(keep.size());
            for (int v : keep)
                subl.lists.push_back(inst.l.lists[v]);
            if (auto hom = lhom_decide(sub, subl, inst.h)) {
                DeletionSolution sol;
                sol.deleted = w;
                sol.hom.assign(inst.g.n, -1);
                for (size_t i = 0; i < keep.size(); ++i)
                    sol.hom[keep[i]] = (*hom)[i];
                return sol;
            }
        } while (next_subset(w, inst.g.n));
    }
    return std::nullopt;
}

}  // namespace dlhom
