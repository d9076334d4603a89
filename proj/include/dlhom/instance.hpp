#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlhom/graph.hpp"

namespace dlhom {

enum class Side { Top, Bottom };

inline Side flip(Side s) { return s == Side::Top ? Side::Bottom : Side::Top; }

// Bipartite target graph H with an explicit side label per vertex. The side
// labelling is data, not derived: the special-sum construction depends on the
// chosen bipartition classes, not just the abstract graph.
struct BipartiteTarget {
    UndirectedGraph graph;
    std::vector<Side> side;

    BipartiteTarget() = default;
    BipartiteTarget(UndirectedGraph g, std::vector<Side> s)
        : graph(std::move(g)), side(std::move(s)) {}

    int n() const { return graph.n; }
    // Per-vertex component id; requires a well-formed target.
    std::vector<int> components() const { return graph_queries(graph).component; }
};

// Per-vertex-of-G allowed images in H, sorted ascending. Empty lists are
// legal input and mean the vertex must be deleted.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    static ListAssignment full(int g_n, int h_n);
    int size() const { return static_cast<int>(lists.size()); }
};

struct DlhomInstance {
    UndirectedGraph g;
    BipartiteTarget h;
    ListAssignment l;
    int k = 0;
};

// A deletion set W together with a homomorphism on the surviving vertices.
// hom[v] == -1 exactly for deleted vertices.
struct DeletionSolution {
    std::vector<int> deleted;
    std::vector<int> hom;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_instance(const DlhomInstance& inst);

struct VerifyResult {
    bool ok = false;
    std::string first_violation;
};

// True iff |W| <= k, hom is defined exactly off W, respects the lists, and
// maps every surviving edge of G to an edge of H.
VerifyResult verify_solution(const DlhomInstance& inst, const DeletionSolution& sol);

// Convenience used throughout the solvers: a plain list homomorphism check
// for a total map (no deletions).
bool is_list_homomorphism(const UndirectedGraph& g, const ListAssignment& l,
                          const BipartiteTarget& h, const std::vector<int>& image);

}  // namespace dlhom
