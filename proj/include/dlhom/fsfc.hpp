#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dlhom/instance.hpp"
#include "dlhom/target_structure.hpp"

namespace dlhom {

struct VertexCoverResult {
    bool exceeds = false;
    int size = 0;
    std::vector<int> cover;
};

// Exact minimum vertex cover when it is at most cap, by 2^cap branching on an
// uncovered edge.
VertexCoverResult min_vertex_cover(const UndirectedGraph& g, int cap);

// Fixed-side fixed-component instance: every nonempty list sits inside one
// side of one component of H, and no component of G mixes two components of
// H. The decomposition tree must evaluate to h.
struct FsfcInstance {
    DlhomInstance inst;
    SkewDecompTree decomposition;
};

// Problems handed to a child solver at a Union node: a component of G whose
// lists all sit inside one child target (reindexed to 0..m-1).
using ChildDlhomSolver =
    std::function<std::optional<DeletionSolution>(const DlhomInstance&)>;

std::vector<std::string> fsfc_violations(const FsfcInstance& inst);

// Induction on the decomposition tree: single vertex -> vertex cover;
// disjoint union -> per-component minima via the child solver, summed
// against the budget; special sum -> list trimming, two-way branching on bad
// edges, removal of always-satisfied cross edges, then the union case.
// Child instances are full deletion problems on the smaller target; when no
// child solver is supplied the exhaustive oracle is used. Returns a minimum
// solution within k, std::nullopt for NO; throws std::invalid_argument on a
// malformed instance.
std::optional<DeletionSolution> solve_fsfc(const FsfcInstance& inst,
                                           const ChildDlhomSolver& child_solver = {});

}  // namespace dlhom
