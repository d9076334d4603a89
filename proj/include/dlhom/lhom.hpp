#pragma once

#include <optional>
#include <vector>

#include "dlhom/instance.hpp"

namespace dlhom {

struct PropagationState {
    ListAssignment lists;  // current lists, subsets of the originals
    bool emptied = false;  // some list became empty
};

// Greatest fixpoint of: remove a from L(u) if some neighbour v of u has no
// b in L(v) with {a,b} an edge of H. Never removes a value used by any list
// homomorphism, so the solution set is unchanged.
PropagationState arc_consistency(const UndirectedGraph& g, const ListAssignment& l,
                                 const BipartiteTarget& h);

// Complete backtracking search (smallest current list first, lowest index on
// ties) with arc-consistency pruning. Returns a list homomorphism iff one
// exists.
std::optional<std::vector<int>> lhom_decide(const UndirectedGraph& g, const ListAssignment& l,
                                            const BipartiteTarget& h);

// Ground-truth deletion solver: enumerates deletion sets by increasing
// cardinality, lexicographic within a cardinality, and returns the first
// whose residual instance admits a list homomorphism. Exponential in |V(G)|;
// this is the correctness reference, not the performance path.
std::optional<DeletionSolution> solve_exact_oracle(const DlhomInstance& inst);

}  // namespace dlhom
