#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dlhom/fsfc.hpp"
#include "dlhom/instance.hpp"

namespace dlhom {

// Bipartite compression instance: G is bipartite, the vertices in n0 carry
// nonempty fixed-side fixed-component lists, and phi0 is a list homomorphism
// of G minus n0 (phi0[v] == -1 exactly on n0).
struct BipCompInstance {
    UndirectedGraph g;
    BipartiteTarget h;
    ListAssignment l;
    std::vector<int> n0;
    std::vector<int> phi0;
    int k = 0;
};

struct FsfcIgInstance {
    UndirectedGraph g;
    BipartiteTarget h;
    ListAssignment l;
    std::vector<int> n0;
    int k = 0;
};

struct Conflict {
    enum class Kind { Component, Parity };
    int u = -1;
    int v = -1;
    Kind kind = Kind::Component;
};

// Pairs u,v of n0 in the same component of G whose lists force different
// components of H, or the same component but sides inconsistent with the
// parity of their distance.
std::vector<Conflict> detect_conflicts(const BipCompInstance& inst);

// Intersects every list with the side of H forced by the n0 vertices of its
// G-component; components without n0 vertices must have been removed first.
// Throws std::logic_error if a conflict is present.
FsfcIgInstance restrict_to_fixed_side(const BipCompInstance& inst);

struct PruneResult {
    bool infeasible = false;        // forced deletions exceed the budget
    UndirectedGraph g;              // G minus (X union B)
    ListAssignment l;
    std::vector<int> n0;
    int k = 0;                      // k - |X|
    std::vector<int> forced;        // X, in original vertex ids
    std::vector<int> kept_vertices; // original ids of the surviving vertices
};

// Classifies the components of G[Z] by list-homomorphism existence; the
// outside neighbours of bad components are forced deletions, the bad
// components themselves are discarded. z must satisfy property (*) for the
// reduction to be answer-preserving.
PruneResult prune_bad_components(const FsfcIgInstance& inst, const std::vector<int>& z);

struct PartialHomCandidate {
    std::vector<std::pair<int, int>> gamma;  // vertex of w0 -> image in H
    ListAssignment trimmed;                  // lists after L(u) &= N(gamma(v))
    std::vector<int> forced_deletions;       // neighbours whose lists emptied
};

// All list homomorphisms of G[w0], each with the trimmed neighbour lists; at
// most |V(H)|^|w0| candidates.
std::vector<PartialHomCandidate> guess_partial_homs(const UndirectedGraph& g,
                                                    const ListAssignment& l,
                                                    const std::vector<int>& w0,
                                                    const BipartiteTarget& h);

// Step solver contract: given a prefix instance and a solution w0 of size at
// most k+1 for it, find a solution of size at most k or report NO.
using CompressionStep = std::function<std::optional<std::vector<int>>(
    const DlhomInstance& prefix, const std::vector<int>& w0)>;

// Runs the compression step over vertex prefixes; fails as soon as some
// prefix has no solution.
std::optional<DeletionSolution> iterative_compression_drive(const DlhomInstance& inst,
                                                            const CompressionStep& step);

// Disjoint-variant step contract: solve the instance with a deletion set
// disjoint from w0, where G minus w0 has a list homomorphism.
using DisjointStep = std::function<std::optional<std::vector<int>>(
    const DlhomInstance& inst, const std::vector<int>& w0)>;

// Guesses the intersection I of the solution with w0 and calls the disjoint
// step on (G - I, k - |I|, w0 - I); returns W union I for the first guess
// that succeeds.
std::optional<std::vector<int>> disjoint_compression(const DlhomInstance& inst,
                                                     const std::vector<int>& w0,
                                                     const DisjointStep& step);

// The full driver: iterative compression, disjoint compression, partial
// homomorphism guessing, then per candidate either the conflict branch
// (bounded branching along a shortest conflicting path) or the fixed-side
// restriction solved as FS-FC-IG by bounded branching on uncolourable
// components. Returns a minimum-size solution within k.
std::optional<DeletionSolution> solve_dlhom(const DlhomInstance& inst);

// Exact FS-FC-IG decision used by the pipeline and by the lemma-validation
// tests: a solution may leave components disjoint from n0 uncoloured.
std::optional<std::vector<int>> solve_fsfcig_exact(const FsfcIgInstance& inst);

// solve_fsfc wired with the pipeline as the Union-node child solver.
std::optional<DeletionSolution> solve_fsfc_pipeline(const FsfcInstance& inst);

}  // namespace dlhom
