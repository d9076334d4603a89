#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlhom/instance.hpp"
#include "dlhom/target_structure.hpp"

namespace dlhom {

// A chain clause x_0 -> x_1 -> ... -> x_m over distinct variables; its length
// is the number of variables. Length 1 is a bare variable, satisfied by both
// assignments. Multiplicity counts identical copies; k+1 copies make a clause
// effectively undeletable under clause-deletion budgets of k.
struct ChainClause {
    std::vector<int> vars;
    int mult = 1;

    int length() const { return static_cast<int>(vars.size()); }
};

struct UnaryClause {
    int var = 0;
    bool neg = false;
    int mult = 1;
};

struct ChainFormula {
    int variable_count = 0;
    std::vector<ChainClause> chains;
    std::vector<UnaryClause> unaries;
    int ell = 1;  // maximum chain length
};

std::vector<std::string> formula_violations(const ChainFormula& f);

struct ClauseRef {
    enum class Kind { Chain, Unary };
    Kind kind;
    int index;

    bool operator==(const ClauseRef&) const = default;
};

struct PropagateResult {
    bool sat = false;
    std::vector<bool> assignment;        // valid iff sat
    std::vector<ClauseRef> certificate;  // iff unsat: a positive unary, chain
                                         // clauses forming an implication path,
                                         // and the opposing negative unary
};

// Forces 1 forward and 0 backward along implications seeded by the unary
// clauses; sat iff no variable is forced both ways.
PropagateResult propagate(const ChainFormula& f);

struct CdcsInstance {
    ChainFormula formula;
    int k = 0;
};

// Exact clause-deletion solver: branches over the clauses of a minimal
// conflict certificate, depth at most k. Each deletion removes one occurrence.
std::optional<std::vector<ClauseRef>> solve_cdcs(const CdcsInstance& inst);

struct VdcsInstance {
    ChainFormula formula;
    int k = 0;
    std::vector<int> deletable;  // indices of the chain clauses of length != 2
};

// Builds the deletable set and checks the variable-disjointness rules of the
// variable-deletion problem; violations are returned, empty means valid.
VdcsInstance make_vdcs(ChainFormula f, int k);
std::vector<std::string> vdcs_violations(const VdcsInstance& inst);

// Exact variable-deletion solver: removing a deletable clause removes its
// variables and every clause mentioning them.
std::optional<std::vector<int>> solve_vdcs(const VdcsInstance& inst);

// The four reductions tying the chain-SAT problems to the homomorphism world.
CdcsInstance reduce_vdcs_to_cdcs(const VdcsInstance& inst);
VdcsInstance reduce_cdcs_to_vdcs(const CdcsInstance& inst);

struct VdcsToFsfcResult {
    DlhomInstance instance;        // over the target H_ell
    ChainTarget target;
    std::vector<int> alpha_vertex; // per chain clause: its G vertex, -1 if implicational
};

// Builds G_F over H_ell: one vertex per ordinary clause listing the value
// arcs of its satisfying assignments, and an undeletable three-vertex gadget
// path per implicational clause.
VdcsToFsfcResult reduce_vdcs_to_fsfc(const VdcsInstance& inst);

// Encodes a fixed-side instance over a represented target as chain clauses
// whose 0->1 transition picks the arc, with implicational clauses derived
// from the arc geometry. Requires lists one-sided w.r.t. the representation
// and G bipartite accordingly.
struct FsToVdcsResult {
    VdcsInstance instance;
    std::vector<int> vertex_chain;  // per G vertex: index of its chain clause
};

FsToVdcsResult reduce_fs_to_vdcs(const UndirectedGraph& g, const ListAssignment& l,
                                 const BipartiteTarget& h, const ArcRepresentation& rep,
                                 int k);

}  // namespace dlhom
