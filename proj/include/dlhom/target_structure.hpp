#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dlhom/instance.hpp"

namespace dlhom {

struct ForbiddenWitness {
    enum class Kind { P6, C6 };
    Kind kind;
    std::vector<int> vertices;  // six vertices inducing the pattern
};

struct ForbiddenCheck {
    bool decomposable_candidate = false;  // no induced P6 or C6 found
    std::optional<ForbiddenWitness> witness;
};

// Exhaustive search over 6-subsets for an induced P6 or C6.
ForbiddenCheck check_forbidden(const BipartiteTarget& h);

// Witness that a side-labelled bipartite graph is skew decomposable: leaves
// are single vertices, Union nodes are disjoint unions, SkewSum nodes add the
// complete T1 x B2 cross edges (left child contributes T1, right child B2).
// Every node lists the original H vertices it covers, sorted ascending; side
// labels are inherited from the target being decomposed.
struct SkewDecompTree {
    enum class Kind { Leaf, Union, SkewSum };
    Kind kind = Kind::Leaf;
    int leaf_vertex = -1;
    Side leaf_side = Side::Top;
    std::unique_ptr<SkewDecompTree> left, right;
    std::vector<int> vertices;

    SkewDecompTree clone() const;
};

std::optional<SkewDecompTree> skew_decompose(const BipartiteTarget& h);

// Bottom-up reconstruction of the target a tree describes. The covered
// vertices must be exactly 0..m-1. Throws std::invalid_argument on a
// malformed tree (overlapping children, empty T1 or B2 at a SkewSum).
BipartiteTarget evaluate_decomposition(const SkewDecompTree& t);

// Circle positions 0..circle_size-1 clockwise; each vertex of H owns the
// closed clockwise interval [start, end]. Every arc must contain exactly one
// of the poles N, S; edges of H correspond to pairs of disjoint arcs.
struct ArcRepresentation {
    int circle_size = 0;
    int north = 0;
    int south = 0;
    std::vector<std::pair<int, int>> arcs;

    bool arc_contains(int vertex, int position) const;
    bool arcs_intersect(int u, int v) const;
    bool is_northern(int vertex) const { return arc_contains(vertex, north); }
};

struct ArcValidation {
    bool ok = false;
    std::string reason;
    std::pair<int, int> violating_pair{-1, -1};
};

// Checks rep well-formedness, edge <=> disjoint arcs for every pair, and the
// side convention northern = Top, southern = Bottom.
ArcValidation validate_arc_representation(const BipartiteTarget& h, const ArcRepresentation& rep);

struct ChainGadgetArcs {
    int u1, u2, v1, v2, w1, w2;  // vertex ids in H_ell
};

struct ChainTarget {
    BipartiteTarget h;
    ArcRepresentation rep;
    std::vector<int> value_vertex;                    // i -> vertex of arc a_i
    std::vector<std::vector<ChainGadgetArcs>> gadget; // [i][j], 0 <= i,j < ell
};

// The target H_ell used by the chain-SAT reduction: ell+1 value arcs plus six
// gadget arcs per index pair, with edges derived from the arc geometry. The
// construction depends only on ell.
ChainTarget build_chain_target(int ell);

}  // namespace dlhom
