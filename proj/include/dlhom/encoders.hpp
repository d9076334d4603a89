#pragma once

#include <optional>
#include <vector>

#include "dlhom/instance.hpp"

namespace dlhom {

enum class EncodedKind { VertexCover, OddCycleTransversal, MultiwayCut };

// A classical problem encoded as a deletion instance, with enough bookkeeping
// to map solutions back to the source problem.
struct EncodedProblem {
    EncodedKind kind;
    UndirectedGraph source;
    std::vector<int> terminals;  // multiway cut only
    DlhomInstance instance;

    // Maps a verified deletion set of the encoded instance to a solution of
    // the source problem (at most the same size). Subdivision vertices fold
    // back onto the smaller endpoint of their edge, or the other endpoint if
    // that one was itself deleted.
    std::vector<int> map_back(const std::vector<int>& deleted) const;
};

// H = a single vertex; deleting W must destroy every edge.
EncodedProblem encode_vertex_cover(const UndirectedGraph& g, int k);

// H = a single edge; G minus W must be two-colourable.
EncodedProblem encode_oct(const UndirectedGraph& g, int k);

// H = a matching of one edge per terminal over the fully subdivided G;
// terminal t_i is pinned to the i-th matching edge. Terminals are ordinary
// vertices and may be deleted. Throws std::invalid_argument for fewer than
// two distinct terminals.
EncodedProblem encode_multiway_cut(const UndirectedGraph& g, const std::vector<int>& terminals,
                                   int k);

}  // namespace dlhom
