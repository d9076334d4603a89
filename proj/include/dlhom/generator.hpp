#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dlhom/instance.hpp"

namespace dlhom {

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TargetKind { Decomposable, Chain, Explicit };

struct GenSpec {
    int n = 0;
    double edge_prob = 0.5;
    int degree = -1;  // if >= 0, aim for this average degree instead of edge_prob
    TargetKind target_kind = TargetKind::Decomposable;
    int target_size = 2;                       // decomposable targets
    int ell = 1;                               // chain targets
    std::optional<BipartiteTarget> explicit_target;
    double list_density = 0.8;
    bool fsfc_lists = false;  // one H-component per G-component, one side per vertex
    int k = 0;
    std::uint64_t seed = 0;
};

// Deterministic per seed; emits valid instances only. Throws GenerationError
// when the spec cannot be met within the attempt budget.
DlhomInstance gen_random(const GenSpec& spec);

// Random side-labelled bipartite target built from a random decomposition
// tree, so skew_decompose always succeeds on it.
BipartiteTarget gen_decomposable_target(int size, std::uint64_t seed);

}  // namespace dlhom
