#include "dlhom/generator.hpp"

#include <algorithm>
#include <random>

#include "dlhom/target_structure.hpp"

namespace dlhom {

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

SkewDecompTree random_tree(Rng& rng, int first_vertex, int count) {
    SkewDecompTree t;
    t.vertices.resize(count);
    for (int i = 0; i < count; ++i)
        t.vertices[i] = first_vertex + i;
    if (count == 1) {
        t.kind = SkewDecompTree::Kind::Leaf;
        t.leaf_vertex = first_vertex;
        t.leaf_side = chance(rng, 0.5) ? Side::Top : Side::Bottom;
        return t;
    }
    t.kind = chance(rng, 0.6) ? SkewDecompTree::Kind::SkewSum : SkewDecompTree::Kind::Union;
    int left = pick(rng, 1, count - 1);
    t.left = std::make_unique<SkewDecompTree>(random_tree(rng, first_vertex, left));
    t.right = std::make_unique<SkewDecompTree>(random_tree(rng, first_vertex + left,
                                                           count - left));
    return t;
}

}  // namespace

BipartiteTarget gen_decomposable_target(int size, std::uint64_t seed) {
    if (size < 1)
        throw GenerationError("target size must be positive");
    Rng rng(seed);
    for (int attempt = 0; attempt < 500; ++attempt) {
        SkewDecompTree t = random_tree(rng, 0, size);
        try {
            return evaluate_decomposition(t);
        } catch (const std::invalid_argument&) {
            // a special sum came out with an empty class; try again
        }
    }
    throw GenerationError("no decomposable target of size " + std::to_string(size) +
                          " found in the attempt budget");
}

DlhomInstance gen_random(const GenSpec& spec) {
    if (spec.n < 0)
        throw GenerationError("negative n");
    Rng rng(spec.seed);

    DlhomInstance inst;
    switch (spec.target_kind) {
    case TargetKind::Decomposable:
        inst.h = gen_decomposable_target(spec.target_size, rng());
        break;
    case TargetKind::Chain:
        inst.h = build_chain_target(spec.ell).h;
        break;
    case TargetKind::Explicit:
        if (!spec.explicit_target)
            throw GenerationError("explicit target kind without a target");
        inst.h = *spec.explicit_target;
        break;
    }

    std::vector<std::pair<int, int>> edges;
    if (spec.degree >= 0) {
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v)
                all.emplace_back(u, v);
        std::shuffle(all.begin(), all.end(), rng);
        int want = std::min<int>(static_cast<int>(all.size()), spec.n * spec.degree / 2);
        edges.assign(all.begin(), all.begin() + want);
    } else {
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v)
                if (chance(rng, spec.edge_prob))
                    edges.emplace_back(u, v);
    }
    inst.g = UndirectedGraph(spec.n, std::move(edges));

    inst.l.lists.assign(spec.n, {});
    if (spec.fsfc_lists) {
        // one component of H per component of G, one side per vertex
        auto hcomp = inst.h.components();
        int hcomps = hcomp.empty() ? 0 : *std::max_element(hcomp.begin(), hcomp.end()) + 1;
        if (hcomps == 0)
            throw GenerationError("fixed-component lists need a nonempty target");
        auto gq = graph_queries(inst.g);
        std::vector<int> comp_choice(gq.component_count);
        for (auto& c : comp_choice)
            c = pick(rng, 0, hcomps - 1);
        for (int v = 0; v < spec.n; ++v) {
            int hc = comp_choice[gq.component[v]];
            std::vector<int> top, bottom;
            for (int a = 0; a < inst.h.n(); ++a)
                if (hcomp[a] == hc)
                    (inst.h.side[a] == Side::Top ? top : bottom).push_back(a);
            const auto& pool = top.empty() ? bottom
                               : bottom.empty() ? top
                               : (chance(rng, 0.5) ? top : bottom);
            for (int a : pool)
                if (chance(rng, spec.list_density))
                    inst.l.lists[v].push_back(a);
        }
    } else {
        for (int v = 0; v < spec.n; ++v)
            for (int a = 0; a < inst.h.n(); ++a)
                if (chance(rng, spec.list_density))
                    inst.l.lists[v].push_back(a);
    }

    inst.k = spec.k;
    auto report = validate_instance(inst);
    if (!report.ok())
        throw GenerationError("generator produced an invalid instance: " +
                              report.violations[0]);
    return inst;
}

}  // namespace dlhom
