#include "dlhom/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace dlhom {

namespace {

using nlohmann::json;

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw IoError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer())
        throw IoError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<std::pair<int, int>> read_pairs(const json& arr, const char* what) {
    if (!arr.is_array())
        throw IoError(std::string(what) + " must be an array");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw IoError(std::string(what) + " entries must be integer pairs");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (auto [a, b] : pairs)
        arr.push_back(json::array({a, b}));
    return arr;
}

}  // namespace

json graph_to_json(const UndirectedGraph& g) {
    return json{{"n", g.n}, {"edges", pairs_to_json(g.edges)}};
}

UndirectedGraph graph_from_json(const json& j) {
    return UndirectedGraph(need_int(j, "n"), read_pairs(need(j, "edges"), "edges"));
}

json target_to_json(const BipartiteTarget& h) {
    json side = json::array();
    for (Side s : h.side)
        side.push_back(s == Side::Top ? "T" : "B");
    json out = graph_to_json(h.graph);
    out["side"] = side;
    return out;
}

BipartiteTarget target_from_json(const json& j) {
    BipartiteTarget h;
    h.graph = graph_from_json(j);
    const json& side = need(j, "side");
    if (!side.is_array())
        throw IoError("side must be an array");
    for (const auto& s : side) {
        if (!s.is_string() || (s != "T" && s != "B"))
            throw IoError("side entries must be \"T\" or \"B\"");
        h.side.push_back(s == "T" ? Side::Top : Side::Bottom);
    }
    if (static_cast<int>(h.side.size()) != h.graph.n)
        throw IoError("side array length must equal n");
    return h;
}

json instance_to_json(const DlhomInstance& inst) {
    json lists = json::array();
    for (auto l : inst.l.lists) {
        std::sort(l.begin(), l.end());
        lists.push_back(l);
    }
    return json{{"graph", graph_to_json(inst.g)},
                {"target", target_to_json(inst.h)},
                {"lists", lists},
                {"k", inst.k}};
}

DlhomInstance instance_from_json(const json& j) {
    DlhomInstance inst;
    inst.g = graph_from_json(need(j, "graph"));
    inst.h = target_from_json(need(j, "target"));
    const json& lists = need(j, "lists");
    if (!lists.is_array())
        throw IoError("lists must be an array");
    for (const auto& l : lists) {
        if (!l.is_array())
            throw IoError("each list must be an array");
        std::vector<int> entry;
        for (const auto& a : l) {
            if (!a.is_number_integer())
                throw IoError("list entries must be integers");
            entry.push_back(a.get<int>());
        }
        std::sort(entry.begin(), entry.end());
        inst.l.lists.push_back(std::move(entry));
    }
    inst.k = need_int(j, "k");
    return inst;
}

json solution_to_json(const DeletionSolution& sol) {
    json hom = json::array();
    for (size_t v = 0; v < sol.hom.size(); ++v)
        if (sol.hom[v] != -1)
            hom.push_back(json::array({static_cast<int>(v), sol.hom[v]}));
    auto deleted = sol.deleted;
    std::sort(deleted.begin(), deleted.end());
    return json{{"deleted", deleted}, {"hom", hom}};
}

DeletionSolution solution_from_json(const json& j, int g_n) {
    DeletionSolution sol;
    const json& del = need(j, "deleted");
    if (!del.is_array())
        throw IoError("deleted must be an array");
    for (const auto& v : del) {
        if (!v.is_number_integer())
            throw IoError("deleted entries must be integers");
        sol.deleted.push_back(v.get<int>());
    }
    sol.hom.assign(g_n, -1);
    for (auto [v, a] : read_pairs(need(j, "hom"), "hom")) {
        if (v < 0 || v >= g_n)
            throw IoError("hom vertex out of range");
        sol.hom[v] = a;
    }
    return sol;
}

json arcs_to_json(const ArcRepresentation& rep) {
    return json{{"M", rep.circle_size},
                {"N", rep.north},
                {"S", rep.south},
                {"arcs", pairs_to_json(rep.arcs)}};
}

ArcRepresentation arcs_from_json(const json& j) {
    ArcRepresentation rep;
    rep.circle_size = need_int(j, "M");
    rep.north = need_int(j, "N");
    rep.south = need_int(j, "S");
    rep.arcs = read_pairs(need(j, "arcs"), "arcs");
    return rep;
}

namespace {

json formula_to_json(const ChainFormula& f) {
    json chains = json::array();
    for (const auto& c : f.chains)
        chains.push_back(json{{"vars", c.vars}, {"mult", c.mult}});
    json unary = json::array();
    for (const auto& u : f.unaries)
        unary.push_back(json{{"var", u.var}, {"neg", u.neg}, {"mult", u.mult}});
    return json{{"vars", f.variable_count}, {"chains", chains}, {"unary", unary},
                {"ell", f.ell}};
}

ChainFormula formula_from_json(const json& j) {
    ChainFormula f;
    f.variable_count = need_int(j, "vars");
    f.ell = need_int(j, "ell");
    const json& chains = need(j, "chains");
    if (!chains.is_array())
        throw IoError("chains must be an array");
    for (const auto& c : chains) {
        ChainClause cc;
        const json& vars = need(c, "vars");
        if (!vars.is_array())
            throw IoError("chain vars must be an array");
        for (const auto& v : vars) {
            if (!v.is_number_integer())
                throw IoError("chain vars must be integers");
            cc.vars.push_back(v.get<int>());
        }
        cc.mult = need_int(c, "mult");
        f.chains.push_back(std::move(cc));
    }
    const json& unary = need(j, "unary");
    if (!unary.is_array())
        throw IoError("unary must be an array");
    for (const auto& u : unary) {
        UnaryClause uc;
        uc.var = need_int(u, "var");
        const json& neg = need(u, "neg");
        if (!neg.is_boolean())
            throw IoError("unary neg must be a boolean");
        uc.neg = neg.get<bool>();
        uc.mult = need_int(u, "mult");
        f.unaries.push_back(uc);
    }
    return f;
}

}  // namespace

json cdcs_to_json(const CdcsInstance& inst) {
    json out = formula_to_json(inst.formula);
    out["k"] = inst.k;
    return out;
}

CdcsInstance cdcs_from_json(const json& j) {
    return {formula_from_json(j), need_int(j, "k")};
}

json vdcs_to_json(const VdcsInstance& inst) {
    json out = formula_to_json(inst.formula);
    out["k"] = inst.k;
    out["deletable"] = inst.deletable;
    return out;
}

VdcsInstance vdcs_from_json(const json& j) {
    VdcsInstance inst;
    inst.formula = formula_from_json(j);
    inst.k = need_int(j, "k");
    const json& del = need(j, "deletable");
    if (!del.is_array())
        throw IoError("deletable must be an array");
    for (const auto& d : del) {
        if (!d.is_number_integer())
            throw IoError("deletable entries must be integers");
        inst.deletable.push_back(d.get<int>());
    }
    return inst;
}

json tree_to_json(const SkewDecompTree& t) {
    switch (t.kind) {
    case SkewDecompTree::Kind::Leaf:
        return json{{"kind", "leaf"},
                    {"vertex", t.leaf_vertex},
                    {"side", t.leaf_side == Side::Top ? "T" : "B"}};
    case SkewDecompTree::Kind::Union:
        return json{{"kind", "union"}, {"left", tree_to_json(*t.left)},
                    {"right", tree_to_json(*t.right)}};
    case SkewDecompTree::Kind::SkewSum:
    default:
        return json{{"kind", "skewsum"}, {"left", tree_to_json(*t.left)},
                    {"right", tree_to_json(*t.right)}};
    }
}

GenSpec gen_spec_from_json(const json& j) {
    GenSpec spec;
    spec.n = need_int(j, "n");
    if (j.contains("edge_prob"))
        spec.edge_prob = j.at("edge_prob").get<double>();
    if (j.contains("degree"))
        spec.degree = j.at("degree").get<int>();
    const json& target = need(j, "target");
    std::string kind = need(target, "kind").get<std::string>();
    if (kind == "decomposable") {
        spec.target_kind = TargetKind::Decomposable;
        spec.target_size = need_int(target, "size");
    } else if (kind == "chain") {
        spec.target_kind = TargetKind::Chain;
        spec.ell = need_int(target, "ell");
    } else if (kind == "explicit") {
        spec.target_kind = TargetKind::Explicit;
        spec.explicit_target = target_from_json(need(target, "target"));
    } else {
        throw IoError("target kind must be decomposable, chain or explicit");
    }
    if (j.contains("list_density"))
        spec.list_density = j.at("list_density").get<double>();
    if (j.contains("fsfc_lists"))
        spec.fsfc_lists = j.at("fsfc_lists").get<bool>();
    spec.k = need_int(j, "k");
    spec.seed = static_cast<std::uint64_t>(need(j, "seed").get<long long>());
    return spec;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError("parse error in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace dlhom
