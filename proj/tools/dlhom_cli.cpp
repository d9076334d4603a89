#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dlhom/chain_sat.hpp"
#include "dlhom/encoders.hpp"
#include "dlhom/fsfc.hpp"
#include "dlhom/generator.hpp"
#include "dlhom/json_io.hpp"
#include "dlhom/lhom.hpp"
#include "dlhom/pipeline.hpp"
#include "dlhom/target_structure.hpp"

// exit codes: 0 = YES, 1 = NO, 2 = input error, 3 = internal assertion failure
namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_input_error = 2;
constexpr int exit_internal = 3;

using namespace dlhom;
using nlohmann::json;

int run_solve(const std::string& path, const std::string& method,
              const std::string& witness_out) {
    DlhomInstance inst = instance_from_json(load_json_file(path));
    auto report = validate_instance(inst);
    if (!report.ok()) {
        for (const auto& v : report.violations)
            std::cerr << "invalid instance: " << v << "\n";
        return exit_input_error;
    }

    std::optional<DeletionSolution> sol;
    if (method == "oracle") {
        sol = solve_exact_oracle(inst);
    } else if (method == "pipeline") {
        sol = solve_dlhom(inst);
    } else if (method == "fsfc") {
        auto tree = skew_decompose(inst.h);
        if (!tree) {
            std::cerr << "fsfc method requires a skew decomposable target\n";
            return exit_input_error;
        }
        FsfcInstance fi{inst, std::move(*tree)};
        auto bad = fsfc_violations(fi);
        if (!bad.empty()) {
            std::cerr << "not a fixed-side fixed-component instance: " << bad[0] << "\n";
            return exit_input_error;
        }
        sol = solve_fsfc_pipeline(fi);
    } else {
        std::cerr << "unknown method " << method << "\n";
        return exit_input_error;
    }

    if (!sol) {
        std::cout << "NO\n";
        return exit_no;
    }
    auto check = verify_solution(inst, *sol);
    if (!check.ok) {
        std::cerr << "internal error: solver returned an invalid witness: "
                  << check.first_violation << "\n";
        return exit_internal;
    }
    std::cout << "YES deleted=" << sol->deleted.size() << "\n";
    if (!witness_out.empty())
        save_json_file(witness_out, solution_to_json(*sol));
    return exit_yes;
}

int run_check_target(const std::string& path, const std::string& tree_out) {
    BipartiteTarget h = target_from_json(load_json_file(path));
    DlhomInstance probe{UndirectedGraph(0, {}), h, ListAssignment{}, 0};
    auto report = validate_instance(probe);
    json out;
    out["bipartite"] = report.ok();
    if (!report.ok()) {
        out["decomposable"] = false;
        std::cout << out.dump(2) << "\n";
        return exit_no;
    }
    auto forbidden = check_forbidden(h);
    if (forbidden.witness) {
        json w;
        w["kind"] = forbidden.witness->kind == ForbiddenWitness::Kind::P6 ? "P6" : "C6";
        w["vertices"] = forbidden.witness->vertices;
        out["witness"] = w;
    }
    auto tree = skew_decompose(h);
    out["decomposable"] = tree.has_value();
    if (tree)
        out["tree"] = tree_to_json(*tree);
    std::cout << out.dump(2) << "\n";
    if (!tree_out.empty())
        save_json_file(tree_out, out);
    return tree ? exit_yes : exit_no;
}

int run_reduce(const std::string& kind, const std::string& in_path,
               const std::string& out_path) {
    json in = load_json_file(in_path);
    if (kind == "vdcs-to-cdcs") {
        save_json_file(out_path, cdcs_to_json(reduce_vdcs_to_cdcs(vdcs_from_json(in))));
    } else if (kind == "cdcs-to-vdcs") {
        save_json_file(out_path, vdcs_to_json(reduce_cdcs_to_vdcs(cdcs_from_json(in))));
    } else if (kind == "vdcs-to-fsfc") {
        auto r = reduce_vdcs_to_fsfc(vdcs_from_json(in));
        json out = instance_to_json(r.instance);
        out["arc_representation"] = arcs_to_json(r.target.rep);
        save_json_file(out_path, out);
    } else if (kind == "fs-to-vdcs") {
        DlhomInstance inst = instance_from_json(need_field(in, "instance"));
        ArcRepresentation rep = arcs_from_json(need_field(in, "rep"));
        auto r = reduce_fs_to_vdcs(inst.g, inst.l, inst.h, rep, inst.k);
        save_json_file(out_path, vdcs_to_json(r.instance));
    } else if (kind == "vc" || kind == "oct" || kind == "multiway") {
        UndirectedGraph g = graph_from_json(need_field(in, "graph"));
        int k = in.at("k").get<int>();
        EncodedProblem p;
        if (kind == "vc") {
            p = encode_vertex_cover(g, k);
        } else if (kind == "oct") {
            p = encode_oct(g, k);
        } else {
            std::vector<int> terminals;
            for (const auto& t : need_field(in, "terminals"))
                terminals.push_back(t.get<int>());
            p = encode_multiway_cut(g, terminals, k);
        }
        save_json_file(out_path, instance_to_json(p.instance));
    } else {
        std::cerr << "unknown reduction kind " << kind << "\n";
        return exit_input_error;
    }
    return exit_yes;
}

const json& need_field(const json& j, const char* key);

int run_gen(const std::string& spec_path, const std::string& out_path) {
    GenSpec spec = gen_spec_from_json(load_json_file(spec_path));
    if (const char* env = std::getenv("DLHOM_SEED"))
        spec.seed = std::strtoull(env, nullptr, 10);
    DlhomInstance inst = gen_random(spec);
    save_json_file(out_path, instance_to_json(inst));
    return exit_yes;
}

int run_verify(const std::string& inst_path, const std::string& witness_path) {
    DlhomInstance inst = instance_from_json(load_json_file(inst_path));
    auto report = validate_instance(inst);
    if (!report.ok()) {
        std::cerr << "invalid instance: " << report.violations[0] << "\n";
        return exit_input_error;
    }
    DeletionSolution sol = solution_from_json(load_json_file(witness_path), inst.g.n);
    auto check = verify_solution(inst, sol);
    if (check.ok) {
        std::cout << "VALID\n";
        return exit_yes;
    }
    std::cout << "INVALID: " << check.first_violation << "\n";
    return exit_no;
}

}  // namespace

namespace {
const json& need_field(const json& j, const char* key) {
    if (!j.contains(key))
        throw IoError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}
}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deletion list-homomorphism toolkit"};
    app.require_subcommand(1);

    std::string instance_path, method = "pipeline", witness_out;
    auto* solve = app.add_subcommand("solve", "decide a deletion instance");
    solve->add_option("instance", instance_path, "instance JSON")->required();
    solve->add_option("--method", method, "oracle|pipeline|fsfc")
        ->check(CLI::IsMember({"oracle", "pipeline", "fsfc"}));
    solve->add_option("--emit-witness", witness_out, "write the witness JSON here");

    std::string target_path, tree_out;
    auto* check = app.add_subcommand("check-target", "analyse a target graph");
    check->add_option("target", target_path, "target JSON")->required();
    check->add_option("--emit-tree", tree_out, "write the analysis JSON here");

    std::string reduce_kind, reduce_in, reduce_out;
    auto* reduce = app.add_subcommand("reduce", "run one of the reductions");
    reduce->add_option("kind", reduce_kind,
                       "vdcs-to-cdcs|cdcs-to-vdcs|vdcs-to-fsfc|fs-to-vdcs|vc|oct|multiway")
        ->required();
    reduce->add_option("input", reduce_in, "input JSON")->required();
    reduce->add_option("output", reduce_out, "output JSON")->required();

    std::string gen_spec, gen_out;
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("spec", gen_spec, "generator spec JSON")->required();
    gen->add_option("output", gen_out, "output JSON")->required();

    std::string verify_inst, verify_witness;
    auto* verify = app.add_subcommand("verify", "verify a witness against an instance");
    verify->add_option("instance", verify_inst, "instance JSON")->required();
    verify->add_option("witness", verify_witness, "witness JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return run_solve(instance_path, method, witness_out);
        if (check->parsed())
            return run_check_target(target_path, tree_out);
        if (reduce->parsed())
            return run_reduce(reduce_kind, reduce_in, reduce_out);
        if (gen->parsed())
            return run_gen(gen_spec, gen_out);
        if (verify->parsed())
            return run_verify(verify_inst, verify_witness);
    } catch (const IoError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const GenerationError& e) {
        std::cerr << "generation error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_input_error;
}
