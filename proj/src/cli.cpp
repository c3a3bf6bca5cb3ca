#include "packlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include "packlab/decomposer.hpp"
#include "packlab/errors.hpp"
#include "packlab/graph_io.hpp"
#include "packlab/json_io.hpp"
#include "packlab/recognizer.hpp"
#include "packlab/reduction.hpp"
#include "packlab/solver.hpp"

namespace packlab::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    unsigned k = 1;
    unsigned k1 = 2;
    unsigned k2 = 3;
    std::optional<std::uint64_t> budget;
    std::string format = "json";
    std::string graph_format;  // el | g6; empty = from the output path
    std::string output;
    std::string labels_out;
    std::string witness_out;
    bool matching = false;
    std::size_t gen_n = 10;
    double gen_p = 0.3;
    std::uint64_t seed = 1;
};

std::uint64_t effective_budget(const RunConfig& cfg) {
    if (cfg.budget) {
        if (*cfg.budget == 0) throw InputError("--budget must be positive");
        return *cfg.budget;
    }
    if (const char* env = std::getenv("PACKLAB_BUDGET")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
        throw InputError("PACKLAB_BUDGET must be a positive integer");
    }
    return kDefaultNodeBudget;
}

GraphFormat output_format(const RunConfig& cfg, const std::string& path) {
    if (cfg.graph_format == "g6") return GraphFormat::Graph6;
    if (cfg.graph_format == "el") return GraphFormat::EdgeList;
    return format_from_path(path);
}

Graph load_graph(const std::string& path) { return decode_graph(read_file(path), format_from_path(path)); }

json base_report(const RunConfig& cfg) { return {{"schema_version", kSchemaVersion}, {"command", cfg.command}}; }

void emit(const RunConfig& cfg, const json& report, std::ostream& out) {
    if (cfg.format == "text") {
        for (const auto& [key, value] : report.items()) {
            if (key == "schema_version") continue;
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    } else {
        out << report.dump(2) << '\n';
    }
}

void write_witness(const RunConfig& cfg, const json& witness) {
    if (!cfg.witness_out.empty()) write_file(cfg.witness_out, witness.dump() + "\n");
}

json assignment_json(const Assignment& a) {
    json j = json::array();
    for (bool b : a) j.push_back(b);
    return j;
}

int cmd_pack(const RunConfig& cfg, json& rep) {
    const Graph g = load_graph(cfg.inputs.at(0));
    const auto cert = max_k_packing(g, cfg.k, effective_budget(cfg));
    rep["k"] = cfg.k;
    rep["rho"] = cert.cardinality();
    rep["witness"] = cert.vertices;
    rep["optimal"] = cert.optimal;
    rep["nodes"] = cert.nodes;
    write_witness(cfg, rep["witness"]);
    return kOk;
}

int cmd_match(const RunConfig& cfg, json& rep) {
    const Graph g = load_graph(cfg.inputs.at(0));
    const auto cert = max_k_matching(g, cfg.k, effective_budget(cfg));
    rep["k"] = cfg.k;
    rep["nu"] = cert.cardinality();
    rep["witness"] = edges_to_json(cert.edges);
    rep["optimal"] = cert.optimal;
    rep["nodes"] = cert.nodes;
    write_witness(cfg, rep["witness"]);
    return kOk;
}

void write_graph_output(const RunConfig& cfg, const Graph& g, json& rep) {
    rep["vertex_count"] = g.vertex_count();
    rep["edge_count"] = g.edge_count();
    rep["edges"] = edges_to_json(g.edges());
    if (!cfg.output.empty()) {
        write_file(cfg.output, encode_graph(g, output_format(cfg, cfg.output)));
        rep["output"] = cfg.output;
    }
}

int cmd_power(const RunConfig& cfg, json& rep) {
    const Graph g = load_graph(cfg.inputs.at(0));
    rep["k"] = cfg.k;
    write_graph_output(cfg, graph_power(g, cfg.k), rep);
    return kOk;
}

int cmd_linegraph(const RunConfig& cfg, json& rep) {
    const LineGraph lg = line_graph(load_graph(cfg.inputs.at(0)));
    write_graph_output(cfg, lg.graph, rep);
    rep["edge_map"] = edges_to_json(lg.edge_map);
    return kOk;
}

int cmd_recognize(const RunConfig& cfg, json& rep) {
    const Graph g = load_graph(cfg.inputs.at(0));
    rep["mode"] = cfg.matching ? "matching" : "packing";
    bool equal = false;
    if (cfg.matching) {
        const auto r = recognize_matching_equality(g, cfg.k);
        rep.update(recognition_to_json(r.packing));
        rep["transversal"] = edges_to_json(r.transversal_edges());
        json parts = json::array();
        for (const auto& part : r.partition_edges()) parts.push_back(edges_to_json(part));
        rep["partition_witness"] = parts;
        equal = r.packing.equal;
    } else {
        const auto r = recognize_packing_equality(g, cfg.k);
        rep.update(recognition_to_json(r));
        equal = r.equal;
    }
    write_witness(cfg, rep["transversal"]);
    return equal ? kOk : kPropertyFails;
}

int cmd_gap_check(const RunConfig& cfg, json& rep) {
    const auto r = check_gap_regime(load_graph(cfg.inputs.at(0)), cfg.k1, cfg.k2);
    rep["k1"] = r.k1;
    rep["k2"] = r.k2;
    rep["equal"] = r.equal;
    rep["value"] = r.value ? json(*r.value) : json(nullptr);
    return r.equal ? kOk : kPropertyFails;
}

int cmd_decompose(const RunConfig& cfg, json& rep) {
    const Graph g = load_graph(cfg.inputs.at(0));
    try {
        const auto d = decompose_into_k_units(g, cfg.k);
        rep["decomposable"] = true;
        rep["decomposition"] = decomposition_to_json(d);
        rep["unit_count"] = d.units.size();
        write_witness(cfg, rep["decomposition"]);
        return kOk;
    } catch (const PreconditionError& e) {
        rep["decomposable"] = false;
        rep["violation"] = e.what();
        return kPropertyFails;
    }
}

int cmd_cw_check(const RunConfig& cfg, json& rep) {
    const auto r = recognize_cameron_walker(load_graph(cfg.inputs.at(0)));
    rep["is_cw"] = r.is_cw;
    rep["shape"] = to_string(r.shape);
    rep["v1"] = r.v1;
    rep["v2"] = r.v2;
    json leaves = json::object();
    for (const auto& [v, ls] : r.leaves) leaves[std::to_string(v)] = ls;
    rep["leaves"] = leaves;
    json tris = json::object();
    for (const auto& [v, ts] : r.triangles) {
        json list = json::array();
        for (const auto& t : ts) list.push_back({t.base.u, t.base.v});
        tris[std::to_string(v)] = list;
    }
    rep["triangles"] = tris;
    rep["violation"] = r.is_cw ? json(nullptr) : json(r.violation);
    return r.is_cw ? kOk : kPropertyFails;
}

int cmd_reduce(const RunConfig& cfg, json& rep) {
    const CnfFormula f = parse_dimacs(read_file(cfg.inputs.at(0)));
    const ReductionArtifact r = build_reduction(f, cfg.k1, cfg.k2);
    rep["k1"] = r.k1;
    rep["k2"] = r.k2;
    rep["n"] = r.n();
    rep["m"] = r.m();
    rep["expected_packing"] = r.expected_packing();
    rep["vertex_count"] = r.graph.vertex_count();
    rep["edge_count"] = r.graph.edge_count();
    if (!cfg.output.empty()) {
        write_file(cfg.output, encode_graph(r.graph, output_format(cfg, cfg.output)));
        rep["output"] = cfg.output;
    }
    if (!cfg.labels_out.empty()) {
        write_file(cfg.labels_out, reduction_sidecar(r).dump(2) + "\n");
        rep["labels"] = cfg.labels_out;
    }
    return kOk;
}

int cmd_verify_reduction(const RunConfig& cfg, json& rep) {
    if (cfg.inputs.size() != 3) throw InputError("verify-reduction expects GRAPH LABELS FORMULA");
    const Graph g = load_graph(cfg.inputs[0]);
    json sidecar;
    try {
        sidecar = json::parse(read_file(cfg.inputs[1]));
    } catch (const json::parse_error& e) {
        throw InputError(std::string("labels file is not JSON: ") + e.what());
    }
    const CnfFormula f = parse_dimacs(read_file(cfg.inputs[2]));
    const ReductionArtifact r = load_reduction(g, sidecar, f);
    const std::uint64_t budget = effective_budget(cfg);
    rep["k1"] = r.k1;
    rep["k2"] = r.k2;
    rep["n"] = r.n();
    rep["m"] = r.m();
    try {
        rep["distance_checks"] = validate_reduction_distances(r, budget).checks;
        rep["distances_valid"] = true;
    } catch (const ValidationError& e) {
        rep["distances_valid"] = false;
        rep["distance_violation"] = e.what();
    }
    const VerificationReport v = verify_artifact(r, budget);
    rep["rho_k1"] = v.rho_k1;
    rep["rho_k2"] = v.rho_k2;
    rep["expected"] = v.expected;
    rep["satisfiable"] = v.satisfiable;
    rep["biconditional_holds"] = v.biconditional_holds;
    rep["k2_certificate"] = v.k2_certificate;
    rep["sat_assignment"] = v.sat_assignment ? assignment_json(*v.sat_assignment) : json(nullptr);
    rep["assignment_packing"] = v.assignment_packing ? json(*v.assignment_packing) : json(nullptr);
    rep["extracted_assignment"] = v.extracted_assignment ? assignment_json(*v.extracted_assignment) : json(nullptr);
    write_witness(cfg, rep["k2_certificate"]);
    return v.biconditional_holds && rep["distances_valid"].get<bool>() ? kOk : kPropertyFails;
}

int cmd_gen(const RunConfig& cfg, json& rep) {
    const Graph g = random_graph(cfg.gen_n, cfg.gen_p, cfg.seed);
    rep["n"] = cfg.gen_n;
    rep["p"] = cfg.gen_p;
    rep["seed"] = cfg.seed;
    write_graph_output(cfg, g, rep);
    return kOk;
}

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const ParameterError*>(&e)) return "ParameterError";
    if (dynamic_cast<const PreconditionError*>(&e)) return "PreconditionError";
    if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
    if (dynamic_cast<const ExtractionError*>(&e)) return "ExtractionError";
    if (dynamic_cast<const BudgetError*>(&e)) return "BudgetError";
    return "InputError";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Distance packing and matching toolkit", "packlab"};
    app.require_subcommand(1);

    using Handler = std::function<int(const RunConfig&, json&)>;
    std::vector<std::pair<CLI::App*, Handler>> commands;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--budget", cfg.budget, "Search-node budget (overrides PACKLAB_BUDGET)");
        sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--witness-out", cfg.witness_out, "Also write the witness to this file");
    };
    auto graph_cmd = [&](const std::string& name, const std::string& help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub);
        sub->add_option("graph", cfg.inputs, "Graph file (.el edge list or .g6)")->required()->expected(1);
        commands.emplace_back(sub, std::move(h));
        return sub;
    };
    auto with_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", cfg.output, "Write the graph to this file");
        sub->add_option("--graph-format", cfg.graph_format, "Output graph format")->check(CLI::IsMember({"el", "g6"}));
    };

    graph_cmd("pack", "Maximum k-packing (rho_k)", cmd_pack)->add_option("-k", cfg.k, "Packing distance")->check(CLI::PositiveNumber);
    graph_cmd("match", "Maximum k-matching (nu_k)", cmd_match)->add_option("-k", cfg.k, "Matching distance")->check(CLI::PositiveNumber);
    auto* power = graph_cmd("power", "Graph power G^k", cmd_power);
    power->add_option("-k", cfg.k, "Exponent")->check(CLI::PositiveNumber);
    with_output(power);
    with_output(graph_cmd("linegraph", "Line graph L(G)", cmd_linegraph));
    auto* recognize = graph_cmd("recognize", "Test rho_k = rho_2k (or nu_k = nu_2k)", cmd_recognize);
    recognize->add_option("-k", cfg.k, "Distance k")->check(CLI::PositiveNumber);
    recognize->add_flag("--matching", cfg.matching, "Test nu_k = nu_2k instead");
    auto* gap = graph_cmd("gap-check", "Test rho_k1 = rho_k2 for k2 > 2 k1", cmd_gap_check);
    gap->add_option("--k1", cfg.k1)->required()->check(CLI::PositiveNumber);
    gap->add_option("--k2", cfg.k2)->required()->check(CLI::PositiveNumber);
    graph_cmd("decompose", "Split a graph with nu_k = nu_2k into k-units", cmd_decompose)
        ->add_option("-k", cfg.k, "Distance k")
        ->check(CLI::PositiveNumber);
    graph_cmd("cw-check", "Test nu_1 = nu_2 structurally", cmd_cw_check);

    CLI::App* reduce = app.add_subcommand("reduce", "Build the 3SAT reduction graph");
    common(reduce);
    reduce->add_option("formula", cfg.inputs, "DIMACS CNF file")->required()->expected(1);
    reduce->add_option("--k1", cfg.k1)->check(CLI::PositiveNumber);
    reduce->add_option("--k2", cfg.k2)->check(CLI::PositiveNumber);
    reduce->add_option("--labels", cfg.labels_out, "Write the JSON label sidecar here");
    with_output(reduce);
    commands.emplace_back(reduce, cmd_reduce);

    CLI::App* verify = app.add_subcommand("verify-reduction", "Check a reduction instance against its formula");
    common(verify);
    verify->add_option("files", cfg.inputs, "GRAPH LABELS FORMULA")->required()->expected(3);
    commands.emplace_back(verify, cmd_verify_reduction);

    CLI::App* gen = app.add_subcommand("gen", "Generate a G(n, p) random graph");
    common(gen);
    gen->add_option("-n", cfg.gen_n, "Vertex count");
    gen->add_option("-p", cfg.gen_p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", cfg.seed, "Random seed");
    with_output(gen);
    commands.emplace_back(gen, cmd_gen);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kInputError;
    }

    for (auto& [sub, handler] : commands) {
        if (!sub->parsed()) continue;
        cfg.command = sub->get_name();
        json report = base_report(cfg);
        try {
            const int code = handler(cfg, report);
            emit(cfg, report, out);
            return code;
        } catch (const BudgetError& e) {
            report["error"] = {{"kind", "BudgetError"}, {"message", e.what()}, {"best_lower_bound", e.best_lower_bound()}};
            emit(cfg, report, out);
            err << "error: " << e.what() << '\n';
            return kBudgetExceeded;
        } catch (const Error& e) {
            const std::string kind = error_kind(e);
            report["error"] = {{"kind", kind}, {"message", e.what()}};
            emit(cfg, report, out);
            err << "error: " << e.what() << '\n';
            return (kind == "ValidationError" || kind == "ExtractionError") ? kPropertyFails : kInputError;
        }
    }
    return kInputError;
}

}  // namespace packlab::cli
