#include "lhc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "lhc/bounds.hpp"
#include "lhc/conjectures.hpp"
#include "lhc/derived.hpp"
#include "lhc/dimacs.hpp"
#include "lhc/json_io.hpp"

namespace lhc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;

Hypergraph load_instance(const std::string& path, std::istream& in) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(path);
        if (!file) throw std::invalid_argument("cannot open input file: " + path);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    return parse_hypergraph(text);
}

ordered_json coloring_to_json(const EdgeColoring& coloring) {
    ordered_json doc = ordered_json::object();
    for (std::size_t e = 0; e < coloring.colors.size(); ++e) {
        if (coloring.colors[e] >= 0) doc[std::to_string(e)] = coloring.colors[e];
    }
    return doc;
}

ordered_json lists_to_json(const ListAssignment& lists) {
    ordered_json doc = ordered_json::object();
    for (std::size_t e = 0; e < lists.lists.size(); ++e) {
        doc[std::to_string(e)] = lists.lists[e];
    }
    return doc;
}

ListAssignment lists_from_json(const std::string& text, int m) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed list JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("lists must be a JSON object");
    ListAssignment lists;
    lists.lists.assign(m, {});
    for (const auto& [key, value] : doc.items()) {
        const int e = std::stoi(key);
        if (e < 0 || e >= m) throw std::invalid_argument("list for unknown edge " + key);
        if (!value.is_array()) throw std::invalid_argument("list for edge " + key +
                                                           " is not an array");
        lists.lists[e] = value.get<std::vector<int>>();
        std::sort(lists.lists[e].begin(), lists.lists[e].end());
    }
    for (int e = 0; e < m; ++e) {
        if (lists.lists[e].empty()) {
            throw std::invalid_argument("edge " + std::to_string(e) + " has no list");
        }
    }
    return lists;
}

const char* choosability_name(Choosability s) {
    switch (s) {
        case Choosability::choosable: return "choosable";
        case Choosability::not_choosable: return "not_choosable";
        case Choosability::inconclusive: return "inconclusive";
    }
    return "?";
}

ordered_json choosability_to_json(const ChoosabilityVerdict& verdict) {
    ordered_json doc;
    doc["status"] = choosability_name(verdict.status);
    doc["assignments_examined"] = verdict.assignments_examined;
    doc["limit_hit"] = verdict.limit_hit;
    if (verdict.witness) doc["witness"] = lists_to_json(*verdict.witness);
    return doc;
}

const char* condition_status_name(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::holds: return "holds";
        case ConditionStatus::fails: return "fails";
        case ConditionStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

ordered_json condition_to_json(const ConditionReport& report) {
    ordered_json doc;
    doc["id"] = report.id;
    doc["status"] = condition_status_name(report.status);
    doc["detail"] = report.detail;
    return doc;
}

ordered_json rational_or_null(const std::optional<Rational>& r) {
    if (!r) return nullptr;
    return rational_to_string(*r);
}

ordered_json diagnostics_to_json(const UniformSparsityDiagnostics& d) {
    ordered_json doc;
    doc["rank"] = d.rank;
    doc["max_degree"] = d.max_degree;
    doc["clique_degree_bound"] = d.clique_degree_bound;
    doc["line_degree_bound"] = rational_to_string(d.line_degree_bound);
    doc["degree_bound"] = rational_to_string(d.degree_bound);
    doc["degree_bound_from_line"] = rational_to_string(d.degree_bound_from_line);
    doc["clique_bound_le_line_bound"] = d.clique_bound_le_line_bound;
    doc["sparsity_f"] = rational_or_null(d.sparsity_f);
    doc["triangle_bound"] = rational_or_null(d.triangle_bound);
    doc["t1_bound"] = rational_to_string(d.t1_bound);
    doc["t1_bound_clamped"] = d.t1_bound_clamped;
    doc["t2_bound"] = rational_to_string(d.t2_bound);
    doc["constant_C"] = rational_to_string(d.constant_C);
    doc["hypothesis_holds"] = d.hypothesis_holds;
    doc["measured_max_line_degree"] = d.measured_max_line_degree;
    doc["measured_max_t1"] = d.measured_max_t1;
    doc["measured_max_t2"] = d.measured_max_t2;
    doc["measured_max_t"] = d.measured_max_t;
    doc["line_degrees_within_bound"] = d.line_degrees_within_bound;
    doc["degrees_within_bound"] = d.degrees_within_bound;
    doc["t1_within_bound"] = d.t1_within_bound;
    doc["t2_within_bound"] = d.t2_within_bound;
    doc["t_within_bound"] = d.t_within_bound;
    return doc;
}

ordered_json verdict_to_json(const ConjectureVerdict& verdict) {
    ordered_json doc;
    doc["conjecture"] = conjecture_name(verdict.which);
    doc["bound"] = verdict.bound;
    doc["q_lower"] = verdict.q_lower;
    doc["q_upper"] = verdict.q_upper;
    if (verdict.q_exact) doc["q_exact"] = *verdict.q_exact;
    if (verdict.choosability) doc["choosability"] = choosability_to_json(*verdict.choosability);
    doc["status"] = verdict_status_name(verdict.status);
    if (!verdict.witness.empty()) doc["witness"] = verdict.witness;
    if (!verdict.witness_clique.empty()) doc["witness_clique"] = verdict.witness_clique;
    if (verdict.witness_lists) doc["witness_lists"] = lists_to_json(*verdict.witness_lists);
    return doc;
}

ordered_json criticality_to_json(const CriticalityReport& report) {
    ordered_json doc;
    doc["maxD"] = report.maxD;
    doc["removal_preserves_maxD"] = report.removal_preserves_maxD;
    if (report.removal_violating_edge >= 0) {
        doc["removal_violating_edge"] = report.removal_violating_edge;
    }
    doc["clique_rank_ge_maxD"] = report.clique_rank_ge_maxD;
    if (report.clique_rank_violating_edge >= 0) {
        doc["clique_rank_violating_edge"] = report.clique_rank_violating_edge;
    }
    doc["exceeds_bound"] = clause_status_name(report.exceeds_bound);
    doc["deletion_tight"] = clause_status_name(report.deletion_tight);
    if (report.deletion_refuting_edge >= 0) {
        doc["deletion_refuting_edge"] = report.deletion_refuting_edge;
    }
    doc["small_rank_extension_verified"] = report.small_rank_extension_verified;
    doc["evidence"] = report.evidence;
    return doc;
}

struct GenerateOptions {
    std::string kind;
    int param = -1;
    int n = 6;
    int edges = 6;
    int rank_min = 2;
    int rank_max = 3;
    std::uint64_t seed = 1;
};

int run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
    Hypergraph h;
    if (opt.kind == "fano") {
        h = projective_plane(2);
    } else if (opt.kind == "pg" || opt.kind == "projective_plane") {
        if (opt.param < 0) throw std::invalid_argument("pg needs an order, e.g. `generate pg 3`");
        h = projective_plane(opt.param);
    } else if (opt.kind == "kn" || opt.kind == "complete_graph") {
        if (opt.param < 0) throw std::invalid_argument("kn needs a vertex count");
        h = complete_graph_hypergraph(opt.param);
    } else if (opt.kind == "pencil" || opt.kind == "near_pencil") {
        if (opt.param < 0) throw std::invalid_argument("pencil needs a vertex count");
        h = near_pencil(opt.param);
    } else if (opt.kind == "steiner" || opt.kind == "steiner_triple") {
        if (opt.param < 0) throw std::invalid_argument("steiner needs a vertex count");
        h = steiner_triple(opt.param);
    } else if (opt.kind == "random" || opt.kind == "random_linear") {
        const RandomLinearResult r =
            random_linear(opt.n, opt.edges, opt.rank_min, opt.rank_max, opt.seed);
        err << "seed=" << opt.seed << " rng=" << kRandomSourceId << " m="
            << r.hypergraph.edge_count() << (r.truncated ? " (truncated)" : "") << '\n';
        h = r.hypergraph;
    } else {
        throw std::invalid_argument("unknown generator kind: " + opt.kind);
    }
    out << serialize(h) << '\n';
    return kExitOk;
}

int run_analyze(const std::string& path, bool with_bounds, const std::string& c_text,
                const std::string& format, std::istream& in, std::ostream& out) {
    const Hypergraph h = load_instance(path, in);
    const AnalysisReport stats = analyze(h);
    if (format == "csv") {
        out << "n,m,delta,Delta,rho,P,maxD,maxR,linear,uniform,regular\n"
            << stats.n << ',' << stats.m << ',' << stats.delta << ',' << stats.Delta << ','
            << stats.rho << ',' << stats.P << ',' << stats.maxD << ',' << stats.maxR << ','
            << (stats.linear ? 1 : 0) << ',' << (stats.uniform ? 1 : 0) << ','
            << (stats.regular ? 1 : 0) << '\n';
        return kExitOk;
    }
    ordered_json doc = analysis_to_json(stats);
    if (with_bounds) {
        const Rational C = parse_rational(c_text);
        ordered_json conditions = ordered_json::array();
        const auto push = [&conditions](auto&& make) {
            try {
                conditions.push_back(condition_to_json(make()));
            } catch (const std::exception& e) {
                ordered_json failed;
                failed["status"] = "error";
                failed["detail"] = e.what();
                conditions.push_back(std::move(failed));
            }
        };
        push([&] { return dense_case_condition(h); });
        push([&] { return high_degree_uniform_condition(h, C); });
        push([&] { return extension_margin_condition(h); });
        push([&] { return clique_degree_extension_condition(h); });
        push([&] { return deficit_excess_extension_condition(h); });
        doc["conditions"] = std::move(conditions);
        try {
            doc["sparsity_diagnostics"] = diagnostics_to_json(
                uniform_sparsity_diagnostics(uniformize(h), C));
        } catch (const std::exception& e) {
            doc["sparsity_diagnostics"] = nullptr;
            doc["sparsity_diagnostics_note"] = e.what();
        }
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
}

struct ColorOptions {
    std::string path;
    bool exact = false;
    int colors = 0;  // 0: default to maxR + 1
    std::string order = "input";
    std::uint64_t seed = 1;
    std::string lists_path;
    SearchBudget budget;
};

int run_color(const ColorOptions& opt, std::istream& in, std::ostream& out) {
    const Hypergraph h = load_instance(opt.path, in);
    if (opt.exact) {
        const ChromaticIndexResult result = chromatic_index_exact(h, opt.budget);
        ordered_json doc;
        if (result.exact) {
            doc["q"] = result.upper;
        }
        doc["exact"] = result.exact;
        doc["lower"] = result.lower;
        doc["upper"] = result.upper;
        doc["nodes"] = result.nodes;
        doc["coloring"] = coloring_to_json(result.coloring);
        out << doc.dump(2) << '\n';
        return result.exact ? kExitOk : kExitBudget;
    }

    std::vector<int> order;
    if (opt.order == "input") {
        order = input_order(h.edge_count());
    } else if (opt.order == "maxr") {
        order = decreasing_clique_rank_order(h);
    } else if (opt.order == "random") {
        order = shuffled_order(h.edge_count(), opt.seed);
    } else {
        throw std::invalid_argument("unknown order: " + opt.order);
    }

    GreedyResult result;
    if (!opt.lists_path.empty()) {
        std::ifstream file(opt.lists_path);
        if (!file) throw std::invalid_argument("cannot open lists file: " + opt.lists_path);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        result = greedy_list_color(h, lists_from_json(buffer.str(), h.edge_count()), order);
    } else {
        const int k = opt.colors > 0 ? opt.colors : max_clique_rank(h) + 1;
        result = greedy_color(h, k, order);
    }
    ordered_json doc;
    doc["success"] = result.success;
    if (result.success) {
        std::set<int> used(result.coloring.colors.begin(), result.coloring.colors.end());
        doc["colors_used"] = used.size();
    } else {
        doc["stuck_edge"] = result.stuck_edge;
        doc["stuck_list"] = result.stuck_list;
    }
    doc["coloring"] = coloring_to_json(result.coloring);
    out << doc.dump(2) << '\n';
    return kExitOk;
}

int run_choosability(const std::string& path, int k, const SearchBudget& budget,
                     std::istream& in, std::ostream& out) {
    const Hypergraph h = load_instance(path, in);
    const ChoosabilityVerdict verdict = is_k_choosable(h, k, budget);
    ordered_json doc = choosability_to_json(verdict);
    doc["k"] = k;
    out << doc.dump(2) << '\n';
    return verdict.status == Choosability::inconclusive ? kExitBudget : kExitOk;
}

int run_check(const std::string& path, const std::string& which, const SearchBudget& budget,
              std::istream& in, std::ostream& out) {
    const Hypergraph h = load_instance(path, in);
    std::vector<Conjecture> selected;
    if (which == "all") {
        selected = {Conjecture::EFL, Conjecture::C1, Conjecture::C2, Conjecture::C3};
        bool graph = h.edge_count() > 0;
        for (int e = 0; e < h.edge_count(); ++e) graph = graph && h.rank(e) == 2;
        if (graph) selected.push_back(Conjecture::C4);
    } else {
        std::stringstream names(which);
        std::string name;
        while (std::getline(names, name, ',')) selected.push_back(conjecture_from_name(name));
    }
    ordered_json doc = ordered_json::array();
    bool violated = false, undecided = false;
    for (Conjecture c : selected) {
        const ConjectureVerdict verdict = check_conjecture(h, c, budget);
        violated = violated || verdict.status == VerdictStatus::violated;
        undecided = undecided || verdict.status == VerdictStatus::undecided;
        doc.push_back(verdict_to_json(verdict));
    }
    out << doc.dump(2) << '\n';
    if (violated) return kExitViolation;
    if (undecided) return kExitBudget;
    return kExitOk;
}

int run_critical(const std::string& path, const SearchBudget& budget, std::istream& in,
                 std::ostream& out) {
    const Hypergraph h = load_instance(path, in);
    out << criticality_to_json(critical_check(h, budget)).dump(2) << '\n';
    return kExitOk;
}

struct SweepOptions {
    std::string kind = "random_linear";
    int count = 10;
    int n = 0;
    int n_max = 8;
    int m_target = 10;
    int rank_min = 2;
    int rank_max = 3;
    std::uint64_t seed = 1;
    std::vector<int> values;
    std::string format = "csv";
    SearchBudget budget;
};

int run_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<GenSpec> specs;
    if (opt.kind == "random" || opt.kind == "random_linear") {
        std::mt19937_64 meta(opt.seed);
        for (int i = 0; i < opt.count; ++i) {
            GenSpec spec;
            spec.kind = GenKind::random_linear;
            spec.seed = opt.seed + static_cast<std::uint64_t>(i);
            spec.rank_min = opt.rank_min;
            spec.rank_max = opt.rank_max;
            spec.m_target = opt.m_target;
            if (opt.n > 0) {
                spec.n = opt.n;
            } else {
                const int lo = std::max(2, opt.rank_max);
                if (opt.n_max < lo) throw std::invalid_argument("--n-max below rank-max");
                spec.n = lo + static_cast<int>(meta() %
                                               static_cast<std::uint64_t>(opt.n_max - lo + 1));
            }
            specs.push_back(spec);
        }
    } else {
        if (opt.values.empty()) {
            throw std::invalid_argument("--values is required for kind " + opt.kind);
        }
        for (int value : opt.values) {
            GenSpec spec;
            if (opt.kind == "pg" || opt.kind == "projective_plane") {
                spec.kind = GenKind::projective_plane;
                spec.q = value;
            } else if (opt.kind == "kn" || opt.kind == "complete_graph") {
                spec.kind = GenKind::complete_graph;
                spec.n = value;
            } else if (opt.kind == "pencil" || opt.kind == "near_pencil") {
                spec.kind = GenKind::near_pencil;
                spec.n = value;
            } else if (opt.kind == "steiner" || opt.kind == "steiner_triple") {
                spec.kind = GenKind::steiner_triple;
                spec.n = value;
            } else {
                throw std::invalid_argument("unknown sweep kind: " + opt.kind);
            }
            specs.push_back(spec);
        }
    }

    const SweepResult result = sweep(specs, opt.budget);
    if (opt.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const SweepRow& row : result.rows) {
            ordered_json doc;
            doc["instance_id"] = row.instance_id;
            doc["kind"] = row.kind;
            doc["seed"] = row.seed;
            doc["stats"] = analysis_to_json(row.stats);
            if (row.q_exact) doc["q_exact"] = *row.q_exact;
            doc["q_lower"] = row.q_lower;
            doc["q_upper"] = row.q_upper;
            doc["bound_efl"] = row.bound_efl;
            doc["bound_c2"] = row.bound_c2;
            doc["bound_c3"] = row.bound_c3;
            doc["verdict_c1"] = row.verdict_c1;
            doc["verdict_c2"] = row.verdict_c2;
            doc["verdict_c3"] = row.verdict_c3;
            doc["notes"] = row.notes;
            if (!row.error.empty()) doc["error"] = row.error;
            rows.push_back(std::move(doc));
        }
        out << rows.dump(2) << '\n';
    } else {
        out << kSweepCsvHeader << '\n';
        for (const SweepRow& row : result.rows) out << sweep_row_to_csv(row) << '\n';
    }
    if (result.violation_found) {
        ordered_json witness;
        witness["conjecture"] = result.violating_conjecture;
        witness["instance_id"] = result.violating_instance;
        witness["detail"] = result.witness_detail;
        if (result.witness_instance) {
            witness["instance"] = hypergraph_to_json(*result.witness_instance);
        }
        err << witness.dump(2) << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

int run_export(const std::string& path, std::istream& in, std::ostream& out) {
    out << export_dimacs(load_instance(path, in));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"linear hypergraph edge-coloring toolkit"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "emit a canonical instance as JSON");
    generate->add_option("kind", gen.kind,
                         "fano | pg | kn | pencil | steiner | random")->required();
    generate->add_option("param", gen.param, "order (pg) or vertex count (kn/pencil/steiner)");
    generate->add_option("--n", gen.n, "vertex count (random)");
    generate->add_option("--edges", gen.edges, "target edge count (random)");
    generate->add_option("--rank-min", gen.rank_min, "minimum rank (random)");
    generate->add_option("--rank-max", gen.rank_max, "maximum rank (random)");
    generate->add_option("--seed", gen.seed, "random seed (random)");

    std::string analyze_path, analyze_c = "3", analyze_format = "json";
    bool analyze_bounds = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "instance statistics");
    analyze_cmd->add_option("file", analyze_path, "instance path (default: stdin)");
    analyze_cmd->add_flag("--bounds", analyze_bounds,
                          "include condition checkers and sparsity diagnostics");
    analyze_cmd->add_option("--C", analyze_c, "constant C for the conditional bound (rational)");
    analyze_cmd->add_option("--format", analyze_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    ColorOptions color;
    auto* color_cmd = app.add_subcommand("color", "edge coloring (exact or greedy)");
    color_cmd->add_option("file", color.path, "instance path (default: stdin)");
    color_cmd->add_flag("--exact", color.exact, "exact chromatic index by branch and bound");
    color_cmd->add_option("--colors", color.colors, "greedy palette size (default: maxR + 1)");
    color_cmd->add_option("--order", color.order, "greedy order: input | maxr | random");
    color_cmd->add_option("--seed", color.seed, "seed for --order random");
    color_cmd->add_option("--lists", color.lists_path, "JSON list assignment for greedy");
    color_cmd->add_option("--limit-nodes", color.budget.max_nodes, "search node limit");
    color_cmd->add_option("--limit-ms", color.budget.max_time_ms, "search time limit (ms)");

    std::string choose_path;
    int choose_k = 0;
    SearchBudget choose_budget;
    auto* choose_cmd = app.add_subcommand("choosability", "decide k-list edge colorability");
    choose_cmd->add_option("file", choose_path, "instance path (default: stdin)");
    choose_cmd->add_option("--k", choose_k, "list size")->required();
    choose_cmd->add_option("--limit-assignments", choose_budget.max_assignments,
                           "assignment limit");
    choose_cmd->add_option("--limit-ms", choose_budget.max_time_ms, "time limit (ms)");

    std::string check_path, check_which = "all";
    SearchBudget check_budget;
    auto* check_cmd = app.add_subcommand("check", "conjecture consistency on one instance");
    check_cmd->add_option("file", check_path, "instance path (default: stdin)");
    check_cmd->add_option("--conjecture", check_which, "efl,c1,c2,c3,c4 or all");
    check_cmd->add_option("--limit-nodes", check_budget.max_nodes, "search node limit");
    check_cmd->add_option("--limit-ms", check_budget.max_time_ms, "time limit (ms)");

    std::string critical_path;
    SearchBudget critical_budget;
    auto* critical_cmd = app.add_subcommand("critical", "minimal-counterexample conditions");
    critical_cmd->add_option("file", critical_path, "instance path (default: stdin)");
    critical_cmd->add_option("--limit-nodes", critical_budget.max_nodes, "search node limit");
    critical_cmd->add_option("--limit-ms", critical_budget.max_time_ms, "time limit (ms)");

    SweepOptions sweep_opt;
    auto* sweep_cmd = app.add_subcommand("sweep", "conjecture sweep over generated instances");
    sweep_cmd->add_option("--kind", sweep_opt.kind, "random | pg | kn | pencil | steiner");
    sweep_cmd->add_option("--count", sweep_opt.count, "instance count (random)");
    sweep_cmd->add_option("--n", sweep_opt.n, "fixed vertex count (random)");
    sweep_cmd->add_option("--n-max", sweep_opt.n_max, "vary vertex count up to this (random)");
    sweep_cmd->add_option("--m-target", sweep_opt.m_target, "target edge count (random)");
    sweep_cmd->add_option("--rank-min", sweep_opt.rank_min, "minimum rank (random)");
    sweep_cmd->add_option("--rank-max", sweep_opt.rank_max, "maximum rank (random)");
    sweep_cmd->add_option("--seed", sweep_opt.seed, "base seed");
    sweep_cmd->add_option("--values", sweep_opt.values, "parameters for pg/kn/pencil/steiner");
    sweep_cmd->add_option("--format", sweep_opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--limit-nodes", sweep_opt.budget.max_nodes, "per-instance node limit");
    sweep_cmd->add_option("--limit-ms", sweep_opt.budget.max_time_ms,
                          "per-instance time limit (ms)");

    std::string export_path;
    auto* export_cmd = app.add_subcommand("export", "line graph as DIMACS .col");
    export_cmd->add_option("file", export_path, "instance path (default: stdin)");

    std::vector<const char*> argv;
    argv.push_back("lhc");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (generate->parsed()) return run_generate(gen, out, err);
        if (analyze_cmd->parsed()) {
            return run_analyze(analyze_path, analyze_bounds, analyze_c, analyze_format, in, out);
        }
        if (color_cmd->parsed()) return run_color(color, in, out);
        if (choose_cmd->parsed()) {
            return run_choosability(choose_path, choose_k, choose_budget, in, out);
        }
        if (check_cmd->parsed()) return run_check(check_path, check_which, check_budget, in, out);
        if (critical_cmd->parsed()) return run_critical(critical_path, critical_budget, in, out);
        if (sweep_cmd->parsed()) return run_sweep(sweep_opt, out, err);
        if (export_cmd->parsed()) return run_export(export_path, in, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

}  // namespace lhc
