// Command-line front end: solving the residual matching problems, running
// the Max E2-SAT reductions, and certifying artifacts.
//
// Exit codes: 0 success or decision-yes, 1 decision-no, 2 usage error,
// 3 parse/budget/validation failure. JSON goes to stdout, a short human
// summary to stderr.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "resmatch/serialize.hpp"

using namespace resmatch;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

SearchLimits limits_from_env() {
    SearchLimits limits;
    if (const char* env = std::getenv("RESMATCH_BUDGET")) {
        try {
            limits.nodes = std::stoll(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("RESMATCH_BUDGET", "not an integer: " + std::string(env));
        }
        if (limits.nodes <= 0)
            throw CLI::ValidationError("RESMATCH_BUDGET", "must be positive");
    }
    return limits;
}

E2SatInstance load_cnf(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_e2sat(buf.str());
}

void emit(const Json& j) { std::cout << dump_json(j); }

int cmd_solve(const std::string& graph_path, const std::string& mode, int k,
              const SearchLimits& limits) {
    GraphFile gf = load_graph_file(graph_path);
    const Graph& g = gf.graph;
    if (mode == "max" || mode == "min") {
        ResidualSummary s = residual_summary(g, limits);
        emit(summary_to_json(s));
        std::cerr << "beta=" << s.beta << " min=" << s.min_residual
                  << " max=" << s.max_residual << "\n";
        return kExitYes;
    }
    Decision d = mode == "ge" ? decide_ge(g, k, limits) : decide_le(g, k, limits);
    Json out;
    out["mode"] = mode;
    out["k"] = k;
    out["answer"] = d.answer;
    if (d.witness) {
        out["witness"] = matching_to_json(*d.witness);
        out["residual"] = d.value;
    }
    emit(out);
    std::cerr << "beta(G\\F) " << (mode == "ge" ? ">= " : "<= ") << k << ": "
              << (d.answer ? "yes" : "no") << "\n";
    return d.answer ? kExitYes : kExitNo;
}

int cmd_matching(const std::string& graph_path, const SearchLimits& limits) {
    GraphFile gf = load_graph_file(graph_path);
    Matching first;
    bool have = false;
    visit_max_matchings(
        gf.graph,
        [&](const Matching& m) {
            first = m;
            have = true;
            return false;
        },
        limits);
    Json out;
    out["size"] = have ? static_cast<int>(first.size()) : 0;
    out["edges"] = matching_to_json(first);
    emit(out);
    std::cerr << "maximum matching of size " << first.size() << "\n";
    return kExitYes;
}

int cmd_reduce(const std::string& cnf_path, int theorem, int K, const std::string& out_path,
               const std::string& dot_path) {
    E2SatInstance inst = load_cnf(cnf_path);
    ReductionArtifact art =
        reduce(inst, K, theorem == 1 ? TheoremId::theorem1 : TheoremId::theorem2);
    write_file(out_path, dump_json(artifact_to_json(art)));
    if (!dot_path.empty())
        write_file(dot_path, to_dot(art.graph));
    auto st = graph_stats(art.graph.graph());
    Json out;
    out["theorem"] = theorem;
    out["k"] = art.k;
    out["K"] = K;
    out["m"] = art.m;
    out["n"] = art.n;
    out["vertices"] = st.vertices;
    out["edges"] = st.edges;
    out["max_degree"] = st.max_degree;
    out["connected"] = st.connected;
    out["artifact"] = out_path;
    emit(out);
    std::cerr << "G_I with k=" << art.k << ": " << st.vertices << " vertices, " << st.edges
              << " edges -> " << out_path << "\n";
    return kExitYes;
}

int cmd_verify(const std::string& cnf_path, int theorem, int kmin, int kmax,
               const std::string& report_path, const SearchLimits& limits) {
    E2SatInstance inst = load_cnf(cnf_path);
    if (kmin < 1)
        kmin = 1;
    if (kmax < 1 || kmax > inst.clause_count())
        kmax = inst.clause_count();
    ReductionArtifact art =
        reduce(inst, kmin, theorem == 1 ? TheoremId::theorem1 : TheoremId::theorem2);
    ValidationReport rep = validate_reduction(art, kmin, kmax, limits);
    Json out = report_to_json(rep);
    emit(out);
    if (!report_path.empty())
        write_file(report_path, dump_json(out));
    for (const ValidationCheck& c : rep.checks)
        std::cerr << (c.skipped ? "[skip] " : c.pass ? "[ ok ] " : "[FAIL] ") << c.name
                  << (c.details.empty() ? "" : ": " + c.details) << "\n";
    return rep.all_pass() ? kExitYes : kExitFailure;
}

int cmd_gen(int vars, int clauses, std::uint64_t seed, const std::string& out_path) {
    E2SatInstance inst = gen_random(vars, clauses, seed);
    std::string text = emit_dimacs(inst);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    std::cerr << "strict instance: n=" << vars << " m=" << clauses << " seed=" << seed << "\n";
    return kExitYes;
}

int cmd_special(const std::string& graph_path) {
    GraphFile gf = load_graph_file(graph_path);
    SpecialClass cls = classify_special(gf.graph);
    auto s = special_case_residual(gf.graph);
    Json out;
    out["special"] = s.has_value();
    out["class"] = cls.describe();
    if (s)
        out["summary"] = summary_to_json(*s);
    emit(out);
    std::cerr << cls.describe() << (s ? "" : ": no closed form") << "\n";
    return kExitYes;
}

int cmd_stats(const std::string& graph_path) {
    GraphFile gf = load_graph_file(graph_path);
    auto st = graph_stats(gf.graph);
    Json out;
    out["vertices"] = st.vertices;
    out["edges"] = st.edges;
    out["max_degree"] = st.max_degree;
    out["connected"] = st.connected;
    out["classification"] = classify_special(gf.graph).describe();
    emit(out);
    std::cerr << st.vertices << " vertices, " << st.edges << " edges, max degree "
              << st.max_degree << (st.connected ? ", connected" : ", disconnected") << "\n";
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"residual matching number toolkit"};
    app.require_subcommand(1);

    std::string graph_path, cnf_path, out_path, dot_path, report_path, mode;
    int k = 0, K = 1, theorem = 1, kmin = 0, kmax = 0, vars = 0, clauses = 0;
    std::uint64_t seed = 0;

    CLI::App* solve = app.add_subcommand("solve", "optimize or decide beta(G\\F)");
    solve->add_option("--graph", graph_path, "graph JSON file")->required();
    solve->add_option("--mode", mode, "max|min|ge|le")->required()
        ->check(CLI::IsMember({"max", "min", "ge", "le"}));
    solve->add_option("-k,--k", k, "threshold for ge/le");

    CLI::App* matching = app.add_subcommand("matching", "one maximum matching");
    matching->add_option("--graph", graph_path, "graph JSON file")->required();

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "build (G_I, k) from a 2-CNF");
    reduce_cmd->add_option("--cnf", cnf_path, "DIMACS 2-CNF file")->required();
    reduce_cmd->add_option("--theorem", theorem, "1 or 2")->required()
        ->check(CLI::IsMember({1, 2}));
    reduce_cmd->add_option("-K,--K", K, "clause threshold K")->required();
    reduce_cmd->add_option("-o,--out", out_path, "artifact output path")->required();
    reduce_cmd->add_option("--dot", dot_path, "also write a DOT drawing");

    CLI::App* verify = app.add_subcommand("verify", "certify the reduction for an instance");
    verify->add_option("--cnf", cnf_path, "DIMACS 2-CNF file")->required();
    verify->add_option("--theorem", theorem, "1 or 2")->required()
        ->check(CLI::IsMember({1, 2}));
    verify->add_option("--kmin", kmin, "first K to test (default 1)");
    verify->add_option("--kmax", kmax, "last K to test (default m)");
    verify->add_option("-o,--out", report_path, "also write the report here");

    CLI::App* gen = app.add_subcommand("gen", "random strict instance");
    gen->add_option("--vars", vars, "variable count")->required();
    gen->add_option("--clauses", clauses, "clause count")->required();
    gen->add_option("--seed", seed, "rng seed")->required();
    gen->add_option("-o,--out", out_path, "output path (default stdout)");

    CLI::App* special = app.add_subcommand("special", "closed-form residual summary");
    special->add_option("--graph", graph_path, "graph JSON file")->required();

    CLI::App* stats = app.add_subcommand("stats", "graph counts report");
    stats->add_option("--graph", graph_path, "graph JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        SearchLimits limits = limits_from_env();
        if (solve->parsed()) {
            if ((mode == "ge" || mode == "le") && solve->count("-k") == 0 &&
                solve->count("--k") == 0) {
                std::cerr << "mode " << mode << " requires -k\n";
                return kExitUsage;
            }
            return cmd_solve(graph_path, mode, k, limits);
        }
        if (matching->parsed())
            return cmd_matching(graph_path, limits);
        if (reduce_cmd->parsed())
            return cmd_reduce(cnf_path, theorem, K, out_path, dot_path);
        if (verify->parsed())
            return cmd_verify(cnf_path, theorem, kmin, kmax, report_path, limits);
        if (gen->parsed())
            return cmd_gen(vars, clauses, seed, out_path);
        if (special->parsed())
            return cmd_special(graph_path);
        if (stats->parsed())
            return cmd_stats(graph_path);
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitFailure;
    } catch (const EnumerationLimitError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
