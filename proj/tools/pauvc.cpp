#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "pauvc/classify.hpp"
#include "pauvc/dp.hpp"
#include "pauvc/expr.hpp"
#include "pauvc/generators.hpp"
#include "pauvc/oracle.hpp"
#include "pauvc/split.hpp"
#include "pauvc/unit_interval.hpp"

namespace {

using namespace pauvc;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

std::vector<std::string> read_name_list(const std::string& text) {
    std::vector<std::string> names;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) names.push_back(tok);
    }
    return names;
}

SolveBudgets make_budgets(std::int64_t budget, int max_k) {
    SolveBudgets b;
    if (budget > 0) {
        b.exact = budget;
        b.oracle = budget;
    }
    b.max_k = max_k;
    return b;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void print_tables_line(int node, const DpTable& t) {
    for (std::uint32_t m = 0; m < t.mu.size(); ++m)
        if (t.mu[m] >= 0) std::cout << "node " << node << " mu " << m << " " << t.mu[m] << "\n";
    for (const auto& row : t.chars) {
        std::ostringstream hex;
        hex << std::hex << row.beta;
        std::cout << "node " << node << " beta " << hex.str() << " " << row.size << "\n";
    }
}

struct SolveArgs {
    std::string graph_file, intervals_file, cw_file, nlc_file;
    std::string forced_class;
    bool verify = false;
    bool json = false;
    bool timing = false;
    bool dump_tables = false;
    std::int64_t budget = 0;
    int max_k = 4;
};

int run_solve(const SolveArgs& a) {
    int inputs = !a.graph_file.empty() + !a.intervals_file.empty() + !a.cw_file.empty() +
                 !a.nlc_file.empty();
    if (inputs != 1)
        throw std::runtime_error("exactly one of --graph/--intervals/--cw-expr/--nlc-expr required");

    std::optional<ClassTag> forced;
    if (!a.forced_class.empty()) {
        forced = class_from_name(a.forced_class);
        if (!forced) throw ClassError("unknown class '" + a.forced_class + "'");
    }
    SolveBudgets budgets = make_budgets(a.budget, a.max_k);
    Timer timer;
    RunReport report;

    DpOptions dp_opts;
    dp_opts.max_k = a.max_k;
    if (a.dump_tables) dp_opts.observer = print_tables_line;

    std::optional<Graph> graph_for_verify;
    if (!a.graph_file.empty()) {
        report.input = a.graph_file;
        std::string text = read_file(a.graph_file);
        report.digest = fnv1a_digest(text);
        Graph g = parse_graph(text);
        if (forced && *forced == ClassTag::ExpressionGiven)
            throw ClassError("class 'expression-given' requires an expression input");
        ClassTag tag = forced ? *forced : classify(g);
        report.class_tag = class_name(tag);
        report.solution = solve_graph(g, forced, budgets);
        graph_for_verify = std::move(g);
    } else if (!a.intervals_file.empty()) {
        report.input = a.intervals_file;
        std::string text = read_file(a.intervals_file);
        report.digest = fnv1a_digest(text);
        if (forced && *forced != ClassTag::UnitInterval)
            throw ClassError("interval input solves as unit-interval only");
        IntervalRep rep = parse_intervals(text);
        report.class_tag = class_name(ClassTag::UnitInterval);
        report.solution = solve_unit_interval(rep);
        if (a.verify) graph_for_verify = intervals_to_graph(rep);
    } else {
        bool cw = !a.cw_file.empty();
        report.input = cw ? a.cw_file : a.nlc_file;
        std::string text = read_file(report.input);
        report.digest = fnv1a_digest(text);
        if (forced && *forced != ClassTag::ExpressionGiven)
            throw ClassError("expression input solves as expression-given only");
        report.class_tag = class_name(ClassTag::ExpressionGiven);
        if (cw) {
            CwExpr e = parse_cw_expr(text);
            report.solution = solve_cw(e, dp_opts);
            if (a.verify) graph_for_verify = eval_cw(e).graph;
        } else {
            NlcExpr e = parse_nlc_expr(text);
            report.solution = solve_nlc(e, dp_opts);
            if (a.verify) graph_for_verify = eval_nlc(e).graph;
        }
    }

    if (a.verify) {
        ExactBudget exact{budgets.exact};
        VcVerdict verdict = verify_preassignment(*graph_for_verify, report.solution.preassign, exact);
        report.verified_count = verdict.num_min_vcs_capped;
    }
    if (a.timing) report.wall_ms = timer.ms();
    std::cout << (a.json ? render_report_json(report) : render_report_text(report));
    return 0;
}

int run_verify(const std::string& graph_file, const std::string& preassign_file,
               std::int64_t budget, bool json) {
    Graph g = parse_graph(read_file(graph_file));
    std::vector<std::string> s = read_name_list(read_file(preassign_file));
    ExactBudget exact{budget > 0 ? budget : 64};
    VcVerdict verdict = verify_preassignment(g, s, exact);
    const char* count_word = verdict.num_min_vcs_capped == 0   ? "0"
                             : verdict.num_min_vcs_capped == 1 ? "1"
                                                               : "2+";
    if (json) {
        std::ostringstream out;
        out << "{\n  \"count\": \"" << count_word << "\",\n  \"min_vc_size\": "
            << *verdict.min_vc_size;
        if (verdict.unique_cover) {
            out << ",\n  \"witness\": [";
            for (std::size_t i = 0; i < verdict.unique_cover->size(); ++i)
                out << (i ? ", " : "") << '"' << (*verdict.unique_cover)[i] << '"';
            out << "]";
        }
        out << "\n}\n";
        std::cout << out.str();
    } else {
        std::cout << "count: " << count_word << "\n";
        std::cout << "min_vc_size: " << *verdict.min_vc_size << "\n";
        if (verdict.unique_cover) {
            std::cout << "witness:";
            for (const auto& name : *verdict.unique_cover) std::cout << " " << name;
            std::cout << "\n";
        }
    }
    return verdict.num_min_vcs_capped == 1 ? 0 : 1;
}

int run_generate(const std::string& graph_file, const std::string& out_prefix, std::uint64_t seed,
                 std::int64_t budget, int max_k) {
    std::string text = read_file(graph_file);
    Graph g = parse_graph(text);
    SolveBudgets budgets = make_budgets(budget, max_k);
    ClassTag tag = classify(g);
    PreassignmentSolution sol = solve_graph(g, std::nullopt, budgets);

    std::vector<int> gone;
    for (const auto& name : sol.preassign) gone.push_back(*g.index_of(name));
    Graph reduced = remove_vertices(g, gone);

    // certificate in the output file's own numbering
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : gone) in_s[v] = 1;
    std::vector<int> cert_ids;
    for (const auto& name : sol.unique_cover) {
        int orig = *g.index_of(name);
        if (!in_s[orig]) cert_ids.push_back(*reduced.index_of(name) + 1);
    }
    std::sort(cert_ids.begin(), cert_ids.end());

    write_file(out_prefix + ".graph", serialize_graph(reduced));
    std::ostringstream cert;
    cert << "# unique minimum vertex cover of " << out_prefix << ".graph\n";
    for (int id : cert_ids) cert << id << "\n";
    write_file(out_prefix + ".cert", cert.str());

    std::string verified = "skipped";
    if (reduced.vertex_count() <= budgets.exact) {
        VcVerdict verdict = verify_preassignment(reduced, {}, ExactBudget{budgets.exact});
        if (verdict.num_min_vcs_capped != 1)
            throw std::logic_error("generated instance does not have a unique minimum cover");
        verified = "unique";
    } else {
        // structural spot check: the certificate covers, and sampled cover
        // vertices are all necessary
        std::vector<std::string> cert_names;
        for (int id : cert_ids) cert_names.push_back(std::to_string(id));
        Graph renamed = parse_graph(serialize_graph(reduced));
        if (!is_vertex_cover(renamed, cert_names))
            throw std::logic_error("generated certificate is not a vertex cover");
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 20 && !cert_names.empty(); ++trial) {
            std::size_t pick = rng() % cert_names.size();
            std::vector<std::string> without;
            for (std::size_t i = 0; i < cert_names.size(); ++i)
                if (i != pick) without.push_back(cert_names[i]);
            if (is_vertex_cover(renamed, without))
                throw std::logic_error("generated certificate is not minimal");
        }
        verified = "structural";
    }

    RunReport report;
    report.input = graph_file;
    report.digest = fnv1a_digest(text);
    report.class_tag = class_name(tag);
    report.solution = sol;
    std::cout << render_report_text(report);
    std::cout << "graph_out: " << out_prefix << ".graph\n";
    std::cout << "cert_out: " << out_prefix << ".cert\n";
    std::cout << "output_verified: " << verified << "\n";
    return 0;
}

int run_random(const std::string& family, int n, std::uint64_t seed, double p,
               const std::string& out) {
    std::string text;
    if (family == "gnp") text = serialize_graph(random_gnp(n, seed, p));
    else if (family == "tree") text = serialize_graph(random_tree(n, seed));
    else if (family == "split") text = serialize_graph(random_split_graph(n, seed));
    else if (family == "unit-interval") text = serialize_intervals(random_unit_intervals(n, seed));
    else throw std::runtime_error("unknown family '" + family + "'");
    if (out.empty()) std::cout << text;
    else write_file(out, text);
    return 0;
}

int run_oracle(const std::string& graph_file, std::int64_t budget, bool json, bool timing) {
    std::string text = read_file(graph_file);
    Graph g = parse_graph(text);
    Timer timer;
    OracleBudget ob{budget > 0 ? budget : 16};
    RunReport report;
    report.input = graph_file;
    report.digest = fnv1a_digest(text);
    report.class_tag = class_name(ClassTag::BruteFallback);
    report.solution.method = Method::Brute;
    report.solution.preassign = pauvc_bruteforce(g, ob);
    report.solution.preassign_size = static_cast<std::int64_t>(report.solution.preassign.size());
    ExactBudget exact{std::max<std::int64_t>(64, g.vertex_count())};
    VcVerdict verdict = verify_preassignment(g, report.solution.preassign, exact);
    report.solution.min_vc_size = *verdict.min_vc_size;
    report.solution.unique_cover = *verdict.unique_cover;
    if (timing) report.wall_ms = timer.ms();
    std::cout << (json ? render_report_json(report) : render_report_text(report));
    return 0;
}

int run_tables(const std::string& cw_file, const std::string& nlc_file, int max_k) {
    DpOptions opts;
    opts.max_k = max_k;
    opts.observer = print_tables_line;
    if (!cw_file.empty()) solve_cw(parse_cw_expr(read_file(cw_file)), opts);
    else solve_nlc(parse_nlc_expr(read_file(nlc_file)), opts);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and instance generator for pre-assignment uniquification of minimum vertex cover"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("--graph", sa.graph_file, "graph file (native or DIMACS)");
    solve->add_option("--intervals", sa.intervals_file, "unit interval file");
    solve->add_option("--cw-expr", sa.cw_file, "clique-width expression file");
    solve->add_option("--nlc-expr", sa.nlc_file, "NLC expression file");
    solve->add_option("--class", sa.forced_class,
                      "force a method: split, unit-interval, forest, expression-given, brute-fallback");
    solve->add_flag("--verify", sa.verify, "verify the answer by exact counting");
    solve->add_flag("--json", sa.json, "emit a JSON report");
    solve->add_flag("--timing", sa.timing, "include wall time in the report");
    solve->add_flag("--dump-tables", sa.dump_tables, "dump per-node tables (expression inputs)");
    solve->add_option("--budget", sa.budget, "override exact-solve budgets");
    solve->add_option("--max-k", sa.max_k, "label budget for expressions (default 4)");

    std::string v_graph, v_pre;
    std::int64_t v_budget = 0;
    bool v_json = false;
    auto* verify = app.add_subcommand("verify", "count minimum covers containing a pre-assignment");
    verify->add_option("--graph", v_graph, "graph file")->required();
    verify->add_option("--preassign", v_pre, "file of vertex names")->required();
    verify->add_option("--budget", v_budget, "override exact-solve budget");
    verify->add_flag("--json", v_json, "emit a JSON report");

    std::string g_graph, g_out;
    std::uint64_t g_seed = 0;
    std::int64_t g_budget = 0;
    int g_max_k = 4;
    auto* generate = app.add_subcommand("generate", "emit a unique-minimum-cover instance");
    generate->add_option("--graph", g_graph, "input graph file")->required();
    generate->add_option("--out", g_out, "output prefix")->required();
    generate->add_option("--seed", g_seed, "seed for spot verification sampling");
    generate->add_option("--budget", g_budget, "override exact-solve budgets");
    generate->add_option("--max-k", g_max_k, "label budget for expressions");

    std::string r_family, r_out;
    int r_n = 0;
    std::uint64_t r_seed = 0;
    double r_p = 0.5;
    auto* random = app.add_subcommand("random", "generate a random instance");
    random->add_option("--family", r_family, "gnp, tree, split, unit-interval")->required();
    random->add_option("--n", r_n, "vertex / interval count")->required()->check(CLI::PositiveNumber);
    random->add_option("--seed", r_seed, "random seed")->required();
    random->add_option("--p", r_p, "edge probability for gnp");
    random->add_option("--out", r_out, "output file (default stdout)");

    std::string o_graph;
    std::int64_t o_budget = 0;
    bool o_json = false, o_timing = false;
    auto* oracle = app.add_subcommand("oracle", "brute-force reference solver");
    oracle->add_option("--graph", o_graph, "graph file")->required();
    oracle->add_option("--budget", o_budget, "override oracle budget (default 16)");
    oracle->add_flag("--json", o_json, "emit a JSON report");
    oracle->add_flag("--timing", o_timing, "include wall time");

    std::string t_cw, t_nlc;
    int t_max_k = 4;
    auto* tables = app.add_subcommand("tables", "dump per-node dynamic-programming tables");
    tables->add_option("--cw-expr", t_cw, "clique-width expression file");
    tables->add_option("--nlc-expr", t_nlc, "NLC expression file");
    tables->add_option("--max-k", t_max_k, "label budget (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (solve->parsed()) return run_solve(sa);
        if (verify->parsed()) return run_verify(v_graph, v_pre, v_budget, v_json);
        if (generate->parsed()) return run_generate(g_graph, g_out, g_seed, g_budget, g_max_k);
        if (random->parsed()) return run_random(r_family, r_n, r_seed, r_p, r_out);
        if (oracle->parsed()) return run_oracle(o_graph, o_budget, o_json, o_timing);
        if (tables->parsed()) {
            if (t_cw.empty() == t_nlc.empty())
                throw std::runtime_error("tables needs exactly one of --cw-expr/--nlc-expr");
            return run_tables(t_cw, t_nlc, t_max_k);
        }
    } catch (const ClassError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
