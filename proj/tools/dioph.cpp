// Command-line front end: construction, counting, solving, surveying, and the
// theorem-verification harness.
//
// Exit codes: 0 success, 1 negative-but-valid outcome (UNSAT, violations,
// mismatch, counterexamples), 2 usage or input errors, 3 resource limit.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "dioph/graphio.hpp"
#include "dioph/labeller.hpp"
#include "dioph/lemmas.hpp"
#include "dioph/theorems.hpp"

namespace {

using namespace dioph;

GraphKind kind_from(const std::string& s) {
    return s == "prime" ? GraphKind::prime : GraphKind::diophantine;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Labelling parse_labelling(const std::string& text, int order) {
    std::vector<int> labels(static_cast<size_t>(order) + 1, 0);
    std::vector<bool> assigned(static_cast<size_t>(order) + 1, false);
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        int v = 0, label = 0;
        std::string extra;
        try {
            v = std::stoi(first);
        } catch (...) {
            throw ParseError(line_no, "malformed labelling line, expected 'vertex label'");
        }
        if (!(ls >> label) || (ls >> extra))
            throw ParseError(line_no, "malformed labelling line, expected 'vertex label'");
        if (v < 1 || v > order) throw ParseError(line_no, "vertex out of range");
        if (assigned[v]) throw ParseError(line_no, "vertex labelled twice");
        assigned[v] = true;
        labels[v] = label;
    }
    for (int v = 1; v <= order; ++v)
        if (!assigned[v]) throw std::runtime_error("labelling is missing vertex " + std::to_string(v));
    Labelling labelling(std::move(labels));
    if (!labelling.is_bijective())
        throw std::runtime_error("labelling is not a bijection onto {1..n}");
    return labelling;
}

int run_maximal(u64 n, const std::string& kind, const std::string& emit) {
    const SimpleGraph g =
        generate(kind == "prime" ? "maximal_prime" : "maximal_diophantine", static_cast<int>(n));
    if (emit == "dot")
        std::cout << emit_dot(g);
    else
        std::cout << emit_edge_list(g);
    return 0;
}

int run_edges(u64 n, const std::string& method) {
    if (method == "brute" || method == "both") {
        if (n > 100'000) throw std::invalid_argument("brute edge counting is capped at n = 100000");
    }
    const auto spec = make_maximal_spec(n);
    if (method == "formula") {
        std::cout << edge_count_formula(spec) << '\n';
        return 0;
    }
    if (method == "brute") {
        std::cout << edge_count_bruteforce(spec) << '\n';
        return 0;
    }
    const u64 formula = edge_count_formula(spec);
    const u64 brute = edge_count_bruteforce(spec);
    std::cout << "formula " << formula << '\n' << "brute " << brute << '\n';
    if (formula != brute) {
        std::cerr << "MISMATCH: formula and brute-force counts disagree\n";
        return 1;
    }
    return 0;
}

int run_degrees(u64 n, bool full_only) {
    const auto spec = make_maximal_spec(n);
    const auto report = degree_classes(spec);

    // class 1 = highest degree present
    std::vector<u64> distinct;
    for (auto it = report.classes.rbegin(); it != report.classes.rend(); ++it)
        distinct.push_back(it->first);
    auto class_of = [&](u64 d) {
        for (size_t i = 0; i < distinct.size(); ++i)
            if (distinct[i] == d) return i + 1;
        return size_t{0};
    };

    std::cout << "label degree reduced class\n";
    for (u64 a = 1; a <= n; ++a) {
        const u64 d = report.degrees[a];
        if (full_only && d != n - 1) continue;
        std::cout << a << ' ' << d << ' ' << reduced_label(a, n) << ' ' << class_of(d) << '\n';
    }
    return 0;
}

int run_solve(const std::string& graph_path, const std::string& mode, u64 node_limit,
              double time_limit) {
    const SimpleGraph g = parse_edge_list(read_file(graph_path));
    SearchConfig config;
    config.mode = kind_from(mode);
    config.node_limit = node_limit;
    config.time_limit_seconds = time_limit;
    const SearchResult result = solve(g, config);
    std::cerr << "decisions=" << result.stats.decisions << " backtracks=" << result.stats.backtracks
              << " elapsed=" << result.stats.elapsed_seconds << "s\n";
    switch (result.verdict) {
        case Verdict::satisfiable:
            for (int v = 1; v <= g.order(); ++v)
                std::cout << v << ' ' << result.labelling->label_of(v) << '\n';
            return 0;
        case Verdict::unsatisfiable:
            std::cout << "UNSAT\n";
            return 1;
        case Verdict::limit_exceeded:
            std::cout << "LIMIT\n";
            return 3;
    }
    return 2;
}

int run_check(const std::string& graph_path, const std::string& labels_path,
              const std::string& mode) {
    const SimpleGraph g = parse_edge_list(read_file(graph_path));
    const Labelling labelling = parse_labelling(read_file(labels_path), g.order());
    const auto violations = verify(g, labelling, kind_from(mode));
    if (violations.empty()) {
        std::cout << "OK\n";
        return 0;
    }
    for (const auto& v : violations)
        std::cout << "violation: edge (" << v.u << "," << v.v << ") labels ("
                  << labelling.label_of(v.u) << "," << labelling.label_of(v.v) << ") gcd " << v.gcd
                  << '\n';
    return 1;
}

struct SurveyRow {
    u64 n = 0;
    u64 edges_formula = 0;
    std::optional<u64> edges_brute;
    u64 full_degree_count = 0;
    u64 sy_bound = 0;
    bool dn_eq_rn = false;
    bool n_is_prime = false;
};

SurveyRow survey_row(u64 n, u64 brute_upto) {
    const auto spec = make_maximal_spec(n);
    SurveyRow row;
    row.n = n;
    row.edges_formula = edge_count_formula(spec);
    if (n <= brute_upto) row.edges_brute = edge_count_bruteforce(spec);
    row.full_degree_count = full_degree_labels(spec).size();
    row.sy_bound = seoud_youssef_bound(n);
    row.dn_eq_rn = dn_equals_rn(n);
    row.n_is_prime = is_prime(n);
    if (row.dn_eq_rn != row.n_is_prime)
        throw std::logic_error("survey invariant violated: dn_eq_rn != n_is_prime");
    if (row.edges_brute && *row.edges_brute != row.edges_formula)
        throw std::logic_error("survey invariant violated: brute edge count != formula");
    return row;
}

int run_survey(u64 from, u64 to, u64 brute_upto, const std::string& out_path) {
    if (from < 2 || from > to) throw std::invalid_argument("survey needs 2 <= from <= to");

    // rows are computed in parallel and written in ascending order
    std::vector<SurveyRow> rows(to - from + 1);
    std::atomic<u64> next{from};
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(rows.size()));
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (u64 n; (n = next.fetch_add(1)) <= to;) {
                try {
                    rows[n - from] = survey_row(n, brute_upto);
                } catch (...) {
                    failed = true;
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failed) throw std::runtime_error("survey row computation failed");

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (out_path != "-") {
        file.open(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
        out = &file;
    }
    *out << "n,edges_formula,edges_brute,full_degree_count,sy_bound,dn_eq_rn,n_is_prime\n";
    for (const auto& row : rows) {
        *out << row.n << ',' << row.edges_formula << ',';
        if (row.edges_brute) *out << *row.edges_brute;
        *out << ',' << row.full_degree_count << ',' << row.sy_bound << ','
             << (row.dn_eq_rn ? "true" : "false") << ',' << (row.n_is_prime ? "true" : "false")
             << '\n';
    }
    return 0;
}

int run_verify_theorems(u64 n_max, bool per_n) {
    bool any_counterexample = false;

    for (TheoremId id : kAllTheorems) {
        u64 pairs = 0, counterexamples = 0;
        std::vector<std::string> notes;
        std::vector<std::string> details;
        for (u64 n = 2; n <= n_max; ++n) {
            const auto verdict = verify_theorem(id, n);
            pairs += verdict.pairs_checked;
            counterexamples += verdict.counterexamples.size();
            for (const auto& cx : verdict.counterexamples)
                if (details.size() < 16) details.push_back(cx.detail);
            for (const auto& note : verdict.annotations) notes.push_back(note);
            if (per_n && verdict.pairs_checked > 0)
                std::cout << "  " << theorem_name(id) << " n=" << n << " pairs="
                          << verdict.pairs_checked << " counterexamples="
                          << verdict.counterexamples.size() << '\n';
        }
        std::cout << theorem_name(id) << ": n=2.." << n_max << " pairs=" << pairs
                  << " counterexamples=" << counterexamples << '\n';
        for (const auto& d : details) std::cout << "  counterexample: " << d << '\n';
        for (const auto& note : notes) std::cout << "  note: " << note << '\n';
        if (counterexamples > 0) any_counterexample = true;
    }

    // the full-degree characterization's two branches are disjoint by
    // construction; report if any order ever exhibits an overlap
    for (u64 n = 2; n <= n_max; ++n) {
        const auto overlap = full_degree_overlap_anomalies(make_maximal_spec(n));
        for (u64 a : overlap)
            std::cout << "  note: n=" << n << " label " << a
                      << " satisfies both full-degree branches (unexpected overlap)\n";
    }

    for (const auto& report : run_all_lemma_suites(n_max)) {
        std::cout << "lemma " << report.name << ": cases=" << report.cases_checked
                  << " failures=" << report.failures.size() << '\n';
        for (const auto& f : report.failures) std::cout << "  failure: " << f << '\n';
        if (!report.ok()) any_counterexample = true;
    }

    std::cout << (any_counterexample ? "FAIL: counterexamples found\n" : "OK: no counterexamples\n");
    return any_counterexample ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear Diophantine graph toolkit"};
    app.require_subcommand(1);

    auto* cmd_maximal = app.add_subcommand("maximal", "materialize a maximal graph");
    u64 maximal_n = 0;
    std::string maximal_kind = "dio", maximal_emit = "edges";
    cmd_maximal->add_option("--n", maximal_n, "graph order")->required();
    cmd_maximal->add_option("--kind", maximal_kind, "dio or prime")
        ->check(CLI::IsMember({"dio", "prime"}));
    cmd_maximal->add_option("--emit", maximal_emit, "edges or dot")
        ->check(CLI::IsMember({"edges", "dot"}));

    auto* cmd_edges = app.add_subcommand("edges", "edge count of a maximal diophantine graph");
    u64 edges_n = 0;
    std::string edges_method = "formula";
    cmd_edges->add_option("--n", edges_n, "graph order")->required();
    cmd_edges->add_option("--method", edges_method, "formula, brute or both")
        ->check(CLI::IsMember({"formula", "brute", "both"}));

    auto* cmd_degrees = app.add_subcommand("degrees", "degree table of a maximal diophantine graph");
    u64 degrees_n = 0;
    bool full_only = false;
    cmd_degrees->add_option("--n", degrees_n, "graph order (>= 2)")->required();
    cmd_degrees->add_flag("--full-only", full_only, "only labels of degree n-1");

    auto* cmd_solve = app.add_subcommand("solve", "search for a labelling of a graph");
    std::string solve_graph, solve_mode;
    u64 node_limit = SearchConfig{}.node_limit;
    double time_limit = SearchConfig{}.time_limit_seconds;
    cmd_solve->add_option("--graph", solve_graph, "edge-list file")->required();
    cmd_solve->add_option("--mode", solve_mode, "dio or prime")
        ->required()
        ->check(CLI::IsMember({"dio", "prime"}));
    cmd_solve->add_option("--node-limit", node_limit, "max decisions");
    cmd_solve->add_option("--time-limit", time_limit, "wall-clock seconds");

    auto* cmd_check = app.add_subcommand("check", "verify a labelling against a graph");
    std::string check_graph, check_labels, check_mode;
    cmd_check->add_option("--graph", check_graph, "edge-list file")->required();
    cmd_check->add_option("--labels", check_labels, "labelling file ('vertex label' lines)")->required();
    cmd_check->add_option("--mode", check_mode, "dio or prime")
        ->required()
        ->check(CLI::IsMember({"dio", "prime"}));

    auto* cmd_survey = app.add_subcommand("survey", "per-order survey CSV");
    u64 survey_from = 0, survey_to = 0, brute_upto = 0;
    std::string survey_out;
    cmd_survey->add_option("--from", survey_from, "first order")->required();
    cmd_survey->add_option("--to", survey_to, "last order")->required();
    cmd_survey->add_option("--brute-upto", brute_upto, "verify counts by brute force up to this order");
    cmd_survey->add_option("--out", survey_out, "output CSV path ('-' for stdout)")->required();

    auto* cmd_verify = app.add_subcommand("verify-theorems", "run the exhaustive theorem harness");
    u64 n_max = 0;
    bool per_n = false;
    cmd_verify->add_option("--n-max", n_max, "largest order to sweep (>= 2)")->required();
    cmd_verify->add_flag("--per-n", per_n, "print per-order counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_maximal->parsed()) return run_maximal(maximal_n, maximal_kind, maximal_emit);
        if (cmd_edges->parsed()) return run_edges(edges_n, edges_method);
        if (cmd_degrees->parsed()) return run_degrees(degrees_n, full_only);
        if (cmd_solve->parsed()) return run_solve(solve_graph, solve_mode, node_limit, time_limit);
        if (cmd_check->parsed()) return run_check(check_graph, check_labels, check_mode);
        if (cmd_survey->parsed()) return run_survey(survey_from, survey_to, brute_upto, survey_out);
        if (cmd_verify->parsed()) {
            if (n_max < 2) throw std::invalid_argument("verify-theorems needs --n-max >= 2");
            return run_verify_theorems(n_max, per_n);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
