#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "mwtk/brute_force.hpp"
#include "mwtk/compose.hpp"
#include "mwtk/engine.hpp"
#include "mwtk/generate.hpp"
#include "mwtk/graph_io.hpp"
#include "mwtk/md_tree.hpp"
#include "mwtk/solver.hpp"
#include "mwtk/vaqg.hpp"

namespace {

using namespace mwtk;

Graph load_graph(const std::string& path) {
    if (path == "-") return read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_edge_list(in);
}

// Used by the verify test hook: nudge an answer tuple so every value a
// problem might read from it changes, while still passing tuple validation.
ValueTuple perturb_tuple(SystemId system, ValueTuple t) {
    switch (system) {
        case SystemId::col:
        case SystemId::dom:
        case SystemId::ind:
        case SystemId::lip:
            t[0] += 1;
            break;
        case SystemId::del:
            for (int& v : t) v += 1;
            break;
        case SystemId::path:
            if (t[0] == 0)
                t[0] = 1;
            else if (t[1] < t[2])
                t[1] += 1;
            else if (t[1] > 1)
                t[1] -= 1;
            else
                t[2] += 1;
            break;
        case SystemId::pack:
            if (t[0] >= 1) {
                t[1] += 1;
                t[2] += 1;
                t[3] += 1;
                t[4] += 3;
            } else {
                t[0] = 1;
                t[1] = 1;
                t[4] += 3;
            }
            break;
    }
    return t;
}

int run_solve(const std::string& problem, const std::string& file, const std::string& mode,
              const std::string& transcript_path, const std::optional<int>& k) {
    ProblemId pid = problem_from_name(problem);
    Graph g = load_graph(file);
    SolveOptions opts;
    opts.mode = mode == "membership" ? OracleMode::membership : OracleMode::function_value;
    ProblemResult res = solve_problem(g, pid, opts);
    if (problem_info(pid).sense == Sense::existence) {
        std::cout << (res.value == 0 ? "yes" : "no") << '\n';
    } else {
        std::cout << "value " << res.value << '\n';
        if (k) std::cout << (decision(pid, res.value, *k) ? "yes" : "no") << '\n';
    }
    if (!transcript_path.empty()) {
        std::ofstream out(transcript_path);
        if (!out) throw std::invalid_argument("cannot open transcript file: " + transcript_path);
        out << dump_transcript(res.transcript);
    }
    return 0;
}

int run_mdtree(const std::string& file) {
    Graph g = load_graph(file);
    MDTree tree = decompose(g);
    std::cout << serialize_tree(tree);
    std::cout << "mw=" << modular_width(tree) << '\n';
    return 0;
}

int run_gen(int n, int k, std::uint64_t seed, int depth_cap) {
    Graph g = random_bounded_mw({n, k, seed, depth_cap});
    std::cout << "# gen n=" << n << " k=" << k << " seed=" << seed << '\n';
    write_edge_list(std::cout, g);
    return 0;
}

int run_verify(const std::string& problem, const std::string& file, bool corrupt) {
    ProblemId pid = problem_from_name(problem);
    Graph g = load_graph(file);
    if (g.vertex_count() > 14)
        throw std::invalid_argument("reference check handles at most 14 vertices");
    int brute = bf_problem_value(pid, g);
    SolveOptions opts;
    bool fired = false;
    if (corrupt)
        opts.oracle = [&fired](const Vaqg& q) {
            ValueTuple t = compose(q);
            if (!fired) {
                fired = true;
                t = perturb_tuple(q.system, std::move(t));
            }
            return t;
        };
    ProblemResult res = solve_problem(g, pid, opts);
    if (res.value == brute) {
        std::cout << "MATCH value=" << brute << '\n';
        return 0;
    }
    std::cout << "MISMATCH engine=" << res.value << " brute=" << brute << '\n';
    return 4;
}

int run_oracle(const std::string& system_name) {
    SystemId system = system_from_name(system_name);
    std::string line;
    while (std::getline(std::cin, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        DecodedQuery dq = decode_query(from_hex(line.substr(a, b - a + 1)), system);
        ValueTuple t = compose(dq.vaqg);
        if (dq.candidate) {
            std::cout << (*dq.candidate == t ? "accept" : "reject") << '\n';
        } else {
            std::cout << "value";
            for (int v : t) std::cout << ' ' << v;
            std::cout << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph solvers driven by modular decomposition"};
    app.require_subcommand(1);

    auto* solve_cmd = app.add_subcommand("solve", "solve a problem on a graph");
    std::string problem, graph_file = "-", mode = "function", transcript_path;
    int k_value = 0;
    solve_cmd->add_option("problem", problem, "problem name, e.g. vertex-cover")->required();
    solve_cmd->add_option("graph", graph_file, "edge-list file, - for stdin");
    solve_cmd->add_option("--oracle-mode", mode, "function or membership")
        ->check(CLI::IsMember({"function", "membership"}));
    solve_cmd->add_option("--transcript", transcript_path, "write the query transcript here");
    auto* k_opt = solve_cmd->add_option("--k", k_value, "also answer the decision question");

    auto* mdtree_cmd = app.add_subcommand("mdtree", "print the decomposition tree and width");
    std::string mdtree_file = "-";
    mdtree_cmd->add_option("graph", mdtree_file, "edge-list file, - for stdin");

    auto* gen_cmd = app.add_subcommand("gen", "generate a random graph of bounded width");
    int gen_n = 1, gen_k = 0, gen_depth = 10;
    std::uint64_t gen_seed = 0;
    gen_cmd->add_option("--n", gen_n, "vertex count")->required();
    gen_cmd->add_option("--k", gen_k, "width budget, 0 or >= 4");
    gen_cmd->add_option("--seed", gen_seed, "generator seed");
    gen_cmd->add_option("--depth-cap", gen_depth, "recursion depth cap");

    auto* verify_cmd = app.add_subcommand("verify", "compare the engine against enumeration");
    std::string verify_problem, verify_file = "-";
    bool corrupt = false;
    verify_cmd->add_option("problem", verify_problem, "problem name")->required();
    verify_cmd->add_option("graph", verify_file, "edge-list file, - for stdin");
    verify_cmd->add_flag("--test-corrupt-oracle", corrupt)->group("");

    auto* oracle_cmd = app.add_subcommand("oracle", "answer hex-encoded queries from stdin");
    std::string oracle_system;
    oracle_cmd->add_option("--system", oracle_system, "value-system name, e.g. s-del")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve_cmd)
            return run_solve(problem, graph_file, mode, transcript_path,
                             k_opt->count() ? std::optional<int>(k_value) : std::nullopt);
        if (*mdtree_cmd) return run_mdtree(mdtree_file);
        if (*gen_cmd) return run_gen(gen_n, gen_k, gen_seed, gen_depth);
        if (*verify_cmd) return run_verify(verify_problem, verify_file, corrupt);
        if (*oracle_cmd) return run_oracle(oracle_system);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
