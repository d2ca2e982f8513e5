#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mwtk/brute_force.hpp"
#include "mwtk/engine.hpp"
#include "mwtk/graph_io.hpp"
#include "mwtk/md_tree.hpp"
#include "support/corpus.hpp"

using namespace mwtk;
using namespace corpus;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& input = "") {
    namespace fs = std::filesystem;
    static int counter = 0;
    fs::path in_path = fs::temp_directory_path() / ("mwtk_cli_in_" + std::to_string(++counter) + ".txt");
    {
        std::ofstream f(in_path);
        f << input;
    }
    std::string cmd = std::string(MWTK_BIN) + " " + args + " < " + in_path.string() + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    fs::remove(in_path);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

const std::string c5 = format_edge_list(Graph::cycle(5));

}  // namespace

TEST_CASE("solve prints values and decisions") {
    REQUIRE(run_cli("solve chromatic-number -", c5).out == "value 3\n");
    REQUIRE(run_cli("solve hamiltonian-cycle -", c5).out == "yes\n");
    REQUIRE(run_cli("solve hamiltonian-path -", format_edge_list(star(4))).out == "no\n");

    RunResult yes = run_cli("solve independent-set - --k 2", c5);
    REQUIRE(yes.exit_code == 0);
    REQUIRE(yes.out == "value 2\nyes\n");
    REQUIRE(run_cli("solve independent-set - --k 3", c5).out == "value 2\nno\n");
    REQUIRE(run_cli("solve vertex-cover - --k 3", c5).out == "value 3\nyes\n");

    // a disconnected input cannot have a connected cover spanning both sides
    Graph two_edges = disjoint_union({Graph::complete(2), Graph::complete(2)}).graph;
    REQUIRE(run_cli("solve connected-vertex-cover -", format_edge_list(two_edges)).out == "value 5\n");
}

TEST_CASE("solve agrees with enumeration for every problem") {
    std::vector<Graph> pool = {Graph::cycle(5), random_graph(7, 21, 50), star(4)};
    for (const Graph& g : pool) {
        std::string text = format_edge_list(g);
        for (const ProblemInfo& p : all_problems()) {
            RunResult r = run_cli("solve " + p.name + " -", text);
            REQUIRE(r.exit_code == 0);
            int brute = bf_problem_value(p.id, g);
            if (p.sense == Sense::existence) {
                REQUIRE(r.out == (brute == 0 ? "yes\n" : "no\n"));
            } else {
                REQUIRE(r.out == "value " + std::to_string(brute) + "\n");
            }
        }
    }
}

TEST_CASE("solve output is deterministic and transcripts re-parse") {
    namespace fs = std::filesystem;
    fs::path tr = fs::temp_directory_path() / "mwtk_cli_tr.txt";
    std::string args = "solve dominating-set - --transcript " + tr.string();

    RunResult a = run_cli(args, c5);
    std::string first = read_file(tr.string());
    RunResult b = run_cli(args, c5);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(first == read_file(tr.string()));

    QueryTranscript parsed = parse_transcript(first);
    REQUIRE(parsed.system == SystemId::dom);
    REQUIRE(parsed.n == 5);
    REQUIRE(parsed.mw == 5);
    fs::remove(tr);
}

TEST_CASE("solve membership mode matches function mode") {
    for (std::string problem : {"dominating-set", "vertex-cover", "chromatic-number"}) {
        std::string plain = run_cli("solve " + problem + " -", c5).out;
        REQUIRE(run_cli("solve " + problem + " - --oracle-mode membership", c5).out == plain);
    }
}

TEST_CASE("mdtree prints the tree and the width") {
    RunResult c4 = run_cli("mdtree -", format_edge_list(Graph::cycle(4)));
    REQUIRE(c4.exit_code == 0);
    REQUIRE(c4.out ==
            "series module={0,1,2,3}\n"
            "  parallel module={0,2}\n"
            "    leaf module={0}\n"
            "    leaf module={2}\n"
            "  parallel module={1,3}\n"
            "    leaf module={1}\n"
            "    leaf module={3}\n"
            "mw=0\n");

    RunResult c5r = run_cli("mdtree -", c5);
    REQUIRE(c5r.out.find("mw=5\n") != std::string::npos);

    RunResult p4 = run_cli("mdtree -", format_edge_list(Graph::path(4)));
    REQUIRE(p4.out.substr(0, p4.out.find('\n')) == "prime module={0,1,2,3}");
    REQUIRE(p4.out.find("mw=4\n") != std::string::npos);
}

TEST_CASE("gen emits a parsable header plus edge list and is deterministic") {
    RunResult a = run_cli("gen --n 12 --k 4 --seed 7");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out.substr(0, a.out.find('\n')) == "# gen n=12 k=4 seed=7");
    REQUIRE(a.out == run_cli("gen --n 12 --k 4 --seed 7").out);

    Graph g = parse_edge_list(a.out);
    REQUIRE(g.vertex_count() == 12);
    REQUIRE(modular_width(g) <= 4);

    Graph flat = parse_edge_list(run_cli("gen --n 9 --k 0 --seed 3").out);
    REQUIRE(modular_width(flat) == 0);
}

TEST_CASE("generated graphs feed straight back into solve") {
    std::string text = run_cli("gen --n 10 --k 4 --seed 11").out;
    Graph g = parse_edge_list(text);
    RunResult r = run_cli("solve vertex-cover -", text);
    REQUIRE(r.out == "value " + std::to_string(bf_min_vc(g)) + "\n");
}

TEST_CASE("verify matches enumeration and the corrupt hook trips it") {
    for (std::string problem : {"chromatic-number", "vertex-cover", "dominating-set",
                                "independent-set", "hamiltonian-cycle", "longest-induced-path",
                                "induced-matching"}) {
        RunResult ok = run_cli("verify " + problem + " -", c5);
        REQUIRE(ok.exit_code == 0);
        REQUIRE(ok.out.rfind("MATCH value=", 0) == 0);

        RunResult bad = run_cli("verify " + problem + " - --test-corrupt-oracle", c5);
        REQUIRE(bad.exit_code == 4);
        REQUIRE(bad.out.rfind("MISMATCH engine=", 0) == 0);
    }

    REQUIRE(run_cli("verify vertex-cover -", format_edge_list(petersen())).exit_code == 0);
    REQUIRE(run_cli("verify vertex-cover -", format_edge_list(Graph::edgeless(15))).exit_code == 2);
}

TEST_CASE("oracle harness replays transcripts byte for byte") {
    for (auto [problem, system] : std::vector<std::pair<std::string, SystemId>>{
             {"vertex-cover", SystemId::del}, {"chromatic-number", SystemId::col}}) {
        Graph g = random_graph(8, 33, 50);
        SolveResult reference = solve(g, system);

        std::string feed, expected;
        for (const TranscriptEntry& e : reference.transcript.entries) {
            feed += to_hex(e.query.bytes) + "\n";
            expected += "value";
            for (int v : e.answer) expected += " " + std::to_string(v);
            expected += "\n";
        }
        std::string sys_name = system_info(system).name;
        RunResult once = run_cli("oracle --system " + sys_name, feed);
        REQUIRE(once.exit_code == 0);
        REQUIRE(once.out == expected);
        REQUIRE(run_cli("oracle --system " + sys_name, feed).out == once.out);
    }
}

TEST_CASE("oracle harness accepts membership candidates") {
    SolveOptions opts;
    opts.mode = OracleMode::membership;
    SolveResult run = solve(Graph::cycle(5), SystemId::dom, opts);
    std::string feed;
    for (const TranscriptEntry& e : run.transcript.entries) feed += to_hex(e.query.bytes) + "\n";
    RunResult r = run_cli("oracle --system s-dom", feed);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "accept\n");
}

TEST_CASE("exit codes separate input errors from internal ones") {
    REQUIRE(run_cli("solve nosuch -", c5).exit_code == 2);
    REQUIRE(run_cli("solve vertex-cover -", "bogus\n").exit_code == 2);
    REQUIRE(run_cli("solve vertex-cover -", "3 1\n0 9\n").exit_code == 2);
    REQUIRE(run_cli("gen --n 5 --k 2").exit_code == 2);
    REQUIRE(run_cli("gen --n 0").exit_code == 2);
    REQUIRE(run_cli("").exit_code == 2);
    REQUIRE(run_cli("--help").exit_code == 0);
    REQUIRE(run_cli("oracle --system s-del", "zz\n").exit_code == 2);   // not hex at all
    REQUIRE(run_cli("oracle --system s-del", "0005\n").exit_code == 3); // hex but not a query
    REQUIRE(run_cli("oracle --system nosuch", "").exit_code == 2);
}
