#pragma once

// Problem-level routing on top of the tuple engine.  Most problems run their
// value system on the input graph and read one tuple slot.  Three need a
// detour: clique runs the independence system on the complement, the
// one-path question adds a vertex joined to everything and asks the cycle
// question, and connected vertex cover splits off the single component that
// carries edges (reporting n+1 when several do, since no connected cover can
// span them).

#include <optional>
#include <utility>
#include <vector>

#include "mwtk/engine.hpp"
#include "mwtk/graph.hpp"
#include "mwtk/value_system.hpp"

namespace mwtk {

struct ProblemResult {
    int value = 0;          // numeric answer; existence problems use 0 = yes, 1 = no
    ValueTuple tuple;       // root tuple of the run that produced it
    QueryTranscript transcript;
    int run_n = 0;          // order of the graph the engine actually solved
};

namespace solver_detail {

inline Graph with_universal_vertex(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    for (int u = 0; u < n; ++u) edges.emplace_back(u, n);
    return Graph(n + 1, edges);
}

}  // namespace solver_detail

inline ProblemResult solve_problem(const Graph& g, ProblemId problem,
                                   const SolveOptions& opts = {}) {
    const ProblemInfo& info = problem_info(problem);
    int n = g.vertex_count();
    ProblemResult out;

    if (problem == ProblemId::clique) {
        SolveResult run = solve(complement(g), SystemId::ind, opts);
        out.tuple = run.tuple;
        out.transcript = std::move(run.transcript);
        out.run_n = n;
        out.value = derive_answer(problem, out.tuple, out.run_n);
        return out;
    }

    if (problem == ProblemId::hamiltonian_path) {
        if (n == 1) {  // a single vertex is a path; the cycle detour needs n >= 2
            out.value = 0;
            out.run_n = 1;
            out.transcript.system = info.system;
            out.transcript.n = 1;
            return out;
        }
        Graph h = solver_detail::with_universal_vertex(g);
        SolveResult run = solve(h, SystemId::path, opts);
        out.tuple = run.tuple;
        out.transcript = std::move(run.transcript);
        out.run_n = n + 1;
        out.value = derive_answer(problem, out.tuple, out.run_n);
        return out;
    }

    if (problem == ProblemId::connected_vertex_cover && !is_connected(g)) {
        std::vector<VertexSet> comps = components(g);
        std::vector<VertexSet> edgy;
        for (const VertexSet& comp : comps)
            if (comp.size() >= 2 && induced_subgraph(g, comp).graph.edge_count() > 0)
                edgy.push_back(comp);
        out.transcript.system = info.system;
        out.transcript.n = n;
        if (edgy.empty()) {
            out.value = 0;  // nothing to cover
            out.run_n = n;
            return out;
        }
        if (edgy.size() >= 2) {
            out.value = n + 1;  // marker: no connected cover exists
            out.run_n = n;
            return out;
        }
        Graph sub = induced_subgraph(g, edgy[0]).graph;
        SolveResult run = solve(sub, SystemId::del, opts);
        out.tuple = run.tuple;
        out.transcript = std::move(run.transcript);
        out.run_n = sub.vertex_count();
        out.value = derive_answer(problem, out.tuple, out.run_n);
        return out;
    }

    SolveResult run = solve(g, info.system, opts);
    out.tuple = run.tuple;
    out.transcript = std::move(run.transcript);
    out.run_n = n;
    out.value = derive_answer(problem, out.tuple, out.run_n);
    return out;
}

}  // namespace mwtk
