#pragma once

#include <string>
#include <vector>

#include "mwtk/errors.hpp"

namespace mwtk {

// The seven value systems. Each system fixes an ordered list of graph
// functions; a module is summarised by the tuple of those function values.
enum class SystemId { col, dom, del, ind, path, lip, pack };

using ValueTuple = std::vector<int>;

enum class Sense { minimize, maximize, existence };

struct SystemInfo {
    SystemId id;
    std::string name;
    std::vector<std::string> functions;
    ValueTuple leaf;  // tuple of a single-vertex graph
};

inline const std::vector<SystemInfo>& all_systems() {
    // s-path carries an indicator as its first slot: 0 when a Hamiltonian
    // cycle exists, 1 otherwise.  s-del's connected-vertex-cover slot equals
    // the graph order when the graph is disconnected, making connectivity
    // readable from the tuple.
    static const std::vector<SystemInfo> table = {
        {SystemId::col, "s-col", {"chromatic"}, {1}},
        {SystemId::dom, "s-dom", {"domination"}, {1}},
        {SystemId::del,
         "s-del",
         {"order", "vertex-cover", "connected-vertex-cover", "feedback-vertex-set",
          "odd-cycle-transversal"},
         {1, 0, 0, 0, 0}},
        {SystemId::ind, "s-ind", {"independence"}, {1}},
        {SystemId::path, "s-path", {"hamiltonicity", "path-partition", "order"}, {1, 1, 1}},
        {SystemId::lip, "s-lip", {"longest-induced-path"}, {1}},
        {SystemId::pack,
         "s-pack",
         {"vertex-cover", "induced-matching", "triangle-packing", "cycle-packing", "order"},
         {0, 0, 0, 0, 1}},
    };
    return table;
}

inline const SystemInfo& system_info(SystemId id) {
    for (const SystemInfo& s : all_systems())
        if (s.id == id) return s;
    throw std::invalid_argument("unknown system id");
}

inline SystemId system_from_name(const std::string& name) {
    for (const SystemInfo& s : all_systems())
        if (s.name == name) return s.id;
    throw std::invalid_argument("unknown system name: " + name);
}

inline int tuple_arity(SystemId id) { return int(system_info(id).functions.size()); }

// Rejects tuples that no graph can produce.  Arity and per-slot sanity only;
// systems whose tuple carries the order get order-relative checks too.
inline void validate_tuple(SystemId id, const ValueTuple& t) {
    const SystemInfo& info = system_info(id);
    if (int(t.size()) != int(info.functions.size())) throw malformed_query("tuple arity mismatch");
    for (int v : t)
        if (v < 0) throw malformed_query("negative tuple entry");
    switch (id) {
        case SystemId::col:
        case SystemId::dom:
        case SystemId::ind:
        case SystemId::lip:
            if (t[0] < 1) throw malformed_query("value must be positive");
            break;
        case SystemId::del: {
            int n = t[0], vc = t[1], cvc = t[2], fvs = t[3], oct = t[4];
            if (n < 1) throw malformed_query("order must be positive");
            if (vc > n - 1) throw malformed_query("vertex cover exceeds order minus one");
            if (fvs > vc || oct > vc) throw malformed_query("deletion value exceeds vertex cover");
            if (cvc < vc || cvc > n) throw malformed_query("connected cover out of range");
            if (fvs > n - 1 || oct > n - 1) throw malformed_query("deletion value exceeds order minus one");
            break;
        }
        case SystemId::path: {
            int hc = t[0], pip = t[1], n = t[2];
            if (n < 1) throw malformed_query("order must be positive");
            if (hc != 0 && hc != 1) throw malformed_query("hamiltonicity flag must be 0 or 1");
            if (pip < 1 || pip > n) throw malformed_query("path partition out of range");
            if (hc == 0 && (n < 3 || pip != 1)) throw malformed_query("hamiltonian tuple inconsistent");
            break;
        }
        case SystemId::pack: {
            int vc = t[0], im = t[1], itp = t[2], icp = t[3], n = t[4];
            if (n < 1) throw malformed_query("order must be positive");
            if (vc > n - 1) throw malformed_query("vertex cover exceeds order minus one");
            if ((vc >= 1) != (im >= 1)) throw malformed_query("edge presence flags disagree");
            if (im > n / 2 || itp > n / 3 || icp > n / 3) throw malformed_query("packing value too large");
            if (vc == 0 && (itp != 0 || icp != 0)) throw malformed_query("edgeless graph cannot pack");
            break;
        }
    }
}

// The seventeen supported problems.
enum class ProblemId {
    chromatic_number,
    dominating_set,
    nonblocker,
    vertex_cover,
    connected_vertex_cover,
    feedback_vertex_set,
    odd_cycle_transversal,
    maximum_induced_forest,
    independent_set,
    clique,
    hamiltonian_cycle,
    hamiltonian_path,
    partitioning_into_paths,
    longest_induced_path,
    induced_matching,
    independent_triangle_packing,
    independent_cycle_packing,
};

struct ProblemInfo {
    ProblemId id;
    std::string name;
    SystemId system;
    Sense sense;
};

inline const std::vector<ProblemInfo>& all_problems() {
    static const std::vector<ProblemInfo> table = {
        {ProblemId::chromatic_number, "chromatic-number", SystemId::col, Sense::minimize},
        {ProblemId::dominating_set, "dominating-set", SystemId::dom, Sense::minimize},
        {ProblemId::nonblocker, "nonblocker", SystemId::dom, Sense::maximize},
        {ProblemId::vertex_cover, "vertex-cover", SystemId::del, Sense::minimize},
        {ProblemId::connected_vertex_cover, "connected-vertex-cover", SystemId::del, Sense::minimize},
        {ProblemId::feedback_vertex_set, "feedback-vertex-set", SystemId::del, Sense::minimize},
        {ProblemId::odd_cycle_transversal, "odd-cycle-transversal", SystemId::del, Sense::minimize},
        {ProblemId::maximum_induced_forest, "maximum-induced-forest", SystemId::del, Sense::maximize},
        {ProblemId::independent_set, "independent-set", SystemId::ind, Sense::maximize},
        {ProblemId::clique, "clique", SystemId::ind, Sense::maximize},
        {ProblemId::hamiltonian_cycle, "hamiltonian-cycle", SystemId::path, Sense::existence},
        {ProblemId::hamiltonian_path, "hamiltonian-path", SystemId::path, Sense::existence},
        {ProblemId::partitioning_into_paths, "partitioning-into-paths", SystemId::path, Sense::minimize},
        {ProblemId::longest_induced_path, "longest-induced-path", SystemId::lip, Sense::maximize},
        {ProblemId::induced_matching, "induced-matching", SystemId::pack, Sense::maximize},
        {ProblemId::independent_triangle_packing, "independent-triangle-packing", SystemId::pack,
         Sense::maximize},
        {ProblemId::independent_cycle_packing, "independent-cycle-packing", SystemId::pack,
         Sense::maximize},
    };
    return table;
}

inline const ProblemInfo& problem_info(ProblemId id) {
    for (const ProblemInfo& p : all_problems())
        if (p.id == id) return p;
    throw std::invalid_argument("unknown problem id");
}

inline ProblemId problem_from_name(const std::string& name) {
    for (const ProblemInfo& p : all_problems())
        if (p.name == name) return p.id;
    throw std::invalid_argument("unknown problem name: " + name);
}

// Extract a problem's value from the tuple of the graph the engine actually
// ran on.  run_n is that graph's order (it differs from the input order for
// problems solved through an auxiliary run).
inline int derive_answer(ProblemId id, const ValueTuple& t, int run_n) {
    switch (id) {
        case ProblemId::chromatic_number: return t.at(0);
        case ProblemId::dominating_set: return t.at(0);
        case ProblemId::nonblocker: return run_n - t.at(0);
        case ProblemId::vertex_cover: return t.at(1);
        case ProblemId::connected_vertex_cover: return t.at(2);
        case ProblemId::feedback_vertex_set: return t.at(3);
        case ProblemId::odd_cycle_transversal: return t.at(4);
        case ProblemId::maximum_induced_forest: return run_n - t.at(3);
        case ProblemId::independent_set: return t.at(0);
        case ProblemId::clique: return t.at(0);
        case ProblemId::hamiltonian_cycle: return t.at(0);
        case ProblemId::hamiltonian_path: return t.at(0);
        case ProblemId::partitioning_into_paths: return t.at(1);
        case ProblemId::longest_induced_path: return t.at(0);
        case ProblemId::induced_matching: return t.at(1);
        case ProblemId::independent_triangle_packing: return t.at(2);
        case ProblemId::independent_cycle_packing: return t.at(3);
    }
    throw std::invalid_argument("unknown problem id");
}

// Decision form: minimisation asks value <= k, maximisation asks value >= k,
// existence ignores k and asks whether the indicator is 0.
inline bool decision(ProblemId id, int value, int k) {
    switch (problem_info(id).sense) {
        case Sense::minimize: return value <= k;
        case Sense::maximize: return value >= k;
        case Sense::existence: return value == 0;
    }
    throw std::invalid_argument("unknown sense");
}

}  // namespace mwtk
