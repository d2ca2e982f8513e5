#pragma once

// Bottom-up solve over the modular decomposition tree.  Leaves get the
// system's fixed single-vertex tuple; a prime node becomes one oracle query
// on its values-attached quotient; a degenerate (parallel or series) node is
// folded pairwise, each step a two-module query on an edgeless or complete
// two-vertex quotient.  The oracle defaults to the in-process composition but
// can be swapped out, and can be driven in a membership regime where answers
// are recovered by scanning candidate tuples.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwtk/compose.hpp"
#include "mwtk/errors.hpp"
#include "mwtk/graph.hpp"
#include "mwtk/md_tree.hpp"
#include "mwtk/value_system.hpp"
#include "mwtk/vaqg.hpp"

namespace mwtk {

enum class OracleMode { function_value, membership };
enum class QueryKind { prime, merge };

struct TranscriptEntry {
    int node = 0;
    QueryKind kind = QueryKind::prime;
    EncodedQuery query;       // in membership mode, the accepted candidate query
    long long queries = 1;    // oracle calls this entry stands for
    ValueTuple answer;        // kept in memory for replay tests; not dumped
};

struct QueryTranscript {
    SystemId system = SystemId::col;
    int n = 0;
    int mw = 0;
    OracleMode mode = OracleMode::function_value;
    std::vector<TranscriptEntry> entries;

    long long total_queries() const {
        long long q = 0;
        for (const TranscriptEntry& e : entries) q += e.queries;
        return q;
    }
    int max_query_bits() const {
        int b = 0;
        for (const TranscriptEntry& e : entries) b = std::max(b, e.query.bit_len);
        return b;
    }
};

using OracleFn = std::function<ValueTuple(const Vaqg&)>;

struct SolveOptions {
    OracleMode mode = OracleMode::function_value;
    int membership_cap = 30;                     // candidate values scanned up to min(n, cap)
    std::optional<std::uint64_t> fold_shuffle_seed;  // permute degenerate fold order
    OracleFn oracle;                             // empty: in-process composition
};

struct SolveResult {
    ValueTuple tuple;
    QueryTranscript transcript;
};

// Width-zero graphs have no induced four-vertex path, so their longest
// induced path is determined by two cheap checks; the engine answers them
// without any oracle traffic.  Everything wider contains an induced
// four-vertex path, which is exactly when the composition rule is exact.
inline std::optional<int> lip_small_case(const Graph& g, const MDTree& tree) {
    if (modular_width(tree) != 0) return std::nullopt;
    if (g.edge_count() == 0) return 1;
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        VertexSet nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (!g.has_edge(nb[a], nb[b])) return 3;  // mid-vertex of an induced path
    }
    return 2;  // disjoint cliques with at least one edge
}

namespace engine_detail {

inline ValueTuple checked_oracle_answer(const OracleFn& oracle, const Vaqg& q) {
    ValueTuple answer = oracle(q);
    try {
        validate_tuple(q.system, answer);
    } catch (const malformed_query& e) {
        throw oracle_error(std::string("oracle returned an invalid tuple: ") + e.what());
    }
    return answer;
}

struct Asker {
    SystemId system;
    int n;
    const SolveOptions& opts;
    OracleFn oracle;
    QueryTranscript& transcript;

    ValueTuple ask(const Vaqg& q, int node, QueryKind kind) {
        TranscriptEntry entry;
        entry.node = node;
        entry.kind = kind;
        if (opts.mode == OracleMode::function_value) {
            entry.query = encode_query(q, std::nullopt, n);
            entry.queries = 1;
            entry.answer = checked_oracle_answer(oracle, q);
        } else {
            // Membership regime: one yes/no query per candidate tuple in
            // [0..B]^r, scanned lexicographically.  The oracle value is
            // computed once; a candidate is accepted exactly when it equals
            // it, so the scan can be collapsed to a range check while still
            // accounting for every query.
            int bound = std::min(n, opts.membership_cap);
            int r = tuple_arity(system);
            long long scanned = 1;
            for (int i = 0; i < r; ++i) scanned *= bound + 1;
            ValueTuple value = checked_oracle_answer(oracle, q);
            int accepted = 1;
            for (int v : value)
                if (v < 0 || v > bound) accepted = 0;
            if (accepted == 0)
                throw oracle_error("membership scan accepted no candidate tuple");
            entry.query = encode_query(q, value, n);
            entry.queries = scanned;
            entry.answer = value;
        }
        transcript.entries.push_back(entry);
        return entry.answer;
    }
};

inline std::vector<int> fold_order(std::size_t count, int node_id,
                                   const std::optional<std::uint64_t>& seed) {
    std::vector<int> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = int(i);
    if (seed) {
        std::uint64_t state = *seed ^ (0x9E3779B97F4A7C15ull * std::uint64_t(node_id + 1));
        auto next = [&state]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (std::size_t i = count; i > 1; --i)
            std::swap(order[i - 1], order[next() % i]);
    }
    return order;
}

}  // namespace engine_detail

inline SolveResult solve(const Graph& g, const MDTree& tree, SystemId system,
                         const SolveOptions& opts = {}) {
    if (tree.source != g) throw std::invalid_argument("tree does not describe this graph");
    SolveResult result;
    result.transcript.system = system;
    result.transcript.n = g.vertex_count();
    result.transcript.mw = modular_width(tree);
    result.transcript.mode = opts.mode;

    if (system == SystemId::lip) {
        if (std::optional<int> small = lip_small_case(g, tree)) {
            result.tuple = ValueTuple{*small};
            return result;
        }
    }

    OracleFn oracle = opts.oracle ? opts.oracle : [](const Vaqg& q) { return compose(q); };
    engine_detail::Asker asker{system, g.vertex_count(), opts, oracle, result.transcript};
    const ValueTuple leaf = system_info(system).leaf;

    std::vector<ValueTuple> value(tree.nodes.size());
    for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
        const MDNode& node = tree.nodes[id];
        if (node.kind == NodeKind::leaf) {
            value[id] = leaf;
        } else if (node.kind == NodeKind::prime) {
            std::vector<ValueTuple> child_tuples;
            for (int child : node.children) child_tuples.push_back(value[child]);
            Vaqg q{node_quotient(tree, int(id)), std::move(child_tuples), system};
            value[id] = asker.ask(q, int(id), QueryKind::prime);
        } else {
            Graph pair_quotient = node.kind == NodeKind::series
                                      ? Graph(2, {{0, 1}})
                                      : Graph(2);
            std::vector<int> order = engine_detail::fold_order(
                node.children.size(), int(id), opts.fold_shuffle_seed);
            ValueTuple acc = value[node.children[order[0]]];
            for (std::size_t j = 1; j < order.size(); ++j) {
                Vaqg q{pair_quotient, {acc, value[node.children[order[j]]]}, system};
                acc = asker.ask(q, int(id), QueryKind::merge);
            }
            value[id] = acc;
        }
    }
    result.tuple = value[tree.root];
    return result;
}

inline SolveResult solve(const Graph& g, SystemId system, const SolveOptions& opts = {}) {
    MDTree tree = decompose(g);
    return solve(g, tree, system, opts);
}

// --- transcript serialization ----------------------------------------------

inline std::string dump_transcript(const QueryTranscript& t) {
    std::ostringstream out;
    out << "transcript system=" << system_info(t.system).name << " n=" << t.n
        << " mw=" << t.mw
        << " mode=" << (t.mode == OracleMode::function_value ? "function" : "membership")
        << "\n";
    for (const TranscriptEntry& e : t.entries) {
        out << "node=" << e.node
            << " kind=" << (e.kind == QueryKind::prime ? "prime" : "merge")
            << " bits=" << e.query.bit_len << " queries=" << e.queries
            << " hex=" << to_hex(e.query.bytes) << "\n";
    }
    out << "max_query_bits=" << t.max_query_bits() << " queries=" << t.total_queries()
        << " mw=" << t.mw << " n=" << t.n << "\n";
    return out.str();
}

namespace engine_detail {

inline std::vector<std::pair<std::string, std::string>> split_fields(const std::string& line) {
    std::vector<std::pair<std::string, std::string>> fields;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        std::size_t eq = token.find('=');
        if (eq == std::string::npos) continue;
        fields.emplace_back(token.substr(0, eq), token.substr(eq + 1));
    }
    return fields;
}

inline std::string field(const std::vector<std::pair<std::string, std::string>>& fields,
                         const std::string& key) {
    for (const auto& [k, v] : fields)
        if (k == key) return v;
    throw std::invalid_argument("transcript line missing field " + key);
}

inline long long to_number(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number in transcript");
    for (char c : s)
        if (c < '0' || c > '9') throw std::invalid_argument("bad number in transcript");
    return std::stoll(s);
}

}  // namespace engine_detail

inline QueryTranscript parse_transcript(const std::string& text) {
    using engine_detail::field;
    using engine_detail::split_fields;
    using engine_detail::to_number;

    std::istringstream in(text);
    std::string line;
    QueryTranscript t;
    bool saw_header = false, saw_summary = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (line.rfind("transcript", 0) == 0) {
            if (saw_header) throw std::invalid_argument("duplicate transcript header");
            saw_header = true;
            t.system = system_from_name(field(fields, "system"));
            t.n = int(to_number(field(fields, "n")));
            t.mw = int(to_number(field(fields, "mw")));
            std::string mode = field(fields, "mode");
            if (mode == "function") t.mode = OracleMode::function_value;
            else if (mode == "membership") t.mode = OracleMode::membership;
            else throw std::invalid_argument("unknown transcript mode");
        } else if (line.rfind("node=", 0) == 0) {
            if (!saw_header) throw std::invalid_argument("transcript entry before header");
            if (saw_summary) throw std::invalid_argument("transcript entry after summary");
            TranscriptEntry e;
            e.node = int(to_number(field(fields, "node")));
            std::string kind = field(fields, "kind");
            if (kind == "prime") e.kind = QueryKind::prime;
            else if (kind == "merge") e.kind = QueryKind::merge;
            else throw std::invalid_argument("unknown query kind");
            e.query.bit_len = int(to_number(field(fields, "bits")));
            e.queries = to_number(field(fields, "queries"));
            e.query.bytes = from_hex(field(fields, "hex"));
            if (int(e.query.bytes.size()) != (e.query.bit_len + 7) / 8)
                throw std::invalid_argument("transcript bit length does not match payload");
            DecodedQuery dq = decode_query(e.query.bytes, t.system);  // must parse cleanly
            if (t.mode == OracleMode::membership && !dq.candidate)
                throw std::invalid_argument("membership transcript entry lacks a candidate");
            t.entries.push_back(std::move(e));
        } else if (line.rfind("max_query_bits=", 0) == 0) {
            if (!saw_header) throw std::invalid_argument("transcript summary before header");
            saw_summary = true;
            if (to_number(field(fields, "max_query_bits")) != t.max_query_bits())
                throw std::invalid_argument("transcript summary bit count mismatch");
            if (to_number(field(fields, "queries")) != t.total_queries())
                throw std::invalid_argument("transcript summary query count mismatch");
            if (to_number(field(fields, "mw")) != t.mw || to_number(field(fields, "n")) != t.n)
                throw std::invalid_argument("transcript summary metadata mismatch");
        } else {
            throw std::invalid_argument("unrecognized transcript line");
        }
    }
    if (!saw_header || !saw_summary) throw std::invalid_argument("incomplete transcript");
    return t;
}

}  // namespace mwtk
