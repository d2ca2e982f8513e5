#pragma once

// Modular decomposition.  A module is a vertex set whose members are
// indistinguishable from outside; the decomposition tree nests the strong
// modules.  Internal nodes are parallel (disconnected factor), series
// (disconnected complement), or prime (both connected; children are the
// maximal proper modules, and there are always at least four of them).

#include <numeric>
#include <string>
#include <vector>

#include "mwtk/brute_force.hpp"
#include "mwtk/errors.hpp"
#include "mwtk/graph.hpp"

namespace mwtk {

enum class NodeKind { leaf, parallel, series, prime };

inline const char* kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::leaf: return "leaf";
        case NodeKind::parallel: return "parallel";
        case NodeKind::series: return "series";
        case NodeKind::prime: return "prime";
    }
    return "?";
}

struct MDNode {
    NodeKind kind;
    VertexSet module;           // source vertices, ascending
    std::vector<int> children;  // node ids, ordered by smallest vertex
};

struct MDTree {
    Graph source;
    std::vector<MDNode> nodes;  // post-order: children precede parents
    int root;
};

namespace md_detail {

// Smallest module of f containing both a and b, grown by absorbing splitters:
// any vertex with both a neighbour and a non-neighbour inside the set must
// belong to every module containing the set.
inline std::vector<char> min_module_mask(const Graph& f, int a, int b) {
    int n = f.vertex_count();
    std::vector<char> in(n, 0);
    std::vector<int> cnt(n, 0);
    int size = 0;
    auto add = [&](int v) {
        in[v] = 1;
        ++size;
        for (int w = 0; w < n; ++w)
            if (!in[w] && f.has_edge(w, v)) ++cnt[w];
    };
    add(a);
    add(b);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < n; ++v)
            if (!in[v] && cnt[v] > 0 && cnt[v] < size) {
                add(v);
                grew = true;
            }
    }
    return in;
}

// Maximal proper modules of a factor that is connected and co-connected.
// Two vertices share a part exactly when some proper module holds both.
inline std::vector<VertexSet> prime_parts(const Graph& f) {
    int n = f.vertex_count();
    std::vector<char> assigned(n, 0);
    std::vector<VertexSet> parts;
    for (int u = 0; u < n; ++u) {
        if (assigned[u]) continue;
        VertexSet part{u};
        assigned[u] = 1;
        for (int w = u + 1; w < n; ++w) {
            if (assigned[w]) continue;
            auto mask = min_module_mask(f, u, w);
            int size = 0;
            for (char c : mask) size += c;
            if (size < n) {
                part.push_back(w);
                assigned[w] = 1;
            }
        }
        parts.push_back(part);
    }
    return parts;
}

inline int decompose_rec(const Graph& g, const VertexSet& module, std::vector<MDNode>& nodes) {
    if (module.size() == 1) {
        nodes.push_back({NodeKind::leaf, module, {}});
        return int(nodes.size()) - 1;
    }
    auto [factor, to_parent] = induced_subgraph(g, module);
    NodeKind kind;
    std::vector<VertexSet> child_sets = components(factor);
    if (child_sets.size() >= 2) {
        kind = NodeKind::parallel;
    } else {
        child_sets = components(complement(factor));
        if (child_sets.size() >= 2) {
            kind = NodeKind::series;
        } else {
            kind = NodeKind::prime;
            child_sets = prime_parts(factor);
            if (child_sets.size() < 4)
                throw decomposition_error("prime node with fewer than four parts");
        }
    }
    std::vector<int> children;
    for (const VertexSet& cs : child_sets) {
        VertexSet mapped;
        for (int v : cs) mapped.push_back(to_parent[v]);
        children.push_back(decompose_rec(g, mapped, nodes));
    }
    nodes.push_back({kind, module, children});
    return int(nodes.size()) - 1;
}

}  // namespace md_detail

inline MDTree decompose(const Graph& g) {
    VertexSet all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    MDTree tree{g, {}, -1};
    tree.root = md_detail::decompose_rec(g, all, tree.nodes);
    return tree;
}

// Graph on a node's children; child i and child j are joined when their
// modules are fully joined in the source.  Mixed adjacency means the tree
// does not describe the source graph.
inline Graph node_quotient(const MDTree& tree, int id) {
    const MDNode& node = tree.nodes.at(id);
    if (node.kind == NodeKind::leaf) return Graph(1);
    int t = int(node.children.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            const VertexSet& a = tree.nodes[node.children[i]].module;
            const VertexSet& b = tree.nodes[node.children[j]].module;
            long long cross = 0;
            for (int u : a)
                for (int v : b) cross += tree.source.has_edge(u, v) ? 1 : 0;
            if (cross == 0) continue;
            if (cross != (long long)a.size() * (long long)b.size())
                throw decomposition_error("children are not joined all-or-none");
            edges.emplace_back(i, j);
        }
    return Graph(t, edges);
}

// Largest fan-out over prime nodes; 0 when the tree has none.
inline int modular_width(const MDTree& tree) {
    int best = 0;
    for (const MDNode& node : tree.nodes)
        if (node.kind == NodeKind::prime) best = std::max(best, int(node.children.size()));
    return best;
}

inline int modular_width(const Graph& g) { return modular_width(decompose(g)); }

// Independent characterisation: the largest vertex set inducing a graph with
// only trivial modules (or 0 when no set of size four or more does).
inline int mw_bruteforce(const Graph& g, int cap = 12) {
    bf_detail::check_size(g, cap);
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
        int size = bf_detail::pc(s);
        if (size < 4 || size <= best) continue;
        VertexSet vs;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1) vs.push_back(v);
        if (is_prime_graph(induced_subgraph(g, vs).graph)) best = size;
    }
    return best;
}

inline std::string format_vertex_set(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

inline std::string serialize_tree(const MDTree& tree) {
    std::string out;
    auto walk = [&](auto&& self, int id, int depth) -> void {
        const MDNode& node = tree.nodes.at(id);
        out.append(std::size_t(depth) * 2, ' ');
        out += kind_name(node.kind);
        out += " module=";
        out += format_vertex_set(node.module);
        out += "\n";
        for (int c : node.children) self(self, c, depth + 1);
    };
    walk(walk, tree.root, 0);
    return out;
}

// Definitional audit.  Returns human-readable problems, empty when sound.
// Small graphs additionally get a full strong-module reconstruction check.
inline std::vector<std::string> validate_tree(const MDTree& tree) {
    std::vector<std::string> issues;
    const Graph& g = tree.source;
    int n = g.vertex_count();
    auto complain = [&](int id, const std::string& what) {
        issues.push_back("node " + std::to_string(id) + ": " + what);
    };

    if (tree.root < 0 || tree.root >= int(tree.nodes.size())) {
        issues.push_back("root id out of range");
        return issues;
    }
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    if (tree.nodes[tree.root].module != all) issues.push_back("root module is not the whole vertex set");

    for (int id = 0; id < int(tree.nodes.size()); ++id) {
        const MDNode& node = tree.nodes[id];
        const VertexSet& m = node.module;
        if (m.empty()) {
            complain(id, "empty module");
            continue;
        }
        if (!std::is_sorted(m.begin(), m.end()) || std::adjacent_find(m.begin(), m.end()) != m.end()) {
            complain(id, "module not sorted or has duplicates");
            continue;
        }
        if (!is_module(g, m)) complain(id, "not a module of the source graph");
        if (node.kind == NodeKind::leaf) {
            if (m.size() != 1) complain(id, "leaf with more than one vertex");
            if (!node.children.empty()) complain(id, "leaf with children");
            continue;
        }
        if (node.children.size() < 2) complain(id, "internal node with fewer than two children");
        VertexSet merged;
        for (int c : node.children) {
            if (c < 0 || c >= int(tree.nodes.size()) || c == id) {
                complain(id, "bad child id");
                continue;
            }
            const VertexSet& cm = tree.nodes[c].module;
            merged.insert(merged.end(), cm.begin(), cm.end());
        }
        std::sort(merged.begin(), merged.end());
        if (merged != m) complain(id, "children do not partition the module");

        Graph factor = induced_subgraph(g, m).graph;
        switch (node.kind) {
            case NodeKind::parallel:
                if (is_connected(factor)) complain(id, "parallel node with connected factor");
                for (int c : node.children)
                    if (!is_connected(induced_subgraph(g, tree.nodes[c].module).graph))
                        complain(id, "parallel child is not a connected piece");
                break;
            case NodeKind::series:
                if (is_connected(complement(factor))) complain(id, "series node with co-connected factor");
                for (int c : node.children)
                    if (!is_connected(complement(induced_subgraph(g, tree.nodes[c].module).graph)))
                        complain(id, "series child is not a co-connected piece");
                break;
            case NodeKind::prime: {
                if (!is_connected(factor) || !is_connected(complement(factor)))
                    complain(id, "prime node must be connected and co-connected");
                if (node.children.size() < 4) complain(id, "prime node with fewer than four children");
                try {
                    Graph q = node_quotient(tree, id);
                    if (q.vertex_count() <= 16 && !is_prime_graph(q))
                        complain(id, "quotient of a prime node is not prime");
                } catch (const decomposition_error& e) {
                    complain(id, e.what());
                }
                break;
            }
            default: break;
        }
    }

    // The tree's modules must be exactly the strong modules.
    if (n <= 10 && issues.empty()) {
        std::vector<std::uint32_t> from_tree;
        for (const MDNode& node : tree.nodes) {
            std::uint32_t mask = 0;
            for (int v : node.module) mask |= std::uint32_t(1) << v;
            from_tree.push_back(mask);
        }
        std::sort(from_tree.begin(), from_tree.end());
        auto expected = bf_strong_modules(g);
        std::sort(expected.begin(), expected.end());
        if (from_tree != expected) issues.push_back("tree nodes are not the strong modules");
    }
    return issues;
}

}  // namespace mwtk
