#pragma once

// Instance generators: random graphs with bounded decomposition width,
// or-composition by disjoint union, the packing-refinement construction, and
// the one-path-to-cycle wrapper.  All randomness is mt19937_64 plus modulo so
// the same seed yields the same graph on every platform.

#include <array>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mwtk/graph.hpp"
#include "mwtk/md_tree.hpp"

namespace mwtk {

struct GenSpec {
    int n = 1;
    int k = 0;         // width budget: 0 for none at all, else at least 4
    std::uint64_t seed = 0;
    int depth_cap = 10;
};

namespace gen_detail {

inline int pick(std::mt19937_64& rng, int count) {
    return int(rng() % std::uint64_t(count));
}

// Split size into parts positive entries.
inline std::vector<int> split_sizes(std::mt19937_64& rng, int size, int parts) {
    std::vector<int> out(parts, 1);
    for (int left = size - parts; left > 0; --left) out[pick(rng, parts)] += 1;
    return out;
}

inline bool is_prime_by_tree(const Graph& g) {
    MDTree tree = decompose(g);
    return tree.nodes[tree.root].kind == NodeKind::prime &&
           int(tree.nodes[tree.root].children.size()) == g.vertex_count();
}

inline Graph random_prime_skeleton(std::mt19937_64& rng, int t) {
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < t; ++u)
            for (int v = u + 1; v < t; ++v)
                if (rng() & 1) edges.emplace_back(u, v);
        Graph g(t, edges);
        if (is_prime_by_tree(g)) return g;
    }
}

inline Graph build(std::mt19937_64& rng, int size, int k, int depth, int depth_cap) {
    if (size == 1) return Graph(1);
    if (depth >= depth_cap) {
        return (rng() & 1) ? Graph::complete(size) : Graph::edgeless(size);
    }
    bool prime_possible = k >= 4 && size >= 4;
    bool go_prime = false;
    int t;
    if (prime_possible && (depth == 0 ? pick(rng, 100) < 60 : pick(rng, 100) < 45)) {
        go_prime = true;
        int hi = std::min(k, size);
        // the root aims at the full budget so the target width is actually hit
        t = depth == 0 ? hi : 4 + pick(rng, hi - 3);
    } else {
        t = 2 + pick(rng, std::min(size, 8) - 1);
    }
    Graph skeleton = go_prime ? random_prime_skeleton(rng, t)
                              : ((rng() & 1) ? Graph::complete(t) : Graph::edgeless(t));
    std::vector<int> sizes = split_sizes(rng, size, t);
    std::vector<Graph> parts;
    parts.reserve(t);
    for (int i = 0; i < t; ++i)
        parts.push_back(build(rng, sizes[i], k, depth + 1, depth_cap));
    return substitute(skeleton, parts);
}

}  // namespace gen_detail

inline Graph random_bounded_mw(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("need at least one vertex");
    if (spec.k != 0 && spec.k < 4)
        throw std::invalid_argument("width budget must be 0 or at least 4");
    if (spec.depth_cap < 1) throw std::invalid_argument("depth cap must be positive");
    std::mt19937_64 rng(spec.seed * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull);
    return gen_detail::build(rng, spec.n, spec.k, 0, spec.depth_cap);
}

// Disjoint union of instances: the width of the union is the largest width
// among the parts, and packing-type values add up across parts.
inline Graph or_composition(const std::vector<Graph>& parts) {
    return disjoint_union(parts).graph;
}

// Graph plus one vertex joined to everything: the original has a spanning
// path exactly when the result has a spanning cycle (orders >= 2), and the
// decomposition width never changes.
inline Graph hp_to_hc(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    for (int u = 0; u < n; ++u) edges.emplace_back(u, n);
    return Graph(n + 1, edges);
}

// Triangle-packing refinement instance built from (g, k): alongside a copy of
// g, every original vertex index gets a private triangle whose top vertex is
// joined to all of g; tail vertices pair off with the first n-k triangles'
// base pairs, and one last tail vertex fans across the remaining k pairs.
// The packed triangles witness a packing of size n, and the best packing of
// the whole construction is max(n, n-k+1 + best packing of g), so refining
// past n is exactly deciding whether g packs k triangles.
struct ItprInstance {
    Graph graph;
    std::vector<std::array<int, 3>> triangles;  // the packed witness, one per original vertex
};

inline ItprInstance itpr_reduction(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k < 2 || 3 * k > n)
        throw std::invalid_argument("packing target out of range for this order");
    int x_base = n;               // n - k + 1 tail vertices
    int gadget_base = n + (n - k + 1);
    auto u_of = [&](int i) { return gadget_base + 3 * i; };
    auto w_of = [&](int i) { return gadget_base + 3 * i + 1; };
    auto w2_of = [&](int i) { return gadget_base + 3 * i + 2; };

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(u_of(i), w_of(i));
        edges.emplace_back(u_of(i), w2_of(i));
        edges.emplace_back(w_of(i), w2_of(i));
        for (int v = 0; v < n; ++v) edges.emplace_back(v, u_of(i));
    }
    for (int i = 0; i < n - k; ++i) {
        edges.emplace_back(x_base + i, w_of(i));
        edges.emplace_back(x_base + i, w2_of(i));
    }
    int last_x = x_base + (n - k);
    for (int i = n - k; i < n; ++i) {
        edges.emplace_back(last_x, w_of(i));
        edges.emplace_back(last_x, w2_of(i));
    }

    ItprInstance out{Graph(5 * n - k + 1, edges), {}};
    for (int i = 0; i < n; ++i)
        out.triangles.push_back({u_of(i), w_of(i), w2_of(i)});
    return out;
}

}  // namespace mwtk
