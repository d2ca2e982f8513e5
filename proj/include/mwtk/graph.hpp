#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "mwtk/errors.hpp"

namespace mwtk {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1, adjacency kept as bit rows.
// Immutable after construction.
class Graph {
public:
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {
        if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    static Graph edgeless(int n) { return Graph(n); }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph path(int n) {
        Graph g(n);
        for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
        return g;
    }

    static Graph cycle(int n) {
        if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
        Graph g = path(n);
        g.add_edge(n - 1, 0);
        return g;
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (bits_[row(u) + v / 64] >> (v % 64)) & 1;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (std::size_t w = 0; w < words_; ++w) d += popcount(bits_[row(v) + w]);
        return d;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (u != v && has_edge(v, u)) out.push_back(u);
        return out;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self loops are not allowed");
        bits_[row(u) + v / 64] |= std::uint64_t(1) << (v % 64);
        bits_[row(v) + u / 64] |= std::uint64_t(1) << (u % 64);
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    }

    static int popcount(std::uint64_t x) {
        int c = 0;
        while (x) {
            x &= x - 1;
            ++c;
        }
        return c;
    }

    std::size_t row(int v) const { return std::size_t(v) * words_; }

    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

inline void check_vertex_set(const Graph& g, const VertexSet& s) {
    int prev = -1;
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex id out of range");
        if (v <= prev) throw std::invalid_argument("vertex set must be strictly increasing");
        prev = v;
    }
}

inline Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new id -> old id
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    if (s.empty()) throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
    int n = int(s.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(s[i], s[j])) edges.emplace_back(i, j);
    return {Graph(n, edges), s};
}

// True when every vertex outside the set sees either all of it or none of it.
inline bool is_module(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : s) in[v] = 1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (in[u]) continue;
        int seen = 0;
        for (int v : s) seen += g.has_edge(u, v) ? 1 : 0;
        if (seen != 0 && seen != int(s.size())) return false;
    }
    return true;
}

inline VertexSet neighbors_of_set(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : s) in[v] = 1;
    VertexSet out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (in[u]) continue;
        for (int v : s)
            if (g.has_edge(u, v)) {
                out.push_back(u);
                break;
            }
    }
    return out;
}

struct DisjointUnion {
    Graph graph;
    std::vector<int> offsets;  // offsets[i] = first vertex id of part i
};

inline DisjointUnion disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw std::invalid_argument("disjoint union needs at least one part");
    int total = 0;
    std::vector<int> offsets;
    for (const Graph& p : parts) {
        offsets.push_back(total);
        total += p.vertex_count();
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int u = 0; u < parts[i].vertex_count(); ++u)
            for (int v = u + 1; v < parts[i].vertex_count(); ++v)
                if (parts[i].has_edge(u, v)) edges.emplace_back(offsets[i] + u, offsets[i] + v);
    return {Graph(total, edges), offsets};
}

// Replace a module with a new graph h: vertices outside the module keep their
// relative order and are relabelled 0..n-|m|-1, then h's vertices follow.
inline Graph modular_replacement(const Graph& g, const VertexSet& m, const Graph& h) {
    check_vertex_set(g, m);
    if (m.empty()) throw std::invalid_argument("module must be nonempty");
    if (!is_module(g, m)) throw std::invalid_argument("replacement target is not a module");
    int n = g.vertex_count();
    std::vector<char> in(n, 0);
    for (int v : m) in[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!in[v]) rest.push_back(v);
    int base = int(rest.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < base; ++i)
        for (int j = i + 1; j < base; ++j)
            if (g.has_edge(rest[i], rest[j])) edges.emplace_back(i, j);
    for (int i = 0; i < h.vertex_count(); ++i)
        for (int j = i + 1; j < h.vertex_count(); ++j)
            if (h.has_edge(i, j)) edges.emplace_back(base + i, base + j);
    for (int i = 0; i < base; ++i)
        if (g.has_edge(rest[i], m[0]))
            for (int j = 0; j < h.vertex_count(); ++j) edges.emplace_back(i, base + j);
    return Graph(base + h.vertex_count(), edges);
}

// Blow-up: replace vertex i of the quotient by factors[i]; adjacent quotient
// vertices become fully joined factors.  Factor i occupies a consecutive id
// block starting at the sum of the earlier factor sizes.
inline Graph substitute(const Graph& quotient, const std::vector<Graph>& factors) {
    int t = quotient.vertex_count();
    if (int(factors.size()) != t) throw std::invalid_argument("one factor per quotient vertex required");
    std::vector<int> offsets;
    int total = 0;
    for (const Graph& f : factors) {
        offsets.push_back(total);
        total += f.vertex_count();
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i)
        for (int u = 0; u < factors[i].vertex_count(); ++u)
            for (int v = u + 1; v < factors[i].vertex_count(); ++v)
                if (factors[i].has_edge(u, v)) edges.emplace_back(offsets[i] + u, offsets[i] + v);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (!quotient.has_edge(i, j)) continue;
            for (int u = 0; u < factors[i].vertex_count(); ++u)
                for (int v = 0; v < factors[j].vertex_count(); ++v)
                    edges.emplace_back(offsets[i] + u, offsets[j] + v);
        }
    return Graph(total, edges);
}

inline std::vector<VertexSet> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> label(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (label[u] == -1) {
                    label[u] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    std::vector<VertexSet> out(next);
    for (int v = 0; v < n; ++v) out[label[v]].push_back(v);
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

}  // namespace mwtk
