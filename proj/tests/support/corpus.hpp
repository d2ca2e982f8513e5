#pragma once

// Deterministic graph builders shared by the test binaries.

#include <random>
#include <vector>

#include "mwtk/graph.hpp"

namespace corpus {

// Same graph for the same (n, seed, percent) on every platform: raw mt19937_64
// draws reduced by modulo, no distribution objects.
inline mwtk::Graph random_graph(int n, unsigned seed, int percent = 50) {
    std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ (seed * 0x2545F4914F6CDD1Dull));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (int(rng() % 100) < percent) edges.emplace_back(u, v);
    return mwtk::Graph(n, edges);
}

inline mwtk::Graph petersen() {
    return mwtk::Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},      // outer cycle
                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},      // inner pentagram
                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});    // spokes
}

inline mwtk::Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return mwtk::Graph(leaves + 1, edges);
}

// K_a joined to an edgeless set of size b.
inline mwtk::Graph split_graph(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = u + 1; v < a; ++v) edges.emplace_back(u, v);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
    return mwtk::Graph(a + b, edges);
}

inline mwtk::Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
    return mwtk::Graph(a + b, edges);
}

// A small spread of named graphs with nontrivial structure.
inline std::vector<mwtk::Graph> small_family() {
    std::vector<mwtk::Graph> out;
    out.push_back(mwtk::Graph(1));
    out.push_back(mwtk::Graph::complete(2));
    out.push_back(mwtk::Graph::edgeless(3));
    out.push_back(mwtk::Graph::path(4));
    out.push_back(mwtk::Graph::cycle(4));
    out.push_back(mwtk::Graph::cycle(5));
    out.push_back(mwtk::Graph::cycle(6));
    out.push_back(mwtk::Graph::complete(4));
    out.push_back(star(3));
    out.push_back(complete_bipartite(2, 3));
    out.push_back(split_graph(3, 3));
    out.push_back(petersen());
    return out;
}

}  // namespace corpus
