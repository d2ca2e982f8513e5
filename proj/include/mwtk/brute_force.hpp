#pragma once

// Reference implementations that compute every supported graph function
// straight from its definition by exhaustive search.  They are deliberately
// independent of the decomposition machinery so the two can be checked
// against each other.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "mwtk/graph.hpp"
#include "mwtk/value_system.hpp"

namespace mwtk {

namespace bf_detail {

inline void check_size(const Graph& g, int cap) {
    if (g.vertex_count() > cap) throw std::invalid_argument("graph too large for brute force");
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u] |= std::uint32_t(1) << v;
    return adj;
}

inline int pc(std::uint32_t x) { return std::popcount(x); }

inline bool independent(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    for (std::uint32_t rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (adj[v] & s) return false;
    }
    return true;
}

inline bool covers_all_edges(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    std::uint32_t out = ~s;
    for (std::size_t v = 0; v < adj.size(); ++v)
        if ((out >> v) & 1 && (adj[v] & out)) return false;
    return true;
}

inline bool connected_within(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    if (s == 0) return true;
    std::uint32_t seen = std::uint32_t(1) << std::countr_zero(s);
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t rest = frontier; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            next |= adj[v] & s & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == s;
}

inline int component_count(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    int count = 0;
    std::uint32_t left = s;
    while (left) {
        std::uint32_t seen = std::uint32_t(1) << std::countr_zero(left);
        std::uint32_t frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t rest = frontier; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                next |= adj[v] & s & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        left &= ~seen;
        ++count;
    }
    return count;
}

inline int edges_within(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    int twice = 0;
    for (std::uint32_t rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        twice += pc(adj[v] & s);
    }
    return twice / 2;
}

inline bool forest_within(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    return edges_within(adj, s) == pc(s) - component_count(adj, s);
}

inline bool bipartite_within(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    std::vector<int> color(adj.size(), -1);
    for (std::uint32_t rest = s; rest;) {
        int start = std::countr_zero(rest);
        rest &= rest - 1;
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (std::uint32_t nb = adj[v] & s; nb;) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Smallest deletion set whose removal leaves a graph satisfying `keeps`.
inline int min_deletion(const Graph& g, int cap,
                        const std::function<bool(const std::vector<std::uint32_t>&, std::uint32_t)>& keeps) {
    check_size(g, cap);
    auto adj = adjacency_masks(g);
    int n = g.vertex_count();
    std::uint32_t full = (n == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << n) - 1);
    int best = n;
    for (std::uint32_t del = 0; del <= full; ++del) {
        if (pc(del) >= best) continue;
        if (keeps(adj, full & ~del)) best = pc(del);
    }
    return best;
}

}  // namespace bf_detail

inline int bf_max_is(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s)
        if (bf_detail::pc(s) > best && bf_detail::independent(adj, s)) best = bf_detail::pc(s);
    return best;
}

inline int bf_clique(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
        if (bf_detail::pc(s) <= best) continue;
        bool ok = true;
        for (std::uint32_t rest = s; ok && rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((adj[v] & s) != (s & ~(std::uint32_t(1) << v))) ok = false;
        }
        if (ok) best = bf_detail::pc(s);
    }
    return best;
}

inline int bf_min_vc(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    int best = n;
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s)
        if (bf_detail::pc(s) < best && bf_detail::covers_all_edges(adj, s)) best = bf_detail::pc(s);
    return best;
}

// Minimum vertex cover inducing a connected subgraph.  Edgeless graphs get 0;
// if no cover is connected (possible when g is disconnected) the value is
// n + 1 as an explicit "infeasible" marker.
inline int bf_min_cvc(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    if (g.edge_count() == 0) return 0;
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    int best = n + 1;
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s)
        if (bf_detail::pc(s) < best && bf_detail::covers_all_edges(adj, s) &&
            bf_detail::connected_within(adj, s))
            best = bf_detail::pc(s);
    return best;
}

inline int bf_min_dominating(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    int best = n;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (bf_detail::pc(s) >= best) continue;
        std::uint32_t covered = s;
        for (std::uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            covered |= adj[v];
        }
        if (covered == full) best = bf_detail::pc(s);
    }
    return best;
}

// Largest set whose complement is dominating.
inline int bf_nonblocker(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    int best = 0;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (bf_detail::pc(s) <= best) continue;
        std::uint32_t rest_set = full & ~s;
        std::uint32_t covered = rest_set;
        for (std::uint32_t rest = rest_set; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            covered |= adj[v];
        }
        if (covered == full) best = bf_detail::pc(s);
    }
    return best;
}

inline int bf_min_fvs(const Graph& g, int cap = 18) {
    return bf_detail::min_deletion(g, cap, bf_detail::forest_within);
}

inline int bf_min_oct(const Graph& g, int cap = 18) {
    return bf_detail::min_deletion(g, cap, bf_detail::bipartite_within);
}

inline int bf_max_induced_forest(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s)
        if (bf_detail::pc(s) > best && bf_detail::forest_within(adj, s)) best = bf_detail::pc(s);
    return best;
}

namespace bf_detail {

// endpoints[S] = vertices v such that some path starting anywhere in `starts`
// visits exactly S and ends at v.
inline std::vector<std::uint32_t> path_endpoints(const std::vector<std::uint32_t>& adj,
                                                 std::uint32_t starts) {
    int n = int(adj.size());
    std::vector<std::uint32_t> end(std::size_t(1) << n, 0);
    for (std::uint32_t rest = starts; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        end[std::uint32_t(1) << v] |= std::uint32_t(1) << v;
    }
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
        if (!end[s]) continue;
        for (std::uint32_t es = end[s]; es;) {
            int v = std::countr_zero(es);
            es &= es - 1;
            for (std::uint32_t nb = adj[v] & ~s; nb;) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                end[s | (std::uint32_t(1) << u)] |= std::uint32_t(1) << u;
            }
        }
    }
    return end;
}

}  // namespace bf_detail

inline bool bf_hc(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    int n = g.vertex_count();
    if (n < 3) return false;
    auto adj = bf_detail::adjacency_masks(g);
    auto end = bf_detail::path_endpoints(adj, 1);  // paths from vertex 0
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    return (end[full] & adj[0]) != 0;
}

inline bool bf_hp(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    int n = g.vertex_count();
    auto adj = bf_detail::adjacency_masks(g);
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    return bf_detail::path_endpoints(adj, full)[full] != 0;
}

// Fewest vertex-disjoint paths that together use every vertex.
inline int bf_pip(const Graph& g, int cap = 14) {
    bf_detail::check_size(g, cap);
    int n = g.vertex_count();
    auto adj = bf_detail::adjacency_masks(g);
    auto end = bf_detail::path_endpoints(adj, (std::uint32_t(1) << n) - 1);
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    std::vector<int> f(std::size_t(1) << n, n + 1);
    f[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t low = std::uint32_t(1) << std::countr_zero(s);
        for (std::uint32_t t = s; t; t = (t - 1) & s) {
            if (!(t & low) || !end[t]) continue;
            f[s] = std::min(f[s], f[s & ~t] + 1);
        }
    }
    return f[full];
}

// Most vertices inducing a path.
inline int bf_lip(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
        int size = bf_detail::pc(s);
        if (size <= best) continue;
        if (bf_detail::edges_within(adj, s) != size - 1) continue;
        if (!bf_detail::connected_within(adj, s)) continue;
        bool deg_ok = true;
        for (std::uint32_t rest = s; deg_ok && rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (bf_detail::pc(adj[v] & s) > 2) deg_ok = false;
        }
        if (deg_ok) best = size;
    }
    return best;
}

// Most edges in a set inducing a perfect matching on itself.
inline int bf_im(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
        if (bf_detail::pc(s) / 2 <= best) continue;
        bool ok = true;
        for (std::uint32_t rest = s; ok && rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (bf_detail::pc(adj[v] & s) != 1) ok = false;
        }
        if (ok) best = bf_detail::pc(s) / 2;
    }
    return best;
}

// Most components in a set inducing a disjoint union of cycles.
inline int bf_icp(const Graph& g, int cap = 18) {
    bf_detail::check_size(g, cap);
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
        bool ok = s != 0;
        for (std::uint32_t rest = s; ok && rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (bf_detail::pc(adj[v] & s) != 2) ok = false;
        }
        if (ok) best = std::max(best, bf_detail::component_count(adj, s));
    }
    return best;
}

namespace bf_detail {

struct TriangleList {
    std::vector<std::array<int, 3>> triangles;
};

inline std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) continue;
            for (int k = j + 1; k < n; ++k)
                if (g.has_edge(i, k) && g.has_edge(j, k)) out.push_back({i, j, k});
        }
    return out;
}

// Exact maximum independent set on a conflict graph given as bit rows,
// branch and bound with a most-conflicting pivot.
inline void mis_search(const std::vector<std::vector<std::uint64_t>>& rows,
                       std::vector<std::uint64_t> alive, int alive_count, int chosen, int& best) {
    if (chosen + alive_count <= best) return;
    if (alive_count == 0) {
        best = std::max(best, chosen);
        return;
    }
    int pivot = -1, pivot_deg = -1;
    for (std::size_t w = 0; w < alive.size(); ++w)
        for (std::uint64_t bits = alive[w]; bits;) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            int v = int(w * 64 + b);
            int deg = 0;
            for (std::size_t x = 0; x < alive.size(); ++x) deg += std::popcount(rows[v][x] & alive[x]);
            if (deg > pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        }
    // Include the pivot.
    std::vector<std::uint64_t> next = alive;
    int removed = 1;
    next[pivot / 64] &= ~(std::uint64_t(1) << (pivot % 64));
    for (std::size_t w = 0; w < next.size(); ++w) {
        removed += std::popcount(next[w] & rows[pivot][w]);
        next[w] &= ~rows[pivot][w];
    }
    mis_search(rows, next, alive_count - removed, chosen + 1, best);
    // Exclude the pivot.
    alive[pivot / 64] &= ~(std::uint64_t(1) << (pivot % 64));
    mis_search(rows, alive, alive_count - 1, chosen, best);
}

}  // namespace bf_detail

// Most vertex-disjoint triangles whose union induces exactly those triangles
// (no extra edges inside or between them).  Small graphs are scanned by
// subsets; larger ones go through an exact search over the triangle conflict
// graph, which answers the same question because a family of triangles is a
// valid packing exactly when it is pairwise conflict-free.
inline int bf_itp(const Graph& g, int subset_cap = 14, int triangle_cap = 4000) {
    int n = g.vertex_count();
    if (n <= subset_cap) {
        auto adj = bf_detail::adjacency_masks(g);
        int best = 0;
        for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
            bool ok = s != 0;
            for (std::uint32_t rest = s; ok && rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (bf_detail::pc(adj[v] & s) != 2) ok = false;
            }
            if (!ok) continue;
            int size = bf_detail::pc(s);
            if (size / 3 <= best) continue;
            if (bf_detail::component_count(adj, s) * 3 == size) best = size / 3;
        }
        return best;
    }
    auto tris = bf_detail::all_triangles(g);
    int t = int(tris.size());
    if (t > triangle_cap) throw std::invalid_argument("too many triangles for brute force");
    if (t == 0) return 0;
    std::size_t words = std::size_t(t + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(t, std::vector<std::uint64_t>(words, 0));
    auto conflict = [&](int a, int b) {
        for (int x : tris[a])
            for (int y : tris[b])
                if (x == y || g.has_edge(x, y)) return true;
        return false;
    };
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            if (conflict(a, b)) {
                rows[a][b / 64] |= std::uint64_t(1) << (b % 64);
                rows[b][a / 64] |= std::uint64_t(1) << (a % 64);
            }
    std::vector<std::uint64_t> alive(words, 0);
    for (int a = 0; a < t; ++a) alive[a / 64] |= std::uint64_t(1) << (a % 64);
    int best = 0;
    bf_detail::mis_search(rows, alive, t, 0, best);
    return best;
}

inline int bf_chromatic(const Graph& g, int cap = 14) {
    bf_detail::check_size(g, cap);
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    std::vector<char> ind(std::size_t(full) + 1, 0);
    for (std::uint32_t s = 0; s <= full; ++s) ind[s] = bf_detail::independent(adj, s);
    std::vector<int> dp(std::size_t(full) + 1, n + 1);
    dp[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t low = std::uint32_t(1) << std::countr_zero(s);
        for (std::uint32_t t = s; t; t = (t - 1) & s) {
            if (!(t & low) || !ind[t]) continue;
            dp[s] = std::min(dp[s], dp[s & ~t] + 1);
        }
    }
    return dp[full];
}

// All minimum-size masks satisfying a predicate on the chosen set.
namespace bf_detail {
inline std::vector<std::uint32_t> all_min_masks(
    const Graph& g, int cap,
    const std::function<bool(const std::vector<std::uint32_t>&, std::uint32_t)>& good) {
    check_size(g, cap);
    auto adj = adjacency_masks(g);
    int n = g.vertex_count();
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    int best = n + 2;
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (pc(s) > best || !good(adj, s)) continue;
        if (pc(s) < best) {
            best = pc(s);
            out.clear();
        }
        out.push_back(s);
    }
    return out;
}
}  // namespace bf_detail

inline std::vector<std::uint32_t> bf_all_min_vc(const Graph& g, int cap = 18) {
    return bf_detail::all_min_masks(g, cap, bf_detail::covers_all_edges);
}

inline std::vector<std::uint32_t> bf_all_min_dominating(const Graph& g, int cap = 18) {
    auto adj0 = bf_detail::adjacency_masks(g);
    std::uint32_t full = (std::uint32_t(1) << g.vertex_count()) - 1;
    return bf_detail::all_min_masks(g, cap, [full](const std::vector<std::uint32_t>& adj, std::uint32_t s) {
        std::uint32_t covered = s;
        for (std::uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            covered |= adj[v];
        }
        return covered == full;
    });
}

inline std::vector<std::uint32_t> bf_all_min_cvc(const Graph& g, int cap = 18) {
    if (g.edge_count() == 0) return {0};
    return bf_detail::all_min_masks(g, cap, [](const std::vector<std::uint32_t>& adj, std::uint32_t s) {
        return s != 0 && bf_detail::covers_all_edges(adj, s) && bf_detail::connected_within(adj, s);
    });
}

inline std::vector<std::uint32_t> bf_all_min_fvs(const Graph& g, int cap = 18) {
    std::uint32_t full = (std::uint32_t(1) << g.vertex_count()) - 1;
    return bf_detail::all_min_masks(g, cap, [full](const std::vector<std::uint32_t>& adj, std::uint32_t s) {
        return bf_detail::forest_within(adj, full & ~s);
    });
}

inline std::vector<std::uint32_t> bf_all_min_oct(const Graph& g, int cap = 18) {
    std::uint32_t full = (std::uint32_t(1) << g.vertex_count()) - 1;
    return bf_detail::all_min_masks(g, cap, [full](const std::vector<std::uint32_t>& adj, std::uint32_t s) {
        return bf_detail::bipartite_within(adj, full & ~s);
    });
}

// Every nonempty module of g, as vertex masks.
inline std::vector<std::uint32_t> bf_enumerate_modules(const Graph& g, int cap = 16) {
    bf_detail::check_size(g, cap);
    auto adj = bf_detail::adjacency_masks(g);
    int n = g.vertex_count();
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 1; s <= full; ++s) {
        bool ok = true;
        for (int u = 0; ok && u < n; ++u) {
            if ((s >> u) & 1) continue;
            std::uint32_t hit = adj[u] & s;
            if (hit != 0 && hit != s) ok = false;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

// Modules that overlap no other module (every pair is nested or disjoint).
inline std::vector<std::uint32_t> bf_strong_modules(const Graph& g, int cap = 16) {
    auto mods = bf_enumerate_modules(g, cap);
    std::vector<std::uint32_t> out;
    for (std::uint32_t m : mods) {
        bool strong = true;
        for (std::uint32_t other : mods) {
            std::uint32_t both = m & other;
            if (both != 0 && both != m && both != other) {
                strong = false;
                break;
            }
        }
        if (strong) out.push_back(m);
    }
    return out;
}

inline bool is_prime_graph(const Graph& g, int cap = 16) {
    int n = g.vertex_count();
    if (n < 4) return false;
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t m : bf_enumerate_modules(g, cap))
        if (bf_detail::pc(m) != 1 && m != full) return false;
    return true;
}

// The tuple a module summarises to, straight from the definitions.  The
// connected-vertex-cover slot is the graph order when g is disconnected.
inline ValueTuple bf_system_tuple(SystemId id, const Graph& g) {
    int n = g.vertex_count();
    switch (id) {
        case SystemId::col: return {bf_chromatic(g)};
        case SystemId::dom: return {bf_min_dominating(g)};
        case SystemId::del:
            return {n, bf_min_vc(g), is_connected(g) ? bf_min_cvc(g) : n, bf_min_fvs(g), bf_min_oct(g)};
        case SystemId::ind: return {bf_max_is(g)};
        case SystemId::path: return {bf_hc(g) ? 0 : 1, bf_pip(g), n};
        case SystemId::lip: return {bf_lip(g)};
        case SystemId::pack: return {bf_min_vc(g), bf_im(g), bf_itp(g), bf_icp(g), n};
    }
    throw std::invalid_argument("unknown system id");
}

// Problem values computed directly from each problem's own definition.
inline int bf_problem_value(ProblemId id, const Graph& g) {
    switch (id) {
        case ProblemId::chromatic_number: return bf_chromatic(g);
        case ProblemId::dominating_set: return bf_min_dominating(g);
        case ProblemId::nonblocker: return bf_nonblocker(g);
        case ProblemId::vertex_cover: return bf_min_vc(g);
        case ProblemId::connected_vertex_cover: return bf_min_cvc(g);
        case ProblemId::feedback_vertex_set: return bf_min_fvs(g);
        case ProblemId::odd_cycle_transversal: return bf_min_oct(g);
        case ProblemId::maximum_induced_forest: return bf_max_induced_forest(g);
        case ProblemId::independent_set: return bf_max_is(g);
        case ProblemId::clique: return bf_clique(g);
        case ProblemId::hamiltonian_cycle: return bf_hc(g) ? 0 : 1;
        case ProblemId::hamiltonian_path: return bf_hp(g) ? 0 : 1;
        case ProblemId::partitioning_into_paths: return bf_pip(g);
        case ProblemId::longest_induced_path: return bf_lip(g);
        case ProblemId::induced_matching: return bf_im(g);
        case ProblemId::independent_triangle_packing: return bf_itp(g);
        case ProblemId::independent_cycle_packing: return bf_icp(g);
    }
    throw std::invalid_argument("unknown problem id");
}

}  // namespace mwtk
