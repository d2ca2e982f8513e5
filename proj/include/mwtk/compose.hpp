#pragma once

// Composition: evaluate a value system on the blow-up described by a
// values-attached quotient graph, reading only the quotient and the per-module
// value tuples.  This is the oracle the solve engine queries; it never looks
// at the original factors.  Quotient sizes are expected to be small (bounded
// by the decomposition width), so exponential-in-t enumeration is fine; each
// system enforces an explicit size cap and throws std::invalid_argument
// beyond it.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mwtk/errors.hpp"
#include "mwtk/graph.hpp"
#include "mwtk/value_system.hpp"
#include "mwtk/vaqg.hpp"

namespace mwtk {

// Counters for tests that want to observe which tuple entries a composition
// actually consumed.
struct ComposeStats {
    long long path_flag_reads = 0;
};

inline ComposeStats& compose_stats() {
    static thread_local ComposeStats stats;
    return stats;
}

inline void validate_vaqg(const Vaqg& q) {
    int t = q.quotient.vertex_count();
    if (t < 2) throw malformed_query("quotient needs at least two vertices");
    if (int(q.tuples.size()) != t) throw malformed_query("one value tuple per quotient vertex required");
    for (const ValueTuple& tup : q.tuples) validate_tuple(q.system, tup);
}

namespace compose_detail {

constexpr int kMaxSubsetQuotient = 24;   // 2^t scans (independent set, path search)
constexpr int kMaxTernaryQuotient = 15;  // 3^t scans (domination)
constexpr int kMaxDeletionQuotient = 12; // 3^t with per-mask graph checks
constexpr int kMaxPackingQuotient = 18;  // 2^t with per-mask component checks
constexpr int kMaxRealization = 20;      // subset DP over the realized graph
constexpr int kMaxColorDemand = 64;      // total multicoloring demand

inline void check_cap(int value, int cap, const char* what) {
    if (value > cap) throw std::invalid_argument(std::string(what) + " too large for composition");
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v)) adj[u] |= (1u << v);
    return adj;
}

inline int popcount32(std::uint32_t x) {
    int c = 0;
    while (x) {
        x &= x - 1;
        ++c;
    }
    return c;
}

inline bool mask_independent(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    for (std::uint32_t rest = s; rest;) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        if (adj[v] & s) return false;
    }
    return true;
}

inline bool mask_connected(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    if (s == 0) return true;
    std::uint32_t seen = s & (~s + 1);  // lowest bit
    for (;;) {
        std::uint32_t grow = seen;
        for (std::uint32_t rest = seen; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            grow |= adj[v] & s;
        }
        if (grow == seen) break;
        seen = grow;
    }
    return seen == s;
}

inline int mask_edge_count(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    int twice = 0;
    for (std::uint32_t rest = s; rest;) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        twice += popcount32(adj[v] & s);
    }
    return twice / 2;
}

inline bool mask_forest(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    // A graph is a forest iff every connected part has edges = vertices - 1;
    // equivalently total edges = vertices - components.
    int vertices = popcount32(s);
    int edges = mask_edge_count(adj, s);
    int comps = 0;
    std::uint32_t left = s;
    while (left) {
        std::uint32_t start = left & (~left + 1);
        std::uint32_t seen = start;
        for (;;) {
            std::uint32_t grow = seen;
            for (std::uint32_t rest = seen; rest;) {
                int v = __builtin_ctz(rest);
                rest &= rest - 1;
                grow |= adj[v] & s;
            }
            if (grow == seen) break;
            seen = grow;
        }
        ++comps;
        left &= ~seen;
    }
    return edges == vertices - comps;
}

inline bool mask_bipartite(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    std::vector<int> color(32, -1);
    for (std::uint32_t left = s; left;) {
        int start = __builtin_ctz(left);
        if (color[start] == -1) {
            color[start] = 0;
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (std::uint32_t rest = adj[v] & s; rest;) {
                    int u = __builtin_ctz(rest);
                    rest &= rest - 1;
                    if (color[u] == -1) {
                        color[u] = 1 - color[v];
                        stack.push_back(u);
                    } else if (color[u] == color[v]) {
                        return false;
                    }
                }
            }
        }
        left &= left - 1;
    }
    return true;
}

// --- independence system -------------------------------------------------

inline long long compose_ind(const Graph& x, const std::vector<ValueTuple>& tuples) {
    int t = x.vertex_count();
    check_cap(t, kMaxSubsetQuotient, "quotient");
    auto adj = adjacency_masks(x);
    long long best = 0;
    for (std::uint32_t s = 1; s < (1u << t); ++s) {
        if (!mask_independent(adj, s)) continue;
        long long sum = 0;
        for (std::uint32_t rest = s; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            sum += tuples[v][0];
        }
        best = std::max(best, sum);
    }
    return best;
}

// --- domination system ---------------------------------------------------

// Per module: leave it empty, place one vertex, or place a dominating set of
// the factor.  A module is internally fine if it got a full dominating set,
// if its single vertex already dominates the factor, or if any neighbouring
// module is occupied (joins dominate everything across a quotient edge).
inline long long compose_dom(const Graph& x, const std::vector<ValueTuple>& tuples) {
    int t = x.vertex_count();
    check_cap(t, kMaxTernaryQuotient, "quotient");
    auto adj = adjacency_masks(x);
    long long total_states = 1;
    for (int i = 0; i < t; ++i) total_states *= 3;
    long long best = std::numeric_limits<long long>::max();
    std::vector<int> choice(t);
    for (long long code = 0; code < total_states; ++code) {
        long long c = code;
        std::uint32_t occupied = 0;
        long long cost = 0;
        for (int i = 0; i < t; ++i) {
            choice[i] = int(c % 3);
            c /= 3;
            if (choice[i] == 1) {
                cost += 1;
                occupied |= (1u << i);
            } else if (choice[i] == 2) {
                cost += tuples[i][0];
                occupied |= (1u << i);
            }
        }
        if (cost >= best) continue;
        bool ok = true;
        for (int i = 0; i < t && ok; ++i) {
            if (choice[i] == 2) continue;
            if (choice[i] == 1 && tuples[i][0] == 1) continue;
            if ((adj[i] & occupied) == 0) ok = false;
        }
        if (ok) best = std::min(best, cost);
    }
    return best;
}

// --- deletion system -----------------------------------------------------

// Shared by the deletion and packing systems: minimum vertex cover of the
// blow-up.  A module either goes fully into the cover or contributes a
// minimum cover of its factor; modules left partially exposed must be
// pairwise non-adjacent in the quotient.
inline long long compose_vc(const Graph& x, const std::vector<long long>& n,
                            const std::vector<long long>& vc) {
    int t = x.vertex_count();
    auto adj = adjacency_masks(x);
    long long best = std::numeric_limits<long long>::max();
    for (std::uint32_t full = 0; full < (1u << t); ++full) {
        std::uint32_t exposed = ~full & ((1u << t) - 1);
        if (!mask_independent(adj, exposed)) continue;
        long long cost = 0;
        for (int i = 0; i < t; ++i) cost += (full >> i & 1) ? n[i] : vc[i];
        best = std::min(best, cost);
    }
    return best;
}

// Connected vertex cover with the convention that a disconnected graph gets
// the marker value n.  Modules with zero exposure (taken whole) form set Z;
// the rest must be pairwise non-adjacent.  Occupied modules must induce a
// connected quotient subgraph; a single occupied module must additionally
// have a connected factor, which the marker convention lets us read off the
// module's own tuple.
inline long long compose_cvc(const Graph& x, const std::vector<long long>& n,
                             const std::vector<long long>& vc,
                             const std::vector<long long>& cvc) {
    int t = x.vertex_count();
    long long total = 0;
    for (long long v : n) total += v;
    if (!is_connected(x)) return total;

    auto adj = adjacency_masks(x);
    std::uint32_t all = (1u << t) - 1;
    long long best = total;  // taking every vertex always works when connected
    for (std::uint32_t z = 0; z <= all; ++z) {
        if (!mask_independent(adj, all & ~z)) continue;
        long long base = 0;
        for (int i = 0; i < t; ++i)
            if (z >> i & 1) base += n[i];
        if (base >= best) continue;
        std::uint32_t rest = all & ~z;
        // Enumerate which of the exposed modules are occupied anyway.
        for (std::uint32_t occ = rest;; occ = (occ - 1) & rest) {
            long long cost = base;
            bool ok = true;
            for (int i = 0; i < t && ok; ++i) {
                if (!(rest >> i & 1)) continue;
                if (occ >> i & 1)
                    cost += std::max(vc[i], 1ll);
                else if (vc[i] != 0)
                    ok = false;  // internal edges would stay uncovered
            }
            std::uint32_t support = z | occ;
            if (ok && support == 0) ok = false;
            if (ok && !mask_connected(adj, support)) ok = false;
            if (ok && popcount32(support) == 1) {
                int i = __builtin_ctz(support);
                if (!(z >> i & 1)) ok = false;          // exposed neighbours uncovered
                else if (cvc[i] >= n[i]) ok = false;    // factor itself disconnected
            }
            if (ok) best = std::min(best, cost);
            if (occ == 0) break;
        }
    }
    return best;
}

// Feedback vertex set.  Kept vertices per module fall into classes: nothing,
// a single vertex, a maximum independent set, or a maximum induced forest
// (which contains an edge exactly when the factor has one).  The quotient
// restricted to keeping modules must be a forest, every quotient edge needs a
// side that keeps only one vertex, modules keeping two or more vertices can
// have at most one keeping neighbour, and modules whose kept part has an edge
// can have none.  For a fixed support those rules decouple: degree >= 2
// modules are forced to a single kept vertex, endpoints of isolated support
// edges trade off which side stays small, and everything else picks its
// cheapest legal class.
inline long long compose_fvs(const Graph& x, const std::vector<long long>& n,
                             const std::vector<long long>& vc,
                             const std::vector<long long>& fvs) {
    int t = x.vertex_count();
    auto adj = adjacency_masks(x);

    // Cheapest deletion leaving: any nonempty edgeless kept set, a kept set of
    // exactly one vertex, anything nonempty at all.
    std::vector<long long> cost_edgeless(t), cost_single(t), cost_any(t);
    std::vector<long long> alpha(t), forest_size(t);
    std::vector<bool> forest_has_edge(t);
    for (int i = 0; i < t; ++i) {
        alpha[i] = n[i] - vc[i];
        forest_size[i] = n[i] - fvs[i];
        forest_has_edge[i] = vc[i] >= 1;
        cost_edgeless[i] = vc[i];
        cost_single[i] = n[i] - 1;
        if (alpha[i] == 1) cost_single[i] = std::min(cost_single[i], vc[i]);
        if (!forest_has_edge[i] && forest_size[i] == 1)
            cost_single[i] = std::min(cost_single[i], fvs[i]);
        cost_any[i] = std::min(cost_edgeless[i], fvs[i]);
    }

    long long total = 0;
    for (long long v : n) total += v;
    long long best = total;  // empty support: delete everything
    for (std::uint32_t support = 1; support < (1u << t); ++support) {
        if (!mask_forest(adj, support)) continue;
        long long cost = 0;
        for (int i = 0; i < t; ++i)
            if (!(support >> i & 1)) cost += n[i];
        std::uint32_t handled = 0;
        bool ok = true;
        for (std::uint32_t rest = support; rest && ok;) {
            int i = __builtin_ctz(rest);
            rest &= rest - 1;
            if (handled >> i & 1) continue;
            int deg = popcount32(adj[i] & support);
            if (deg == 0) {
                cost += cost_any[i];
            } else if (deg >= 2) {
                cost += cost_single[i];
            } else {
                int j = __builtin_ctz(adj[i] & support);
                int degj = popcount32(adj[j] & support);
                if (degj >= 2) {
                    cost += cost_edgeless[i];  // neighbour is forced small
                } else {
                    // isolated support edge: one side keeps a single vertex
                    cost += std::min(cost_single[i] + cost_edgeless[j],
                                     cost_edgeless[i] + cost_single[j]);
                    handled |= (1u << j);
                }
            }
        }
        if (ok && cost < best) best = cost;
    }
    return best;
}

// Odd cycle transversal.  Kept classes: nothing, edgeless, or bipartite with
// an edge.  Edge-keeping modules must be isolated among keepers; the quotient
// restricted to edgeless keepers must be bipartite.
inline long long compose_oct(const Graph& x, const std::vector<long long>& n,
                             const std::vector<long long>& vc,
                             const std::vector<long long>& oct) {
    int t = x.vertex_count();
    auto adj = adjacency_masks(x);
    long long total = 0;
    for (long long v : n) total += v;
    long long best = total;
    for (std::uint32_t support = 1; support < (1u << t); ++support) {
        long long cost = 0;
        std::uint32_t linked = 0;
        for (int i = 0; i < t; ++i) {
            if (!(support >> i & 1)) {
                cost += n[i];
            } else if (adj[i] & support) {
                linked |= (1u << i);
                cost += vc[i];  // must keep an edgeless part
            } else {
                cost += oct[i];  // isolated: cheapest bipartite kept part
            }
        }
        if (cost < best && mask_bipartite(adj, linked)) best = cost;
    }
    return best;
}

// --- path system ---------------------------------------------------------

inline bool own_hamiltonian_cycle(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    auto adj = adjacency_masks(g);
    // reachable[s] = set of possible endpoints of a path that starts at 0 and
    // visits exactly the vertices of s.
    std::vector<std::uint32_t> reachable(std::size_t(1) << n, 0);
    reachable[1] = 1;
    std::uint32_t full = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (!(s & 1)) continue;
        std::uint32_t ends = reachable[s];
        if (!ends) continue;
        for (std::uint32_t rest = ends; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            std::uint32_t nxt = adj[v] & ~s;
            while (nxt) {
                int u = __builtin_ctz(nxt);
                nxt &= nxt - 1;
                reachable[s | (1u << u)] |= (1u << u);
            }
        }
    }
    return (reachable[full] & adj[0]) != 0;
}

inline int own_path_partition(const Graph& g) {
    int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    std::uint32_t full = (1u << n) - 1;
    // dp[s * n + v] = fewest paths covering s where the current path ends at v.
    // Transitions only add vertices, so dp[s][*] is final once the loop
    // reaches mask s.
    std::vector<std::int8_t> dp(std::size_t(full + 1) * n, std::int8_t(127));
    for (int v = 0; v < n; ++v) dp[(std::size_t(1) << v) * n + v] = 1;
    for (std::uint32_t s = 1; s < full; ++s) {
        std::int8_t open = 127;
        for (int v = 0; v < n; ++v) {
            if (!(s >> v & 1)) continue;
            std::int8_t cur = dp[std::size_t(s) * n + v];
            if (cur == 127) continue;
            if (cur < open) open = cur;
            std::uint32_t ext = adj[v] & ~s;
            while (ext) {
                int u = __builtin_ctz(ext);
                ext &= ext - 1;
                std::size_t idx = std::size_t(s | (1u << u)) * n + u;
                if (cur < dp[idx]) dp[idx] = cur;
            }
        }
        if (open == 127) continue;
        for (int u = 0; u < n; ++u) {
            if (s >> u & 1) continue;
            std::size_t idx = std::size_t(s | (1u << u)) * n + u;
            if (open + 1 < dp[idx]) dp[idx] = std::int8_t(open + 1);
        }
    }
    int best = 127;
    for (int v = 0; v < n; ++v) best = std::min(best, int(dp[std::size_t(full) * n + v]));
    return best;
}

// Canonical realization of a path tuple: a cycle when the factor is
// hamiltonian, otherwise that many disjoint paths with sizes as balanced as
// possible.
inline Graph realize_path_tuple(const ValueTuple& tup) {
    int hc = tup[0], pip = tup[1], n = tup[2];
    if (hc == 0) return Graph::cycle(n);
    std::vector<std::pair<int, int>> edges;
    int at = 0;
    int q = n / pip, rem = n % pip;
    for (int p = 0; p < pip; ++p) {
        int len = q + (p < rem ? 1 : 0);
        for (int i = 1; i < len; ++i) edges.emplace_back(at + i - 1, at + i);
        at += len;
    }
    return Graph(n, edges);
}

inline ValueTuple compose_path(const Graph& x, const std::vector<ValueTuple>& tuples) {
    int t = x.vertex_count();
    long long total = 0;
    for (const ValueTuple& tup : tuples) total += tup[2];
    check_cap(int(total), kMaxRealization, "realization");
    compose_stats().path_flag_reads += t;
    std::vector<Graph> parts;
    parts.reserve(t);
    for (const ValueTuple& tup : tuples) parts.push_back(realize_path_tuple(tup));
    Graph blown = substitute(x, parts);
    bool hc = own_hamiltonian_cycle(blown);
    int pip = own_path_partition(blown);
    return ValueTuple{hc ? 0 : 1, pip, int(total)};
}

// --- longest induced path system -----------------------------------------

inline int own_longest_induced_path(const Graph& g) {
    int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    int best = 1;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int verts = popcount32(s);
        if (verts <= best) continue;
        if (mask_edge_count(adj, s) != verts - 1) continue;
        if (!mask_connected(adj, s)) continue;
        bool path = true;
        for (std::uint32_t rest = s; rest && path;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            if (popcount32(adj[v] & s) > 2) path = false;
        }
        if (path) best = verts;
    }
    return best;
}

// Max of the module values and the quotient's own longest induced path.  Any
// induced path on four or more vertices of the blow-up places at most one
// vertex per module, so whenever the true value is at least four this is
// exact; smaller truths can only be underestimated, which the solve engine
// sidesteps by answering width-zero graphs directly.
inline long long compose_lip(const Graph& x, const std::vector<ValueTuple>& tuples) {
    int t = x.vertex_count();
    check_cap(t, 20, "quotient");
    long long best = 0;
    for (const ValueTuple& tup : tuples) best = std::max(best, (long long)tup[0]);
    best = std::max(best, (long long)own_longest_induced_path(x));
    return best;
}

// --- coloring system -----------------------------------------------------

// Exact weighted multicoloring: every module demands as many colors as its
// factor needs, adjacent modules may not share any.  Branches on the maximal
// independent sets (within positive demand) containing a maximum-demand
// vertex, memoized on the demand vector.
struct MulticolorSolver {
    const Graph& x;
    std::vector<std::uint32_t> adj;
    std::vector<std::uint32_t> cadj;  // complement adjacency within the quotient
    std::map<std::vector<int>, int> memo;

    explicit MulticolorSolver(const Graph& g) : x(g), adj(adjacency_masks(g)) {
        int t = x.vertex_count();
        std::uint32_t all = (t == 32) ? 0xFFFFFFFFu : ((1u << t) - 1);
        cadj.resize(t);
        for (int v = 0; v < t; ++v) cadj[v] = all & ~adj[v] & ~(1u << v);
    }

    void maximal_independent_sets(std::uint32_t r, std::uint32_t p, std::uint32_t ex,
                                  std::vector<std::uint32_t>& out) {
        if (p == 0 && ex == 0) {
            out.push_back(r);
            return;
        }
        std::uint32_t px = p | ex;
        int pivot = -1, best = -1;
        for (std::uint32_t rest = px; rest;) {
            int u = __builtin_ctz(rest);
            rest &= rest - 1;
            int cover = popcount32(p & cadj[u]);
            if (cover > best) {
                best = cover;
                pivot = u;
            }
        }
        std::uint32_t cands = p & ~cadj[pivot];
        while (cands) {
            int v = __builtin_ctz(cands);
            cands &= cands - 1;
            maximal_independent_sets(r | (1u << v), p & cadj[v], ex & cadj[v], out);
            p &= ~(1u << v);
            ex |= (1u << v);
        }
    }

    int solve(std::vector<int> demand) {
        int t = x.vertex_count();
        std::uint32_t positive = 0;
        for (int i = 0; i < t; ++i)
            if (demand[i] > 0) positive |= (1u << i);
        if (positive == 0) return 0;

        // Closed forms: no edges between demanding modules, or all edges.
        bool edgeless = true, clique = true;
        for (std::uint32_t rest = positive; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            std::uint32_t others = positive & ~(1u << v);
            if (adj[v] & others) edgeless = false;
            if ((adj[v] & others) != others) clique = false;
        }
        if (edgeless) {
            int mx = 0;
            for (int i = 0; i < t; ++i) mx = std::max(mx, demand[i]);
            return mx;
        }
        if (clique) {
            int sum = 0;
            for (int i = 0; i < t; ++i) sum += demand[i];
            return sum;
        }

        auto it = memo.find(demand);
        if (it != memo.end()) return it->second;

        int v = -1;
        for (int i = 0; i < t; ++i)
            if (demand[i] > 0 && (v == -1 || demand[i] > demand[v])) v = i;

        std::vector<std::uint32_t> classes;
        std::uint32_t sub = positive & cadj[v] & ~(1u << v);
        maximal_independent_sets(1u << v, sub, 0, classes);
        int best = std::numeric_limits<int>::max();
        for (std::uint32_t cls : classes) {
            std::vector<int> next = demand;
            for (std::uint32_t rest = cls; rest;) {
                int u = __builtin_ctz(rest);
                rest &= rest - 1;
                next[u] -= 1;
            }
            best = std::min(best, 1 + solve(std::move(next)));
        }
        memo.emplace(std::move(demand), best);
        return best;
    }
};

inline long long compose_col(const Graph& x, const std::vector<ValueTuple>& tuples) {
    int t = x.vertex_count();
    check_cap(t, 20, "quotient");
    long long total = 0;
    std::vector<int> demand(t);
    for (int i = 0; i < t; ++i) {
        demand[i] = tuples[i][0];
        total += demand[i];
    }
    check_cap(int(total), kMaxColorDemand, "color demand");
    MulticolorSolver solver(x);
    return solver.solve(std::move(demand));
}

// --- packing system --------------------------------------------------------

// All three packing functions enumerate which modules contribute and classify
// the components of the induced quotient subgraph; a component either maps to
// a module's own packing value or realizes one cross-module unit.
template <typename ComponentValue>
long long packing_scan(const Graph& x, ComponentValue&& value_of) {
    int t = x.vertex_count();
    auto adj = adjacency_masks(x);
    long long best = 0;
    for (std::uint32_t s = 0; s < (1u << t); ++s) {
        long long sum = 0;
        bool ok = true;
        std::uint32_t left = s;
        while (left && ok) {
            std::uint32_t start = left & (~left + 1);
            std::uint32_t seen = start;
            for (;;) {
                std::uint32_t grow = seen;
                for (std::uint32_t rest = seen; rest;) {
                    int v = __builtin_ctz(rest);
                    rest &= rest - 1;
                    grow |= adj[v] & s;
                }
                if (grow == seen) break;
                seen = grow;
            }
            left &= ~seen;
            std::optional<long long> val = value_of(seen);
            if (!val) ok = false;
            else sum += *val;
        }
        if (ok) best = std::max(best, sum);
    }
    return best;
}

inline ValueTuple compose_pack(const Graph& x, const std::vector<ValueTuple>& tuples) {
    int t = x.vertex_count();
    check_cap(t, kMaxPackingQuotient, "quotient");
    auto adj = adjacency_masks(x);
    std::vector<long long> vc(t), im(t), itp(t), icp(t), n(t);
    for (int i = 0; i < t; ++i) {
        vc[i] = tuples[i][0];
        im[i] = tuples[i][1];
        itp[i] = tuples[i][2];
        icp[i] = tuples[i][3];
        n[i] = tuples[i][4];
    }
    long long total = 0;
    for (long long v : n) total += v;

    auto members = [](std::uint32_t comp) {
        std::vector<int> out;
        while (comp) {
            out.push_back(__builtin_ctz(comp));
            comp &= comp - 1;
        }
        return out;
    };

    long long best_im = packing_scan(x, [&](std::uint32_t comp) -> std::optional<long long> {
        auto mem = members(comp);
        if (mem.size() == 1) return im[mem[0]];
        if (mem.size() == 2) return 1;  // one matched pair across the quotient edge
        return std::nullopt;
    });

    long long best_itp = packing_scan(x, [&](std::uint32_t comp) -> std::optional<long long> {
        auto mem = members(comp);
        if (mem.size() == 1) return itp[mem[0]];
        if (mem.size() == 2) {
            if (vc[mem[0]] >= 1 || vc[mem[1]] >= 1) return 1;
            return std::nullopt;
        }
        if (mem.size() == 3 && mask_edge_count(adj, comp) == 3) return 1;
        return std::nullopt;
    });

    long long best_icp = packing_scan(x, [&](std::uint32_t comp) -> std::optional<long long> {
        auto mem = members(comp);
        if (mem.size() == 1) return icp[mem[0]];
        if (mem.size() == 2) {
            bool edge_side = vc[mem[0]] >= 1 || vc[mem[1]] >= 1;
            bool four_cycle = (n[mem[0]] - vc[mem[0]] >= 2) && (n[mem[1]] - vc[mem[1]] >= 2);
            if (edge_side || four_cycle) return 1;
            return std::nullopt;
        }
        // A three-module path hosts a four-cycle when the middle module holds
        // two nonadjacent vertices (one endpoint vertex each, a zig-zag through
        // the doubled middle). Longer paths and branching shapes cannot keep
        // every chosen vertex at degree exactly two, so they stay infeasible.
        if (mem.size() == 3 && mask_edge_count(adj, comp) == 2) {
            for (int v : mem)
                if (popcount32(adj[v] & comp) == 2)
                    return (n[v] - vc[v] >= 2) ? std::optional<long long>(1)
                                               : std::nullopt;
            return std::nullopt;
        }
        // a larger component must itself be an induced cycle of the quotient
        int verts = int(mem.size());
        if (mask_edge_count(adj, comp) != verts) return std::nullopt;
        for (int v : mem)
            if (popcount32(adj[v] & comp) != 2) return std::nullopt;
        return 1;
    });

    long long best_vc = compose_vc(x, n, vc);
    return ValueTuple{int(best_vc), int(best_im), int(best_itp), int(best_icp), int(total)};
}

}  // namespace compose_detail

inline ValueTuple compose(const Vaqg& q) {
    validate_vaqg(q);
    const Graph& x = q.quotient;
    const std::vector<ValueTuple>& tuples = q.tuples;
    int t = x.vertex_count();

    switch (q.system) {
        case SystemId::col:
            return ValueTuple{int(compose_detail::compose_col(x, tuples))};
        case SystemId::dom:
            return ValueTuple{int(compose_detail::compose_dom(x, tuples))};
        case SystemId::ind:
            return ValueTuple{int(compose_detail::compose_ind(x, tuples))};
        case SystemId::lip:
            return ValueTuple{int(compose_detail::compose_lip(x, tuples))};
        case SystemId::path:
            return compose_detail::compose_path(x, tuples);
        case SystemId::pack:
            return compose_detail::compose_pack(x, tuples);
        case SystemId::del: {
            compose_detail::check_cap(t, compose_detail::kMaxDeletionQuotient, "quotient");
            std::vector<long long> n(t), vc(t), cvc(t), fvs(t), oct(t);
            long long total = 0;
            for (int i = 0; i < t; ++i) {
                n[i] = tuples[i][0];
                vc[i] = tuples[i][1];
                cvc[i] = tuples[i][2];
                fvs[i] = tuples[i][3];
                oct[i] = tuples[i][4];
                total += n[i];
            }
            long long rvc = compose_detail::compose_vc(x, n, vc);
            long long rcvc = compose_detail::compose_cvc(x, n, vc, cvc);
            long long rfvs = compose_detail::compose_fvs(x, n, vc, fvs);
            long long roct = compose_detail::compose_oct(x, n, vc, oct);
            return ValueTuple{int(total), int(rvc), int(rcvc), int(rfvs), int(roct)};
        }
    }
    throw std::logic_error("unhandled system");
}

// Test helper: rebuild the blow-up a values-attached quotient describes from
// actual factor graphs.  The caller supplies the factors' tuples; they must
// match the attached values exactly.
inline Graph realize_for_test(const Vaqg& q, const std::vector<Graph>& factors,
                              const std::vector<ValueTuple>& factor_tuples) {
    validate_vaqg(q);
    if (factors.size() != factor_tuples.size() ||
        int(factors.size()) != q.quotient.vertex_count())
        throw std::invalid_argument("factor count mismatch");
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factor_tuples[i] != q.tuples[i])
            throw std::invalid_argument("factor tuple does not match attached values");
    return substitute(q.quotient, factors);
}

}  // namespace mwtk
