#pragma once

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "mwtk/graph.hpp"

namespace mwtk {

// Edge-list format: a header line "n m" followed by m lines "u v".
// Blank lines and lines starting with '#' are skipped.
inline Graph read_edge_list(std::istream& in) {
    auto next_line = [&in](std::string& line) {
        while (std::getline(in, line)) {
            std::size_t at = line.find_first_not_of(" \t\r");
            if (at == std::string::npos) continue;
            if (line[at] == '#') continue;
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw std::invalid_argument("missing header line");
    std::istringstream header(line);
    long long n = 0, m = 0;
    std::string extra;
    if (!(header >> n >> m) || (header >> extra))
        throw std::invalid_argument("header must be exactly \"n m\"");
    if (n < 1 || m < 0) throw std::invalid_argument("bad vertex or edge count");

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line)) throw std::invalid_argument("fewer edges than the header promises");
        std::istringstream row(line);
        long long u = 0, v = 0;
        if (!(row >> u >> v) || (row >> extra))
            throw std::invalid_argument("edge line must be exactly \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self loops are not allowed");
        std::pair<int, int> key{int(std::min(u, v)), int(std::max(u, v))};
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
        edges.emplace_back(int(u), int(v));
    }
    if (next_line(line)) throw std::invalid_argument("trailing content after the last edge");
    return Graph(int(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace mwtk
