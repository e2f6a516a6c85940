#pragma once

#include <string>
#include <vector>

#include "permuta/errors.hpp"
#include "permuta/graph.hpp"

namespace permuta {

/// graph6 encoding per the standard format definition: N(n) then the upper
/// triangle x_{ij} (i<j) in column-major order, packed 6 bits per printable
/// character (+63).
inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    } else {
        throw UnsupportedFormat("graph too large for graph6 short form");
    }
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + 63);
    return out;
}

inline Graph from_graph6(const std::string& s) {
    if (s.empty()) throw UnsupportedFormat("empty graph6 string");
    std::size_t pos = 0;
    int n = 0;
    if (s[0] == '~') {
        if (s.size() < 4) throw UnsupportedFormat("truncated graph6 header");
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n < 0) throw UnsupportedFormat("bad graph6 header");
    Graph g(n);
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                if (pos >= s.size()) throw UnsupportedFormat("truncated graph6 body");
                acc = s[pos++] - 63;
                if (acc < 0 || acc > 63) throw UnsupportedFormat("bad graph6 character");
                bits = 6;
            }
            if ((acc >> (bits - 1)) & 1) g.add_edge(i, j);
            --bits;
        }
    return g;
}

/// DOT export with vertex labels for visualization.
inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::string out = "graph \"" + name + "\" {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + g.label(v) + "\"];\n";
    for (auto [u, v] : g.edges())
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

} // namespace permuta
