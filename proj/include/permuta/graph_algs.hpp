#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permuta/graph.hpp"

namespace permuta {

namespace detail {

/// Degree/neighborhood color refinement; returns stable vertex colors.
inline std::vector<int> refine_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
    // normalize
    auto normalize = [&]() {
        std::vector<int> sorted = color;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (auto& c : color)
            c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
        return static_cast<int>(sorted.size());
    };
    int classes = normalize();
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> ms;
            for (int u = 0; u < n; ++u)
                if (g.edge(v, u)) ms.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(ms.begin(), ms.end());
            sig[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)], std::move(ms)};
        }
        std::vector<std::pair<int, std::vector<int>>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<std::size_t>(v)]) -
                uniq.begin());
        const int now = static_cast<int>(uniq.size());
        if (now == classes) return color;
        classes = now;
    }
}

inline bool iso_backtrack(const Graph& g, const Graph& h, const std::vector<int>& cg,
                          const std::vector<int>& ch, std::vector<int>& map,
                          std::vector<char>& used, int idx, const std::vector<int>& order) {
    if (idx == static_cast<int>(order.size())) return true;
    const int v = order[static_cast<std::size_t>(idx)];
    for (int w = 0; w < h.vertex_count(); ++w) {
        if (used[static_cast<std::size_t>(w)] ||
            ch[static_cast<std::size_t>(w)] != cg[static_cast<std::size_t>(v)])
            continue;
        bool ok = true;
        for (int j = 0; j < idx && ok; ++j) {
            const int v2 = order[static_cast<std::size_t>(j)];
            if (g.edge(v, v2) != h.edge(w, map[static_cast<std::size_t>(v2)])) ok = false;
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used[static_cast<std::size_t>(w)] = 1;
        if (iso_backtrack(g, h, cg, ch, map, used, idx + 1, order)) return true;
        used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
}

} // namespace detail

/// Exact graph-isomorphism decision: color refinement, then backtracking on
/// the refined classes.
inline bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<int> cg = detail::refine_colors(g);
    std::vector<int> ch = detail::refine_colors(h);
    {
        std::vector<int> a = cg, b = ch;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    // order: rarest color class first, then by degree descending
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::map<int, int> class_size;
    for (int c : cg) ++class_size[c];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int sa = class_size[cg[static_cast<std::size_t>(a)]];
        const int sb = class_size[cg[static_cast<std::size_t>(b)]];
        if (sa != sb) return sa < sb;
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    return detail::iso_backtrack(g, h, cg, ch, map, used, 0, order);
}

namespace detail {

inline bool sub_backtrack(const Graph& host, const Graph& pat, const std::vector<int>& order,
                          std::vector<int>& map, std::vector<char>& used, int idx) {
    if (idx == pat.vertex_count()) return true;
    const int v = order[static_cast<std::size_t>(idx)];
    for (int w = 0; w < host.vertex_count(); ++w) {
        if (used[static_cast<std::size_t>(w)] || host.degree(w) < pat.degree(v)) continue;
        bool ok = true;
        for (int j = 0; j < idx && ok; ++j) {
            const int v2 = order[static_cast<std::size_t>(j)];
            if (pat.edge(v, v2) && !host.edge(w, map[static_cast<std::size_t>(v2)])) ok = false;
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used[static_cast<std::size_t>(w)] = 1;
        if (sub_backtrack(host, pat, order, map, used, idx + 1)) return true;
        used[static_cast<std::size_t>(w)] = 0;
    }
    map[static_cast<std::size_t>(v)] = -1;
    return false;
}

} // namespace detail

/// Non-induced subgraph embedding of `pattern` into `g`: map[pattern vertex] =
/// host vertex, or absence. Deterministic first-found map.
inline std::optional<std::vector<int>> has_subgraph(const Graph& g, const Graph& pattern) {
    if (pattern.vertex_count() > g.vertex_count() || pattern.edge_count() > g.edge_count())
        return std::nullopt;
    const int pn = pattern.vertex_count();
    // most-constrained-first: high degree, preferring vertices attached to
    // already-placed ones
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(pn), 0);
    for (int step = 0; step < pn; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < pn; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int links = 0;
            for (int u : order)
                if (pattern.edge(v, u)) ++links;
            const int deg = pattern.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[static_cast<std::size_t>(best)] = 1;
    }
    std::vector<int> map(static_cast<std::size_t>(pn), -1);
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    if (detail::sub_backtrack(g, pattern, order, map, used, 0)) return map;
    return std::nullopt;
}

/// Checks that a claimed embedding map is edge-preserving and injective.
inline bool subgraph_map_valid(const Graph& g, const Graph& pattern, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != pattern.vertex_count()) return false;
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int w : map) {
        if (w < 0 || w >= g.vertex_count() || used[static_cast<std::size_t>(w)]) return false;
        used[static_cast<std::size_t>(w)] = 1;
    }
    for (auto [u, v] : pattern.edges())
        if (!g.edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)])) return false;
    return true;
}

// --- named patterns ------------------------------------------------------------

/// Patterns accepted by name: k33, k15, c6, p5, p6, k37, k45, k8, a1, plus
/// k35, k44, k7 used by the witness scan. Path names use the length
/// convention (p5 is the 6-vertex path).
inline Graph pattern_by_name(const std::string& name) {
    using GE = GraphExpr;
    if (name == "k33") return GE::complete_bipartite(3, 3).build();
    if (name == "k15") return GE::complete_bipartite(1, 5).build();
    if (name == "c6") return GE::cycle(6).build();
    if (name == "p5") return GE::path(5).build();
    if (name == "p6") return GE::path(6).build();
    if (name == "k37") return GE::complete_bipartite(3, 7).build();
    if (name == "k45") return GE::complete_bipartite(4, 5).build();
    if (name == "k35") return GE::complete_bipartite(3, 5).build();
    if (name == "k44") return GE::complete_bipartite(4, 4).build();
    if (name == "k5") return GE::complete(5).build();
    if (name == "k6") return GE::complete(6).build();
    if (name == "k7") return GE::complete(7).build();
    if (name == "k8") return GE::complete(8).build();
    if (name == "a1")
        return GE::join(GE::complete(3), GE::disjoint_union(GE::complete(3), GE::complete(2))).build();
    throw UnknownTarget("unknown pattern name: " + name);
}

/// Freeness flags for the five forbidden patterns, in the order
/// {K_{3,3}, K_{1,5}, C_6, P_5, P_6}; true means the pattern is absent.
struct ForbiddenProfile {
    bool k33_free = true;
    bool k15_free = true;
    bool c6_free = true;
    bool p5_free = true;
    bool p6_free = true;

    bool operator==(const ForbiddenProfile&) const = default;
};

inline ForbiddenProfile forbidden_profile(const Graph& g) {
    ForbiddenProfile p;
    p.k33_free = !has_subgraph(g, pattern_by_name("k33")).has_value();
    p.k15_free = !has_subgraph(g, pattern_by_name("k15")).has_value();
    p.c6_free = !has_subgraph(g, pattern_by_name("c6")).has_value();
    p.p5_free = !has_subgraph(g, pattern_by_name("p5")).has_value();
    p.p6_free = !has_subgraph(g, pattern_by_name("p6")).has_value();
    return p;
}

} // namespace permuta
