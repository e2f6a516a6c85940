#pragma once

// Test-only oracles, independent of the library implementation paths they
// check.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "permuta/graph.hpp"
#include "permuta/group.hpp"

namespace oracle {

/// All permutations of 0..n-1 in lexicographic order.
inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
}

/// Cayley table of S_n by direct permutation composition.
inline std::vector<std::vector<int>> symmetric_group_table(int n) {
    auto perms = all_permutations(n);
    std::vector<std::vector<int>> table(perms.size(), std::vector<int>(perms.size()));
    auto index_of = [&](const std::vector<int>& p) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
    };
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b)
            table[a][b] = index_of(compose(perms[a], perms[b]));
    return table;
}

/// Brute-force subgroup enumeration: closures of every generating subset of
/// size <= 3. Valid whenever every subgroup of g is 3-generated (the caller
/// asserts this via minimal_generators).
inline std::set<permuta::Subgroup> subgroups_by_subset_closure(const permuta::FiniteGroup& g) {
    std::set<permuta::Subgroup> out;
    {
        permuta::ElementSet e;
        e.set(g.identity());
        out.insert(permuta::make_subgroup(e));
    }
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            for (int c = b; c < n; ++c) {
                permuta::ElementSet s;
                s.set(a);
                s.set(b);
                s.set(c);
                out.insert(permuta::closure(g, s));
            }
        }
    }
    return out;
}

/// Face count of one rotation system (all-positive signs), by plain orbit
/// tracing of next(d) = rotation-successor at head(d) of reverse(d).
/// rotations[v] lists neighbor vertices in cyclic order.
inline int trace_faces_orientable(const permuta::Graph& g,
                                  const std::vector<std::vector<int>>& rotations) {
    struct Dart {
        int u, v;
    };
    std::vector<Dart> darts;
    auto edges = g.edges();
    for (auto [u, v] : edges) {
        darts.push_back({u, v});
        darts.push_back({v, u});
    }
    auto dart_id = [&](int u, int v) {
        for (std::size_t i = 0; i < darts.size(); ++i)
            if (darts[i].u == u && darts[i].v == v) return static_cast<int>(i);
        return -1;
    };
    auto next_in_rotation = [&](int v, int w) {
        const auto& rot = rotations[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == w) return rot[(i + 1) % rot.size()];
        return -1;
    };
    const std::size_t m2 = darts.size();
    std::vector<char> used(m2, 0);
    int faces = 0;
    for (std::size_t s = 0; s < m2; ++s) {
        if (used[s]) continue;
        ++faces;
        std::size_t d = s;
        while (!used[d]) {
            used[d] = 1;
            const int u = darts[d].u, v = darts[d].v;
            const int w = next_in_rotation(v, u); // successor of reverse dart
            d = static_cast<std::size_t>(dart_id(v, w));
        }
    }
    return faces;
}

/// Independent signed face tracer: faces of (rotations, edge signs) counted
/// as mirror-paired orbits of the successor map on (dart, side) states.
inline int trace_faces_signed(const permuta::Graph& g,
                              const std::vector<std::vector<int>>& rotations,
                              const std::map<std::pair<int, int>, int>& signs) {
    struct Dart {
        int u, v;
    };
    std::vector<Dart> darts;
    for (auto [u, v] : g.edges()) {
        darts.push_back({u, v});
        darts.push_back({v, u});
    }
    const int dn = static_cast<int>(darts.size());
    if (dn == 0) return 0;
    auto dart_id = [&](int u, int v) {
        for (int i = 0; i < dn; ++i)
            if (darts[static_cast<std::size_t>(i)].u == u && darts[static_cast<std::size_t>(i)].v == v)
                return i;
        return -1;
    };
    auto sign_of = [&](int d) {
        auto [u, v] = darts[static_cast<std::size_t>(d)];
        auto it = signs.find(std::minmax(u, v));
        return it == signs.end() ? 1 : it->second;
    };
    auto rot_next = [&](int v, int w, int dir) {
        const auto& rot = rotations[static_cast<std::size_t>(v)];
        const int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i)
            if (rot[static_cast<std::size_t>(i)] == w)
                return rot[static_cast<std::size_t>(((i + dir) % k + k) % k)];
        return -1;
    };
    auto step = [&](std::pair<int, int> ds) -> std::pair<int, int> {
        auto [d, s] = ds;
        const int s2 = s ^ (sign_of(d) < 0 ? 1 : 0);
        const int v = darts[static_cast<std::size_t>(d)].v;
        const int u = darts[static_cast<std::size_t>(d)].u;
        const int w = rot_next(v, u, s2 == 0 ? 1 : -1);
        return {dart_id(v, w), s2};
    };
    auto mirror = [&](std::pair<int, int> ds) -> std::pair<int, int> {
        auto [d, s] = ds;
        return {d ^ 1, s ^ (sign_of(d) < 0 ? 1 : 0) ^ 1};
    };
    std::vector<int> orbit_of(static_cast<std::size_t>(2 * dn), -1);
    int orbits = 0;
    for (int d = 0; d < dn; ++d)
        for (int s = 0; s < 2; ++s) {
            if (orbit_of[static_cast<std::size_t>(s * dn + d)] >= 0) continue;
            std::pair<int, int> cur{d, s};
            do {
                orbit_of[static_cast<std::size_t>(cur.second * dn + cur.first)] = orbits;
                cur = step(cur);
            } while (!(cur.first == d && cur.second == s));
            ++orbits;
        }
    // merge each orbit with its mirror orbit; faces = merged classes
    std::vector<int> root(static_cast<std::size_t>(orbits));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
        return x;
    };
    for (int d = 0; d < dn; ++d)
        for (int s = 0; s < 2; ++s) {
            auto m = mirror({d, s});
            int a = find(orbit_of[static_cast<std::size_t>(s * dn + d)]);
            int b = find(orbit_of[static_cast<std::size_t>(m.second * dn + m.first)]);
            if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    int faces = 0;
    for (int i = 0; i < orbits; ++i)
        if (find(i) == i) ++faces;
    return faces;
}

/// Maximum Euler characteristic over every rotation system (and, if
/// allow_signs, every sign assignment) of a small connected graph.
inline int max_chi_over_embeddings(const permuta::Graph& g, bool allow_signs) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> base(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) base[static_cast<std::size_t>(v)] = g.neighbors(v);
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    int best = -1000;

    std::vector<std::vector<int>> rot = base;
    auto eval_signs = [&]() {
        const int cap = allow_signs ? (1 << m) : 1;
        for (int mask = 0; mask < cap; ++mask) {
            std::map<std::pair<int, int>, int> signs;
            for (int e = 0; e < m; ++e)
                if (mask >> e & 1) signs[edges[static_cast<std::size_t>(e)]] = -1;
            const int f = trace_faces_signed(g, rot, signs);
            best = std::max(best, n - m + f);
        }
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            eval_signs();
            return;
        }
        auto& r = rot[static_cast<std::size_t>(v)];
        if (r.size() <= 2) {
            self(self, v + 1);
            return;
        }
        std::vector<int> tail(r.begin() + 1, r.end());
        std::sort(tail.begin(), tail.end());
        do {
            for (std::size_t i = 0; i < tail.size(); ++i) r[i + 1] = tail[i];
            self(self, v + 1);
        } while (std::next_permutation(tail.begin(), tail.end()));
    };
    if (m == 0) return 2;
    rec(rec, 0);
    return best;
}

/// Enumerates every rotation system of a small graph and returns the maximum
/// face count (= minimum orientable genus embedding).
inline int max_faces_over_all_rotations(const permuta::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> rotations(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rotations[static_cast<std::size_t>(v)] = g.neighbors(v);
    // fix the first neighbor of each vertex, permute the rest: (deg-1)! per vertex
    int best = 0;
    std::vector<std::vector<int>> tails(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& r = rotations[static_cast<std::size_t>(v)];
        tails[static_cast<std::size_t>(v)] =
            std::vector<int>(r.begin() + (r.empty() ? 0 : 1), r.end());
        std::sort(tails[static_cast<std::size_t>(v)].begin(), tails[static_cast<std::size_t>(v)].end());
    }
    std::vector<std::vector<int>> cur(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                rot[static_cast<std::size_t>(i)].clear();
                if (!rotations[static_cast<std::size_t>(i)].empty())
                    rot[static_cast<std::size_t>(i)].push_back(rotations[static_cast<std::size_t>(i)][0]);
                for (int t : cur[static_cast<std::size_t>(i)])
                    rot[static_cast<std::size_t>(i)].push_back(t);
            }
            best = std::max(best, trace_faces_orientable(g, rot));
            return;
        }
        auto t = tails[static_cast<std::size_t>(v)];
        std::sort(t.begin(), t.end());
        do {
            cur[static_cast<std::size_t>(v)] = t;
            self(self, v + 1);
        } while (std::next_permutation(t.begin(), t.end()));
    };
    if (g.edge_count() == 0) return 0;
    rec(rec, 0);
    return best;
}

} // namespace oracle
