#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "permuta/embedding.hpp"
#include "permuta/graph.hpp"

namespace permuta {

namespace detail {

/// Biconnected components as edge lists (Hopcroft-Tarjan, iterative).
inline std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> blocks;
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> stack;
    int timer = 0;

    struct Frame {
        int v, parent;
        std::vector<int> nbrs;
        std::size_t i = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        std::vector<Frame> frames;
        frames.push_back({root, -1, g.neighbors(root)});
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.i < f.nbrs.size()) {
                const int u = f.nbrs[f.i++];
                if (u == f.parent) continue;
                if (disc[static_cast<std::size_t>(u)] < 0) {
                    stack.emplace_back(f.v, u);
                    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
                    frames.push_back({u, f.v, g.neighbors(u)});
                } else if (disc[static_cast<std::size_t>(u)] < disc[static_cast<std::size_t>(f.v)]) {
                    stack.emplace_back(f.v, u);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(u)]);
                }
            } else {
                const int v = f.v, parent = f.parent;
                frames.pop_back();
                if (parent >= 0) {
                    low[static_cast<std::size_t>(parent)] =
                        std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
                    if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(parent)]) {
                        std::vector<std::pair<int, int>> block;
                        while (!stack.empty()) {
                            auto e = stack.back();
                            if (disc[static_cast<std::size_t>(e.first)] <
                                disc[static_cast<std::size_t>(parent)])
                                break;
                            // pop edges discovered at or after parent
                            if (e.first == parent && e.second == v) {
                                stack.pop_back();
                                block.push_back(e);
                                break;
                            }
                            stack.pop_back();
                            block.push_back(e);
                        }
                        if (!block.empty()) blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return blocks;
}

/// Planarity of one biconnected block by face-extension: repeatedly pick the
/// fragment with the fewest admissible faces and route one of its paths
/// through such a face. Returns the directed face cycles of a planar
/// embedding, or nullopt.
/// Vertices are the original graph ids; `verts` lists the block's vertices.
inline std::optional<std::vector<std::vector<int>>> demoucron_block(
    const std::vector<std::pair<int, int>>& block_edges) {
    std::set<int> vset;
    for (auto [u, v] : block_edges) {
        vset.insert(u);
        vset.insert(v);
    }
    const std::vector<int> verts(vset.begin(), vset.end());
    const int nv = static_cast<int>(verts.size());
    const int ne = static_cast<int>(block_edges.size());
    if (ne <= 2) {
        // single edge (bridge block); embed as a 2-gon walk pair collapses to
        // the two directed darts
        std::vector<std::vector<int>> faces;
        if (ne == 1) {
            faces.push_back({block_edges[0].first, block_edges[0].second});
        }
        return faces;
    }
    if (ne > 3 * nv - 6) return std::nullopt;

    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : block_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    // initial cycle by walking until a repeat
    std::vector<int> cyc;
    {
        std::map<int, int> pos;
        int cur = verts[0], prev = -1;
        std::vector<int> walk;
        while (pos.find(cur) == pos.end()) {
            pos[cur] = static_cast<int>(walk.size());
            walk.push_back(cur);
            int nxt = -1;
            for (int u : adj[cur])
                if (u != prev) {
                    nxt = u;
                    break;
                }
            if (nxt < 0) return std::nullopt; // degree-1 inside a 2-connected block
            prev = cur;
            cur = nxt;
        }
        cyc.assign(walk.begin() + pos[cur], walk.end());
    }
    if (cyc.size() < 3) return std::nullopt;

    std::set<std::pair<int, int>> emb_edges;
    std::set<int> emb_verts(cyc.begin(), cyc.end());
    for (std::size_t i = 0; i < cyc.size(); ++i)
        emb_edges.insert(std::minmax(cyc[i], cyc[(i + 1) % cyc.size()]));
    std::vector<std::vector<int>> faces;
    faces.push_back(cyc);
    {
        std::vector<int> r(cyc.rbegin(), cyc.rend());
        faces.push_back(r);
    }

    while (static_cast<int>(emb_edges.size()) < ne) {
        // fragments: chords between embedded vertices, and components of the
        // non-embedded vertices with their attachments
        struct Fragment {
            std::vector<int> attachments;     // embedded vertices
            std::vector<int> inside;          // non-embedded vertices (empty for chords)
            std::pair<int, int> chord{-1, -1};
        };
        std::vector<Fragment> fragments;
        for (auto [u, v] : block_edges) {
            auto key = std::minmax(u, v);
            if (emb_edges.count(key)) continue;
            if (emb_verts.count(u) && emb_verts.count(v))
                fragments.push_back({{u, v}, {}, key});
        }
        {
            std::set<int> left;
            for (int v : verts)
                if (!emb_verts.count(v)) left.insert(v);
            std::set<int> seen;
            for (int s : left) {
                if (seen.count(s)) continue;
                std::vector<int> comp{s};
                seen.insert(s);
                for (std::size_t qi = 0; qi < comp.size(); ++qi)
                    for (int u : adj[comp[qi]])
                        if (left.count(u) && !seen.count(u)) {
                            seen.insert(u);
                            comp.push_back(u);
                        }
                std::set<int> att;
                for (int v : comp)
                    for (int u : adj[v])
                        if (emb_verts.count(u)) att.insert(u);
                fragments.push_back({{att.begin(), att.end()}, comp, {-1, -1}});
            }
        }
        if (fragments.empty()) return std::nullopt; // should not happen

        // admissible faces per fragment
        int best = -1;
        std::vector<int> best_faces;
        for (std::size_t fi = 0; fi < fragments.size(); ++fi) {
            std::vector<int> adm;
            for (std::size_t k = 0; k < faces.size(); ++k) {
                const auto& w = faces[k];
                bool all = true;
                for (int a : fragments[fi].attachments)
                    if (std::find(w.begin(), w.end(), a) == w.end()) {
                        all = false;
                        break;
                    }
                if (all) adm.push_back(static_cast<int>(k));
            }
            if (adm.empty()) return std::nullopt; // fragment cannot be drawn
            if (best < 0 || adm.size() < best_faces.size()) {
                best = static_cast<int>(fi);
                best_faces = adm;
            }
        }

        const Fragment& frag = fragments[static_cast<std::size_t>(best)];
        // a path through the fragment between two distinct attachments
        std::vector<int> path;
        if (frag.chord.first >= 0) {
            path = {frag.chord.first, frag.chord.second};
        } else {
            // BFS inside the fragment from one attachment to another
            const int start = frag.attachments.at(0);
            std::set<int> inside(frag.inside.begin(), frag.inside.end());
            std::map<int, int> parent;
            std::vector<int> queue;
            for (int u : adj[start])
                if (inside.count(u) && !parent.count(u)) {
                    parent[u] = start;
                    queue.push_back(u);
                }
            int goal = -1;
            for (std::size_t qi = 0; qi < queue.size() && goal < 0; ++qi) {
                const int v = queue[qi];
                for (int u : adj[v]) {
                    if (inside.count(u)) {
                        if (!parent.count(u)) {
                            parent[u] = v;
                            queue.push_back(u);
                        }
                    } else if (u != start && emb_verts.count(u)) {
                        goal = u;
                        parent[u] = v;
                        break;
                    }
                }
            }
            if (goal < 0) return std::nullopt; // single attachment: not biconnected
            for (int v = goal; v != start; v = parent[v]) path.push_back(v);
            path.push_back(start);
            std::reverse(path.begin(), path.end());
        }

        // embed the path across the chosen face: split the directed cycle
        const int face_id = best_faces.at(0);
        std::vector<int> w = faces[static_cast<std::size_t>(face_id)];
        const int a = path.front(), b = path.back();
        const int pa = static_cast<int>(std::find(w.begin(), w.end(), a) - w.begin());
        const int pb = static_cast<int>(std::find(w.begin(), w.end(), b) - w.begin());
        const int L = static_cast<int>(w.size());
        std::vector<int> seg_ab, seg_ba;
        for (int i = pa;; i = (i + 1) % L) {
            seg_ab.push_back(w[static_cast<std::size_t>(i)]);
            if (i == pb) break;
        }
        for (int i = pb;; i = (i + 1) % L) {
            seg_ba.push_back(w[static_cast<std::size_t>(i)]);
            if (i == pa) break;
        }
        // face1 = a..b along the cycle, then back along the path (which runs
        // a -> b, so reversed); face2 = b..a along the cycle, then the path
        std::vector<int> face1 = seg_ab;
        for (int i = static_cast<int>(path.size()) - 2; i >= 1; --i)
            face1.push_back(path[static_cast<std::size_t>(i)]);
        std::vector<int> face2 = seg_ba;
        for (int i = 1; i + 1 < static_cast<int>(path.size()); ++i)
            face2.push_back(path[static_cast<std::size_t>(i)]);
        faces[static_cast<std::size_t>(face_id)] = face1;
        faces.push_back(face2);

        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            emb_edges.insert(std::minmax(path[i], path[i + 1]));
        for (int v : path) emb_verts.insert(v);
    }
    return faces;
}

} // namespace detail

/// Exact planarity decision; Demoucron face extension per biconnected block.
inline bool is_planar(const Graph& g) {
    if (g.edge_count() == 0) return true;
    for (const auto& block : detail::biconnected_blocks(g))
        if (!detail::demoucron_block(block)) return false;
    return true;
}

/// A planar rotation system for a connected planar graph, assembled from the
/// per-block face cycles (block rotations spliced at cut vertices). Returns
/// nullopt when nonplanar.
inline std::optional<RotationEmbedding> planar_embedding(const Graph& g) {
    const int n = g.vertex_count();
    RotationEmbedding emb;
    emb.rotations.assign(static_cast<std::size_t>(n), {});
    if (g.edge_count() == 0) return emb;

    for (const auto& block : detail::biconnected_blocks(g)) {
        auto faces = detail::demoucron_block(block);
        if (!faces) return std::nullopt;
        // per-block rotation: successor of dart (u->v) around v is the dart
        // (v->w) that follows (u->v) in its face
        std::map<std::pair<int, int>, std::pair<int, int>> next_at; // rev(d) -> next out-dart
        if (faces->empty() && block.size() == 1) {
            // bridge: the two darts follow each other
            auto [u, v] = block[0];
            emb.rotations[static_cast<std::size_t>(u)].push_back(v);
            emb.rotations[static_cast<std::size_t>(v)].push_back(u);
            continue;
        }
        std::map<int, std::map<int, int>> succ; // succ[v][u] = w : (v->w) follows (v->u)
        auto add_pair = [&](int u, int v, int w) { succ[v][u] = w; };
        for (const auto& w : *faces) {
            const int L = static_cast<int>(w.size());
            if (L == 2) { // bridge walk u,v
                add_pair(w[0], w[1], w[0]);
                add_pair(w[1], w[0], w[1]);
                continue;
            }
            for (int i = 0; i < L; ++i) {
                const int a = w[static_cast<std::size_t>(i)];
                const int b = w[static_cast<std::size_t>((i + 1) % L)];
                const int c = w[static_cast<std::size_t>((i + 2) % L)];
                // face steps a->b then b->c: rotation successor of (b->a) is (b->c)
                add_pair(a, b, c);
            }
        }
        for (auto& [v, m] : succ) {
            // walk the successor cycle to a rotation order of this block's
            // neighbors at v, then append to v's global rotation
            const int first = m.begin()->first;
            std::vector<int> order;
            int cur = first;
            do {
                order.push_back(cur);
                cur = m.at(cur);
            } while (cur != first && order.size() <= m.size());
            if (order.size() != m.size()) return std::nullopt; // not a single cycle
            auto& rot = emb.rotations[static_cast<std::size_t>(v)];
            rot.insert(rot.end(), order.begin(), order.end());
        }
    }
    return emb;
}

} // namespace permuta
