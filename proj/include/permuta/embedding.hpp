#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "permuta/errors.hpp"
#include "permuta/graph.hpp"
#include "permuta/graph6.hpp"

namespace permuta {

/// Rotation system: per-vertex cyclic order of neighbors, plus edge signs
/// (all +1 for orientable embeddings). Signs are stored only for negative
/// edges.
struct RotationEmbedding {
    std::vector<std::vector<int>> rotations;   // rotations[v] = neighbors in cyclic order
    std::map<std::pair<int, int>, int> signs;  // (min(u,v),max(u,v)) -> -1; absent = +1

    int sign(int u, int v) const {
        auto it = signs.find(std::minmax(u, v));
        return it == signs.end() ? 1 : it->second;
    }
    void set_sign(int u, int v, int s) {
        if (s == 1)
            signs.erase(std::minmax(u, v));
        else
            signs[std::minmax(u, v)] = -1;
    }
    bool all_positive() const {
        for (const auto& [e, s] : signs)
            if (s < 0) return false;
        return true;
    }
};

/// One face as its boundary walk; steps are (from, to, side) edge traversals.
struct FaceWalk {
    struct Step {
        int from, to, side;
    };
    std::vector<Step> steps;
};

namespace detail {

struct DartIndex {
    std::vector<std::pair<int, int>> edges; // edge e -> (u,v)
    std::vector<int> tail, head;            // per dart
    std::map<std::pair<int, int>, int> edge_id;

    explicit DartIndex(const Graph& g) {
        for (auto [u, v] : g.edges()) {
            edge_id[{u, v}] = static_cast<int>(edges.size());
            edges.emplace_back(u, v);
            tail.push_back(u);
            head.push_back(v);
            tail.push_back(v);
            head.push_back(u);
        }
    }
    int dart_count() const { return static_cast<int>(tail.size()); }
    int rev(int d) const { return d ^ 1; }
    int edge_of(int d) const { return d >> 1; }
    int dart(int u, int v) const {
        auto it = edge_id.find({std::min(u, v), std::max(u, v)});
        if (it == edge_id.end()) return -1;
        const int e = it->second;
        return edges[static_cast<std::size_t>(e)].first == u ? 2 * e : 2 * e + 1;
    }
};

} // namespace detail

/// Traces the faces of a (possibly signed) rotation system. The face
/// permutation acts on signed darts (d, side): crossing a negative edge flips
/// the side, and on the flipped side the rotation is read backwards. Mirror
/// orbits describe the same face, so faces are orbit pairs.
/// Throws InvalidParameters if the rotations are not neighbor permutations.
inline std::vector<FaceWalk> trace_faces(const Graph& g, const RotationEmbedding& emb) {
    const int n = g.vertex_count();
    if (static_cast<int>(emb.rotations.size()) != n)
        throw InvalidParameters("rotation system size does not match vertex count");
    detail::DartIndex dx(g);
    const int dn = dx.dart_count();
    if (dn == 0) return {};

    // successor/predecessor of each out-dart within its vertex rotation
    std::vector<int> succ(static_cast<std::size_t>(dn), -1), pred(static_cast<std::size_t>(dn), -1);
    for (int v = 0; v < n; ++v) {
        const auto& rot = emb.rotations[static_cast<std::size_t>(v)];
        auto nbrs = g.neighbors(v);
        if (rot.size() != nbrs.size())
            throw InvalidParameters("rotation at vertex " + std::to_string(v) +
                                    " has wrong length");
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int w : rot) {
            if (w < 0 || w >= n || !g.edge(v, w) || seen[static_cast<std::size_t>(w)])
                throw InvalidParameters("rotation at vertex " + std::to_string(v) +
                                        " is not a permutation of its neighbors");
            seen[static_cast<std::size_t>(w)] = 1;
        }
        for (std::size_t i = 0; i < rot.size(); ++i) {
            const int d = dx.dart(v, rot[i]);
            const int d2 = dx.dart(v, rot[(i + 1) % rot.size()]);
            succ[static_cast<std::size_t>(d)] = d2;
            pred[static_cast<std::size_t>(d2)] = d;
        }
    }

    auto neg = [&](int d) {
        auto [u, v] = dx.edges[static_cast<std::size_t>(dx.edge_of(d))];
        return emb.sign(u, v) < 0;
    };
    auto step = [&](int d, int s) -> std::pair<int, int> {
        const int s2 = s ^ (neg(d) ? 1 : 0);
        const int r = dx.rev(d);
        const int d2 = s2 == 0 ? succ[static_cast<std::size_t>(r)] : pred[static_cast<std::size_t>(r)];
        return {d2, s2};
    };
    auto mirror = [&](int d, int s) -> std::pair<int, int> {
        return {dx.rev(d), s ^ (neg(d) ? 1 : 0) ^ 1};
    };

    // the step map is a bijection on signed darts, so orbits are clean cycles;
    // an orbit and its mirror describe the same face
    std::vector<char> consumed(static_cast<std::size_t>(2 * dn), 0);
    auto sid = [dn](int d, int s) { return s * dn + d; };
    std::vector<FaceWalk> faces;
    for (int d0 = 0; d0 < dn; ++d0)
        for (int s0 = 0; s0 < 2; ++s0) {
            if (consumed[static_cast<std::size_t>(sid(d0, s0))]) continue;
            FaceWalk walk;
            int d = d0, s = s0;
            do {
                walk.steps.push_back({dx.tail[static_cast<std::size_t>(d)],
                                      dx.head[static_cast<std::size_t>(d)], s});
                auto [d2, s2] = step(d, s);
                d = d2;
                s = s2;
            } while (!(d == d0 && s == s0) &&
                     static_cast<int>(walk.steps.size()) <= 2 * dn);
            if (!(d == d0 && s == s0))
                throw InvalidParameters("face tracing failed to close a walk");
            for (const auto& st : walk.steps) {
                const int dd = dx.dart(st.from, st.to);
                consumed[static_cast<std::size_t>(sid(dd, st.side))] = 1;
                auto [md, ms] = mirror(dd, st.side);
                consumed[static_cast<std::size_t>(sid(md, ms))] = 1;
            }
            faces.push_back(std::move(walk));
        }
    return faces;
}

inline int face_count(const Graph& g, const RotationEmbedding& emb) {
    return static_cast<int>(trace_faces(g, emb).size());
}

/// True iff the signature is switching-equivalent to all-positive, i.e. every
/// cycle has positive sign product. A false result witnesses an
/// orientation-reversing walk.
inline bool signature_balanced(const Graph& g, const RotationEmbedding& emb) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int v = queue[qi];
            for (int u : g.neighbors(v)) {
                const int want = side[static_cast<std::size_t>(v)] ^ (emb.sign(v, u) < 0 ? 1 : 0);
                if (side[static_cast<std::size_t>(u)] < 0) {
                    side[static_cast<std::size_t>(u)] = want;
                    queue.push_back(u);
                } else if (side[static_cast<std::size_t>(u)] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

// --- certificates ----------------------------------------------------------------

/// Portable proof of an embedding: graph key (graph6 of the labeled graph),
/// rotation system, face count, claimed surface. Verification re-traces the
/// faces and checks the Euler relation V - E + F = 2 / 0 / 1.
struct EmbeddingCertificate {
    std::string graph6;
    RotationEmbedding embedding;
    int faces = 0;
    std::string surface; // "sphere" | "torus" | "projective"
};

inline int surface_euler_characteristic(const std::string& surface) {
    if (surface == "sphere") return 2;
    if (surface == "torus") return 0;
    if (surface == "projective") return 1;
    throw InvalidParameters("unknown surface: " + surface);
}

/// O(E) certificate check. Throws HashMismatch when the certificate belongs
/// to a different labeled graph; returns false on any structural failure.
inline bool verify_certificate(const Graph& g, const EmbeddingCertificate& c) {
    if (to_graph6(g) != c.graph6)
        throw HashMismatch("certificate graph key does not match the given graph");
    if (!g.connected()) return false;
    int f;
    try {
        f = face_count(g, c.embedding);
    } catch (const InvalidParameters&) {
        return false;
    }
    if (f != c.faces) return false;
    const int chi = g.vertex_count() - g.edge_count() + f;
    if (chi != surface_euler_characteristic(c.surface)) return false;
    if (c.surface == "projective") {
        // a projective certificate must be genuinely nonorientable: some cycle
        // reverses orientation
        if (c.embedding.all_positive()) return false;
        if (signature_balanced(g, c.embedding)) return false;
    } else {
        // orientable surfaces carry all-positive signatures
        if (!c.embedding.all_positive()) return false;
    }
    return true;
}

// --- JSON ------------------------------------------------------------------------

inline nlohmann::json certificate_to_json(const EmbeddingCertificate& c) {
    nlohmann::json j;
    j["graph6"] = c.graph6;
    j["rotations"] = c.embedding.rotations;
    auto& signs = j["signs"] = nlohmann::json::object();
    for (const auto& [e, s] : c.embedding.signs)
        signs[std::to_string(e.first) + "-" + std::to_string(e.second)] = s;
    j["faces"] = c.faces;
    j["surface"] = c.surface;
    return j;
}

inline EmbeddingCertificate certificate_from_json(const nlohmann::json& j) {
    EmbeddingCertificate c;
    c.graph6 = j.at("graph6").get<std::string>();
    c.embedding.rotations = j.at("rotations").get<std::vector<std::vector<int>>>();
    if (j.contains("signs"))
        for (auto it = j.at("signs").begin(); it != j.at("signs").end(); ++it) {
            const std::string key = it.key();
            const auto dash = key.find('-');
            if (dash == std::string::npos) throw IoError("bad sign key: " + key);
            const int u = std::stoi(key.substr(0, dash));
            const int v = std::stoi(key.substr(dash + 1));
            c.embedding.set_sign(u, v, it.value().get<int>());
        }
    c.faces = j.at("faces").get<int>();
    c.surface = j.at("surface").get<std::string>();
    return c;
}

} // namespace permuta
