#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "permuta/embed_search.hpp"
#include "permuta/embedding.hpp"
#include "permuta/graph.hpp"
#include "permuta/graph_algs.hpp"
#include "permuta/planarity.hpp"

namespace permuta {

// --- closed-form genus formulas ------------------------------------------------

/// (orientable genus, nonorientable genus) of the complete graph K_n,
/// including the n = 7 exception of the crosscap formula.
inline std::pair<int, int> reference_genus_complete(int n) {
    if (n < 3) throw ParamsOutOfRange("complete-graph genus formula needs n >= 3");
    const auto ceil_div = [](long long a, long long b) { return static_cast<int>((a + b - 1) / b); };
    const long long p = static_cast<long long>(n - 3) * (n - 4);
    const int genus = ceil_div(p, 12);
    const int crosscap = n == 7 ? 3 : ceil_div(p, 6);
    return {genus, crosscap};
}

inline std::pair<int, int> reference_genus_bipartite(int m, int n) {
    if (m < 2 || n < 2) throw ParamsOutOfRange("bipartite genus formula needs m,n >= 2");
    const auto ceil_div = [](long long a, long long b) { return static_cast<int>((a + b - 1) / b); };
    const long long p = static_cast<long long>(m - 2) * (n - 2);
    return {ceil_div(p, 4), ceil_div(p, 2)};
}

// --- wye-delta -------------------------------------------------------------------

/// Replaces a degree-3 vertex by the triangle on its neighbors (simple-graph
/// collapse of parallel edges). Preserves embeddability on a fixed surface.
inline Graph wye_delta(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw ParamsOutOfRange("vertex out of range");
    if (g.degree(v) != 3)
        throw DegreeNotThree("wye-delta needs a degree-3 vertex, got degree " +
                             std::to_string(g.degree(v)));
    auto nb = g.neighbors(v);
    Graph out(g.vertex_count() - 1);
    auto newid = [v](int u) { return u < v ? u : u - 1; };
    for (auto [a, b] : g.edges())
        if (a != v && b != v) out.add_edge(newid(a), newid(b));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!out.edge(newid(nb[static_cast<std::size_t>(i)]), newid(nb[static_cast<std::size_t>(j)])))
                out.add_edge(newid(nb[static_cast<std::size_t>(i)]), newid(nb[static_cast<std::size_t>(j)]));
    return out;
}

// --- witness database -------------------------------------------------------------

/// Fast negative evidence: a subgraph witness whose genus/crosscap exceeds 1.
/// All bounds except a1 follow from the closed-form formulas; a1 is one of
/// the eight-vertex torus obstructions, re-proved by exhaustive search in the
/// test suite.
struct WitnessHit {
    std::string name;
    std::vector<int> map;
};

struct QuickBound {
    std::optional<WitnessHit> torus;      // genus > 1
    std::optional<WitnessHit> projective; // crosscap > 1
};

inline QuickBound quick_bound(const Graph& g) {
    struct Entry {
        const char* name;
        bool kills_torus, kills_projective;
    };
    static const Entry kWitnesses[] = {
        {"k8", true, true},   {"k45", true, true}, {"k37", true, true}, {"a1", true, false},
        {"k7", false, true},  {"k35", false, true}, {"k44", false, true},
    };
    QuickBound out;
    for (const auto& w : kWitnesses) {
        if (out.torus && (out.projective || !w.kills_projective)) break;
        if (!w.kills_torus && out.projective) continue;
        if (w.kills_torus && out.torus && !w.kills_projective) continue;
        const Graph pat = pattern_by_name(w.name);
        auto hit = has_subgraph(g, pat);
        if (!hit) continue;
        WitnessHit wh{w.name, *hit};
        if (w.kills_torus && !out.torus) out.torus = wh;
        if (w.kills_projective && !out.projective) out.projective = wh;
    }
    return out;
}

// --- certificate cache -------------------------------------------------------------

/// Disk-backed cache of embedding decisions keyed by (graph6, surface).
/// Writes are atomic (write-temp-then-rename); reads verify the stored key.
class CertificateCache {
public:
    explicit CertificateCache(std::string dir = {}) : dir_(std::move(dir)) {
        if (!dir_.empty()) std::filesystem::create_directories(dir_);
    }

    static std::string key_hash(const std::string& key) {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : key) {
            h ^= c;
            h *= 1099511628211ull;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    std::optional<nlohmann::json> load(const std::string& key) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = mem_.find(key);
            if (it != mem_.end()) return it->second;
        }
        if (dir_.empty()) return std::nullopt;
        const auto path = std::filesystem::path(dir_) / (key_hash(key) + ".json");
        std::ifstream in(path);
        if (!in) return std::nullopt;
        nlohmann::json j;
        try {
            in >> j;
        } catch (...) {
            return std::nullopt;
        }
        if (j.value("key", std::string{}) != key) return std::nullopt; // hash collision
        std::lock_guard<std::mutex> lock(mu_);
        mem_[key] = j;
        return j;
    }

    void store(const std::string& key, nlohmann::json j) const {
        j["key"] = key;
        {
            std::lock_guard<std::mutex> lock(mu_);
            mem_[key] = j;
        }
        if (dir_.empty()) return;
        const auto path = std::filesystem::path(dir_) / (key_hash(key) + ".json");
        const auto tmp = path.string() + ".tmp." + std::to_string(reinterpret_cast<std::uintptr_t>(&j));
        {
            std::ofstream out(tmp);
            out << j.dump(1) << "\n";
        }
        std::filesystem::rename(tmp, path);
    }

    const std::string& directory() const { return dir_; }

private:
    std::string dir_;
    mutable std::mutex mu_;
    mutable std::map<std::string, nlohmann::json> mem_;
};

// --- decisions ----------------------------------------------------------------------

enum class SurfaceKind { Torus, Projective };

inline std::string surface_name(SurfaceKind s) {
    return s == SurfaceKind::Torus ? "torus" : "projective";
}

struct TopoStats {
    std::uint64_t searches = 0;
    std::uint64_t search_nodes = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t verifications = 0;
};

struct TopoOptions {
    std::uint64_t node_budget = 1'000'000'000;
    double time_budget_seconds = 0.0;
    bool use_witness_scan = true;
    CertificateCache* cache = nullptr;
    TopoStats* stats = nullptr;
};

struct SurfaceDecision {
    enum class Status { Yes, No, Inconclusive } status = Status::Inconclusive;
    std::string evidence;                          // human-readable justification
    std::optional<EmbeddingCertificate> certificate; // present for connected Yes
    std::optional<WitnessHit> witness;             // present for witness-based No
    std::uint64_t nodes = 0;
};

namespace detail {

inline void bump(TopoStats* s, std::uint64_t searches, std::uint64_t nodes, std::uint64_t hits,
                 std::uint64_t verifs) {
    if (!s) return;
    s->searches += searches;
    s->search_nodes += nodes;
    s->cache_hits += hits;
    s->verifications += verifs;
}

inline EmbeddingCertificate make_certificate(const Graph& g, const RotationEmbedding& emb) {
    EmbeddingCertificate c;
    c.graph6 = to_graph6(g);
    c.embedding = emb;
    c.faces = face_count(g, emb);
    const int chi = g.vertex_count() - g.edge_count() + c.faces;
    c.surface = chi == 2 ? "sphere" : chi == 1 ? "projective" : chi == 0 ? "torus" : "invalid";
    return c;
}

/// Inserts vertex x into the embedding: picks a face whose walk contains all
/// embedded neighbors of x and splits it. Returns false when no face works.
inline bool insert_vertex_into_face(const Graph& g, RotationEmbedding& emb, Graph& cur, int x) {
    std::vector<int> attach;
    for (int u : g.neighbors(x))
        if (!emb.rotations[static_cast<std::size_t>(u)].empty() ||
            (cur.degree(u) > 0)) // embedded vertices have rotations or edges
            attach.push_back(u);
    // an isolated embedded vertex would have an empty rotation; restrict to
    // vertices that are genuinely part of the current embedding
    std::vector<int> real_attach;
    for (int u : attach)
        if (cur.degree(u) > 0) real_attach.push_back(u);
    attach = real_attach;
    if (attach.empty()) return false;

    auto faces = trace_faces(cur, emb);
    const int old_f = static_cast<int>(faces.size());
    for (const auto& face : faces) {
        const int L = static_cast<int>(face.steps.size());
        // first corner position of each attachment, in walk order
        std::vector<std::pair<int, int>> corners; // (step index, vertex)
        {
            std::vector<char> got(attach.size(), 0);
            for (int i = 0; i < L; ++i) {
                const int at = face.steps[static_cast<std::size_t>(i)].to;
                for (std::size_t a = 0; a < attach.size(); ++a)
                    if (!got[a] && attach[a] == at) {
                        got[a] = 1;
                        corners.emplace_back(i, at);
                    }
            }
            if (corners.size() != attach.size()) continue;
        }
        std::sort(corners.begin(), corners.end());

        for (int orient = 0; orient < 2; ++orient) {
            RotationEmbedding trial = emb;
            // x's rotation follows the walk order of the chosen corners
            std::vector<int> xrot;
            for (auto [i, a] : corners) xrot.push_back(a);
            if (orient == 1) std::reverse(xrot.begin(), xrot.end());
            trial.rotations[static_cast<std::size_t>(x)] = xrot;
            for (auto [i, a] : corners) {
                const auto& st = face.steps[static_cast<std::size_t>(i)];
                const int arrive = st.side ^ (emb.sign(st.from, st.to) < 0 ? 1 : 0);
                auto& rot = trial.rotations[static_cast<std::size_t>(a)];
                auto pos = std::find(rot.begin(), rot.end(), st.from);
                if (pos == rot.end()) return false; // inconsistent state
                if (arrive == 0)
                    rot.insert(pos + 1, x);
                else
                    rot.insert(pos, x);
            }
            Graph next = cur;
            for (int a : attach) next.add_edge(x, a);
            int f;
            try {
                f = face_count(next, trial);
            } catch (const InvalidParameters&) {
                continue;
            }
            // chi must be preserved: dV=1, dE=k, dF must be k-1
            if (f == old_f + static_cast<int>(attach.size()) - 1) {
                emb = std::move(trial);
                cur = std::move(next);
                return true;
            }
        }
    }
    return false;
}

/// Positive-certificate fast path for join-shaped graphs: embed the
/// nonplanar core found by peeling small components off the dominating hub,
/// then insert the pendant component vertices face by face.
inline std::optional<RotationEmbedding> join_insertion(const Graph& g, SurfaceKind s,
                                                       const TopoOptions& opt,
                                                       std::uint64_t* nodes_out,
                                                       TopoStats* stats) {
    const int n = g.vertex_count();
    std::vector<int> hub;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) hub.push_back(v);
    if (hub.empty() || static_cast<int>(hub.size()) == n) return std::nullopt;
    std::vector<char> in_core(static_cast<std::size_t>(n), 0);
    for (int v : hub) in_core[static_cast<std::size_t>(v)] = 1;

    // components off the hub, largest first
    std::vector<std::vector<int>> comps;
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            if (in_core[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)]) continue;
            std::vector<int> comp{v};
            seen[static_cast<std::size_t>(v)] = 1;
            for (std::size_t qi = 0; qi < comp.size(); ++qi)
                for (int u : g.neighbors(comp[qi]))
                    if (!in_core[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = 1;
                        comp.push_back(u);
                    }
            comps.push_back(std::move(comp));
        }
    }
    if (comps.size() < 2) return std::nullopt;
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });

    // grow the core until it is nonplanar
    std::vector<int> core = hub;
    std::size_t next_comp = 0;
    auto core_graph = [&]() { return g.induced(core); };
    for (; next_comp < comps.size(); ++next_comp) {
        if (comps[next_comp].size() >= 3 || !is_planar(core_graph())) break;
        // keep absorbing; checked again below
        core.insert(core.end(), comps[next_comp].begin(), comps[next_comp].end());
    }
    // absorb all big components unconditionally
    for (std::size_t i = next_comp; i < comps.size(); ++i)
        if (comps[i].size() >= 3) {
            core.insert(core.end(), comps[i].begin(), comps[i].end());
            std::swap(comps[i], comps[next_comp]);
            ++next_comp;
        }
    while (next_comp < comps.size() && is_planar(core_graph())) {
        core.insert(core.end(), comps[next_comp].begin(), comps[next_comp].end());
        ++next_comp;
    }
    if (next_comp >= comps.size()) return std::nullopt; // nothing left to insert
    std::sort(core.begin(), core.end());
    const Graph cg = g.induced(core);
    if (is_planar(cg)) return std::nullopt; // whole graph planar; not our job

    EmbedOptions eopt;
    eopt.node_budget = opt.node_budget;
    eopt.time_budget_seconds = opt.time_budget_seconds;
    eopt.allow_negative_signs = s == SurfaceKind::Projective;
    eopt.min_faces = cg.edge_count() - cg.vertex_count() + (s == SurfaceKind::Projective ? 1 : 0);
    auto res = search_embedding(cg, eopt);
    detail::bump(stats, 1, res.nodes, 0, 0);
    if (nodes_out) *nodes_out += res.nodes;
    if (res.status != EmbedSearchResult::Status::Found) return std::nullopt;

    // lift core embedding to original vertex ids
    RotationEmbedding emb;
    emb.rotations.assign(static_cast<std::size_t>(n), {});
    Graph cur(n);
    for (std::size_t i = 0; i < core.size(); ++i) {
        for (int w : res.embedding.rotations[i])
            emb.rotations[static_cast<std::size_t>(core[i])].push_back(core[static_cast<std::size_t>(w)]);
    }
    for (auto [a, b] : cg.edges()) {
        cur.add_edge(core[static_cast<std::size_t>(a)], core[static_cast<std::size_t>(b)]);
        if (res.embedding.sign(a, b) < 0)
            emb.set_sign(core[static_cast<std::size_t>(a)], core[static_cast<std::size_t>(b)], -1);
    }

    // insert remaining components vertex by vertex
    for (std::size_t ci = next_comp; ci < comps.size(); ++ci) {
        // order: vertices with the most already-embedded neighbors first
        std::vector<int> todo = comps[ci];
        std::vector<char> done(todo.size(), 0);
        for (std::size_t step = 0; step < todo.size(); ++step) {
            int best = -1, best_cnt = -1;
            for (std::size_t i = 0; i < todo.size(); ++i) {
                if (done[i]) continue;
                int cnt = 0;
                for (int u : g.neighbors(todo[i]))
                    if (cur.degree(u) > 0) ++cnt;
                if (cnt > best_cnt) {
                    best_cnt = cnt;
                    best = static_cast<int>(i);
                }
            }
            done[static_cast<std::size_t>(best)] = 1;
            if (!insert_vertex_into_face(g, emb, cur, todo[static_cast<std::size_t>(best)]))
                return std::nullopt;
        }
    }
    if (!(cur == g)) return std::nullopt;
    return emb;
}

} // namespace detail

/// Exact decision: does g embed in the given surface (genus <= 1 for the
/// torus, crosscap <= 1 for the projective plane)? Planar graphs embed in
/// both. Disconnected inputs are split: at most one component may be
/// nonplanar and the rest must be planar.
inline SurfaceDecision embeddable_on(const Graph& g, SurfaceKind s, const TopoOptions& opt = {}) {
    SurfaceDecision out;
    if (!g.connected()) {
        auto comps = g.components();
        std::vector<int> nonplanar;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (!is_planar(g.induced(comps[i]))) nonplanar.push_back(static_cast<int>(i));
        if (nonplanar.empty()) {
            out.status = SurfaceDecision::Status::Yes;
            out.evidence = "all components planar";
            return out;
        }
        if (nonplanar.size() >= 2) {
            out.status = SurfaceDecision::Status::No;
            out.evidence = "two disjoint nonplanar components cannot share one handle or crosscap";
            return out;
        }
        SurfaceDecision inner =
            embeddable_on(g.induced(comps[static_cast<std::size_t>(nonplanar[0])]), s, opt);
        inner.evidence = "nonplanar component: " + inner.evidence;
        inner.certificate.reset(); // certificate describes the component, not g
        return inner;
    }

    if (is_planar(g)) {
        out.status = SurfaceDecision::Status::Yes;
        out.evidence = "planar";
        if (auto pe = planar_embedding(g)) {
            auto cert = detail::make_certificate(g, *pe);
            if (cert.surface == "sphere" && verify_certificate(g, cert)) {
                detail::bump(opt.stats, 0, 0, 0, 1);
                out.certificate = std::move(cert);
            }
        }
        return out;
    }

    const std::string key = to_graph6(g) + "|" + surface_name(s);
    if (opt.cache) {
        if (auto j = opt.cache->load(key)) {
            const auto& cached = *j;
            if (cached.value("embeddable", std::string{}) == "yes" && cached.contains("certificate")) {
                auto cert = certificate_from_json(cached.at("certificate"));
                if (verify_certificate(g, cert)) {
                    detail::bump(opt.stats, 0, 0, 1, 1);
                    out.status = SurfaceDecision::Status::Yes;
                    out.evidence = cached.value("evidence", std::string("certificate"));
                    out.certificate = std::move(cert);
                    return out;
                }
            } else if (cached.value("embeddable", std::string{}) == "no") {
                detail::bump(opt.stats, 0, 0, 1, 0);
                out.status = SurfaceDecision::Status::No;
                out.evidence = cached.value("evidence", std::string{});
                return out;
            }
        }
    }

    const int target_chi = s == SurfaceKind::Torus ? 0 : 1;
    const int min_faces = g.edge_count() - g.vertex_count() + (s == SurfaceKind::Projective ? 1 : 0);
    // Euler/girth root bound
    const int girth = g.girth();
    if (girth >= 3 && g.min_degree() >= 2 && 2 * g.edge_count() / girth < min_faces) {
        out.status = SurfaceDecision::Status::No;
        out.evidence = "euler bound: faces <= 2E/girth = " +
                       std::to_string(2 * g.edge_count() / girth) + " < " +
                       std::to_string(min_faces) + " required for chi = " +
                       std::to_string(target_chi);
        if (opt.cache)
            opt.cache->store(key, {{"embeddable", "no"}, {"evidence", out.evidence}});
        return out;
    }

    // witness subgraphs give definitive negatives without a search
    if (opt.use_witness_scan) {
        auto qb = quick_bound(g);
        const auto& hit = s == SurfaceKind::Torus ? qb.torus : qb.projective;
        if (hit) {
            out.status = SurfaceDecision::Status::No;
            out.evidence = "witness " + hit->name;
            out.witness = hit;
            if (opt.cache)
                opt.cache->store(key, {{"embeddable", "no"}, {"evidence", out.evidence}});
            return out;
        }
    }

    // join-shaped fast path
    if (auto emb = detail::join_insertion(g, s, opt, &out.nodes, opt.stats)) {
        auto cert = detail::make_certificate(g, *emb);
        const int chi = surface_euler_characteristic(cert.surface);
        if (chi >= target_chi && verify_certificate(g, cert)) {
            detail::bump(opt.stats, 0, 0, 0, 1);
            out.status = SurfaceDecision::Status::Yes;
            out.evidence = "certificate (hub insertion)";
            if (opt.cache)
                opt.cache->store(key, {{"embeddable", "yes"},
                                       {"evidence", out.evidence},
                                       {"certificate", certificate_to_json(cert)}});
            out.certificate = std::move(cert);
            return out;
        }
    }

    EmbedOptions eopt;
    eopt.node_budget = opt.node_budget;
    eopt.time_budget_seconds = opt.time_budget_seconds;
    eopt.allow_negative_signs = s == SurfaceKind::Projective;
    eopt.min_faces = min_faces;
    auto res = search_embedding(g, eopt);
    detail::bump(opt.stats, 1, res.nodes, 0, 0);
    out.nodes += res.nodes;
    switch (res.status) {
        case EmbedSearchResult::Status::Found: {
            auto cert = detail::make_certificate(g, res.embedding);
            if (!verify_certificate(g, cert))
                throw Error("search produced an invalid certificate"); // internal invariant
            detail::bump(opt.stats, 0, 0, 0, 1);
            out.status = SurfaceDecision::Status::Yes;
            out.evidence = "certificate (exhaustive search)";
            if (opt.cache)
                opt.cache->store(key, {{"embeddable", "yes"},
                                       {"evidence", out.evidence},
                                       {"certificate", certificate_to_json(cert)}});
            out.certificate = std::move(cert);
            return out;
        }
        case EmbedSearchResult::Status::Exhausted:
            out.status = SurfaceDecision::Status::No;
            out.evidence = "exhaustive rotation search, " + std::to_string(res.nodes) + " nodes";
            if (opt.cache)
                opt.cache->store(key, {{"embeddable", "no"}, {"evidence", out.evidence}});
            return out;
        case EmbedSearchResult::Status::Budget:
            out.status = SurfaceDecision::Status::Inconclusive;
            out.evidence = "budget exceeded after " + std::to_string(res.nodes) + " nodes";
            return out;
    }
    return out;
}

// --- three-way classification ---------------------------------------------------

/// Exact surface class: planar / toroidal (genus exactly 1) / projective
/// (crosscap exactly 1), with evidence attached for every flag.
struct SurfaceClass {
    bool planar = false;
    bool toroidal = false;
    bool projective = false;
    bool torus_inconclusive = false;
    bool projective_inconclusive = false;
    std::string planar_evidence, torus_evidence, projective_evidence;
    std::optional<EmbeddingCertificate> torus_certificate, projective_certificate;
    std::optional<EmbeddingCertificate> sphere_certificate;
    std::optional<WitnessHit> torus_witness, projective_witness;
};

inline SurfaceClass classify_surface(const Graph& g, const TopoOptions& opt = {}) {
    SurfaceClass out;
    if (is_planar(g)) {
        out.planar = true;
        out.planar_evidence = "planar embedding";
        if (g.connected()) {
            if (auto pe = planar_embedding(g)) {
                auto cert = detail::make_certificate(g, *pe);
                if (verify_certificate(g, cert)) out.sphere_certificate = std::move(cert);
            }
        }
        out.torus_evidence = out.projective_evidence = "planar (genus 0)";
        return out;
    }

    auto qb = quick_bound(g);
    bool torus_done = false, proj_done = false;
    if (qb.torus) {
        out.toroidal = false;
        out.torus_evidence = "witness " + qb.torus->name;
        out.torus_witness = qb.torus;
        torus_done = true;
    }
    if (qb.projective) {
        out.projective = false;
        out.projective_evidence = "witness " + qb.projective->name;
        out.projective_witness = qb.projective;
        proj_done = true;
    }

    TopoOptions inner = opt;
    inner.use_witness_scan = false; // the scan above already ran on both surfaces
    if (!torus_done) {
        auto d = embeddable_on(g, SurfaceKind::Torus, inner);
        switch (d.status) {
            case SurfaceDecision::Status::Yes:
                out.toroidal = true; // nonplanar and embeds: genus exactly 1
                out.torus_certificate = d.certificate;
                break;
            case SurfaceDecision::Status::No: out.toroidal = false; break;
            case SurfaceDecision::Status::Inconclusive: out.torus_inconclusive = true; break;
        }
        out.torus_evidence = d.evidence;
    }
    if (!proj_done) {
        auto d = embeddable_on(g, SurfaceKind::Projective, inner);
        switch (d.status) {
            case SurfaceDecision::Status::Yes:
                out.projective = true;
                out.projective_certificate = d.certificate;
                break;
            case SurfaceDecision::Status::No: out.projective = false; break;
            case SurfaceDecision::Status::Inconclusive: out.projective_inconclusive = true; break;
        }
        out.projective_evidence = d.evidence;
    }
    return out;
}

} // namespace permuta
