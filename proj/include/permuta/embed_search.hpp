#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <vector>

#include "permuta/embedding.hpp"
#include "permuta/graph.hpp"

namespace permuta {

struct EmbedOptions {
    std::uint64_t node_budget = 1'000'000'000;
    double time_budget_seconds = 0.0; // 0 = unlimited
    bool allow_negative_signs = false;
    int min_faces = 1; // success threshold: F >= min_faces
};

struct EmbedSearchResult {
    enum class Status { Found, Exhausted, Budget };
    Status status = Status::Exhausted;
    std::uint64_t nodes = 0;
    RotationEmbedding embedding; // valid when Found
    int faces = 0;
};

/// Exhaustive search for an embedding with at least `min_faces` faces, by
/// backtracking over the face permutation on signed darts. Rotation systems
/// are built incrementally as face walks consume dart slots; per-vertex
/// chains guarantee each rotation closes into a single cycle. Signatures are
/// normalized so spanning-tree edges are positive.
///
/// Symmetry dominance: when a step would enter a completely untouched vertex,
/// interchangeable alternatives are skipped — smaller untouched neighborhood
/// twins, smaller same-orbit vertices of a fresh component, and smaller
/// untouched isomorphic components hanging off the dominating core. Each skip
/// is justified by an automorphism fixing every touched vertex.
///
/// The search is deterministic; the first complete assignment in canonical
/// order wins.
class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& g, const EmbedOptions& opt) : g_(g), opt_(opt), dx_(g) {
        n_ = g.vertex_count();
        m_ = g.edge_count();
        dn_ = 2 * m_;
        deg_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) deg_[static_cast<std::size_t>(v)] = g.degree(v);
        out_.resize(static_cast<std::size_t>(n_));
        for (int d = 0; d < dn_; ++d)
            out_[static_cast<std::size_t>(dx_.tail[static_cast<std::size_t>(d)])].push_back(d);
        succ_.assign(static_cast<std::size_t>(dn_), -1);
        pred_.assign(static_cast<std::size_t>(dn_), -1);
        fwd_used_.assign(static_cast<std::size_t>(dn_), 0);
        bwd_used_.assign(static_cast<std::size_t>(dn_), 0);
        cs_.resize(static_cast<std::size_t>(dn_));
        ce_.resize(static_cast<std::size_t>(dn_));
        for (int d = 0; d < dn_; ++d) cs_[static_cast<std::size_t>(d)] = ce_[static_cast<std::size_t>(d)] = d;
        linked_.assign(static_cast<std::size_t>(n_), 0);
        consumed_.assign(static_cast<std::size_t>(2 * dn_), 0);
        sig_.assign(static_cast<std::size_t>(m_), 0);
        tree_edge_.assign(static_cast<std::size_t>(m_), 0);
        mark_spanning_tree();
        const int girth = g.girth();
        geff_ = girth >= 3 && g.min_degree() >= 2 ? girth : 3;
        build_symmetry_tables();
    }

    EmbedSearchResult run() {
        EmbedSearchResult res;
        if (m_ == 0) return res;
        deadline_set_ = opt_.time_budget_seconds > 0;
        if (deadline_set_)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(opt_.time_budget_seconds));
        slack_ = 2 * m_ - geff_ * opt_.min_faces;
        if (slack_ < 0) return res; // Euler/girth bound: unreachable face count
        found_ = false;
        budget_hit_ = false;
        nodes_ = 0;
        extend();
        res.nodes = nodes_;
        if (found_) {
            res.status = EmbedSearchResult::Status::Found;
            res.embedding = std::move(result_embedding_);
            res.faces = result_faces_;
        } else {
            res.status = budget_hit_ ? EmbedSearchResult::Status::Budget
                                     : EmbedSearchResult::Status::Exhausted;
        }
        return res;
    }

private:
    const Graph& g_;
    EmbedOptions opt_;
    detail::DartIndex dx_;
    int n_ = 0, m_ = 0, dn_ = 0, geff_ = 3;
    std::vector<int> deg_;
    std::vector<std::vector<int>> out_;
    std::vector<int> succ_, pred_, cs_, ce_;
    std::vector<char> fwd_used_, bwd_used_;
    std::vector<int> linked_;
    std::vector<char> consumed_;
    std::vector<int> sig_; // 0 unset, else +1/-1
    std::vector<char> tree_edge_;
    int consumed_count_ = 0;
    int faces_closed_ = 0;
    int spent_ = 0; // total (face length - geff) over closed faces
    int slack_ = 0; // budget for spent_: 2E - geff * min_faces
    int cur_start_ = -1, cur_start_s_ = 0, cur_d_ = -1, cur_s_ = 0, cur_len_ = 0;
    bool found_ = false, budget_hit_ = false, deadline_set_ = false;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point deadline_;
    RotationEmbedding result_embedding_;
    int result_faces_ = 0;

    // symmetry tables
    std::vector<int> twin_prev_;      // previous member of v's twin class, or -1
    std::vector<int> comp_id_;        // component of G minus the dominating core; -1 on the core
    std::vector<int> comp_size_;
    std::vector<int> comp_prev_;      // previous component of the same iso class, or -1
    std::vector<int> orbit_prev_;     // previous same-orbit vertex in v's component, or -1
    std::vector<int> comp_untouched_; // per component
    std::vector<int> vtouch_;         // incident edges with consumed slots
    std::vector<int> edge_touch_;     // consumed signed darts per edge

    int sid(int d, int s) const { return s * dn_ + d; }
    bool neg(int d) const { return sig_[static_cast<std::size_t>(dx_.edge_of(d))] < 0; }
    int mirror_sid(int d, int s) const { return sid(dx_.rev(d), s ^ (neg(d) ? 1 : 0) ^ 1); }

    void mark_spanning_tree() {
        if (!opt_.allow_negative_signs) return;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        for (int root = 0; root < n_; ++root) {
            if (seen[static_cast<std::size_t>(root)]) continue;
            seen[static_cast<std::size_t>(root)] = 1;
            std::vector<int> queue{root};
            for (std::size_t qi = 0; qi < queue.size(); ++qi)
                for (int d : out_[static_cast<std::size_t>(queue[qi])]) {
                    const int u = dx_.head[static_cast<std::size_t>(d)];
                    if (!seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = 1;
                        tree_edge_[static_cast<std::size_t>(dx_.edge_of(d))] = 1;
                        queue.push_back(u);
                    }
                }
        }
    }

    // --- symmetry precomputation ------------------------------------------

    void build_symmetry_tables() {
        twin_prev_.assign(static_cast<std::size_t>(n_), -1);
        comp_id_.assign(static_cast<std::size_t>(n_), -1);
        comp_prev_.clear();
        orbit_prev_.assign(static_cast<std::size_t>(n_), -1);
        vtouch_.assign(static_cast<std::size_t>(n_), 0);
        edge_touch_.assign(static_cast<std::size_t>(m_), 0);

        // neighborhood twins: N(u) = N(v), or N[u] = N[v]
        std::vector<std::pair<std::vector<int>, std::vector<int>>> keys(
            static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            auto open = g_.neighbors(v);
            auto closed = open;
            closed.push_back(v);
            std::sort(closed.begin(), closed.end());
            keys[static_cast<std::size_t>(v)] = {std::move(open), std::move(closed)};
        }
        for (int v = 0; v < n_; ++v)
            for (int u = v - 1; u >= 0; --u)
                if (keys[static_cast<std::size_t>(u)].first == keys[static_cast<std::size_t>(v)].first ||
                    keys[static_cast<std::size_t>(u)].second == keys[static_cast<std::size_t>(v)].second) {
                    twin_prev_[static_cast<std::size_t>(v)] = u;
                    break;
                }

        // components hanging off the dominating core
        std::vector<int> core;
        for (int v = 0; v < n_; ++v)
            if (deg_[static_cast<std::size_t>(v)] == n_ - 1) core.push_back(v);
        if (core.empty() || static_cast<int>(core.size()) == n_) return;
        std::vector<std::vector<int>> comps;
        {
            std::vector<char> is_core(static_cast<std::size_t>(n_), 0), seen(static_cast<std::size_t>(n_), 0);
            for (int v : core) is_core[static_cast<std::size_t>(v)] = 1;
            for (int s = 0; s < n_; ++s) {
                if (is_core[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
                std::vector<int> comp{s};
                seen[static_cast<std::size_t>(s)] = 1;
                for (std::size_t qi = 0; qi < comp.size(); ++qi)
                    for (int u : g_.neighbors(comp[qi]))
                        if (!is_core[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                            seen[static_cast<std::size_t>(u)] = 1;
                            comp.push_back(u);
                        }
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
        const int nc = static_cast<int>(comps.size());
        comp_size_.resize(static_cast<std::size_t>(nc));
        comp_prev_.assign(static_cast<std::size_t>(nc), -1);
        for (int c = 0; c < nc; ++c) {
            comp_size_[static_cast<std::size_t>(c)] = static_cast<int>(comps[static_cast<std::size_t>(c)].size());
            for (int v : comps[static_cast<std::size_t>(c)]) comp_id_[static_cast<std::size_t>(v)] = c;
        }
        comp_untouched_ = comp_size_;

        // iso classes among small components (components attach to the whole
        // core, so any component isomorphism is a graph automorphism)
        auto comp_iso = [&](const std::vector<int>& a, const std::vector<int>& b,
                            std::vector<int>* map_out) {
            if (a.size() != b.size()) return false;
            if (a.size() > 8) return false;
            std::vector<int> perm(b.begin(), b.end());
            std::sort(perm.begin(), perm.end());
            do {
                bool ok = true;
                for (std::size_t i = 0; i < a.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < a.size() && ok; ++j)
                        if (g_.edge(a[i], a[j]) != g_.edge(perm[i], perm[j])) ok = false;
                if (ok) {
                    if (map_out) *map_out = perm;
                    return true;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        };
        for (int c = 0; c < nc; ++c)
            for (int c2 = c - 1; c2 >= 0; --c2)
                if (comp_iso(comps[static_cast<std::size_t>(c)], comps[static_cast<std::size_t>(c2)], nullptr)) {
                    comp_prev_[static_cast<std::size_t>(c)] = c2;
                    break;
                }

        // orbits within each component (brute automorphisms of the component)
        for (int c = 0; c < nc; ++c) {
            const auto& comp = comps[static_cast<std::size_t>(c)];
            if (comp.size() > 8) continue;
            std::vector<int> orbit(comp.size());
            std::iota(orbit.begin(), orbit.end(), 0);
            std::vector<int> perm = comp;
            std::sort(perm.begin(), perm.end());
            do {
                bool ok = true;
                for (std::size_t i = 0; i < comp.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < comp.size() && ok; ++j)
                        if (g_.edge(comp[i], comp[j]) != g_.edge(perm[i], perm[j])) ok = false;
                if (ok) { // union orbits
                    for (std::size_t i = 0; i < comp.size(); ++i) {
                        const int j = static_cast<int>(
                            std::lower_bound(comp.begin(), comp.end(), perm[i]) - comp.begin());
                        int a = static_cast<int>(i), b = j;
                        while (orbit[static_cast<std::size_t>(a)] != a) a = orbit[static_cast<std::size_t>(a)];
                        while (orbit[static_cast<std::size_t>(b)] != b) b = orbit[static_cast<std::size_t>(b)];
                        if (a != b) orbit[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
                    }
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            auto root_of = [&](int i) {
                while (orbit[static_cast<std::size_t>(i)] != i) i = orbit[static_cast<std::size_t>(i)];
                return i;
            };
            std::vector<int> last_seen(comp.size(), -1);
            for (std::size_t i = 0; i < comp.size(); ++i) {
                const int r = root_of(static_cast<int>(i));
                if (last_seen[static_cast<std::size_t>(r)] >= 0)
                    orbit_prev_[static_cast<std::size_t>(comp[i])] =
                        comp[static_cast<std::size_t>(last_seen[static_cast<std::size_t>(r)])];
                last_seen[static_cast<std::size_t>(r)] = static_cast<int>(i);
            }
        }
    }

    /// Entering untouched vertex w is dominated when an automorphism fixing
    /// all touched vertices maps a smaller candidate onto it.
    bool dominated_entry(int w) const {
        if (vtouch_[static_cast<std::size_t>(w)] > 0) return false;
        for (int u = twin_prev_[static_cast<std::size_t>(w)]; u >= 0;
             u = twin_prev_[static_cast<std::size_t>(u)])
            if (vtouch_[static_cast<std::size_t>(u)] == 0) return true;
        const int c = comp_id_[static_cast<std::size_t>(w)];
        if (c >= 0 && comp_untouched_[static_cast<std::size_t>(c)] == comp_size_[static_cast<std::size_t>(c)]) {
            for (int c2 = comp_prev_[static_cast<std::size_t>(c)]; c2 >= 0;
                 c2 = comp_prev_[static_cast<std::size_t>(c2)])
                if (comp_untouched_[static_cast<std::size_t>(c2)] == comp_size_[static_cast<std::size_t>(c2)])
                    return true;
            for (int u = orbit_prev_[static_cast<std::size_t>(w)]; u >= 0;
                 u = orbit_prev_[static_cast<std::size_t>(u)])
                return true; // whole component untouched, so u is untouched
        }
        return false;
    }

    bool out_of_budget() {
        if (nodes_ > opt_.node_budget) {
            budget_hit_ = true;
            return true;
        }
        if (deadline_set_ && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
            budget_hit_ = true;
            return true;
        }
        return false;
    }

    // --- rotation pair bookkeeping -----------------------------------------

    bool can_link(int x, int y, int v) const {
        if (x == y) return deg_[static_cast<std::size_t>(v)] == 1;
        if (cs_[static_cast<std::size_t>(x)] == y)
            return linked_[static_cast<std::size_t>(v)] + 1 == deg_[static_cast<std::size_t>(v)];
        return true;
    }
    std::pair<int, int> link(int x, int y, int v) {
        succ_[static_cast<std::size_t>(x)] = y;
        pred_[static_cast<std::size_t>(y)] = x;
        ++linked_[static_cast<std::size_t>(v)];
        if (x != y && cs_[static_cast<std::size_t>(x)] != y) {
            const int sx = cs_[static_cast<std::size_t>(x)];
            const int ey = ce_[static_cast<std::size_t>(y)];
            cs_[static_cast<std::size_t>(ey)] = sx;
            ce_[static_cast<std::size_t>(sx)] = ey;
            return {sx, ey};
        }
        return {-1, -1};
    }
    void unlink(int x, int y, int v, std::pair<int, int> token) {
        succ_[static_cast<std::size_t>(x)] = -1;
        pred_[static_cast<std::size_t>(y)] = -1;
        --linked_[static_cast<std::size_t>(v)];
        if (token.first >= 0) {
            cs_[static_cast<std::size_t>(token.second)] = y;
            ce_[static_cast<std::size_t>(token.first)] = x;
        }
    }

    // --- consumption ---------------------------------------------------------

    void touch_edge(int e) {
        edge_touch_[static_cast<std::size_t>(e)] += 2;
        if (edge_touch_[static_cast<std::size_t>(e)] == 2) {
            for (int v : {dx_.edges[static_cast<std::size_t>(e)].first,
                          dx_.edges[static_cast<std::size_t>(e)].second}) {
                if (vtouch_[static_cast<std::size_t>(v)]++ == 0) {
                    const int c = comp_id_[static_cast<std::size_t>(v)];
                    if (c >= 0) --comp_untouched_[static_cast<std::size_t>(c)];
                }
            }
        }
    }
    void untouch_edge(int e) {
        edge_touch_[static_cast<std::size_t>(e)] -= 2;
        if (edge_touch_[static_cast<std::size_t>(e)] == 0) {
            for (int v : {dx_.edges[static_cast<std::size_t>(e)].first,
                          dx_.edges[static_cast<std::size_t>(e)].second}) {
                if (--vtouch_[static_cast<std::size_t>(v)] == 0) {
                    const int c = comp_id_[static_cast<std::size_t>(v)];
                    if (c >= 0) ++comp_untouched_[static_cast<std::size_t>(c)];
                }
            }
        }
    }
    void consume(int d, int s) {
        consumed_[static_cast<std::size_t>(sid(d, s))] = 1;
        consumed_[static_cast<std::size_t>(mirror_sid(d, s))] = 1;
        consumed_count_ += 2;
        touch_edge(dx_.edge_of(d));
    }
    void unconsume(int d, int s) {
        consumed_[static_cast<std::size_t>(sid(d, s))] = 0;
        consumed_[static_cast<std::size_t>(mirror_sid(d, s))] = 0;
        consumed_count_ -= 2;
        untouch_edge(dx_.edge_of(d));
    }

    bool prune_faces() const {
        const int remaining = 2 * dn_ - consumed_count_;
        const int open = cur_d_ >= 0 ? 1 : 0;
        if (faces_closed_ + open + remaining / (2 * geff_) < opt_.min_faces) return true;
        const int open_spent = cur_d_ >= 0 && cur_len_ > geff_ ? cur_len_ - geff_ : 0;
        return spent_ + open_spent > slack_;
    }

    // --- search ---------------------------------------------------------------

    void extend() {
        if (found_ || out_of_budget()) return;
        ++nodes_;
        if (cur_d_ < 0) {
            if (consumed_count_ == 2 * dn_) {
                if (faces_closed_ >= opt_.min_faces) {
                    // capture before the recursion unwinds
                    found_ = true;
                    result_embedding_ = extract_embedding();
                    result_faces_ = faces_closed_;
                }
                return;
            }
            if (prune_faces()) return;
            int d0 = -1, s0 = 0; // canonical start: smallest unconsumed signed dart
            for (int d = 0; d < dn_ && d0 < 0; ++d)
                for (int s = 0; s < 2; ++s)
                    if (!consumed_[static_cast<std::size_t>(sid(d, s))]) {
                        d0 = d;
                        s0 = s;
                        break;
                    }
            const int e = dx_.edge_of(d0);
            const int presig = sig_[static_cast<std::size_t>(e)];
            for (int sign : {1, -1}) {
                if (presig != 0 && sign != presig) continue;
                if (presig == 0 && sign < 0 &&
                    (!opt_.allow_negative_signs || tree_edge_[static_cast<std::size_t>(e)]))
                    continue;
                sig_[static_cast<std::size_t>(e)] = sign;
                consume(d0, s0);
                cur_start_ = d0;
                cur_start_s_ = s0;
                cur_d_ = d0;
                cur_s_ = s0;
                cur_len_ = 1;
                extend();
                cur_d_ = -1;
                unconsume(d0, s0);
                sig_[static_cast<std::size_t>(e)] = presig;
                if (found_ || budget_hit_) return;
            }
            return;
        }

        if (prune_faces()) return;
        const int arrive_s = cur_s_ ^ (neg(cur_d_) ? 1 : 0);
        const int v = dx_.head[static_cast<std::size_t>(cur_d_)];
        const int r = dx_.rev(cur_d_);

        if (arrive_s == 0) {
            if (succ_[static_cast<std::size_t>(r)] >= 0) {
                if (!fwd_used_[static_cast<std::size_t>(r)]) {
                    fwd_used_[static_cast<std::size_t>(r)] = 1;
                    step_onto(succ_[static_cast<std::size_t>(r)], arrive_s);
                    fwd_used_[static_cast<std::size_t>(r)] = 0;
                }
            } else {
                for (int b : out_[static_cast<std::size_t>(v)]) {
                    if (pred_[static_cast<std::size_t>(b)] >= 0) continue;
                    if (!can_link(r, b, v)) continue;
                    if (dominated_entry(dx_.head[static_cast<std::size_t>(b)])) continue;
                    auto token = link(r, b, v);
                    fwd_used_[static_cast<std::size_t>(r)] = 1;
                    step_onto(b, arrive_s);
                    fwd_used_[static_cast<std::size_t>(r)] = 0;
                    unlink(r, b, v, token);
                    if (found_ || budget_hit_) return;
                }
            }
        } else {
            if (pred_[static_cast<std::size_t>(r)] >= 0) {
                const int b = pred_[static_cast<std::size_t>(r)];
                if (!bwd_used_[static_cast<std::size_t>(b)]) {
                    bwd_used_[static_cast<std::size_t>(b)] = 1;
                    step_onto(b, arrive_s);
                    bwd_used_[static_cast<std::size_t>(b)] = 0;
                }
            } else {
                for (int b : out_[static_cast<std::size_t>(v)]) {
                    if (succ_[static_cast<std::size_t>(b)] >= 0) continue;
                    if (!can_link(b, r, v)) continue;
                    if (dominated_entry(dx_.head[static_cast<std::size_t>(b)])) continue;
                    auto token = link(b, r, v);
                    bwd_used_[static_cast<std::size_t>(b)] = 1;
                    step_onto(b, arrive_s);
                    bwd_used_[static_cast<std::size_t>(b)] = 0;
                    unlink(b, r, v, token);
                    if (found_ || budget_hit_) return;
                }
            }
        }
    }

    /// The face walk continues with out-dart b on side s; rotation-pair slots
    /// are handled by the caller, the sign of b's edge may still be unset.
    void step_onto(int b, int s) {
        if (b == cur_start_ && s == cur_start_s_) { // face closes
            ++faces_closed_;
            const int add = cur_len_ > geff_ ? cur_len_ - geff_ : 0;
            spent_ += add;
            const int sd = cur_d_, ss = cur_s_, sl = cur_len_;
            const int sst = cur_start_, ssts = cur_start_s_;
            cur_d_ = -1;
            extend();
            cur_d_ = sd;
            cur_s_ = ss;
            cur_len_ = sl;
            cur_start_ = sst;
            cur_start_s_ = ssts;
            spent_ -= add;
            --faces_closed_;
            return;
        }
        const int e = dx_.edge_of(b);
        const int presig = sig_[static_cast<std::size_t>(e)];
        for (int sign : {1, -1}) {
            if (presig != 0 && sign != presig) continue;
            if (presig == 0 && sign < 0 &&
                (!opt_.allow_negative_signs || tree_edge_[static_cast<std::size_t>(e)]))
                continue;
            sig_[static_cast<std::size_t>(e)] = sign;
            if (consumed_[static_cast<std::size_t>(sid(b, s))] ||
                consumed_[static_cast<std::size_t>(mirror_sid(b, s))]) {
                sig_[static_cast<std::size_t>(e)] = presig;
                continue;
            }
            consume(b, s);
            const int pd = cur_d_, ps = cur_s_;
            cur_d_ = b;
            cur_s_ = s;
            ++cur_len_;
            extend();
            --cur_len_;
            cur_d_ = pd;
            cur_s_ = ps;
            unconsume(b, s);
            sig_[static_cast<std::size_t>(e)] = presig;
            if (found_ || budget_hit_) return;
        }
    }

    RotationEmbedding extract_embedding() const {
        RotationEmbedding emb;
        emb.rotations.assign(static_cast<std::size_t>(n_), {});
        for (int v = 0; v < n_; ++v) {
            if (out_[static_cast<std::size_t>(v)].empty()) continue;
            const int first = out_[static_cast<std::size_t>(v)][0];
            int d = first;
            auto& rot = emb.rotations[static_cast<std::size_t>(v)];
            do {
                rot.push_back(dx_.head[static_cast<std::size_t>(d)]);
                d = succ_[static_cast<std::size_t>(d)];
            } while (d != first && d >= 0 &&
                     static_cast<int>(rot.size()) <= deg_[static_cast<std::size_t>(v)]);
        }
        for (int e = 0; e < m_; ++e)
            if (sig_[static_cast<std::size_t>(e)] < 0)
                emb.set_sign(dx_.edges[static_cast<std::size_t>(e)].first,
                             dx_.edges[static_cast<std::size_t>(e)].second, -1);
        return emb;
    }
};

/// Convenience wrapper.
inline EmbedSearchResult search_embedding(const Graph& g, const EmbedOptions& opt) {
    return EmbeddingSearch(g, opt).run();
}

} // namespace permuta
