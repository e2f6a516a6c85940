#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permuta/group.hpp"
#include "permuta/group_iso.hpp"
#include "permuta/permgraph.hpp"
#include "permuta/surfaces.hpp"
#include "permuta/zoo.hpp"

namespace permuta {

// --- descriptor normalization ---------------------------------------------------

/// Maps alias constructions onto canonical forms so the theorem lists can be
/// matched structurally: abelian descriptors become direct products of prime
/// powers, S3-like groups become the metacyclic semidirect product, M8
/// becomes the dihedral group of order 8, and so on.
inline GroupDescriptor normalize_descriptor(const GroupDescriptor& d) {
    switch (d.family) {
        case Family::Cyclic: return d;
        case Family::DirectProduct: {
            // split factors into prime powers; coprime parts merge to cyclic
            std::map<int, std::vector<int>> primary; // prime -> exponents
            for (int f : d.params)
                for (auto [p, k] : prime_factorization(f)) primary[p].push_back(k);
            std::vector<int> parts;
            bool cyclic = true;
            for (auto& [p, exps] : primary) {
                std::sort(exps.rbegin(), exps.rend());
                if (exps.size() > 1) cyclic = false;
                for (int e : exps) {
                    int pk = 1;
                    for (int i = 0; i < e; ++i) pk *= p;
                    parts.push_back(pk);
                }
            }
            if (cyclic) return cyclic_desc(descriptor_order(d));
            std::sort(parts.rbegin(), parts.rend());
            return product_desc(parts);
        }
        case Family::ElementaryAbelian: {
            if (d.params[1] == 1) return cyclic_desc(d.params[0]);
            std::vector<int> parts(static_cast<std::size_t>(d.params[1]), d.params[0]);
            return product_desc(parts);
        }
        case Family::Dihedral: {
            const int n = d.params[0];
            if (n == 2) return product_desc({2, 2});
            if (is_prime(n) && n % 2 == 1) return metacyclic_desc(n, 2, 1, 1);
            return d;
        }
        case Family::Modular:
            if (d.params[0] == 2 && d.params[1] == 3) return dihedral_desc(4);
            return d;
        case Family::MetacyclicSemidirect: {
            if (d.params[3] == 0) return cyclic_desc(descriptor_order(d));
            return d;
        }
        case Family::Symmetric:
            if (d.params[0] == 2) return cyclic_desc(2);
            if (d.params[0] == 3) return metacyclic_desc(3, 2, 1, 1);
            return d;
        case Family::Alternating:
            if (d.params[0] == 3) return cyclic_desc(3);
            return d;
        default: return d;
    }
}

namespace detail {

/// Exponent partitions per prime for an abelian (normalized) descriptor, or
/// nullopt for nonabelian families.
inline std::optional<std::map<int, std::vector<int>>> abelian_shape(const GroupDescriptor& nd) {
    std::map<int, std::vector<int>> shape;
    auto add_factor = [&](int f) {
        for (auto [p, k] : prime_factorization(f)) shape[p].push_back(k);
    };
    switch (nd.family) {
        case Family::Cyclic: add_factor(nd.params[0]); break;
        case Family::DirectProduct:
            for (int f : nd.params) add_factor(f);
            break;
        case Family::ElementaryAbelian:
            for (int i = 0; i < nd.params[1]; ++i) shape[nd.params[0]].push_back(1);
            break;
        default: return std::nullopt;
    }
    for (auto& [p, exps] : shape) std::sort(exps.rbegin(), exps.rend());
    return shape;
}

inline bool shape_is(const std::map<int, std::vector<int>>& shape,
                     const std::vector<std::vector<int>>& partitions) {
    if (shape.size() != partitions.size()) return false;
    std::vector<std::vector<int>> have;
    for (const auto& [p, exps] : shape) have.push_back(exps);
    std::sort(have.begin(), have.end());
    auto want = partitions;
    std::sort(want.begin(), want.end());
    return have == want;
}

} // namespace detail

// --- the closed-form oracle -------------------------------------------------------

struct ClassificationRecord {
    bool graph_defined = true;
    bool planar = false;
    bool toroidal = false;
    bool projective = false;
    ForbiddenProfile profile;
    bool torus_inconclusive = false;
    bool projective_inconclusive = false;
    std::string source;   // "oracle" | "pipeline"
    std::string evidence;
};

/// Theorem-list membership for a descriptor: planar, toroidal and projective
/// flags by the classification theorems, consuming only the family and
/// parameters (never a Cayley table).
inline ClassificationRecord oracle_classify(const GroupDescriptor& d_in) {
    if (d_in.family == Family::Opaque)
        throw UnrecognizedDescriptor("the oracle cannot classify an opaque descriptor");
    const GroupDescriptor d = normalize_descriptor(d_in);
    ClassificationRecord rec;
    rec.source = "oracle";
    const int n = descriptor_order(d);
    if (n == 1 || is_prime(n)) {
        rec.graph_defined = false;
        rec.evidence = "graph undefined: no proper subgroups";
        return rec;
    }

    if (auto shape = detail::abelian_shape(d)) {
        const auto& s = *shape;
        const bool zpp_23 = (detail::shape_is(s, {{1, 1}}) &&
                             (s.begin()->first == 2 || s.begin()->first == 3));
        const bool zpp_5 = detail::shape_is(s, {{1, 1}}) && s.begin()->first == 5;
        const bool z4z2 = detail::shape_is(s, {{2, 1}}) && s.begin()->first == 2;
        bool planar = false, toroidal = false, projective = false;
        if (s.size() == 1) {
            const auto& exps = s.begin()->second;
            if (exps.size() == 1) {
                planar = exps[0] >= 2 && exps[0] <= 5;
                toroidal = exps[0] >= 6 && exps[0] <= 8;
                projective = exps[0] >= 6 && exps[0] <= 7;
            } else {
                planar = zpp_23;
                toroidal = projective = zpp_5 || z4z2;
            }
        } else if (s.size() == 2) {
            planar = detail::shape_is(s, {{1}, {1}}) || detail::shape_is(s, {{2}, {1}});
            toroidal = detail::shape_is(s, {{3}, {1}}) || detail::shape_is(s, {{2}, {2}});
            projective = detail::shape_is(s, {{3}, {1}});
        } else if (s.size() == 3) {
            toroidal = projective = detail::shape_is(s, {{1}, {1}, {1}});
        }
        rec.planar = planar;
        rec.toroidal = toroidal;
        rec.projective = projective;
        rec.evidence = "abelian classification";
    } else {
        switch (d.family) {
            case Family::GeneralizedQuaternion:
                rec.planar = d.params[0] == 3; // Q8 only
                break;
            case Family::MetacyclicSemidirect: {
                const int q = d.params[0], p = d.params[1], alpha = d.params[2], t = d.params[3];
                if (is_prime(q)) {
                    if (alpha == 1 && t == 1) rec.planar = true; // Zq : Zp
                    if (alpha == 2 && t == 2) rec.planar = true; // Zq :2 Zp^2
                    if (alpha == 2 && t == 1 && p == 2 && (q == 3 || q == 5)) {
                        rec.toroidal = true;           // Z3:Z4 and Z5:Z4
                        rec.projective = q == 3;       // Z3:Z4 only
                    }
                }
                break;
            }
            case Family::PPSemidirectQ: {
                const int p = d.params[0];
                rec.toroidal = p == 3 || p == 5;
                rec.projective = p == 3; // companion of prime order in GL_2(3): vacuous family
                if (p == 3)
                    rec.evidence = "vacuous family per parameter search: no companion matrix of "
                                   "order 2 exists in GL_2(3)";
                break;
            }
            case Family::PPSemidirectC4:
                rec.toroidal = true;
                rec.projective = true;
                break;
            case Family::Alternating:
                rec.planar = d.params[0] == 4;
                break;
            case Family::Symmetric:
            case Family::Dihedral:
            case Family::Modular:
            default: break; // not on any positive list
        }
        if (rec.evidence.empty()) rec.evidence = "theorem-list membership";
    }
    return rec;
}

/// Membership in the five forbidden-subgraph classification lists, in the
/// order {K_{3,3}, K_{1,5}, C_6, P_5, P_6}; true = the group's graph is free
/// of that pattern per the classification.
inline ForbiddenProfile forbidden_class_membership(const GroupDescriptor& d_in) {
    if (d_in.family == Family::Opaque)
        throw UnrecognizedDescriptor("the oracle cannot classify an opaque descriptor");
    const GroupDescriptor d = normalize_descriptor(d_in);
    ForbiddenProfile out;
    const int n = descriptor_order(d);
    if (n == 1 || is_prime(n)) return out; // graph undefined; all flags true

    auto shape = detail::abelian_shape(d);
    auto cyclic_single = [&](int lo, int hi) {
        if (!shape || shape->size() != 1) return false;
        const auto& e = shape->begin()->second;
        return e.size() == 1 && e[0] >= lo && e[0] <= hi;
    };
    auto cyclic_two = [&](int alo, int ahi) {
        if (!shape || shape->size() != 2) return false;
        for (int a = alo; a <= ahi; ++a)
            if (detail::shape_is(*shape, {{a}, {1}})) return true;
        return false;
    };
    auto cyclic_three = [&]() { return shape && detail::shape_is(*shape, {{1}, {1}, {1}}); };
    auto elab_two = [&](std::initializer_list<int> ps) {
        if (!shape || !detail::shape_is(*shape, {{1, 1}})) return false;
        for (int p : ps)
            if (shape->begin()->first == p) return true;
        return false;
    };
    auto z4z2 = [&]() { return shape && detail::shape_is(*shape, {{2, 1}}) && shape->begin()->first == 2; };

    const bool q8 = d.family == Family::GeneralizedQuaternion && d.params[0] == 3;
    const bool zq_zp = d.family == Family::MetacyclicSemidirect && is_prime(d.params[0]) &&
                       d.params[2] == 1 && d.params[3] == 1;
    const bool s3 = zq_zp && d.params[0] == 3 && d.params[1] == 2;
    const bool zq_2_zp2 = d.family == Family::MetacyclicSemidirect && is_prime(d.params[0]) &&
                          d.params[2] == 2 && d.params[3] == 2;
    const bool a4 = d.family == Family::Alternating && d.params[0] == 4;
    // the order-2-companion-matrix family of lists (3)-(5) is vacuous: no such
    // matrix exists in GL_2(3), so no descriptor can satisfy it

    out.k15_free = cyclic_single(2, 5) || cyclic_two(1, 2) || elab_two({2, 3}) || q8 || s3;
    out.p5_free = cyclic_single(2, 6) || cyclic_two(1, 2) || elab_two({2, 3}) || q8 || zq_zp || a4;
    out.p6_free = cyclic_single(2, 7) || cyclic_two(1, 3) || cyclic_three() ||
                  elab_two({2, 3, 5}) || z4z2() || q8 || zq_zp || a4;
    out.c6_free = cyclic_single(2, 6) || cyclic_two(1, 2) || elab_two({2, 3}) || q8 || zq_zp || a4;
    out.k33_free = cyclic_single(2, 6) || cyclic_two(1, 2) || elab_two({2, 3}) || q8 || zq_zp ||
                   zq_2_zp2 || a4;
    return out;
}

// --- recognition --------------------------------------------------------------------

namespace detail {

/// Primary decomposition of an abelian group from element-order counts.
inline GroupDescriptor recognize_abelian(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<int> parts;
    for (auto [p, kmax] : prime_factorization(n)) {
        // c_k = #{x : x^(p^k) = e}; the partition follows from the quotients
        std::vector<int> c{1};
        long long pk = 1;
        for (int k = 1; k <= kmax; ++k) {
            pk *= p;
            int count = 0;
            for (int x = 0; x < n; ++x) {
                int y = x;
                long long e = pk;
                // y = x^(p^k) by repeated squaring over the table
                int base = x;
                y = g.identity();
                while (e > 0) {
                    if (e & 1) y = g.mul(y, base);
                    int b2 = g.mul(base, base);
                    base = b2;
                    e >>= 1;
                }
                if (y == g.identity()) ++count;
            }
            c.push_back(count);
        }
        // m_k = #parts >= k
        std::vector<int> m;
        for (std::size_t k = 1; k < c.size(); ++k) {
            int ratio = c[k] / c[k - 1];
            int mk = 0;
            while (ratio > 1) {
                ratio /= p;
                ++mk;
            }
            m.push_back(mk);
        }
        const int nparts = m.empty() ? 0 : m[0];
        for (int i = 1; i <= nparts; ++i) {
            int lam = 0;
            for (int mk : m)
                if (mk >= i) ++lam;
            int f = 1;
            for (int j = 0; j < lam; ++j) f *= p;
            parts.push_back(f);
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    if (parts.size() == 1) return cyclic_desc(parts[0]);
    // coprime cyclic check
    GroupDescriptor d = product_desc(parts);
    return normalize_descriptor(d);
}

inline std::vector<GroupDescriptor> zoo_candidates(int n) {
    std::vector<GroupDescriptor> out;
    // priority: families whose structure is most specific first, so alias
    // groups resolve deterministically (M8 reads as modular, S3 as symmetric)
    if (n >= 8) {
        for (auto [p, k] : prime_factorization(n))
            if (descriptor_order(modular_desc(p, k)) == n && k >= 3) out.push_back(modular_desc(p, k));
    }
    if ((n & (n - 1)) == 0 && n >= 8) {
        int k = 0, t = n;
        while (t > 1) {
            t >>= 1;
            ++k;
        }
        out.push_back(quaternion_desc(k));
    }
    if (n == 6 || n == 24 || n == 120) out.push_back(symmetric_desc(n == 6 ? 3 : n == 24 ? 4 : 5));
    if (n == 12 || n == 60) out.push_back(alternating_desc(n == 12 ? 4 : 5));
    if (n == 36) out.push_back(ppc4_desc(0));
    for (int p = 2; p * p <= n; ++p) {
        if (!is_prime(p) || n % (p * p) != 0) continue;
        const int q = n / (p * p);
        if (q < 2 || std::gcd(q, p) != 1) continue;
        for (int l = 0; l < p; ++l)
            if (companion_matrix(l, p).order(p) == q) out.push_back(ppq_desc(p, q, l));
    }
    for (int q = 2; q < n; ++q) {
        if (n % q != 0) continue;
        auto pf = prime_factorization(n / q);
        if (pf.size() != 1) continue;
        const int p = pf[0].first, alpha = pf[0].second;
        if (std::gcd(q, p) != 1) continue;
        for (int t = 1; t <= alpha; ++t) {
            int pt = 1;
            for (int i = 0; i < t; ++i) pt *= p;
            bool exists = false;
            for (int i = 2; i < q && !exists; ++i)
                if (std::gcd(i, q) == 1 && ord_mod(i, q) == pt) exists = true;
            if (exists) out.push_back(metacyclic_desc(q, p, alpha, t));
        }
    }
    if (n % 2 == 0 && n / 2 >= 3) out.push_back(dihedral_desc(n / 2));
    return out;
}

} // namespace detail

/// Bridges raw tables to descriptors: abelian groups by invariant factors,
/// non-abelian groups by isomorphism testing against the zoo candidates of
/// the same order. Unmatched groups become Opaque (the safe default).
inline GroupDescriptor recognize(const FiniteGroup& g) {
    if (g.is_abelian()) return detail::recognize_abelian(g);
    for (const auto& cand : detail::zoo_candidates(g.order())) {
        FiniteGroup h = construct(cand);
        if (group_isomorphic(g, h)) return cand;
    }
    return opaque_desc();
}

// --- cross-validation ------------------------------------------------------------------

struct CrossReport {
    std::string name;
    int order = 0;
    GroupDescriptor descriptor; // recognized; Opaque when unmatched
    ClassificationRecord pipeline;
    std::optional<ClassificationRecord> oracle; // absent for Opaque descriptors
    std::vector<std::string> disagreements;
    bool inconclusive = false;
    std::string graph6;
    int graph_vertices = 0, graph_edges = 0;
    double runtime_ms = 0;
};

/// Runs the two independent validation arms on one group: the pipeline sees
/// only the table, the oracle sees only the recognized family. Disagreement
/// is a report outcome, not an exception.
inline CrossReport cross_validate(const FiniteGroup& g, const TopoOptions& topo = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    CrossReport rep;
    rep.name = g.name();
    rep.order = g.order();

    // pipeline arm
    auto lat = all_subgroups(g);
    rep.pipeline.source = "pipeline";
    if (lat.proper.empty()) {
        rep.pipeline.graph_defined = false;
        rep.pipeline.evidence = "graph undefined: no proper subgroups";
    } else {
        Graph gamma = permutability_graph(g, lat);
        rep.graph6 = to_graph6(gamma);
        rep.graph_vertices = gamma.vertex_count();
        rep.graph_edges = gamma.edge_count();
        auto sc = classify_surface(gamma, topo);
        rep.pipeline.planar = sc.planar;
        rep.pipeline.toroidal = sc.toroidal;
        rep.pipeline.projective = sc.projective;
        rep.pipeline.torus_inconclusive = sc.torus_inconclusive;
        rep.pipeline.projective_inconclusive = sc.projective_inconclusive;
        rep.pipeline.profile = forbidden_profile(gamma);
        // witness vertices reported as subgroups, e.g. "witness k37 {<a>; <b>; ...}"
        auto with_labels = [&](const std::string& text,
                               const std::optional<WitnessHit>& w) -> std::string {
            if (!w) return text;
            std::string s = text + " {";
            for (std::size_t i = 0; i < w->map.size(); ++i)
                s += (i ? "; " : "") + gamma.label(w->map[i]);
            return s + "}";
        };
        rep.pipeline.evidence =
            sc.planar ? sc.planar_evidence
                      : "torus: " + with_labels(sc.torus_evidence, sc.torus_witness) +
                            "; projective: " +
                            with_labels(sc.projective_evidence, sc.projective_witness);
        rep.inconclusive = sc.torus_inconclusive || sc.projective_inconclusive;
    }

    // oracle arm
    rep.descriptor = recognize(g);
    if (rep.descriptor.family != Family::Opaque) {
        ClassificationRecord orec = oracle_classify(rep.descriptor);
        orec.profile = forbidden_class_membership(rep.descriptor);
        rep.oracle = orec;
    }

    if (rep.oracle && rep.pipeline.graph_defined == rep.oracle->graph_defined) {
        if (rep.pipeline.graph_defined) {
            auto cmp = [&](bool a, bool b, const char* flag, bool skip) {
                if (!skip && a != b) rep.disagreements.push_back(flag);
            };
            cmp(rep.pipeline.planar, rep.oracle->planar, "planar", false);
            cmp(rep.pipeline.toroidal, rep.oracle->toroidal, "toroidal",
                rep.pipeline.torus_inconclusive);
            cmp(rep.pipeline.projective, rep.oracle->projective, "projective",
                rep.pipeline.projective_inconclusive);
            cmp(rep.pipeline.profile.k33_free, rep.oracle->profile.k33_free, "k33free", false);
            cmp(rep.pipeline.profile.k15_free, rep.oracle->profile.k15_free, "k15free", false);
            cmp(rep.pipeline.profile.c6_free, rep.oracle->profile.c6_free, "c6free", false);
            cmp(rep.pipeline.profile.p5_free, rep.oracle->profile.p5_free, "p5free", false);
            cmp(rep.pipeline.profile.p6_free, rep.oracle->profile.p6_free, "p6free", false);
        }
    } else if (rep.oracle) {
        rep.disagreements.push_back("graph_defined");
    }

    rep.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace permuta
