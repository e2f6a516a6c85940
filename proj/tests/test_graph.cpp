#include <doctest.h>

#include <random>

#include "permuta/graph.hpp"
#include "permuta/graph6.hpp"
#include "permuta/graph_algs.hpp"
#include "permuta/permgraph.hpp"
#include "permuta/zoo.hpp"

using namespace permuta;
using GE = GraphExpr;

namespace {

Graph gamma_of(const GroupDescriptor& d) {
    auto g = construct(d);
    return permutability_graph(g);
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("graph expression vertex and edge counts") {
    auto a = GE::join(GE::complete(1), GE::disjoint_union(GE::complete(3), GE::empty(4))).build();
    CHECK(a.vertex_count() == 8);
    CHECK(a.edge_count() == 10);

    auto b = GE::join(GE::complete(2),
                      GE::disjoint_union(GE::complete(4), GE::copies(9, GE::complete(2)))).build();
    CHECK(b.vertex_count() == 24);
    CHECK(b.edge_count() == 60);

    // path/cycle length convention: P_n has n edges and n+1 vertices
    auto p5 = GE::path(5).build();
    CHECK(p5.vertex_count() == 6);
    CHECK(p5.edge_count() == 5);
    auto c6 = GE::cycle(6).build();
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edge_count() == 6);

    CHECK(is_isomorphic(GE::complement(GE::complete_bipartite(2, 2)).build(),
                        GE::copies(2, GE::complete(2)).build()));
}

TEST_CASE("permutability graphs match the closed-form identities") {
    CHECK(is_isomorphic(gamma_of(quaternion_desc(3)), GE::complete(4).build()));
    CHECK(is_isomorphic(gamma_of(modular_desc(2, 3)),
                        GE::join(GE::complete(4), GE::copies(2, GE::complete(2))).build()));
    CHECK(is_isomorphic(gamma_of(symmetric_desc(3)), GE::complete_bipartite(1, 3).build()));
    CHECK(is_isomorphic(gamma_of(cyclic_desc(64)), GE::complete(5).build()));
    CHECK(is_isomorphic(gamma_of(alternating_desc(4)),
                        GE::join(GE::complete(1),
                                 GE::disjoint_union(GE::complete(3), GE::empty(4))).build()));
}

TEST_CASE("graph isomorphism decisions") {
    CHECK(is_isomorphic(gamma_of(ppq_desc(5, 3, 4)),
                        GE::join(GE::complete(1),
                                 GE::disjoint_union(GE::complete(6), GE::empty(25))).build()));
    // K_{3,3} is triangle-free; K3 + ~K3 has triangles
    CHECK_FALSE(is_isomorphic(GE::complete_bipartite(3, 3).build(),
                              GE::join(GE::complete(3), GE::empty(3)).build()));
    CHECK_FALSE(is_isomorphic(GE::complete(4).build(), GE::cycle(4).build()));
    // equivalence-relation sanity on a fixture trio
    auto g1 = gamma_of(metacyclic_desc(3, 2, 2, 1));
    auto g2 = GE::join(GE::complete(3), GE::empty(3)).build();
    auto g3 = GE::join(GE::empty(3), GE::complete(3)).build();
    CHECK(is_isomorphic(g1, g2));
    CHECK(is_isomorphic(g2, g3));
    CHECK(is_isomorphic(g1, g3));
}

TEST_CASE("subgraph containment with verified maps") {
    auto d36 = gamma_of(dihedral_desc(18));
    auto hit = has_subgraph(d36, pattern_by_name("k37"));
    REQUIRE(hit.has_value());
    CHECK(subgraph_map_valid(d36, pattern_by_name("k37"), *hit));

    auto m8 = gamma_of(modular_desc(2, 3));
    auto a1 = has_subgraph(m8, pattern_by_name("a1"));
    REQUIRE(a1.has_value());
    CHECK(subgraph_map_valid(m8, pattern_by_name("a1"), *a1));

    auto z5z4 = gamma_of(metacyclic_desc(5, 2, 2, 1));
    auto k35 = has_subgraph(z5z4, pattern_by_name("k35"));
    REQUIRE(k35.has_value());
    CHECK(subgraph_map_valid(z5z4, pattern_by_name("k35"), *k35));

    CHECK_FALSE(has_subgraph(GE::complete(4).build(), pattern_by_name("c6")).has_value());
}

TEST_CASE("forbidden profiles") {
    auto s3 = gamma_of(symmetric_desc(3)); // K_{1,3}
    CHECK(forbidden_profile(s3).k15_free);

    auto k4 = GE::complete(4).build();
    CHECK(forbidden_profile(k4).p5_free); // P5 needs 6 vertices

    auto k6 = GE::complete(6).build();
    CHECK_FALSE(forbidden_profile(k6).c6_free); // Hamiltonian cycle of K6

    auto k5 = GE::complete(5).build();
    CHECK(forbidden_profile(k5).c6_free);
    CHECK(forbidden_profile(k5).p5_free);
    CHECK_FALSE(forbidden_profile(k6).p5_free);
}

TEST_CASE("abelian groups give complete graphs on their proper subgroups") {
    for (const auto& d :
         {cyclic_desc(24), cyclic_desc(36), product_desc({4, 2}), product_desc({5, 5})}) {
        auto g = construct(d);
        auto lat = all_subgroups(g);
        auto gamma = permutability_graph(g, lat);
        const int r = static_cast<int>(lat.proper.size());
        CHECK(gamma.edge_count() == r * (r - 1) / 2);
    }
}

TEST_CASE("normal proper subgroups dominate the permutability graph") {
    for (const auto& d :
         {quaternion_desc(3), symmetric_desc(4), metacyclic_desc(3, 2, 2, 1), ppc4_desc(0)}) {
        auto g = construct(d);
        auto lat = all_subgroups(g);
        auto gamma = permutability_graph(g, lat);
        for (std::size_t i = 0; i < lat.proper.size(); ++i) {
            if (!is_normal(g, lat.proper[i])) continue;
            CHECK(gamma.degree(static_cast<int>(i)) == gamma.vertex_count() - 1);
        }
    }
}

TEST_CASE("quotient graphs embed as subgraphs via H/N -> H") {
    // the canonical instance: Q8 / center gives K3 inside K4
    auto q8 = construct(quaternion_desc(3));
    auto center = closure(q8, {2});
    auto q = quotient(q8, center, "Q8/Z");
    auto gq = permutability_graph(q);
    CHECK(is_isomorphic(gq, GE::complete(3).build()));
    auto hit = has_subgraph(permutability_graph(q8), gq);
    REQUIRE(hit.has_value());

    // more (G, N) pairs: the quotient graph is always a subgraph
    for (const auto& d : {symmetric_desc(4), metacyclic_desc(3, 2, 2, 1), modular_desc(2, 3),
                          ppc4_desc(0), dihedral_desc(6)}) {
        auto g = construct(d);
        auto lat = all_subgroups(g);
        auto gamma = permutability_graph(g, lat);
        int tested = 0;
        for (const auto& n : lat.proper) {
            if (!is_normal(g, n)) continue;
            if (g.order() / n.order <= 3) continue; // prime-order quotient: graph undefined
            auto quo = quotient(g, n, g.name() + "/N");
            auto lat_q = all_subgroups(quo);
            if (lat_q.proper.empty()) continue;
            auto gamma_q = permutability_graph(quo, lat_q);
            auto sub = has_subgraph(gamma, gamma_q);
            CHECK(sub.has_value());
            if (sub) CHECK(subgraph_map_valid(gamma, gamma_q, *sub));
            ++tested;
        }
        CAPTURE(g.name());
        CHECK(tested >= 1);
    }
}

TEST_CASE("graph6 encoding is bit-exact and round-trips") {
    CHECK(to_graph6(GE::complete(4).build()) == "C~");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(GE::complete(2).build()) == "A_");

    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 40);
        auto g = random_graph(rng, n, 0.4);
        auto s = to_graph6(g);
        auto h = from_graph6(s);
        CHECK(h == g);
        CHECK(to_graph6(h) == s);
    }
}

TEST_CASE("dot export carries subgroup labels") {
    auto s3 = construct(symmetric_desc(3));
    auto gamma = permutability_graph(s3);
    auto dot = to_dot(gamma, s3.name());
    CHECK(dot.find("label=\"<") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(gamma.vertex_count() == 4);
}

TEST_CASE("labels name the subgroup generators") {
    auto q8 = construct(quaternion_desc(3));
    auto gamma = permutability_graph(q8);
    bool found_a = false;
    for (int v = 0; v < gamma.vertex_count(); ++v)
        if (gamma.label(v) == "<a>") found_a = true;
    CHECK(found_a);
}
