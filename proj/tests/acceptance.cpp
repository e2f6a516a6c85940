// Acceptance suite: every classification claim reproduced at desk scale,
// one pass/fail line per criterion. Criteria that assert statements the
// machine search refutes (the K8 subgraph inside the order-36 Frobenius
// group's permutability graph and two forbidden-subgraph list omissions,
// see "Known classification defects" in the README) are implemented
// faithfully as stated and are expected to print FAIL.

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "permuta/census.hpp"
#include "permuta/classifier.hpp"

using namespace permuta;
using GE = GraphExpr;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    const char* id;
    bool ok = true;
    explicit Criterion(const char* id_) : id(id_) {}
    void check(bool cond, const std::string& label) {
        if (!cond) ok = false;
        const std::string msg = std::string(id) + ": " + label;
        CHECK_MESSAGE(cond, msg);
    }
    ~Criterion() { std::printf("[%s] %s\n", id, ok ? "PASS" : "FAIL"); }
};

Graph gamma(const std::string& desc) {
    return permutability_graph(construct(parse_descriptor(desc)));
}

fs::path fresh_dir(const std::string& tag) {
    auto p = fs::temp_directory_path() / ("permuta-accept-" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string csv_without_runtime(const fs::path& p) {
    std::string out;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
        auto comma = line.rfind(',');
        if (comma != std::string::npos) line.resize(comma);
        out += line + "\n";
    }
    return out;
}

} // namespace

TEST_CASE("criterion 1: closed-form graph identities") {
    Criterion c("criterion 1");
    using Clock = std::chrono::steady_clock;
    struct Item {
        const char* group;
        GraphExpr expr;
    };
    const std::vector<Item> items = {
        {"quat:3", GE::complete(4)},
        {"modular:2,3", GE::join(GE::complete(4), GE::copies(2, GE::complete(2)))},
        {"sym:3", GE::complete_bipartite(1, 3)},
        {"alt:4", GE::join(GE::complete(1), GE::disjoint_union(GE::complete(3), GE::empty(4)))},
        {"product:4,2", GE::complete(6)},
        {"product:5,5", GE::complete(6)},
        {"semidirect:q=3,p=2,a=2,t=1", GE::join(GE::complete(3), GE::empty(3))},
        {"semidirect:q=5,p=2,a=2,t=1", GE::join(GE::complete(3), GE::empty(5))},
        {"dihedral:9", GE::join(GE::complete(2), GE::copies(3, GE::complete_bipartite(1, 3)))},
        {"ppc4:l=0",
         GE::join(GE::complete(2), GE::disjoint_union(GE::complete(4), GE::copies(9, GE::complete(2))))},
        {"ppq:p=5,q=3,l=4",
         GE::join(GE::complete(1), GE::disjoint_union(GE::complete(6), GE::empty(25)))},
    };
    for (const auto& item : items) {
        const auto t0 = Clock::now();
        const bool iso = is_isomorphic(gamma(item.group), item.expr.build());
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        c.check(iso, std::string("Gamma(") + item.group + ") ~ " + item.expr.to_string());
        c.check(secs < 1.0, std::string(item.group) + " isomorphism under one second");
    }
    // cyclic 2-groups: Gamma(Z_{2^a}) = K_{a-1}, a = 2..8
    for (int a = 2; a <= 8; ++a) {
        const auto t0 = Clock::now();
        const bool iso =
            is_isomorphic(gamma("cyclic:" + std::to_string(1 << a)), GE::complete(a - 1).build());
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        c.check(iso, "Gamma(Z_2^" + std::to_string(a) + ") ~ K" + std::to_string(a - 1));
        c.check(secs < 1.0, "cyclic identity under one second");
    }
}

TEST_CASE("criterion 2: search decisions match the genus formulas") {
    Criterion c("criterion 2");
    auto dir = fresh_dir("grid");
    const auto run = [&](bool warm_expected) {
        CertificateCache cache((dir / "cache").string());
        TopoStats stats;
        TopoOptions opt;
        opt.cache = &cache;
        opt.stats = &stats;
        opt.use_witness_scan = false; // pure search against the formulas
        const auto t0 = std::chrono::steady_clock::now();
        for (int n = 3; n <= 8; ++n) {
            auto g = GE::complete(n).build();
            auto [genus, crosscap] = reference_genus_complete(n);
            const bool torus = embeddable_on(g, SurfaceKind::Torus, opt).status ==
                               SurfaceDecision::Status::Yes;
            const bool proj = embeddable_on(g, SurfaceKind::Projective, opt).status ==
                              SurfaceDecision::Status::Yes;
            c.check(torus == (genus <= 1), "K" + std::to_string(n) + " torus");
            c.check(proj == (crosscap <= 1), "K" + std::to_string(n) + " projective");
        }
        for (int m = 2; m <= 3; ++m)
            for (int n = 2; n <= 7; ++n) {
                auto g = GE::complete_bipartite(m, n).build();
                auto [genus, crosscap] = reference_genus_bipartite(m, n);
                const bool torus = embeddable_on(g, SurfaceKind::Torus, opt).status ==
                                   SurfaceDecision::Status::Yes;
                const bool proj = embeddable_on(g, SurfaceKind::Projective, opt).status ==
                                  SurfaceDecision::Status::Yes;
                const std::string id = "K{" + std::to_string(m) + "," + std::to_string(n) + "}";
                c.check(torus == (genus <= 1), id + " torus");
                c.check(proj == (crosscap <= 1), id + " projective");
            }
        {
            auto g = GE::complete_bipartite(4, 4).build();
            auto [genus, crosscap] = reference_genus_bipartite(4, 4);
            c.check((embeddable_on(g, SurfaceKind::Torus, opt).status ==
                     SurfaceDecision::Status::Yes) == (genus <= 1),
                    "K{4,4} torus");
            c.check((embeddable_on(g, SurfaceKind::Projective, opt).status ==
                     SurfaceDecision::Status::Yes) == (crosscap <= 1),
                    "K{4,4} projective");
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (warm_expected) {
            c.check(stats.searches == 0, "warm pass performs zero searches");
            c.check(secs <= 10.0, "warm pass within 10 seconds");
        } else {
            c.check(secs <= 600.0, "cold pass within 10 minutes");
        }
    };
    run(false);
    run(true);
}

TEST_CASE("criterion 3: toroidal list positively certified") {
    Criterion c("criterion 3");
    const std::vector<std::string> groups = {
        "cyclic:64",  "cyclic:128", "cyclic:256", "cyclic:24",
        "cyclic:36",  "cyclic:30",  "product:4,2", "product:5,5",
        "semidirect:q=3,p=2,a=2,t=1", "semidirect:q=5,p=2,a=2,t=1",
        "ppq:p=5,q=3,l=4", "ppc4:l=0",
    };
    for (const auto& desc : groups) {
        auto g = gamma(desc);
        auto d = embeddable_on(g, SurfaceKind::Torus);
        const bool positive = d.status == SurfaceDecision::Status::Yes && d.certificate.has_value();
        c.check(positive, "torus certificate exists for Gamma(" + desc + ")");
        if (positive) {
            const auto t0 = std::chrono::steady_clock::now();
            c.check(verify_certificate(g, *d.certificate), "certificate verifies: " + desc);
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            c.check(ms < 100.0, "verification is O(E)-fast: " + desc);
        }
    }
}

TEST_CASE("criterion 4: projective list certified, complements refuted") {
    Criterion c("criterion 4");
    for (const auto& desc :
         {"cyclic:64", "cyclic:128", "cyclic:24", "cyclic:30", "product:4,2", "product:5,5",
          "semidirect:q=3,p=2,a=2,t=1", "ppc4:l=0"}) {
        auto g = gamma(desc);
        auto d = embeddable_on(g, SurfaceKind::Projective);
        const bool positive = d.status == SurfaceDecision::Status::Yes && d.certificate.has_value();
        c.check(positive, std::string("projective certificate for Gamma(") + desc + ")");
        if (positive) c.check(verify_certificate(g, *d.certificate), std::string("verifies: ") + desc);
    }
    for (const auto& desc :
         {"cyclic:256", "cyclic:36", "semidirect:q=5,p=2,a=2,t=1", "ppq:p=5,q=3,l=4"}) {
        auto d = embeddable_on(gamma(desc), SurfaceKind::Projective);
        c.check(d.status == SurfaceDecision::Status::No,
                std::string("projective refuted for Gamma(") + desc + "): " + d.evidence);
    }
}

TEST_CASE("criterion 5: negative fixtures carry named witnesses") {
    Criterion c("criterion 5");
    struct Fixture {
        const char* desc;
        const char* name;
    };
    const std::vector<nlohmann::json> entries = builtin_census_entries();
    auto entry_by_name = [&](const std::string& want) -> nlohmann::json {
        for (const auto& e : entries) {
            if (e.contains("name") && e.at("name") == want) return e;
        }
        throw UnknownTarget(want);
    };
    std::vector<std::pair<std::string, Graph>> negatives = {
        {"M8", gamma("modular:2,3")},
        {"D12", gamma("dihedral:6")},
        {"D36", gamma("dihedral:18")},
        {"S4", gamma("sym:4")},
        {"A5", gamma("alt:5")},
        {"Z9:Z4", gamma("semidirect:q=9,p=2,a=2,t=1")},
        {"S3xS3", permutability_graph(census_entry_group(entry_by_name("S3xS3")))},
        {"Z3xA4", permutability_graph(census_entry_group(entry_by_name("Z3xA4")))},
        {"Z6xS3", permutability_graph(census_entry_group(entry_by_name("Z6xS3")))},
        {"(Z3xZ3):4Z4", permutability_graph(census_entry_group(entry_by_name("(Z3xZ3):4Z4")))},
        {"Z2x((Z3xZ3):Z2)",
         permutability_graph(census_entry_group(entry_by_name("Z2x((Z3xZ3):Z2)")))},
        {"(Z2xZ2):Z9", permutability_graph(census_entry_group(entry_by_name("(Z2xZ2):Z9")))},
    };
    const std::vector<std::string> allowed = {"k8", "k45", "k37", "k35", "k44", "k7", "a1"};
    for (auto& [name, g] : negatives) {
        auto sc = classify_surface(g);
        c.check(!sc.toroidal && !sc.torus_inconclusive, name + " not toroidal");
        c.check(!sc.projective && !sc.projective_inconclusive, name + " not projective");
        const bool torus_witnessed =
            sc.torus_witness.has_value() &&
            std::find(allowed.begin(), allowed.end(), sc.torus_witness->name) != allowed.end() &&
            subgraph_map_valid(g, pattern_by_name(sc.torus_witness->name), sc.torus_witness->map);
        c.check(torus_witnessed, name + " torus witness named and verified (" +
                                     (sc.torus_witness ? sc.torus_witness->name : "none") + ")");
        const bool proj_witnessed =
            sc.projective_witness.has_value() &&
            subgraph_map_valid(g, pattern_by_name(sc.projective_witness->name),
                               sc.projective_witness->map);
        c.check(proj_witnessed, name + " projective witness named and verified (" +
                                    (sc.projective_witness ? sc.projective_witness->name : "none") +
                                    ")");
    }
}

TEST_CASE("criterion 6: cross-validation over the builtin census") {
    Criterion c("criterion 6");
    auto dir = fresh_dir("census6");
    CensusConfig cfg;
    cfg.groups = builtin_census_entries();
    cfg.cache_dir = (dir / "cache").string();
    cfg.out_dir = (dir / "out").string();
    auto res = run_census(cfg);
    c.check(res.reports.size() == 39, "whole builtin census ran");
    c.check(res.inconclusive_rows == 0, "zero inconclusive rows");
    c.check(res.wall_seconds <= 1800.0, "cold census within 30 minutes");
    c.check(res.disagreement_rows == 0,
            "zero oracle/pipeline disagreements (fails on the three documented "
            "classification defects; see the regression guard in test_census)");
    c.check(res.exit_code == 0, "exit code 0");
}

TEST_CASE("criterion 7: forbidden-subgraph spot checks") {
    Criterion c("criterion 7");
    for (const auto& desc :
         {"sym:3", "alt:4", "cyclic:128", "quat:3", "semidirect:q=5,p=2,a=2,t=2"}) {
        auto g = construct(parse_descriptor(desc));
        auto pipeline = forbidden_profile(permutability_graph(g));
        auto oracle = forbidden_class_membership(recognize(g));
        c.check(pipeline == oracle, std::string("profiles agree exactly for ") + desc);
    }
    // named flags from the statements
    c.check(forbidden_profile(gamma("sym:3")).k15_free, "S3 graph K15-free");
    c.check(forbidden_profile(gamma("alt:4")).p5_free, "A4 graph P5-free");
    auto z128 = forbidden_profile(gamma("cyclic:128"));
    c.check(!z128.c6_free, "Z128 graph contains C6");
    c.check(z128.p6_free, "Z128 graph is P6-free");
}

TEST_CASE("criterion 8: property suites") {
    Criterion c("criterion 8");

    // Lagrange and the product formula over every census group
    for (const auto& e : builtin_census_entries()) {
        auto g = census_entry_group(e);
        auto lat = all_subgroups(g);
        bool lagrange = true, product_formula = true;
        for (const auto& h : lat.all)
            if (g.order() % h.order != 0) lagrange = false;
        for (std::size_t i = 0; i < lat.proper.size() && product_formula; ++i)
            for (std::size_t j = i; j < lat.proper.size(); ++j) {
                const auto& h = lat.proper[i];
                const auto& k = lat.proper[j];
                const int inter = (h.members & k.members).count();
                if (product_set(g, h, k).count() * inter != h.order * k.order) {
                    product_formula = false;
                    break;
                }
            }
        c.check(lagrange, g.name() + ": Lagrange");
        c.check(product_formula, g.name() + ": product formula");
    }

    // quotient-subgraph property on at least five (G, N) pairs
    {
        int pairs = 0;
        auto q8 = construct(quaternion_desc(3));
        auto center = closure(q8, {2});
        auto gq = permutability_graph(quotient(q8, center, "Q8/Z"));
        c.check(has_subgraph(permutability_graph(q8), gq).has_value(),
                "Gamma(Q8/center) embeds in Gamma(Q8)");
        ++pairs;
        for (const auto& d : {symmetric_desc(4), metacyclic_desc(3, 2, 2, 1), ppc4_desc(0),
                              dihedral_desc(9), modular_desc(2, 3)}) {
            auto g = construct(d);
            auto lat = all_subgroups(g);
            auto gg = permutability_graph(g, lat);
            for (const auto& n : lat.proper) {
                if (!is_normal(g, n)) continue;
                if (g.order() / n.order <= 3) continue;
                auto quo = quotient(g, n, g.name() + "/N");
                if (all_subgroups(quo).proper.empty()) continue;
                auto gq2 = permutability_graph(quo);
                c.check(has_subgraph(gg, gq2).has_value(),
                        g.name() + "/N quotient graph is a subgraph");
                ++pairs;
                break;
            }
        }
        c.check(pairs >= 5, "at least five quotient pairs checked, got " + std::to_string(pairs));
    }

    // wye-delta torus preservation on 100 randomized graphs
    {
        std::mt19937 rng(1618);
        int preserved = 0, sampled = 0;
        while (sampled < 100) {
            const int n = 6 + static_cast<int>(rng() % 5); // 6..10 vertices
            Graph g(n);
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng) < 0.42) g.add_edge(u, v);
            int v3 = -1;
            for (int u = 0; u < n; ++u)
                if (g.degree(u) == 3) v3 = u;
            if (v3 < 0) continue;
            TopoOptions opt;
            opt.node_budget = 50'000'000;
            auto d = embeddable_on(g, SurfaceKind::Torus, opt);
            if (d.status != SurfaceDecision::Status::Yes) continue; // only embeddable samples
            ++sampled;
            auto h = wye_delta(g, v3);
            auto dh = embeddable_on(h, SurfaceKind::Torus, opt);
            if (dh.status == SurfaceDecision::Status::Yes) ++preserved;
        }
        c.check(preserved == 100,
                "wye-delta preserved torus embeddability on 100/" + std::to_string(sampled));
    }

    // certificate determinism across 4-way parallel runs
    {
        auto dir1 = fresh_dir("det1");
        auto dir4 = fresh_dir("det4");
        CensusConfig cfg;
        cfg.groups = builtin_census_entries();
        CensusConfig c1 = cfg;
        c1.jobs = 1;
        c1.cache_dir = (dir1 / "cache").string();
        c1.out_dir = (dir1 / "out").string();
        CensusConfig c4 = cfg;
        c4.jobs = 4;
        c4.cache_dir = (dir4 / "cache").string();
        c4.out_dir = (dir4 / "out").string();
        run_census(c1);
        run_census(c4);
        c.check(csv_without_runtime(dir1 / "out" / "census.csv") ==
                    csv_without_runtime(dir4 / "out" / "census.csv"),
                "reports identical across 1-way and 4-way runs");
        int certs = 0, equal = 0;
        for (const auto& f : fs::directory_iterator(dir1 / "cache")) {
            std::ifstream a(f.path());
            nlohmann::json ja;
            a >> ja;
            if (ja.value("key", std::string{}).rfind("row|", 0) == 0) continue;
            ++certs;
            auto other = dir4 / "cache" / f.path().filename();
            if (!fs::exists(other)) continue;
            std::ifstream b(other);
            nlohmann::json jb;
            b >> jb;
            if (ja == jb) ++equal;
        }
        c.check(certs > 5 && certs == equal,
                "all " + std::to_string(certs) + " certificates byte-identical across runs");
    }
}
