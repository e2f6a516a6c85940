#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "permuta/census.hpp"

using namespace permuta;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& tag) {
    auto p = fs::temp_directory_path() / ("permuta-census-" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// census.csv with the runtime_ms column blanked, for determinism diffs
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

const CrossReport* find_report(const CensusResult& res, const std::string& name) {
    for (const auto& r : res.reports)
        if (r.name == name) return &r;
    return nullptr;
}

} // namespace

TEST_CASE("builtin census entries build into valid groups") {
    auto entries = builtin_census_entries();
    CHECK(entries.size() == 39);
    int built = 0;
    for (const auto& e : entries) {
        auto g = census_entry_group(e); // throws on any invalid table
        CHECK(g.order() >= 4);
        CHECK(g.order() <= kOrderCap);
        ++built;
    }
    CHECK(built == 39);
}

TEST_CASE("the checked-in census data file matches the embedded fixture set") {
    // the builtin set is data, auditable in the repository
    for (const auto& candidate :
         {fs::path("data/builtin_census.json"), fs::path("../data/builtin_census.json"),
          fs::path("../../data/builtin_census.json")}) {
        if (!fs::exists(candidate)) continue;
        auto file_json = nlohmann::json::parse(slurp(candidate));
        auto embedded = nlohmann::json::parse(kBuiltinCensusJson);
        CHECK(file_json == embedded);
        return;
    }
    FAIL("data/builtin_census.json not found relative to the test working directory");
}

TEST_CASE("full builtin census: disagreements are exactly the documented defects") {
    auto dir = fresh_dir("full");
    CensusConfig cfg;
    cfg.groups = builtin_census_entries();
    cfg.cache_dir = (dir / "cache").string();
    cfg.out_dir = (dir / "out").string();
    auto res = run_census(cfg);

    CHECK(res.reports.size() == 39);
    CHECK(res.inconclusive_rows == 0);

    // every disagreement is one of the three verified classification defects
    std::map<std::string, std::vector<std::string>> expected = {
        {"(Z3xZ3):Z4", {"toroidal", "projective"}},
        {"Z3:Z4", {"p6free"}},
        {"Z64", {"k15free"}},
    };
    int disagreeing = 0;
    for (const auto& r : res.reports) {
        CAPTURE(r.name);
        if (expected.count(r.name)) {
            CHECK(r.disagreements == expected[r.name]);
            ++disagreeing;
        } else {
            CHECK(r.disagreements.empty());
        }
    }
    CHECK(disagreeing == 3);
    CHECK(res.disagreement_rows == 3);
    CHECK(res.exit_code == 2);

    // reports exist and have one pipeline row plus one oracle row per group
    // with a recognized descriptor
    auto csv = slurp(dir / "out" / "census.csv");
    CHECK(csv.find("name,order,descriptor,source") == 0);
    CHECK(csv.find("Q8,8,quat:3,pipeline") != std::string::npos);
    CHECK(csv.find("Q8,8,quat:3,oracle") != std::string::npos);

    SUBCASE("warm rerun: zero searches, certificate verifications only, 10x faster") {
        CensusConfig warm = cfg;
        warm.out_dir = (dir / "out2").string();
        auto res2 = run_census(warm);
        CHECK(res2.stats.searches == 0);
        CHECK(res2.stats.verifications > 0);
        CHECK(res2.exit_code == res.exit_code);
        CHECK(res2.wall_seconds * 10 <= res.wall_seconds);
        CHECK(csv_without_runtime(dir / "out" / "census.csv") ==
              csv_without_runtime(dir / "out2" / "census.csv"));
    }
}

TEST_CASE("census rows carry the expected negative witnesses") {
    auto dir = fresh_dir("wit");
    CensusConfig cfg;
    cfg.groups = builtin_census_entries();
    cfg.cache_dir = (dir / "cache").string();
    auto res = run_census(cfg);
    // the proofs' witness families: K8 / K45 / K37 / A1-based evidence
    for (const char* name : {"M8", "D12", "D36", "S4", "A5", "Z9:Z4", "S3xS3", "Z3xA4", "Z6xS3",
                             "(Z3xZ3):4Z4", "Z2x((Z3xZ3):Z2)", "(Z2xZ2):Z9", "Z25:2:Z4"}) {
        const auto* r = find_report(res, name);
        REQUIRE_MESSAGE(r != nullptr, name);
        CHECK_FALSE(r->pipeline.planar);
        CHECK_FALSE(r->pipeline.toroidal);
        CHECK_FALSE(r->pipeline.projective);
        const bool witnessed = r->pipeline.evidence.find("witness") != std::string::npos;
        CAPTURE(r->pipeline.evidence);
        CHECK(witnessed);
    }
}

TEST_CASE("exit codes: inconclusive and config errors") {
    // a starving node budget turns searches into inconclusive rows: exit 3
    auto dir = fresh_dir("budget");
    CensusConfig cfg;
    cfg.groups = {nlohmann::json{{"descriptor", "cyclic:128"}}}; // K6: needs a search
    cfg.node_budget = 10;
    auto res = run_census(cfg);
    CHECK(res.inconclusive_rows == 1);
    CHECK(res.exit_code == 3);

    // a non-associative table in the input is a hard error
    nlohmann::json bad = {{"name", "bad"},
                          {"table", {{0, 1, 2, 3, 4},
                                     {1, 0, 3, 4, 2},
                                     {2, 3, 4, 0, 1},
                                     {3, 4, 1, 2, 0},
                                     {4, 2, 0, 1, 3}}}};
    CensusConfig cfg2;
    cfg2.groups = {bad};
    CHECK_THROWS_AS(run_census(cfg2), NotAssociative);
}

TEST_CASE("parallel census runs are deterministic") {
    auto dir1 = fresh_dir("par1");
    auto dir4 = fresh_dir("par4");
    CensusConfig cfg;
    cfg.groups = builtin_census_entries();

    CensusConfig c1 = cfg;
    c1.cache_dir = (dir1 / "cache").string();
    c1.out_dir = (dir1 / "out").string();
    c1.jobs = 1;
    auto r1 = run_census(c1);

    CensusConfig c4 = cfg;
    c4.cache_dir = (dir4 / "cache").string();
    c4.out_dir = (dir4 / "out").string();
    c4.jobs = 4;
    auto r4 = run_census(c4);

    CHECK(csv_without_runtime(dir1 / "out" / "census.csv") ==
          csv_without_runtime(dir4 / "out" / "census.csv"));

    // the certificates found are identical files (deterministic searches)
    int certs_compared = 0;
    for (const auto& f : fs::directory_iterator(dir1 / "cache")) {
        auto name = f.path().filename();
        auto j1 = nlohmann::json::parse(slurp(f.path()));
        const std::string key = j1.value("key", "");
        if (key.rfind("row|", 0) == 0) continue; // rows carry runtimes
        REQUIRE(fs::exists(dir4 / "cache" / name));
        auto j4 = nlohmann::json::parse(slurp(dir4 / "cache" / name));
        CHECK(j1 == j4);
        ++certs_compared;
    }
    CHECK(certs_compared > 5);
}

TEST_CASE("golden certificates verify without re-searching") {
    fs::path dir;
    for (const auto& candidate :
         {fs::path("data/certs"), fs::path("../data/certs"), fs::path("../../data/certs")})
        if (fs::exists(candidate)) {
            dir = candidate;
            break;
        }
    REQUIRE_FALSE(dir.empty());
    int verified = 0;
    for (const auto& f : fs::directory_iterator(dir)) {
        CAPTURE(f.path().filename().string());
        auto cert = certificate_from_json(nlohmann::json::parse(slurp(f.path())));
        Graph g = from_graph6(cert.graph6);
        CHECK(verify_certificate(g, cert));
        const int chi = g.vertex_count() - g.edge_count() + cert.faces;
        CHECK(chi == surface_euler_characteristic(cert.surface));
        ++verified;
    }
    CHECK(verified >= 14);
}

TEST_CASE("classification record JSON round trip") {
    ClassificationRecord c;
    c.source = "pipeline";
    c.planar = false;
    c.toroidal = true;
    c.projective = false;
    c.profile.c6_free = false;
    c.evidence = "certificate";
    auto j = detail::record_json(c);
    auto back = detail::record_from_json(j);
    CHECK(back.toroidal == c.toroidal);
    CHECK(back.projective == c.projective);
    CHECK(back.profile.c6_free == c.profile.c6_free);
    CHECK(back.evidence == c.evidence);
}
