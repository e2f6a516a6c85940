// permuta: construct finite groups, build their subgroup permutability
// graphs, decide planarity / toroidality / projective-planarity exactly, and
// cross-validate the computational pipeline against the closed-form
// classification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "permuta/census.hpp"
#include "permuta/classifier.hpp"
#include "permuta/graph6.hpp"
#include "permuta/permgraph.hpp"

using namespace permuta;

namespace {

FiniteGroup resolve_group(const std::string& desc) {
    if (desc.rfind("file:", 0) == 0) return load_group_file(desc.substr(5));
    return construct(parse_descriptor(desc));
}

Graph resolve_graph(const std::string& target) {
    // named pattern, a file containing a graph6 line, or a literal graph6 string
    try {
        return pattern_by_name(target);
    } catch (const UnknownTarget&) {
    }
    std::ifstream in(target);
    if (in) {
        std::string line;
        std::getline(in, line);
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        return from_graph6(line);
    }
    try {
        return from_graph6(target);
    } catch (const UnsupportedFormat&) {
        throw UnknownTarget("cannot resolve graph target: " + target);
    }
}

std::string cache_dir_from(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PERMUTA_CACHE_DIR")) return env;
    return {};
}

const char* tri(bool value, bool inconclusive) {
    return inconclusive ? "inconclusive" : value ? "true" : "false";
}

void print_record(const ClassificationRecord& r) {
    std::cout << "  source:      " << r.source << "\n";
    if (!r.graph_defined) {
        std::cout << "  graph undefined (group of order 1 or prime)\n";
        return;
    }
    std::cout << "  planar:      " << (r.planar ? "true" : "false") << "\n"
              << "  toroidal:    " << tri(r.toroidal, r.torus_inconclusive) << "\n"
              << "  projective:  " << tri(r.projective, r.projective_inconclusive) << "\n"
              << "  K33-free:    " << (r.profile.k33_free ? "true" : "false") << "\n"
              << "  K15-free:    " << (r.profile.k15_free ? "true" : "false") << "\n"
              << "  C6-free:     " << (r.profile.c6_free ? "true" : "false") << "\n"
              << "  P5-free:     " << (r.profile.p5_free ? "true" : "false") << "\n"
              << "  P6-free:     " << (r.profile.p6_free ? "true" : "false") << "\n"
              << "  evidence:    " << r.evidence << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutability graphs of subgroups: exact surface classification"};
    app.require_subcommand(1);

    auto* census = app.add_subcommand("census", "run the cross-validation census");
    bool builtin = false;
    std::string from_file, out_dir, cache_flag;
    std::uint64_t node_budget = 1'000'000'000;
    double time_budget = 0.0;
    int jobs = 1;
    bool no_row_cache = false;
    census->add_flag("--builtin", builtin, "use the builtin fixture set");
    census->add_option("--from", from_file, "census config JSON file");
    census->add_option("--out", out_dir, "output directory for census.csv / census.json");
    census->add_option("--node-budget", node_budget, "backtrack node budget per search");
    census->add_option("--time-budget-seconds", time_budget, "wall time budget per search");
    census->add_option("--jobs", jobs, "worker threads (group-level parallelism)");
    census->add_option("--cache-dir", cache_flag, "certificate cache directory");
    census->add_flag("--no-row-cache", no_row_cache, "disable pipeline row caching");

    auto* classify = app.add_subcommand("classify", "classify one group (pipeline and oracle)");
    std::string group_desc;
    classify->add_option("--group", group_desc, "group descriptor or file:path.json")->required();
    classify->add_option("--node-budget", node_budget, "backtrack node budget per search");
    classify->add_option("--time-budget-seconds", time_budget, "wall time budget per search");
    classify->add_option("--cache-dir", cache_flag, "certificate cache directory");

    auto* graphcmd = app.add_subcommand("graph", "emit the permutability graph of a group");
    std::string emit = "graph6", out_file;
    graphcmd->add_option("--group", group_desc, "group descriptor or file:path.json")->required();
    graphcmd->add_option("--emit", emit, "graph6 | dot")->check(CLI::IsMember({"graph6", "dot"}));
    graphcmd->add_option("--out", out_file, "output file (default stdout)");

    auto* embed = app.add_subcommand("embed", "decide embeddability of a graph on a surface");
    std::string graph_target, surface = "torus", cert_out;
    embed->add_option("--graph", graph_target, "graph6 file, literal graph6, or pattern name")
        ->required();
    embed->add_option("--surface", surface, "torus | projective")
        ->check(CLI::IsMember({"torus", "projective"}));
    embed->add_option("--certificate", cert_out, "write the embedding certificate JSON here");
    embed->add_option("--node-budget", node_budget, "backtrack node budget");
    embed->add_option("--time-budget-seconds", time_budget, "wall time budget");
    embed->add_option("--cache-dir", cache_flag, "certificate cache directory");

    auto* verify = app.add_subcommand("verify", "verify an embedding certificate");
    std::string cert_in;
    verify->add_option("--graph", graph_target, "graph6 file, literal graph6, or pattern name")
        ->required();
    verify->add_option("--certificate", cert_in, "certificate JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*census) {
            CensusConfig cfg;
            if (!builtin && from_file.empty())
                throw IoError("census needs either --builtin or --from FILE");
            if (builtin) {
                cfg.groups = builtin_census_entries();
            } else {
                std::ifstream in(from_file);
                if (!in) throw IoError("cannot open census config: " + from_file);
                nlohmann::json j;
                in >> j;
                cfg.groups = census_entries_from_json(j);
            }
            cfg.out_dir = out_dir;
            cfg.cache_dir = cache_dir_from(cache_flag);
            cfg.node_budget = node_budget;
            cfg.time_budget_seconds = time_budget;
            cfg.jobs = jobs;
            cfg.use_row_cache = !no_row_cache;
            auto res = run_census(cfg);
            for (const auto& r : res.reports) {
                std::cout << r.name << " (order " << r.order << "): ";
                if (!r.pipeline.graph_defined) {
                    std::cout << "graph undefined";
                } else {
                    std::cout << (r.pipeline.planar     ? "planar"
                                  : r.pipeline.toroidal ? "toroidal"
                                                        : "not toroidal")
                              << ", "
                              << (r.pipeline.projective ? "projective-planar"
                                                        : "not projective-planar");
                }
                if (!r.disagreements.empty()) {
                    std::cout << "  DISAGREEMENT:";
                    for (const auto& d : r.disagreements) std::cout << " " << d;
                }
                if (r.inconclusive) std::cout << "  INCONCLUSIVE";
                std::cout << "\n";
            }
            std::cout << "groups: " << res.reports.size()
                      << ", disagreements: " << res.disagreement_rows
                      << ", inconclusive: " << res.inconclusive_rows
                      << ", searches: " << res.stats.searches << ", wall: " << res.wall_seconds
                      << "s\n";
            return res.exit_code;
        }

        if (*classify) {
            FiniteGroup g = resolve_group(group_desc);
            CertificateCache cache(cache_dir_from(cache_flag));
            TopoOptions topo;
            topo.node_budget = node_budget;
            topo.time_budget_seconds = time_budget;
            if (!cache.directory().empty()) topo.cache = &cache;
            auto rep = cross_validate(g, topo);
            std::cout << g.name() << " (order " << g.order() << ")\n";
            std::cout << "recognized descriptor: "
                      << (rep.descriptor.family == Family::Opaque
                              ? "opaque (no oracle claim)"
                              : descriptor_text(rep.descriptor))
                      << "\n";
            const std::string pres = descriptor_presentation(rep.descriptor);
            if (!pres.empty()) std::cout << "presentation: " << pres << "\n";
            std::cout << "pipeline:\n";
            print_record(rep.pipeline);
            if (rep.oracle) {
                std::cout << "oracle:\n";
                print_record(*rep.oracle);
            }
            if (!rep.disagreements.empty()) {
                std::cout << "DISAGREEMENT on:";
                for (const auto& d : rep.disagreements) std::cout << " " << d;
                std::cout << "\n";
                return 2;
            }
            if (rep.inconclusive) {
                std::cout << "INCONCLUSIVE (budget exceeded)\n";
                return 3;
            }
            return 0;
        }

        if (*graphcmd) {
            FiniteGroup g = resolve_group(group_desc);
            Graph gamma = permutability_graph(g);
            std::string payload =
                emit == "graph6" ? to_graph6(gamma) + "\n" : to_dot(gamma, g.name());
            if (out_file.empty()) {
                std::cout << payload;
            } else {
                std::ofstream out(out_file);
                if (!out) throw IoError("cannot write " + out_file);
                out << payload;
            }
            return 0;
        }

        if (*embed) {
            Graph g = resolve_graph(graph_target);
            CertificateCache cache(cache_dir_from(cache_flag));
            TopoOptions topo;
            topo.node_budget = node_budget;
            topo.time_budget_seconds = time_budget;
            if (!cache.directory().empty()) topo.cache = &cache;
            auto d = embeddable_on(
                g, surface == "torus" ? SurfaceKind::Torus : SurfaceKind::Projective, topo);
            switch (d.status) {
                case SurfaceDecision::Status::Yes:
                    std::cout << "embeddable on " << surface << ": yes [" << d.evidence << "]\n";
                    if (!cert_out.empty() && d.certificate) {
                        std::ofstream out(cert_out);
                        if (!out) throw IoError("cannot write " + cert_out);
                        out << certificate_to_json(*d.certificate).dump(1) << "\n";
                    }
                    return 0;
                case SurfaceDecision::Status::No:
                    std::cout << "embeddable on " << surface << ": no [" << d.evidence << "]\n";
                    return 0;
                case SurfaceDecision::Status::Inconclusive:
                    std::cout << "inconclusive [" << d.evidence << "]\n";
                    return 3;
            }
        }

        if (*verify) {
            Graph g = resolve_graph(graph_target);
            std::ifstream in(cert_in);
            if (!in) throw IoError("cannot open certificate: " + cert_in);
            nlohmann::json j;
            in >> j;
            auto cert = certificate_from_json(j);
            const bool ok = verify_certificate(g, cert);
            std::cout << (ok ? "certificate valid: " : "certificate INVALID: ") << cert.surface
                      << ", " << cert.faces << " faces\n";
            return ok ? 0 : 2;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
