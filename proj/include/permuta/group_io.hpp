#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "permuta/errors.hpp"
#include "permuta/group.hpp"

namespace permuta {

/// Group file format, accepted everywhere a group is an input:
///   { "name": str, "order": n, "table": [[int,...],...] }
///   { "name": str, "permutation_generators": [[int,...],...], "degree": d }
inline FiniteGroup group_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw IoError("group JSON must be an object");
    const std::string name = j.value("name", std::string("unnamed"));
    if (j.contains("table")) {
        std::vector<std::vector<int>> table;
        for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
        if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
            throw IoError("declared order does not match table size in '" + name + "'");
        return FiniteGroup::from_table(table, name);
    }
    if (j.contains("permutation_generators")) {
        std::vector<std::vector<int>> gens;
        for (const auto& row : j.at("permutation_generators"))
            gens.push_back(row.get<std::vector<int>>());
        const int degree = j.at("degree").get<int>();
        return FiniteGroup::from_permutations(gens, degree, name);
    }
    throw IoError("group JSON needs either 'table' or 'permutation_generators'");
}

inline FiniteGroup load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open group file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("bad JSON in " + path + ": " + e.what());
    }
    return group_from_json(j);
}

inline nlohmann::json group_to_json(const FiniteGroup& g) {
    nlohmann::json j;
    j["name"] = g.name();
    j["order"] = g.order();
    auto& table = j["table"] = nlohmann::json::array();
    for (int a = 0; a < g.order(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        table.push_back(std::move(row));
    }
    return j;
}

} // namespace permuta
