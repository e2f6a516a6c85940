#pragma once

#include <string>
#include <vector>

#include "permuta/errors.hpp"
#include "permuta/graph.hpp"
#include "permuta/group.hpp"

namespace permuta {

/// The permutability graph of subgroups: vertices are the proper subgroups of
/// G in canonical lattice order, H -- K is an edge iff HK = KH as element
/// sets. Labels carry generator strings.
inline Graph permutability_graph(const FiniteGroup& g, const SubgroupLattice& lat) {
    const int n = static_cast<int>(lat.proper.size());
    if (n == 0)
        throw NoProperSubgroups("group '" + g.name() +
                                "' has no proper subgroups (order 1 or prime)");
    Graph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (permutes(g, lat.proper[static_cast<std::size_t>(i)],
                         lat.proper[static_cast<std::size_t>(j)]))
                out.add_edge(i, j);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (const Subgroup& s : lat.proper) labels.push_back(subgroup_label(g, s));
    out.set_labels(std::move(labels));
    return out;
}

inline Graph permutability_graph(const FiniteGroup& g) {
    return permutability_graph(g, all_subgroups(g));
}

} // namespace permuta
