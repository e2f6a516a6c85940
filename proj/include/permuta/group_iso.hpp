#pragma once

#include <map>
#include <optional>
#include <vector>

#include "permuta/group.hpp"

namespace permuta {

namespace detail {

inline std::map<int, int> order_histogram(const FiniteGroup& g) {
    std::map<int, int> h;
    for (int x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
    return h;
}

/// Expands generator images to a full map via the BFS word expressions of A;
/// returns the map if it is a bijective homomorphism.
inline std::optional<std::vector<int>> expand_images(const FiniteGroup& a, const FiniteGroup& b,
                                                     const std::vector<int>& gens,
                                                     const std::vector<int>& images) {
    const int n = a.order();
    std::vector<int> phi(static_cast<std::size_t>(n), -1);
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    phi[static_cast<std::size_t>(a.identity())] = b.identity();
    hit[static_cast<std::size_t>(b.identity())] = 1;
    std::vector<int> queue{a.identity()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int x = queue[qi];
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const int y = a.mul(x, gens[gi]);
            const int fy = b.mul(phi[static_cast<std::size_t>(x)], images[gi]);
            if (phi[static_cast<std::size_t>(y)] < 0) {
                if (hit[static_cast<std::size_t>(fy)]) return std::nullopt; // not injective
                phi[static_cast<std::size_t>(y)] = fy;
                hit[static_cast<std::size_t>(fy)] = 1;
                queue.push_back(y);
            } else if (phi[static_cast<std::size_t>(y)] != fy) {
                return std::nullopt; // inconsistent
            }
        }
    }
    if (static_cast<int>(queue.size()) != n) return std::nullopt; // gens do not generate
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (phi[static_cast<std::size_t>(a.mul(x, y))] !=
                b.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]))
                return std::nullopt;
    return phi;
}

inline bool iso_assign(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                       std::vector<int>& images, std::size_t idx,
                       std::optional<std::vector<int>>& out) {
    if (idx == gens.size()) {
        out = expand_images(a, b, gens, images);
        return out.has_value();
    }
    const int want_order = a.element_order(gens[idx]);
    // the partial images must generate a subgroup of the same size as the
    // corresponding partial closure in A
    ElementSet a_part;
    for (std::size_t i = 0; i <= idx; ++i) a_part.set(gens[i]);
    const int a_size = closure(a, a_part).order;
    for (int y = 0; y < b.order(); ++y) {
        if (b.element_order(y) != want_order) continue;
        images[idx] = y;
        ElementSet b_part;
        for (std::size_t i = 0; i <= idx; ++i) b_part.set(images[i]);
        if (closure(b, b_part).order != a_size) continue;
        if (iso_assign(a, b, gens, images, idx + 1, out)) return true;
    }
    return false;
}

} // namespace detail

/// Exact isomorphism test by generator-image backtracking; returns the element
/// map A -> B when one exists.
inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return std::nullopt;
    if (a.is_abelian() != b.is_abelian()) return std::nullopt;
    if (detail::order_histogram(a) != detail::order_histogram(b)) return std::nullopt;
    const std::vector<int> gens = minimal_generators(a, whole_group(a));
    if (gens.empty()) return std::vector<int>{b.identity()};
    std::vector<int> images(gens.size(), -1);
    std::optional<std::vector<int>> out;
    detail::iso_assign(a, b, gens, images, 0, out);
    return out;
}

inline bool group_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    return find_isomorphism(a, b).has_value();
}

} // namespace permuta
