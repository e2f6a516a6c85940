#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "permuta/element_set.hpp"
#include "permuta/errors.hpp"

namespace permuta {

/// A finite group as a validated Cayley table. Immutable after construction;
/// every downstream computation reads only the table.
class FiniteGroup {
public:
    /// Validates and wraps a square multiplication table (table[x][y] = x*y).
    /// Throws NotLatinSquare / NoIdentity / NotAssociative / OrderExceedsCap,
    /// each naming the first violation found.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  std::string name);

    /// Group generated by permutations of 0..degree-1 (images given per point),
    /// indexed in lexicographic order, multiplied by composition
    /// (p*q)(x) = p(q(x)). Element names use cycle notation.
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                                         int degree, std::string name);

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

    int element_order(int a) const {
        int o = 1;
        for (int x = a; x != identity_; x = mul(x, a)) ++o;
        return o;
    }

    bool is_abelian() const {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    const std::string& name() const { return name_; }
    void rename(std::string name) { name_ = std::move(name); }

    const std::string& element_name(int a) const { return element_names_[static_cast<std::size_t>(a)]; }
    void set_element_names(std::vector<std::string> names) {
        if (static_cast<int>(names.size()) == n_) element_names_ = std::move(names);
    }

    const std::vector<std::uint16_t>& raw_table() const { return table_; }

private:
    FiniteGroup() = default;
    void finish_setup();

    int n_ = 0;
    std::vector<std::uint16_t> table_;
    int identity_ = 0;
    std::vector<std::uint16_t> inverse_;
    std::string name_;
    std::vector<std::string> element_names_;
};

// --- construction -----------------------------------------------------------

inline void FiniteGroup::finish_setup() {
    // identity
    identity_ = -1;
    for (int e = 0; e < n_ && identity_ < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n_ && ok; ++x)
            ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw NoIdentity("no two-sided identity element in table '" + name_ + "'");

    // associativity, O(n^3)
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            const int xy = mul(x, y);
            for (int z = 0; z < n_; ++z)
                if (mul(xy, z) != mul(x, mul(y, z)))
                    throw NotAssociative("(x*y)*z != x*(y*z) at (x,y,z)=(" + std::to_string(x) +
                                         "," + std::to_string(y) + "," + std::to_string(z) +
                                         ") in table '" + name_ + "'");
        }

    // inverses exist because each row is a permutation; locate them
    inverse_.assign(static_cast<std::size_t>(n_), 0);
    for (int a = 0; a < n_; ++a) {
        int x = -1;
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == identity_) {
                x = b;
                break;
            }
        if (x < 0 || mul(x, a) != identity_)
            throw NotAssociative("element " + std::to_string(a) + " has no two-sided inverse");
        inverse_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(x);
    }

    if (element_names_.empty()) {
        element_names_.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) element_names_.push_back("g" + std::to_string(i));
    }
}

inline FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                           std::string name) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw InvalidParameters("empty table");
    if (n > kOrderCap)
        throw OrderExceedsCap("order " + std::to_string(n) + " exceeds cap " +
                              std::to_string(kOrderCap));
    FiniteGroup g;
    g.n_ = n;
    g.name_ = std::move(name);
    g.table_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(table[static_cast<std::size_t>(r)].size()) != n)
            throw NotLatinSquare("table is not square: row " + std::to_string(r));
        for (int c = 0; c < n; ++c) {
            const int v = table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v < 0 || v >= n)
                throw NotLatinSquare("entry out of range at (" + std::to_string(r) + "," +
                                     std::to_string(c) + ")");
            g.table_[static_cast<std::size_t>(r) * n + c] = static_cast<std::uint16_t>(v);
        }
    }
    // Latin square: each row and column is a permutation
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            const int v = g.mul(r, c);
            if (seen[static_cast<std::size_t>(v)])
                throw NotLatinSquare("row " + std::to_string(r) + " repeats " + std::to_string(v));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < n; ++r) {
            const int v = g.mul(r, c);
            if (seen[static_cast<std::size_t>(v)])
                throw NotLatinSquare("column " + std::to_string(c) + " repeats " + std::to_string(v));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    g.finish_setup();
    return g;
}

namespace detail {

inline std::string cycle_notation(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (done[static_cast<std::size_t>(i)] || p[static_cast<std::size_t>(i)] == i) continue;
        out += '(';
        int j = i;
        bool first = true;
        while (!done[static_cast<std::size_t>(j)]) {
            done[static_cast<std::size_t>(j)] = 1;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = p[static_cast<std::size_t>(j)];
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

} // namespace detail

inline FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators,
                                                  int degree, std::string name) {
    if (degree <= 0) throw InvalidParameters("degree must be positive");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            throw InvalidParameters("generator length does not match degree");
        std::vector<char> seen(static_cast<std::size_t>(degree), 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
                throw InvalidParameters("generator is not a permutation of 0.." +
                                        std::to_string(degree - 1));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    using Perm = std::vector<int>;
    auto compose = [degree](const Perm& p, const Perm& q) {
        Perm r(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i)
            r[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(q[static_cast<std::size_t>(i)])];
        return r;
    };
    Perm id(static_cast<std::size_t>(degree));
    std::iota(id.begin(), id.end(), 0);

    std::set<Perm> elems{id};
    std::vector<Perm> queue{id};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& g : generators) {
            for (const Perm& prod : {compose(queue[qi], g), compose(g, queue[qi])}) {
                if (elems.insert(prod).second) {
                    if (static_cast<int>(elems.size()) > kOrderCap)
                        throw OrderExceedsCap("generated permutation group exceeds cap " +
                                              std::to_string(kOrderCap));
                    queue.push_back(prod);
                }
            }
        }
    }
    std::vector<Perm> sorted(elems.begin(), elems.end());
    std::map<Perm, int> index;
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) index[sorted[static_cast<std::size_t>(i)]] = i;

    const int n = static_cast<int>(sorted.size());
    FiniteGroup g;
    g.n_ = n;
    g.name_ = std::move(name);
    g.table_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table_[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(
                index[compose(sorted[static_cast<std::size_t>(a)], sorted[static_cast<std::size_t>(b)])]);
    g.element_names_.reserve(static_cast<std::size_t>(n));
    for (const auto& p : sorted) g.element_names_.push_back(detail::cycle_notation(p));
    g.finish_setup();
    return g;
}

// --- subgroups ---------------------------------------------------------------

/// Subgroup as a bitset of element indices with cached order.
struct Subgroup {
    ElementSet members;
    int order = 0;

    bool contains(int x) const { return members.test(x); }
    bool operator==(const Subgroup& o) const { return members == o.members; }
    bool operator<(const Subgroup& o) const {
        if (order != o.order) return order < o.order;
        return members < o.members;
    }
};

inline Subgroup make_subgroup(const ElementSet& s) { return Subgroup{s, s.count()}; }

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
    ElementSet s;
    s.set(g.identity());
    return make_subgroup(s);
}

inline Subgroup whole_group(const FiniteGroup& g) {
    ElementSet s;
    for (int i = 0; i < g.order(); ++i) s.set(i);
    return make_subgroup(s);
}

/// Smallest subgroup containing the seed elements (product saturation).
inline Subgroup closure(const FiniteGroup& g, const ElementSet& seed) {
    if (seed.none()) throw InvalidParameters("closure of empty generating set");
    ElementSet s;
    s.set(g.identity());
    std::vector<int> elems{g.identity()};
    std::vector<int> work;
    seed.for_each([&](int x) {
        if (!s.test(x)) {
            s.set(x);
            elems.push_back(x);
            work.push_back(x);
        }
    });
    while (!work.empty()) {
        const int x = work.back();
        work.pop_back();
        const std::size_t fixed = elems.size();
        for (std::size_t i = 0; i < fixed; ++i) {
            for (int p : {g.mul(x, elems[i]), g.mul(elems[i], x)}) {
                if (!s.test(p)) {
                    s.set(p);
                    elems.push_back(p);
                    work.push_back(p);
                }
            }
        }
    }
    return make_subgroup(s);
}

inline Subgroup closure(const FiniteGroup& g, std::initializer_list<int> gens) {
    ElementSet s;
    for (int x : gens) s.set(x);
    return closure(g, s);
}

/// Exact product set HK = {h*k}.
inline ElementSet product_set(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    ElementSet out;
    h.members.for_each([&](int x) { k.members.for_each([&](int y) { out.set(g.mul(x, y)); }); });
    return out;
}

inline bool is_subgroup_set(const FiniteGroup& g, const ElementSet& s) {
    if (!s.test(g.identity())) return false;
    bool ok = true;
    s.for_each([&](int x) {
        if (!ok) return;
        s.for_each([&](int y) {
            if (ok && !s.test(g.mul(x, y))) ok = false;
        });
    });
    return ok;
}

/// Two subgroups permute iff HK = KH as element sets.
inline bool permutes(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    return product_set(g, h, k) == product_set(g, k, h);
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    for (int x = 0; x < g.order(); ++x) {
        bool inside = true;
        h.members.for_each([&](int m) {
            if (inside && !h.contains(g.conj(x, m))) inside = false;
        });
        if (!inside) return false;
    }
    return true;
}

/// Complete subgroup lattice in canonical order (by order, then bitset).
/// `proper` excludes the trivial subgroup and the whole group.
struct SubgroupLattice {
    std::vector<Subgroup> all;
    std::vector<Subgroup> proper;
};

/// Enumerates all subgroups: seed with cyclic subgroups, saturate under
/// pairwise join. Correct because every subgroup is a join of cyclic ones.
inline SubgroupLattice all_subgroups(const FiniteGroup& g, std::size_t max_subgroups = 20000) {
    std::set<Subgroup> found;
    found.insert(trivial_subgroup(g));
    std::vector<Subgroup> fresh;
    for (int x = 0; x < g.order(); ++x) {
        ElementSet seed;
        seed.set(x);
        Subgroup c = closure(g, seed);
        if (found.insert(c).second) fresh.push_back(c);
    }
    while (!fresh.empty()) {
        std::vector<Subgroup> next;
        std::vector<Subgroup> snapshot(found.begin(), found.end());
        for (const Subgroup& a : fresh) {
            for (const Subgroup& b : snapshot) {
                if (b.members.subset_of(a.members) || a.members.subset_of(b.members)) continue;
                Subgroup j = closure(g, a.members | b.members);
                if (found.insert(j).second) {
                    if (found.size() > max_subgroups)
                        throw LatticeTooLarge("subgroup lattice exceeds " +
                                              std::to_string(max_subgroups) + " subgroups");
                    next.push_back(j);
                }
            }
        }
        fresh = std::move(next);
    }
    SubgroupLattice lat;
    lat.all.assign(found.begin(), found.end());
    std::sort(lat.all.begin(), lat.all.end());
    for (const Subgroup& s : lat.all)
        if (s.order != 1 && s.order != g.order()) lat.proper.push_back(s);
    return lat;
}

// --- invariants --------------------------------------------------------------

/// Derived subgroup of S: closure of all commutators within S.
inline Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& s) {
    ElementSet comms;
    comms.set(g.identity());
    std::vector<int> elems;
    s.members.for_each([&](int x) { elems.push_back(x); });
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            const int x = elems[i], y = elems[j];
            comms.set(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
        }
    return closure(g, comms);
}

inline bool is_solvable(const FiniteGroup& g) {
    Subgroup cur = whole_group(g);
    while (cur.order > 1) {
        Subgroup next = derived_subgroup(g, cur);
        if (next.order == cur.order) return false; // perfect: series stabilized above trivial
        cur = next;
    }
    return true;
}

struct GroupInvariants {
    bool abelian = false;
    bool solvable = false;
    std::map<int, int> sylow_counts;            // prime -> n_p
    std::map<int, int> element_order_histogram; // order -> count
};

inline std::vector<std::pair<int, int>> prime_factorization(int n) {
    std::vector<std::pair<int, int>> f;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int k = 0;
            while (n % p == 0) {
                n /= p;
                ++k;
            }
            f.emplace_back(p, k);
        }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline GroupInvariants invariants(const FiniteGroup& g, const SubgroupLattice& lat) {
    GroupInvariants inv;
    inv.abelian = g.is_abelian();
    inv.solvable = inv.abelian || is_solvable(g);
    for (int x = 0; x < g.order(); ++x) ++inv.element_order_histogram[g.element_order(x)];
    for (auto [p, k] : prime_factorization(g.order())) {
        int pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        int count = 0;
        for (const Subgroup& s : lat.all)
            if (s.order == pk) ++count;
        inv.sylow_counts[p] = count;
    }
    return inv;
}

inline GroupInvariants invariants(const FiniteGroup& g) { return invariants(g, all_subgroups(g)); }

// --- quotients and labels ----------------------------------------------------

/// Quotient group G/N for normal N; element i of the result is the coset of
/// the i-th smallest coset representative.
inline FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n, const std::string& name) {
    if (!is_normal(g, n)) throw InvalidParameters("quotient by a non-normal subgroup");
    std::vector<int> coset_of(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
        const int idx = static_cast<int>(reps.size());
        reps.push_back(x);
        n.members.for_each([&](int m) { coset_of[static_cast<std::size_t>(g.mul(x, m))] = idx; });
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(q),
                                        std::vector<int>(static_cast<std::size_t>(q)));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                coset_of[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(a)],
                                                        reps[static_cast<std::size_t>(b)]))];
    FiniteGroup out = FiniteGroup::from_table(table, name);
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(q));
    for (int r : reps) names.push_back(g.element_name(r) + "N");
    out.set_element_names(std::move(names));
    return out;
}

/// Greedy minimal generating sequence for a subgroup.
inline std::vector<int> minimal_generators(const FiniteGroup& g, const Subgroup& h) {
    std::vector<int> gens;
    if (h.order == 1) return gens;
    Subgroup cur = trivial_subgroup(g);
    while (cur.order < h.order) {
        int best = -1, best_order = 0;
        h.members.for_each([&](int x) {
            if (cur.contains(x)) return;
            const int o = g.element_order(x);
            if (o > best_order) {
                best_order = o;
                best = x;
            }
        });
        gens.push_back(best);
        ElementSet seed = cur.members;
        seed.set(best);
        cur = closure(g, seed);
    }
    return gens;
}

inline std::string subgroup_label(const FiniteGroup& g, const Subgroup& h) {
    if (h.order == 1) return "1";
    std::string out = "<";
    bool first = true;
    for (int x : minimal_generators(g, h)) {
        if (!first) out += ",";
        out += g.element_name(x);
        first = false;
    }
    return out + ">";
}

} // namespace permuta
