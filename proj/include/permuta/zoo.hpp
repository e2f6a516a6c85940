#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "permuta/errors.hpp"
#include "permuta/group.hpp"

namespace permuta {

// --- small modular arithmetic -------------------------------------------------

inline int mod_pow(long long b, long long e, int m) {
    long long r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<int>(r);
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Multiplicative order of i mod q (requires gcd(i,q)=1).
inline int ord_mod(int i, int q) {
    i %= q;
    if (i < 0) i += q;
    if (std::gcd(i, q) != 1) throw InvalidParameters("ord_mod of a non-unit");
    int o = 1;
    long long cur = i;
    while (cur != 1 % q) {
        cur = cur * i % q;
        ++o;
    }
    return o;
}

/// 2x2 matrix over F_p.
struct Mat2 {
    int a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    Mat2 mul(const Mat2& o, int p) const {
        auto m = [p](long long x) { return static_cast<int>(((x % p) + p) % p); };
        return {m(static_cast<long long>(a) * o.a + static_cast<long long>(b) * o.c),
                m(static_cast<long long>(a) * o.b + static_cast<long long>(b) * o.d),
                m(static_cast<long long>(c) * o.a + static_cast<long long>(d) * o.c),
                m(static_cast<long long>(c) * o.b + static_cast<long long>(d) * o.d)};
    }
    bool operator==(const Mat2&) const = default;
    bool invertible(int p) const {
        long long det = (static_cast<long long>(a) * d - static_cast<long long>(b) * c) % p;
        return ((det % p) + p) % p != 0;
    }
    /// Multiplicative order in GL_2(p); 0 if singular.
    int order(int p) const {
        if (!invertible(p)) return 0;
        Mat2 cur = *this;
        int o = 1;
        const int cap = (p * p - 1) * (p * p - p); // |GL_2(p)|
        while (!(cur == identity())) {
            cur = cur.mul(*this, p);
            if (++o > cap) throw Error("matrix order overflow");
        }
        return o;
    }
};

inline Mat2 companion_matrix(int l, int p) { return Mat2{0, ((-1 % p) + p) % p, 1, ((l % p) + p) % p}; }

/// Smallest l in 0..p-1 such that the companion matrix [[0,-1],[1,l]] has
/// multiplicative order exactly `required_order` in GL_2(p). Exhaustive over
/// all p candidates; absence is a meaningful outcome, not a failure.
inline std::optional<int> find_action_parameter(int p, int required_order) {
    if (!is_prime(p) || required_order < 2)
        throw InvalidParameters("find_action_parameter needs a prime p and order >= 2");
    for (int l = 0; l < p; ++l)
        if (companion_matrix(l, p).order(p) == required_order) return l;
    return std::nullopt;
}

// --- descriptors ---------------------------------------------------------------

enum class Family {
    Cyclic,
    DirectProduct,
    ElementaryAbelian,
    Dihedral,
    GeneralizedQuaternion,
    Modular,
    MetacyclicSemidirect,
    PPSemidirectQ,
    PPSemidirectC4,
    Symmetric,
    Alternating,
    Opaque,
};

/// Family tag plus integer parameters; `presentation` is a human-readable
/// relator string filled in by `construct`.
struct GroupDescriptor {
    Family family = Family::Opaque;
    std::vector<int> params;
    std::string presentation;

    bool operator==(const GroupDescriptor& o) const {
        return family == o.family && params == o.params;
    }
};

inline GroupDescriptor cyclic_desc(int n) { return {Family::Cyclic, {n}, {}}; }
inline GroupDescriptor product_desc(std::vector<int> factors) {
    return {Family::DirectProduct, std::move(factors), {}};
}
inline GroupDescriptor elementary_abelian_desc(int p, int k) {
    return {Family::ElementaryAbelian, {p, k}, {}};
}
inline GroupDescriptor dihedral_desc(int n) { return {Family::Dihedral, {n}, {}}; }
inline GroupDescriptor quaternion_desc(int n) { return {Family::GeneralizedQuaternion, {n}, {}}; }
inline GroupDescriptor modular_desc(int p, int alpha) { return {Family::Modular, {p, alpha}, {}}; }
inline GroupDescriptor metacyclic_desc(int q, int p, int alpha, int t) {
    return {Family::MetacyclicSemidirect, {q, p, alpha, t}, {}};
}
inline GroupDescriptor ppq_desc(int p, int q, int l) { return {Family::PPSemidirectQ, {p, q, l}, {}}; }
inline GroupDescriptor ppc4_desc(int l) { return {Family::PPSemidirectC4, {l}, {}}; }
inline GroupDescriptor symmetric_desc(int n) { return {Family::Symmetric, {n}, {}}; }
inline GroupDescriptor alternating_desc(int n) { return {Family::Alternating, {n}, {}}; }
inline GroupDescriptor opaque_desc() { return {Family::Opaque, {}, {}}; }

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Cyclic: return "cyclic";
        case Family::DirectProduct: return "product";
        case Family::ElementaryAbelian: return "elab";
        case Family::Dihedral: return "dihedral";
        case Family::GeneralizedQuaternion: return "quat";
        case Family::Modular: return "modular";
        case Family::MetacyclicSemidirect: return "semidirect";
        case Family::PPSemidirectQ: return "ppq";
        case Family::PPSemidirectC4: return "ppc4";
        case Family::Symmetric: return "sym";
        case Family::Alternating: return "alt";
        case Family::Opaque: return "opaque";
    }
    return "?";
}

inline std::string descriptor_text(const GroupDescriptor& d) {
    switch (d.family) {
        case Family::MetacyclicSemidirect:
            return "semidirect:q=" + std::to_string(d.params[0]) + ",p=" + std::to_string(d.params[1]) +
                   ",a=" + std::to_string(d.params[2]) + ",t=" + std::to_string(d.params[3]);
        case Family::PPSemidirectQ:
            return "ppq:p=" + std::to_string(d.params[0]) + ",q=" + std::to_string(d.params[1]) +
                   ",l=" + std::to_string(d.params[2]);
        case Family::PPSemidirectC4: return "ppc4:l=" + std::to_string(d.params[0]);
        case Family::Opaque: return "opaque";
        default: {
            std::string s = family_name(d.family) + ":";
            for (std::size_t i = 0; i < d.params.size(); ++i)
                s += (i ? "," : "") + std::to_string(d.params[i]);
            return s;
        }
    }
}

/// The order the descriptor's group must have.
inline int descriptor_order(const GroupDescriptor& d) {
    auto ipow = [](int b, int e) {
        int r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    switch (d.family) {
        case Family::Cyclic: return d.params[0];
        case Family::DirectProduct: {
            int n = 1;
            for (int f : d.params) n *= f;
            return n;
        }
        case Family::ElementaryAbelian: return ipow(d.params[0], d.params[1]);
        case Family::Dihedral: return 2 * d.params[0];
        case Family::GeneralizedQuaternion: return ipow(2, d.params[0]);
        case Family::Modular: return ipow(d.params[0], d.params[1]);
        case Family::MetacyclicSemidirect: return d.params[0] * ipow(d.params[1], d.params[2]);
        case Family::PPSemidirectQ: return d.params[0] * d.params[0] * d.params[1];
        case Family::PPSemidirectC4: return 36;
        case Family::Symmetric: {
            int n = 1;
            for (int i = 2; i <= d.params[0]; ++i) n *= i;
            return n;
        }
        case Family::Alternating: {
            int n = 1;
            for (int i = 2; i <= d.params[0]; ++i) n *= i;
            return n / 2;
        }
        case Family::Opaque: return 0;
    }
    return 0;
}

// --- constructors ----------------------------------------------------------------

namespace detail {

inline std::string power_name(const std::string& base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return base + std::to_string(e);
}

inline std::string two_gen_name(int x, int y, const char* a = "a", const char* b = "b") {
    std::string s = power_name(a, x) + power_name(b, y);
    return s.empty() ? "e" : s;
}

/// Tabulates a group on normal forms a^x b^y with 0<=x<m, 0<=y<k and the
/// multiplication rule (x1,y1)*(x2,y2) = (x1 + x2*act[y1] mod m, y1+y2 mod k),
/// i.e. b a b^-1 = a^act[1].
inline FiniteGroup metacyclic_table(int m, int k, const std::vector<int>& act, std::string name) {
    const int n = m * k;
    if (n > kOrderCap)
        throw OrderExceedsCap("order " + std::to_string(n) + " exceeds cap " +
                              std::to_string(kOrderCap));
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    auto idx = [m](int x, int y) { return x + m * y; };
    for (int x1 = 0; x1 < m; ++x1)
        for (int y1 = 0; y1 < k; ++y1)
            for (int x2 = 0; x2 < m; ++x2)
                for (int y2 = 0; y2 < k; ++y2) {
                    const int x = static_cast<int>(
                        (x1 + static_cast<long long>(x2) * act[static_cast<std::size_t>(y1)]) % m);
                    table[static_cast<std::size_t>(idx(x1, y1))][static_cast<std::size_t>(idx(x2, y2))] =
                        idx(x, (y1 + y2) % k);
                }
    FiniteGroup g = FiniteGroup::from_table(table, std::move(name));
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < k; ++y) names[static_cast<std::size_t>(idx(x, y))] = two_gen_name(x, y);
    g.set_element_names(std::move(names));
    return g;
}

} // namespace detail

/// (Z_p x Z_p) semidirect Z_k where the generator c acts on exponent vectors by
/// the matrix `action`; requires ord(action) | k.
inline FiniteGroup matrix_semidirect(int p, const Mat2& action, int k, std::string name) {
    if (!action.invertible(p)) throw InvalidParameters("action matrix is singular mod p");
    if (k % action.order(p) != 0)
        throw InvalidParameters("action matrix order does not divide cyclic factor order");
    const int n = p * p * k;
    if (n > kOrderCap)
        throw OrderExceedsCap("order " + std::to_string(n) + " exceeds cap " +
                              std::to_string(kOrderCap));
    std::vector<Mat2> pw(static_cast<std::size_t>(k), Mat2::identity());
    for (int i = 1; i < k; ++i) pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i - 1)].mul(action, p);
    auto idx = [p](int x, int y, int c) { return x + p * y + p * p * c; };
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int c1 = 0; c1 < k; ++c1) {
        const Mat2& m = pw[static_cast<std::size_t>(c1)];
        for (int x1 = 0; x1 < p; ++x1)
            for (int y1 = 0; y1 < p; ++y1)
                for (int c2 = 0; c2 < k; ++c2)
                    for (int x2 = 0; x2 < p; ++x2)
                        for (int y2 = 0; y2 < p; ++y2) {
                            const int x = (x1 + m.a * x2 + m.b * y2) % p;
                            const int y = (y1 + m.c * x2 + m.d * y2) % p;
                            table[static_cast<std::size_t>(idx(x1, y1, c1))]
                                 [static_cast<std::size_t>(idx(x2, y2, c2))] = idx(x, y, (c1 + c2) % k);
                        }
    }
    FiniteGroup g = FiniteGroup::from_table(table, std::move(name));
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
            for (int c = 0; c < k; ++c) {
                std::string s = detail::power_name("a", x) + detail::power_name("b", y) +
                                detail::power_name("c", c);
                names[static_cast<std::size_t>(idx(x, y, c))] = s.empty() ? "e" : s;
            }
    g.set_element_names(std::move(names));
    return g;
}

inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string name) {
    const int n = g.order() * h.order();
    if (n > kOrderCap) throw OrderExceedsCap("direct product exceeds cap");
    auto idx = [&](int a, int b) { return a * h.order() + b; };
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int a1 = 0; a1 < g.order(); ++a1)
        for (int b1 = 0; b1 < h.order(); ++b1)
            for (int a2 = 0; a2 < g.order(); ++a2)
                for (int b2 = 0; b2 < h.order(); ++b2)
                    table[static_cast<std::size_t>(idx(a1, b1))][static_cast<std::size_t>(idx(a2, b2))] =
                        idx(g.mul(a1, a2), h.mul(b1, b2));
    FiniteGroup out = FiniteGroup::from_table(table, std::move(name));
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b)
            names[static_cast<std::size_t>(idx(a, b))] =
                "(" + g.element_name(a) + "|" + h.element_name(b) + ")";
    out.set_element_names(std::move(names));
    return out;
}

/// Realizes the descriptor as a validated Cayley table; all families go through
/// the same normal-form tabulation and from_table validation path.
inline FiniteGroup construct(const GroupDescriptor& d);

namespace detail {

inline FiniteGroup construct_cyclic(int n, std::string name) {
    if (n < 1) throw InvalidParameters("cyclic order must be positive");
    std::vector<int> act{1};
    return metacyclic_table(n, 1, act, std::move(name));
}

inline FiniteGroup construct_product(const std::vector<int>& factors, std::string name) {
    if (factors.empty()) throw InvalidParameters("empty direct product");
    for (int f : factors)
        if (f < 1) throw InvalidParameters("direct product factors must be positive");
    FiniteGroup g = construct_cyclic(factors[0], name);
    for (std::size_t i = 1; i < factors.size(); ++i)
        g = direct_product(g, construct_cyclic(factors[i], "Z" + std::to_string(factors[i])), name);
    g.rename(name);
    // tuple element names
    std::vector<int> radix(factors.rbegin(), factors.rend());
    std::vector<std::string> names(static_cast<std::size_t>(g.order()));
    for (int e = 0; e < g.order(); ++e) {
        int rem = e;
        std::vector<int> digits(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            digits[i] = rem % factors[i];
            rem /= factors[i];
        }
        std::string s = "(";
        for (std::size_t i = 0; i < digits.size(); ++i) s += (i ? "," : "") + std::to_string(digits[i]);
        names[static_cast<std::size_t>(e)] = s + ")";
    }
    g.set_element_names(std::move(names));
    return g;
}

} // namespace detail

inline FiniteGroup construct(const GroupDescriptor& d) {
    switch (d.family) {
        case Family::Cyclic: {
            FiniteGroup g = detail::construct_cyclic(d.params.at(0), "Z" + std::to_string(d.params.at(0)));
            return g;
        }
        case Family::DirectProduct: {
            std::string name;
            for (std::size_t i = 0; i < d.params.size(); ++i)
                name += (i ? "x" : "") + ("Z" + std::to_string(d.params[i]));
            return detail::construct_product(d.params, name);
        }
        case Family::ElementaryAbelian: {
            const int p = d.params.at(0), k = d.params.at(1);
            if (!is_prime(p) || k < 1) throw InvalidParameters("elementary abelian needs prime p, k>=1");
            std::vector<int> fs(static_cast<std::size_t>(k), p);
            return detail::construct_product(fs, "Z" + std::to_string(p) + "^" + std::to_string(k));
        }
        case Family::Dihedral: {
            const int n = d.params.at(0);
            if (n < 2) throw InvalidParameters("dihedral parameter must be >= 2");
            std::vector<int> act{1, n - 1}; // b a b^-1 = a^-1
            FiniteGroup g = detail::metacyclic_table(n, 2, act, "D" + std::to_string(2 * n));
            return g;
        }
        case Family::GeneralizedQuaternion: {
            const int nn = d.params.at(0);
            if (nn < 3 || nn > 9) throw InvalidParameters("generalized quaternion needs 3 <= n <= 9");
            const int m = 1 << (nn - 1), h = 1 << (nn - 2);
            const int n = 1 << nn;
            std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                                std::vector<int>(static_cast<std::size_t>(n)));
            auto idx = [m](int x, int y) { return x + m * y; };
            for (int x1 = 0; x1 < m; ++x1)
                for (int y1 = 0; y1 < 2; ++y1)
                    for (int x2 = 0; x2 < m; ++x2)
                        for (int y2 = 0; y2 < 2; ++y2) {
                            int x, y;
                            if (y1 == 0) {
                                x = (x1 + x2) % m;
                                y = y2;
                            } else if (y2 == 0) {
                                x = ((x1 - x2) % m + m) % m;
                                y = 1;
                            } else { // b^2 = a^h
                                x = ((x1 - x2 + h) % m + m) % m;
                                y = 0;
                            }
                            table[static_cast<std::size_t>(idx(x1, y1))]
                                 [static_cast<std::size_t>(idx(x2, y2))] = idx(x, y);
                        }
            FiniteGroup g = FiniteGroup::from_table(table, "Q" + std::to_string(n));
            std::vector<std::string> names(static_cast<std::size_t>(n));
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < 2; ++y)
                    names[static_cast<std::size_t>(idx(x, y))] = detail::two_gen_name(x, y);
            g.set_element_names(std::move(names));
            return g;
        }
        case Family::Modular: {
            const int p = d.params.at(0), alpha = d.params.at(1);
            if (!is_prime(p) || alpha < 3) throw InvalidParameters("modular group needs prime p, alpha>=3");
            int m = 1, r = 1;
            for (int i = 0; i < alpha - 1; ++i) m *= p;
            for (int i = 0; i < alpha - 2; ++i) r *= p;
            r += 1; // b a b^-1 = a^(p^(alpha-2)+1)
            std::vector<int> act(static_cast<std::size_t>(p));
            act[0] = 1;
            for (int y = 1; y < p; ++y)
                act[static_cast<std::size_t>(y)] =
                    static_cast<int>(static_cast<long long>(act[static_cast<std::size_t>(y - 1)]) * r % m);
            return detail::metacyclic_table(m, p, act,
                                            "M" + std::to_string(descriptor_order(d)));
        }
        case Family::MetacyclicSemidirect: {
            const int q = d.params.at(0), p = d.params.at(1), alpha = d.params.at(2), t = d.params.at(3);
            if (q < 2 || !is_prime(p) || alpha < 1 || t < 0 || t > alpha)
                throw InvalidParameters("semidirect needs q>=2, prime p, 1<=a, 0<=t<=a");
            if (std::gcd(q, p) != 1) throw InvalidParameters("semidirect needs gcd(q,p)=1");
            int pt = 1;
            for (int i = 0; i < t; ++i) pt *= p;
            int i_param = -1;
            for (int i = 1; i < q; ++i)
                if (std::gcd(i, q) == 1 && ord_mod(i, q) == pt) {
                    i_param = i;
                    break;
                }
            if (i_param < 0)
                throw InvalidParameters("no unit of order p^t=" + std::to_string(pt) + " mod q=" +
                                        std::to_string(q) + " (side-condition p^t | q-1 fails)");
            int bp = 1;
            for (int i = 0; i < alpha; ++i) bp *= p;
            std::vector<int> act(static_cast<std::size_t>(bp));
            act[0] = 1;
            for (int y = 1; y < bp; ++y)
                act[static_cast<std::size_t>(y)] = static_cast<int>(
                    static_cast<long long>(act[static_cast<std::size_t>(y - 1)]) * i_param % q);
            std::string name = "Z" + std::to_string(q) + ":" +
                               (t == 1 ? "" : std::to_string(t) + ":") + "Z" + std::to_string(bp);
            FiniteGroup g = detail::metacyclic_table(q, bp, act, name);
            return g;
        }
        case Family::PPSemidirectQ: {
            const int p = d.params.at(0), q = d.params.at(1), l = d.params.at(2);
            if (!is_prime(p) || q < 2 || l < 0 || l >= p)
                throw InvalidParameters("ppq needs prime p, q>=2, 0<=l<p");
            if (companion_matrix(l, p).order(p) != q)
                throw InvalidParameters("companion matrix [[0,-1],[1," + std::to_string(l) +
                                        "]] does not have order " + std::to_string(q) + " in GL_2(" +
                                        std::to_string(p) + ")");
            // conjugation c (a^x b^y) c^-1 has exponent vector [[0,1],[-1,l]] * (x,y)
            Mat2 action{0, 1, ((-1 % p) + p) % p, l % p};
            return matrix_semidirect(p, action, q,
                                     "(Z" + std::to_string(p) + "xZ" + std::to_string(p) + "):Z" +
                                         std::to_string(q));
        }
        case Family::PPSemidirectC4: {
            const int l = d.params.at(0);
            if (l < 0 || l >= 3) throw InvalidParameters("ppc4 needs 0<=l<3");
            const int o = companion_matrix(l, 3).order(3);
            if (4 % o != 0)
                throw InvalidParameters("companion matrix order " + std::to_string(o) +
                                        " does not divide 4");
            Mat2 action{0, 1, 2, l % 3};
            return matrix_semidirect(3, action, 4, "(Z3xZ3):Z4");
        }
        case Family::Symmetric: {
            const int n = d.params.at(0);
            if (n < 2 || n > 5) throw InvalidParameters("symmetric degree must be 2..5");
            std::vector<std::vector<int>> gens;
            std::vector<int> cyc(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
            std::vector<int> swp(static_cast<std::size_t>(n));
            std::iota(swp.begin(), swp.end(), 0);
            std::swap(swp[0], swp[1]);
            gens.push_back(cyc);
            gens.push_back(swp);
            return FiniteGroup::from_permutations(gens, n, "S" + std::to_string(n));
        }
        case Family::Alternating: {
            const int n = d.params.at(0);
            if (n < 3 || n > 5) throw InvalidParameters("alternating degree must be 3..5");
            std::vector<std::vector<int>> gens;
            for (int s = 0; s + 2 < n; ++s) {
                std::vector<int> g(static_cast<std::size_t>(n));
                std::iota(g.begin(), g.end(), 0);
                g[static_cast<std::size_t>(s)] = s + 1;
                g[static_cast<std::size_t>(s + 1)] = s + 2;
                g[static_cast<std::size_t>(s + 2)] = s;
                gens.push_back(std::move(g));
            }
            return FiniteGroup::from_permutations(gens, n, "A" + std::to_string(n));
        }
        case Family::Opaque: throw InvalidParameters("cannot construct an opaque descriptor");
    }
    throw InvalidParameters("unknown family");
}

/// Presentation strings for reports, matching the constructions above.
inline std::string descriptor_presentation(const GroupDescriptor& d) {
    switch (d.family) {
        case Family::Cyclic: return "<a | a^" + std::to_string(d.params[0]) + "=1>";
        case Family::Dihedral:
            return "<a,b | a^" + std::to_string(d.params[0]) + "=b^2=1, bab^-1=a^-1>";
        case Family::GeneralizedQuaternion: {
            const int m = 1 << (d.params[0] - 1), h = 1 << (d.params[0] - 2);
            return "<a,b | a^" + std::to_string(m) + "=1, b^2=a^" + std::to_string(h) +
                   ", bab^-1=a^-1>";
        }
        case Family::Modular: {
            int m = 1, r = 1;
            for (int i = 0; i < d.params[1] - 1; ++i) m *= d.params[0];
            for (int i = 0; i < d.params[1] - 2; ++i) r *= d.params[0];
            return "<a,b | a^" + std::to_string(m) + "=b^" + std::to_string(d.params[0]) +
                   "=1, bab^-1=a^" + std::to_string(r + 1) + ">";
        }
        case Family::MetacyclicSemidirect: {
            int bp = 1;
            for (int i = 0; i < d.params[2]; ++i) bp *= d.params[1];
            return "<a,b | a^" + std::to_string(d.params[0]) + "=b^" + std::to_string(bp) +
                   "=1, bab^-1=a^i, ord(i)=" + std::to_string(d.params[1]) + "^" +
                   std::to_string(d.params[3]) + ">";
        }
        case Family::PPSemidirectQ:
            return "<a,b,c | a^" + std::to_string(d.params[0]) + "=b^" + std::to_string(d.params[0]) +
                   "=c^" + std::to_string(d.params[1]) +
                   "=1, ab=ba, cac^-1=b^-1, cbc^-1=ab^" + std::to_string(d.params[2]) + ">";
        case Family::PPSemidirectC4:
            return "<a,b,c | a^3=b^3=c^4=1, ab=ba, cac^-1=b^-1, cbc^-1=ab^" +
                   std::to_string(d.params[0]) + ">";
        default: return "";
    }
}

// --- descriptor text parsing ------------------------------------------------------

/// Parses CLI descriptor syntax, e.g. "cyclic:64", "dihedral:9", "modular:2,3",
/// "semidirect:q=3,p=2,a=2,t=1", "ppq:p=5,q=3", "ppc4:l=0", "sym:4".
/// "file:path.json" is resolved by the caller.
inline GroupDescriptor parse_descriptor(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);

    auto split_ints = [&]() {
        std::vector<int> out;
        std::stringstream ss(tail);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw InvalidParameters("bad descriptor: " + text);
            out.push_back(std::stoi(tok));
        }
        return out;
    };
    auto keyed = [&](std::initializer_list<const char*> keys) {
        std::vector<int> out;
        std::stringstream ss(tail);
        std::string tok;
        std::map<std::string, int> kv;
        while (std::getline(ss, tok, ',')) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw InvalidParameters("bad descriptor: " + text);
            kv[tok.substr(0, eq)] = std::stoi(tok.substr(eq + 1));
        }
        for (const char* k : keys) {
            auto it = kv.find(k);
            if (it == kv.end())
                throw InvalidParameters("descriptor '" + text + "' is missing key '" + k + "'");
            out.push_back(it->second);
        }
        return out;
    };

    if (head == "cyclic") return cyclic_desc(split_ints().at(0));
    if (head == "product") return product_desc(split_ints());
    if (head == "elab") {
        auto v = split_ints();
        return elementary_abelian_desc(v.at(0), v.at(1));
    }
    if (head == "dihedral") return dihedral_desc(split_ints().at(0));
    if (head == "quat") return quaternion_desc(split_ints().at(0));
    if (head == "modular") {
        auto v = split_ints();
        return modular_desc(v.at(0), v.at(1));
    }
    if (head == "semidirect") {
        auto v = keyed({"q", "p", "a", "t"});
        return metacyclic_desc(v[0], v[1], v[2], v[3]);
    }
    if (head == "ppq") {
        std::vector<int> v;
        try {
            v = keyed({"p", "q", "l"});
        } catch (const InvalidParameters&) {
            v = keyed({"p", "q"});
            auto l = find_action_parameter(v[0], v[1]);
            if (!l)
                throw InvalidParameters("no companion matrix of order " + std::to_string(v[1]) +
                                        " exists in GL_2(" + std::to_string(v[0]) + ")");
            v.push_back(*l);
        }
        return ppq_desc(v[0], v[1], v[2]);
    }
    if (head == "ppc4") return ppc4_desc(keyed({"l"})[0]);
    if (head == "sym") return symmetric_desc(split_ints().at(0));
    if (head == "alt") return alternating_desc(split_ints().at(0));
    throw InvalidParameters("unknown descriptor family: " + text);
}

} // namespace permuta
