#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "permuta/errors.hpp"

namespace permuta {

/// Simple undirected graph with bitset adjacency rows and optional vertex
/// labels (subgroup descriptors when built from a lattice).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * words_, 0) {}

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        if (u == v) throw InvalidParameters("loops are not allowed");
        bit(u, v) = true;
        bit(v, u) = true;
    }
    void remove_edge(int u, int v) {
        bit(u, v) = false;
        bit(v, u) = false;
    }
    bool edge(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }

    int degree(int v) const {
        int d = 0;
        for (int w = 0; w < words_; ++w)
            d += std::popcount(adj_[static_cast<std::size_t>(v) * words_ + w]);
        return d;
    }
    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (edge(v, u)) out.push_back(u);
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) {
        if (static_cast<int>(l.size()) == n_) labels_ = std::move(l);
    }
    std::string label(int v) const {
        return labels_.empty() ? "v" + std::to_string(v) : labels_[static_cast<std::size_t>(v)];
    }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!edge(u, v)) g.add_edge(u, v);
        return g;
    }

    /// Subgraph induced by keeping the listed vertices (in the given order).
    Graph induced(const std::vector<int>& keep) const {
        Graph g(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        if (!labels_.empty()) {
            std::vector<std::string> l;
            for (int v : keep) l.push_back(labels_[static_cast<std::size_t>(v)]);
            g.set_labels(std::move(l));
        }
        return g;
    }

    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        for (int s = 0; s < n_; ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            std::vector<int> comp{s};
            seen[static_cast<std::size_t>(s)] = 1;
            for (std::size_t qi = 0; qi < comp.size(); ++qi)
                for (int u = 0; u < n_; ++u)
                    if (edge(comp[qi], u) && !seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = 1;
                        comp.push_back(u);
                    }
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool connected() const { return n_ <= 1 || components().size() == 1; }

    /// Shortest cycle length, or 0 if acyclic. BFS from every vertex.
    int girth() const {
        int best = 0;
        std::vector<int> dist(static_cast<std::size_t>(n_)), parent(static_cast<std::size_t>(n_));
        for (int s = 0; s < n_; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            std::fill(parent.begin(), parent.end(), -1);
            std::vector<int> queue{s};
            dist[static_cast<std::size_t>(s)] = 0;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const int v = queue[qi];
                for (int u = 0; u < n_; ++u) {
                    if (!edge(v, u)) continue;
                    if (dist[static_cast<std::size_t>(u)] < 0) {
                        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                        parent[static_cast<std::size_t>(u)] = v;
                        queue.push_back(u);
                    } else if (u != parent[static_cast<std::size_t>(v)]) {
                        const int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(u)] + 1;
                        if (best == 0 || len < best) best = len;
                    }
                }
            }
        }
        return best;
    }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    struct BitProxy {
        std::uint64_t& word;
        std::uint64_t mask;
        BitProxy& operator=(bool b) {
            if (b)
                word |= mask;
            else
                word &= ~mask;
            return *this;
        }
    };
    BitProxy bit(int u, int v) {
        return BitProxy{adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)],
                        std::uint64_t{1} << (v & 63)};
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> labels_;
};

// --- constructor algebra --------------------------------------------------------

/// Expression tree mirroring the join/union/complement notation used for the
/// closed-form graph identities. Path(n) has n edges and n+1 vertices; Cycle(n)
/// has n edges and n vertices.
class GraphExpr {
    struct Node;
    using Ptr = std::shared_ptr<const Node>;
    struct Node {
        enum Kind { Complete, Empty, CompleteBipartite, Path, Cycle, Join, Union, Copies, Complement } kind;
        int a = 0, b = 0;
        Ptr left, right;
    };
    Ptr node_;
    explicit GraphExpr(Ptr n) : node_(std::move(n)) {}

public:
    static GraphExpr complete(int n) {
        require(n >= 1, "complete graph needs n >= 1");
        return GraphExpr(std::make_shared<Node>(Node{Node::Complete, n, 0, nullptr, nullptr}));
    }
    static GraphExpr empty(int n) {
        require(n >= 1, "empty graph needs n >= 1");
        return GraphExpr(std::make_shared<Node>(Node{Node::Empty, n, 0, nullptr, nullptr}));
    }
    static GraphExpr complete_bipartite(int m, int n) {
        require(m >= 1 && n >= 1, "complete bipartite needs m,n >= 1");
        return GraphExpr(std::make_shared<Node>(Node{Node::CompleteBipartite, m, n, nullptr, nullptr}));
    }
    static GraphExpr path(int length) {
        require(length >= 1, "path length must be positive");
        return GraphExpr(std::make_shared<Node>(Node{Node::Path, length, 0, nullptr, nullptr}));
    }
    static GraphExpr cycle(int length) {
        require(length >= 3, "cycle length must be >= 3");
        return GraphExpr(std::make_shared<Node>(Node{Node::Cycle, length, 0, nullptr, nullptr}));
    }
    static GraphExpr join(GraphExpr a, GraphExpr b) {
        return GraphExpr(std::make_shared<Node>(Node{Node::Join, 0, 0, a.node_, b.node_}));
    }
    static GraphExpr disjoint_union(GraphExpr a, GraphExpr b) {
        return GraphExpr(std::make_shared<Node>(Node{Node::Union, 0, 0, a.node_, b.node_}));
    }
    static GraphExpr copies(int k, GraphExpr a) {
        require(k >= 1, "copy count must be positive");
        return GraphExpr(std::make_shared<Node>(Node{Node::Copies, k, 0, a.node_, nullptr}));
    }
    static GraphExpr complement(GraphExpr a) {
        return GraphExpr(std::make_shared<Node>(Node{Node::Complement, 0, 0, a.node_, nullptr}));
    }

    /// Builds the described graph with deterministic vertex numbering
    /// (left subtree first).
    Graph build() const { return build_node(node_); }

    std::string to_string() const { return str_node(node_); }

private:
    static void require(bool ok, const char* msg) {
        if (!ok) throw InvalidParameters(msg);
    }

    static Graph build_node(const Ptr& n) {
        switch (n->kind) {
            case Node::Complete: {
                Graph g(n->a);
                for (int u = 0; u < n->a; ++u)
                    for (int v = u + 1; v < n->a; ++v) g.add_edge(u, v);
                return g;
            }
            case Node::Empty: return Graph(n->a);
            case Node::CompleteBipartite: {
                Graph g(n->a + n->b);
                for (int u = 0; u < n->a; ++u)
                    for (int v = 0; v < n->b; ++v) g.add_edge(u, n->a + v);
                return g;
            }
            case Node::Path: {
                Graph g(n->a + 1);
                for (int i = 0; i < n->a; ++i) g.add_edge(i, i + 1);
                return g;
            }
            case Node::Cycle: {
                Graph g(n->a);
                for (int i = 0; i < n->a; ++i) g.add_edge(i, (i + 1) % n->a);
                return g;
            }
            case Node::Join:
            case Node::Union: {
                const Graph a = build_node(n->left);
                const Graph b = build_node(n->right);
                Graph g(a.vertex_count() + b.vertex_count());
                for (auto [u, v] : a.edges()) g.add_edge(u, v);
                for (auto [u, v] : b.edges()) g.add_edge(a.vertex_count() + u, a.vertex_count() + v);
                if (n->kind == Node::Join)
                    for (int u = 0; u < a.vertex_count(); ++u)
                        for (int v = 0; v < b.vertex_count(); ++v)
                            g.add_edge(u, a.vertex_count() + v);
                return g;
            }
            case Node::Copies: {
                const Graph a = build_node(n->left);
                Graph g(n->a * a.vertex_count());
                for (int c = 0; c < n->a; ++c)
                    for (auto [u, v] : a.edges())
                        g.add_edge(c * a.vertex_count() + u, c * a.vertex_count() + v);
                return g;
            }
            case Node::Complement: return build_node(n->left).complement();
        }
        throw Error("unreachable");
    }

    static std::string str_node(const Ptr& n) {
        switch (n->kind) {
            case Node::Complete: return "K" + std::to_string(n->a);
            case Node::Empty: return "~K" + std::to_string(n->a);
            case Node::CompleteBipartite:
                return "K{" + std::to_string(n->a) + "," + std::to_string(n->b) + "}";
            case Node::Path: return "P" + std::to_string(n->a);
            case Node::Cycle: return "C" + std::to_string(n->a);
            case Node::Join: return "(" + str_node(n->left) + "+" + str_node(n->right) + ")";
            case Node::Union: return "(" + str_node(n->left) + " u " + str_node(n->right) + ")";
            case Node::Copies: return std::to_string(n->a) + str_node(n->left);
            case Node::Complement: return "compl(" + str_node(n->left) + ")";
        }
        return "?";
    }
};

} // namespace permuta
