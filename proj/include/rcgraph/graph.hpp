#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation refuses an input (bad parameters, violated
/// preconditions, size limits).
struct ValidationError : Error {
    using Error::Error;
};

namespace detail {

inline int popcount64(std::uint64_t w) { return __builtin_popcountll(w); }

/// Runtime-sized bitset over uint64 words. Just enough for adjacency rows
/// and solver working sets; graphs here stay well under a few hundred
/// vertices.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int nbits) : words_((nbits + 63) / 64, 0) {}

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += popcount64(w);
        return c;
    }

    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t i) const { return words_[i]; }
    std::uint64_t& word(std::size_t i) { return words_[i]; }

    /// Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<int>(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    bool operator==(const BitRow&) const = default;

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace detail

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept
/// both as bit rows (for solver set operations) and as sorted neighbor lists.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }

    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

    std::span<const int> neighbors(int v) const { return nbrs_[v]; }

    const detail::BitRow& row(int v) const { return rows_[v]; }

    int edge_count() const { return edges_; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(edges_);
        for (int u = 0; u < n_; ++u)
            for (int v : nbrs_[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    /// Degrees sorted ascending.
    std::vector<int> degree_profile() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    /// r if every vertex has degree r, -1 otherwise. K_1 is 0-regular.
    int regularity() const {
        if (n_ == 0) return 0;
        int r = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != r) return -1;
        return r;
    }

    bool is_regular(int r) const { return regularity() == r; }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }

private:
    friend class GraphBuilder;
    int n_ = 0;
    int edges_ = 0;
    std::vector<detail::BitRow> rows_;
    std::vector<std::vector<int>> nbrs_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n) : n_(checked_order(n)), rows_(n_, detail::BitRow(n_)) {}

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check(u), check(v);
        return rows_[u].test(v);
    }

    GraphBuilder& add_edge(int u, int v) {
        check(u), check(v);
        if (u == v) throw ValidationError("self-loop rejected");
        rows_[u].set(v);
        rows_[v].set(u);
        return *this;
    }

    GraphBuilder& remove_edge(int u, int v) {
        check(u), check(v);
        rows_[u].reset(v);
        rows_[v].reset(u);
        return *this;
    }

    Graph build() const {
        Graph g;
        g.n_ = n_;
        g.rows_ = rows_;
        g.nbrs_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            rows_[v].for_each([&](int u) { g.nbrs_[v].push_back(u); });
            g.edges_ += static_cast<int>(g.nbrs_[v].size());
        }
        g.edges_ /= 2;
        return g;
    }

private:
    static int checked_order(int n) {
        if (n < 0) throw ValidationError("graph order must be nonnegative");
        return n;
    }
    void check(int v) const {
        if (v < 0 || v >= n_) throw ValidationError("vertex out of range");
    }
    int n_;
    std::vector<detail::BitRow> rows_;
};

inline Graph edgeless(int n) { return GraphBuilder(n).build(); }

inline Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

inline Graph cycle(int n) {
    if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

inline Graph complete_bipartite(int a, int b) {
    GraphBuilder g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g.build();
}

/// Kneser graph K(5,2) labeling: vertices 0..4 outer C_5, 5..9 inner
/// pentagram, spokes i -- i+5.
inline Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    return b.build();
}

inline Graph complement(const Graph& g) {
    int n = g.order();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

inline Graph disjoint_union(const std::vector<Graph>& gs) {
    if (gs.empty()) throw ValidationError("disjoint_union of empty list");
    int n = 0;
    for (const auto& g : gs) n += g.order();
    GraphBuilder b(n);
    int off = 0;
    for (const auto& g : gs) {
        for (auto [u, v] : g.edges()) b.add_edge(off + u, off + v);
        off += g.order();
    }
    return b.build();
}

/// Vertex (u,u') of g [] h is labeled u*h.order()+u'. Edges move along one
/// coordinate at a time.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.order() < 1 || h.order() < 1)
        throw ValidationError("cartesian_product needs nonempty factors");
    int m = h.order();
    GraphBuilder b(g.order() * m);
    for (int u = 0; u < g.order(); ++u)
        for (int x = 0; x < m; ++x) {
            for (int y : h.neighbors(x))
                if (x < y) b.add_edge(u * m + x, u * m + y);
            for (int v : g.neighbors(u))
                if (u < v) b.add_edge(u * m + x, v * m + x);
        }
    return b.build();
}

/// New graph with vertex v of g placed at position perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw ValidationError("relabel permutation has wrong length");
    std::vector<char> hit(n, 0);
    for (int p : perm) {
        if (p < 0 || p >= n || hit[p])
            throw ValidationError("relabel argument is not a permutation");
        hit[p] = 1;
    }
    GraphBuilder b(n);
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return b.build();
}

}  // namespace rcg
