#pragma once

#include <numeric>
#include <vector>

#include "rcgraph/graph.hpp"

namespace rcg {

/// Balanced complete multipartite layout: n = a*k + b, the b parts of size
/// a+1 laid out first, then k-b parts of size a, all contiguous.
struct TuranSpec {
    int n = 0;
    int k = 0;

    TuranSpec(int n_, int k_) : n(n_), k(k_) {
        if (k < 1 || k > n)
            throw ValidationError("turan requires 1 <= k <= n");
    }

    int small_part() const { return n / k; }  // a
    int large_count() const { return n % k; }  // b

    std::vector<std::vector<int>> parts() const {
        int a = small_part(), b = large_count();
        std::vector<std::vector<int>> out;
        int next = 0;
        for (int i = 0; i < k; ++i) {
            int size = (i < b) ? a + 1 : a;
            std::vector<int> part(size);
            std::iota(part.begin(), part.end(), next);
            next += size;
            out.push_back(std::move(part));
        }
        return out;
    }
};

namespace detail {

inline Graph complete_multipartite(const std::vector<std::vector<int>>& parts,
                                   int n) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u : parts[i])
                for (int v : parts[j]) b.add_edge(u, v);
    return b.build();
}

}  // namespace detail

inline Graph turan(int n, int k) {
    TuranSpec spec(n, k);
    return detail::complete_multipartite(spec.parts(), n);
}

/// Complement of C_n. (n-3)-regular; chromatic number ceil(n/2) for n >= 6.
inline Graph antihole(int n) {
    if (n < 4) throw ValidationError("antihole requires n >= 4");
    return complement(cycle(n));
}

/// Multiset of cycle lengths, each >= 3.
struct CycleUnionSpec {
    std::vector<int> lengths;

    explicit CycleUnionSpec(std::vector<int> ls) : lengths(std::move(ls)) {
        for (int m : lengths)
            if (m < 3) throw ValidationError("cycle length below 3");
    }

    int total_order() const {
        return std::accumulate(lengths.begin(), lengths.end(), 0);
    }
};

/// Complement of the disjoint union of the given cycles: order sum(m_i),
/// regularity n-3.
inline Graph cycle_union_complement(const CycleUnionSpec& spec) {
    std::vector<Graph> cs;
    for (int m : spec.lengths) cs.push_back(cycle(m));
    return complement(disjoint_union(cs));
}

/// Two copies of T_{n,chi} joined by a matching on the degree-deficient
/// vertices (those in the oversized parts), i-th paired with i-th. Requires
/// n = a*chi + b with 0 < b < chi so deficient vertices exist.
inline Graph doubled_turan(int n, int chi) {
    TuranSpec spec(n, chi);
    int b = spec.large_count();
    if (b == 0)
        throw ValidationError(
            "doubled_turan undefined when chi divides n (no deficient vertices)");
    Graph t = turan(n, chi);
    GraphBuilder g(2 * n);
    for (auto [u, v] : t.edges()) {
        g.add_edge(u, v);
        g.add_edge(n + u, n + v);
    }
    // deficient vertices are exactly 0..b*(a+1)-1, the large parts
    int deficient = b * (spec.small_part() + 1);
    for (int v = 0; v < deficient; ++v) g.add_edge(v, n + v);
    return g.build();
}

/// T*_{n,chi}: Turan graph with the chi-b parts of size a laid out first
/// (then the b parts of size a+1), minus matchings that drop every small-part
/// vertex's degree by one. Regularity a(chi-1)+b-1.
inline Graph t_star(int n, int chi) {
    if (chi < 3) throw ValidationError("t_star requires chi >= 3");
    if (n < chi) throw ValidationError("t_star requires n >= chi");
    int a = n / chi, b = n % chi;
    if (a < 2) throw ValidationError("t_star requires part size a >= 2");
    int small = chi - b;
    bool odd_case = (small % 2 != 0);
    if (odd_case && (small < 3 || a % 2 != 0))
        throw ValidationError(
            "t_star parity: need chi-b even, or chi-b odd >= 3 with a even");

    // small parts first, each of size a; then b parts of size a+1
    std::vector<std::vector<int>> parts;
    int next = 0;
    for (int i = 0; i < chi; ++i) {
        int size = (i < small) ? a : a + 1;
        std::vector<int> part(size);
        std::iota(part.begin(), part.end(), next);
        next += size;
        parts.push_back(std::move(part));
    }
    Graph base = detail::complete_multipartite(parts, n);
    GraphBuilder g(n);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);

    auto drop_matching = [&](const std::vector<int>& xs, const std::vector<int>& ys) {
        for (std::size_t j = 0; j < xs.size(); ++j) g.remove_edge(xs[j], ys[j]);
    };
    if (!odd_case) {
        for (int i = 0; i + 1 < small; i += 2) drop_matching(parts[i], parts[i + 1]);
    } else {
        for (int i = 3; i + 1 < small; i += 2) drop_matching(parts[i], parts[i + 1]);
        // three half-part matchings among parts 0,1,2: first half of part i
        // to second half of part i+1 (cyclically)
        int h = a / 2;
        for (int i = 0; i < 3; ++i) {
            const auto& src = parts[i];
            const auto& dst = parts[(i + 1) % 3];
            for (int j = 0; j < h; ++j) g.remove_edge(src[j], dst[h + j]);
        }
    }
    return g.build();
}

/// G_{a,c,t}: T_{at,t} with the non-matching edges between the first c
/// vertices of parts 1 and 2 removed and both c-sets turned into cliques.
/// a(t-1)-regular of order a*t, chromatic number t+c-1.
inline Graph g_act(int a, int c, int t) {
    if (t < 2) throw ValidationError("g_act requires t >= 2");
    if (a < 2) throw ValidationError("g_act requires a >= 2");
    if (c < 1 || c >= a) throw ValidationError("g_act requires 1 <= c < a");
    TuranSpec spec(a * t, t);
    auto parts = spec.parts();
    Graph base = detail::complete_multipartite(parts, a * t);
    GraphBuilder g(a * t);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            if (i != j) g.remove_edge(parts[0][i], parts[1][j]);
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) {
            g.add_edge(parts[0][i], parts[0][j]);
            g.add_edge(parts[1][i], parts[1][j]);
        }
    return g.build();
}

/// T**_{16,3}: T_{16,3} with parts U, V of size 5 and W of size 6, minus a
/// fixed list of 13 edges. 9-regular on 16 vertices, chromatic number 3.
/// Labeling: u1..u5 = 0..4, v1..v5 = 5..9, w1..w6 = 10..15.
inline Graph t_double_star_16_3() {
    std::vector<std::vector<int>> parts = {
        {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}, {10, 11, 12, 13, 14, 15}};
    Graph base = detail::complete_multipartite(parts, 16);
    GraphBuilder g(16);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    auto u = [](int i) { return i - 1; };
    auto v = [](int i) { return 4 + i; };
    auto w = [](int i) { return 9 + i; };
    const std::pair<int, int> removed[] = {
        {w(1), v(1)}, {v(1), u(1)}, {u(1), w(4)},
        {w(2), v(2)}, {v(2), u(2)}, {u(2), w(5)},
        {w(3), v(3)}, {v(3), u(3)}, {u(3), w(6)},
        {u(4), v(4)}, {v(4), u(5)}, {u(5), v(5)}, {v(5), u(4)}};
    for (auto [x, y] : removed) g.remove_edge(x, y);
    return g.build();
}

/// The existence construction: T_{a*chi,chi} [] K_{b+1} where
/// r = a(chi-1) + b, a >= 1, 0 <= b < chi. r-regular, order a*chi*(b+1),
/// chromatic number chi.
inline Graph theorem1_graph(int r, int chi) {
    if (chi < 2 || chi > r + 1)
        throw ValidationError("theorem1_graph requires 2 <= chi <= r+1");
    int b = r % (chi - 1);
    int a = (r - b) / (chi - 1);
    return cartesian_product(turan(a * chi, chi), complete(b + 1));
}

/// C_n [] K_2.
inline Graph prism(int n) { return cartesian_product(cycle(n), complete(2)); }

}  // namespace rcg
