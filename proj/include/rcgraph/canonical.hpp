#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "rcgraph/graph.hpp"

namespace rcg {

/// Labeling-invariant key: equal for two graphs exactly when they are
/// isomorphic. bits holds the upper triangle of the canonically relabeled
/// adjacency matrix, row-major, MSB-first per word, so lexicographic word
/// comparison is lexicographic bitstring comparison.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> bits;

    auto operator<=>(const CanonicalForm&) const = default;
};

namespace detail {

/// Iterated neighborhood refinement. Colors are ranks of (color, sorted
/// neighbor-color multiset) signatures, so they depend only on the
/// isomorphism type of the colored graph.
inline void refine_colors(const Graph& g, std::vector<int>& colors) {
    int n = g.order();
    std::vector<std::vector<int>> sig(n);
    std::vector<int> order(n);
    for (;;) {
        for (int v = 0; v < n; ++v) {
            auto& s = sig[v];
            s.clear();
            s.push_back(colors[v]);
            for (int u : g.neighbors(v)) s.push_back(colors[u]);
            std::sort(s.begin() + 1, s.end());
        }
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a] < sig[b]; });
        int prev_distinct = 1 + *std::max_element(colors.begin(), colors.end());
        int c = -1;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++c;
            colors[order[i]] = c;
        }
        if (c + 1 == prev_distinct) return;
    }
}

inline std::vector<std::uint64_t> pack_relabeled(const Graph& g,
                                                 const std::vector<int>& pos_to_vertex) {
    int n = g.order();
    long nbits = long(n) * (n - 1) / 2;
    std::vector<std::uint64_t> out((nbits + 63) / 64, 0);
    long bit = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q, ++bit)
            if (g.adjacent(pos_to_vertex[p], pos_to_vertex[q]))
                out[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
    return out;
}

struct CanonSearch {
    const Graph& g;
    bool have_best = false;
    std::vector<std::uint64_t> best;
    std::vector<int> best_perm;            // vertex -> position
    std::vector<std::vector<int>> autos;   // discovered automorphisms

    explicit CanonSearch(const Graph& graph) : g(graph) {}

    void run() {
        std::vector<int> colors(g.order(), 0);
        if (g.order() == 0) return;
        refine_colors(g, colors);
        recurse(colors, {});
    }

    void recurse(const std::vector<int>& colors, std::vector<int> fixed) {
        int n = g.order();
        int ncolors = 1 + *std::max_element(colors.begin(), colors.end());
        if (ncolors == n) {
            leaf(colors);
            return;
        }
        // target cell: smallest non-singleton class, lowest color on ties
        std::vector<int> size(ncolors, 0);
        for (int c : colors) ++size[c];
        int target = -1;
        for (int c = 0; c < ncolors; ++c)
            if (size[c] > 1 && (target < 0 || size[c] < size[target]))
                target = c;
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (colors[v] == target) cell.push_back(v);

        std::vector<int> tried;
        for (int v : cell) {
            if (in_orbit_of_tried(v, tried, fixed)) continue;
            tried.push_back(v);
            std::vector<int> next(n);
            for (int u = 0; u < n; ++u) next[u] = 2 * colors[u] + (u == v ? 0 : 1);
            refine_colors(g, next);
            fixed.push_back(v);
            recurse(next, fixed);
            fixed.pop_back();
        }
    }

    void leaf(const std::vector<int>& colors) {
        int n = g.order();
        std::vector<int> pos_to_vertex(n);
        for (int v = 0; v < n; ++v) pos_to_vertex[colors[v]] = v;
        auto s = pack_relabeled(g, pos_to_vertex);
        if (!have_best || s < best) {
            best = std::move(s);
            best_perm = colors;
            have_best = true;
        } else if (s == best) {
            // two labelings with the same image compose to an automorphism
            std::vector<int> inv_best(n), sigma(n);
            for (int v = 0; v < n; ++v) inv_best[best_perm[v]] = v;
            for (int v = 0; v < n; ++v) sigma[v] = inv_best[colors[v]];
            autos.push_back(std::move(sigma));
        }
    }

    /// True if some product of discovered automorphisms fixing `fixed`
    /// pointwise maps an already-tried cell member to v; such branches
    /// repeat work already done.
    bool in_orbit_of_tried(int v, const std::vector<int>& tried,
                           const std::vector<int>& fixed) {
        if (tried.empty() || autos.empty()) return false;
        int n = g.order();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& sigma : autos) {
            bool ok = true;
            for (int f : fixed)
                if (sigma[f] != f) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int u = 0; u < n; ++u) {
                int a = find(u), b = find(sigma[u]);
                if (a != b) parent[a] = b;
            }
        }
        for (int u : tried)
            if (find(u) == find(v)) return true;
        return false;
    }
};

}  // namespace detail

/// Permutation vertex -> position realizing the canonical labeling.
inline std::vector<int> canonical_relabeling(const Graph& g) {
    detail::CanonSearch s(g);
    s.run();
    return s.best_perm;
}

inline CanonicalForm canonical_form(const Graph& g) {
    detail::CanonSearch s(g);
    s.run();
    return CanonicalForm{g.order(), std::move(s.best)};
}

/// The canonically relabeled copy of g; equal graphs for isomorphic inputs.
inline Graph canonical_copy(const Graph& g) {
    if (g.order() == 0) return g;
    return relabel(g, canonical_relabeling(g));
}

/// Canonical form and canonically relabeled copy from one search.
inline std::pair<CanonicalForm, Graph> canonicalize(const Graph& g) {
    if (g.order() == 0) return {CanonicalForm{0, {}}, g};
    detail::CanonSearch s(g);
    s.run();
    return {CanonicalForm{g.order(), s.best}, relabel(g, s.best_perm)};
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    if (g.degree_profile() != h.degree_profile()) return false;
    return canonical_form(g) == canonical_form(h);
}

namespace detail {

/// Complete backtracking search for an automorphism with sigma(0) = target.
/// Candidate filtering uses refinement colors rooted at 0 and at target;
/// any automorphism must map equal-color vertices to each other.
inline bool automorphism_onto(const Graph& g, int target) {
    int n = g.order();
    std::vector<int> ca(n), cb(n);
    for (int v = 0; v < n; ++v) {
        ca[v] = (v == 0) ? 0 : 1;
        cb[v] = (v == target) ? 0 : 1;
    }
    refine_colors(g, ca);
    refine_colors(g, cb);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(ca[a], a) < std::pair(ca[b], b);
    });
    std::vector<int> sigma(n, -1), used(n, 0);
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || cb[w] != ca[v]) continue;
            bool ok = true;
            for (int j = 0; j < idx; ++j) {
                int u = order[j];
                if (g.adjacent(u, v) != g.adjacent(sigma[u], w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            sigma[v] = w;
            used[w] = 1;
            if (self(self, idx + 1)) return true;
            used[w] = 0;
            sigma[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace detail

/// True iff the automorphism group is transitive on vertices. Exponential
/// search, refused above the limit.
inline bool is_vertex_transitive(const Graph& g, int limit = 16) {
    int n = g.order();
    if (n > limit)
        throw ValidationError("is_vertex_transitive: order " + std::to_string(n) +
                              " exceeds limit " + std::to_string(limit));
    if (n <= 1) return true;
    if (g.regularity() < 0) return false;
    for (int v = 1; v < n; ++v)
        if (!detail::automorphism_onto(g, v)) return false;
    return true;
}

}  // namespace rcg
