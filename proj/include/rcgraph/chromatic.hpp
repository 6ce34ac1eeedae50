#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "rcgraph/graph.hpp"

namespace rcg {

/// Proper vertex coloring, colors normalized to 0..k-1 with every color used.
struct Coloring {
    std::vector<int> colors;
    int k = 0;
};

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.order()) return false;
    std::vector<char> seen(std::max(c.k, 1), 0);
    for (int v = 0; v < g.order(); ++v) {
        if (c.colors[v] < 0 || c.colors[v] >= c.k) return false;
        seen[c.colors[v]] = 1;
        for (int u : g.neighbors(v))
            if (c.colors[u] == c.colors[v]) return false;
    }
    for (int i = 0; i < c.k; ++i)
        if (!seen[i]) return false;
    return g.order() > 0 || c.k == 0;
}

namespace detail {

inline Coloring normalize_coloring(std::vector<int> colors) {
    int next = 0;
    std::vector<int> remap;
    for (int& c : colors) {
        while (static_cast<int>(remap.size()) <= c) remap.push_back(-1);
        if (remap[c] < 0) remap[c] = next++;
        c = remap[c];
    }
    return Coloring{std::move(colors), next};
}

}  // namespace detail

/// DSATUR greedy coloring. Ties: highest saturation, then highest degree,
/// then lowest vertex index. Deterministic upper bound for chi.
inline Coloring greedy_dsatur(const Graph& g) {
    int n = g.order();
    std::vector<int> colors(n, -1);
    std::vector<detail::BitRow> nbr_colors(n, detail::BitRow(n + 1));
    for (int step = 0; step < n; ++step) {
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colors[v] >= 0) continue;
            int sat = nbr_colors[v].count();
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        int c = 0;
        while (nbr_colors[pick].test(c)) ++c;
        colors[pick] = c;
        for (int u : g.neighbors(pick)) nbr_colors[u].set(c);
    }
    return detail::normalize_coloring(std::move(colors));
}

/// Maximum clique by branch and bound with a greedy-coloring bound.
inline std::vector<int> max_clique(const Graph& g) {
    int n = g.order();
    if (n == 0) return {};
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(g.degree(a), b) > std::pair(g.degree(b), a);
    });
    std::vector<int> best, current;

    auto expand = [&](auto&& self, const std::vector<int>& cand) -> void {
        // greedy color classes over cand, in order, as the bound
        std::vector<int> colno(cand.size());
        std::vector<std::vector<int>> classes;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int u : classes[c])
                    if (g.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
            colno[i] = static_cast<int>(c) + 1;
        }
        // re-sort candidates by color number ascending, stable
        std::vector<std::pair<int, int>> by_color;
        for (std::size_t i = 0; i < cand.size(); ++i)
            by_color.emplace_back(colno[i], cand[i]);
        std::stable_sort(by_color.begin(), by_color.end(),
                         [](auto& a, auto& b) { return a.first < b.first; });
        for (int i = static_cast<int>(by_color.size()) - 1; i >= 0; --i) {
            auto [bound, v] = by_color[i];
            if (current.size() + bound <= best.size()) return;
            current.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g.adjacent(by_color[j].second, v)) next.push_back(by_color[j].second);
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else {
                self(self, next);
            }
            current.pop_back();
        }
    };
    expand(expand, order);
    std::sort(best.begin(), best.end());
    return best;
}

inline std::optional<Coloring> two_coloring(const Graph& g) {
    int n = g.order();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.neighbors(v)) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    q.push_back(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return detail::normalize_coloring(std::move(side));
}

/// Exact k-colorability. Complete branch and bound: maximum-clique vertices
/// are pre-colored pairwise distinct, then most-constrained-vertex search
/// with new-color symmetry breaking.
inline std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
    int n = g.order();
    if (k < 0) throw ValidationError("negative color count");
    if (n == 0) return Coloring{{}, 0};
    if (g.edge_count() == 0) {
        if (k < 1) return std::nullopt;
        return Coloring{std::vector<int>(n, 0), 1};
    }
    if (k <= 1) return std::nullopt;
    if (k == 2) return two_coloring(g);
    if (k >= n) {
        std::vector<int> ident(n);
        std::iota(ident.begin(), ident.end(), 0);
        return detail::normalize_coloring(std::move(ident));
    }
    auto clique = max_clique(g);
    if (static_cast<int>(clique.size()) > k) return std::nullopt;
    if (k > 64) throw ValidationError("is_k_colorable supports k <= 64");

    const std::uint64_t full = (k == 64) ? ~std::uint64_t{0}
                                         : ((std::uint64_t{1} << k) - 1);
    std::vector<int> colors(n, -1);
    std::vector<std::uint64_t> forbidden(n, 0);
    int max_used = -1;
    for (std::size_t i = 0; i < clique.size(); ++i) {
        int v = clique[i];
        colors[v] = static_cast<int>(i);
        max_used = std::max<int>(max_used, colors[v]);
    }
    for (int v = 0; v < n; ++v)
        if (colors[v] >= 0)
            for (int u : g.neighbors(v)) forbidden[u] |= std::uint64_t{1} << colors[v];

    int uncolored = n - static_cast<int>(clique.size());
    auto rec = [&](auto&& self, int remaining, int used_hi) -> bool {
        if (remaining == 0) return true;
        int pick = -1, best_avail = k + 1;
        for (int v = 0; v < n; ++v) {
            if (colors[v] >= 0) continue;
            int avail = detail::popcount64(full & ~forbidden[v]);
            if (avail == 0) return false;
            if (avail < best_avail ||
                (avail == best_avail && g.degree(v) > g.degree(pick))) {
                best_avail = avail;
                pick = v;
            }
        }
        std::uint64_t cand = full & ~forbidden[pick];
        // at most one color index beyond those already in use
        std::uint64_t cap = (used_hi + 2 >= 64)
                                ? ~std::uint64_t{0}
                                : ((std::uint64_t{1} << (used_hi + 2)) - 1);
        cand &= cap;
        while (cand) {
            int c = __builtin_ctzll(cand);
            cand &= cand - 1;
            colors[pick] = c;
            std::vector<int> bumped;
            for (int u : g.neighbors(pick))
                if (!(forbidden[u] >> c & 1)) {
                    forbidden[u] |= std::uint64_t{1} << c;
                    bumped.push_back(u);
                }
            if (self(self, remaining - 1, std::max(used_hi, c))) return true;
            for (int u : bumped) forbidden[u] &= ~(std::uint64_t{1} << c);
            colors[pick] = -1;
        }
        return false;
    };
    if (!rec(rec, uncolored, max_used)) return std::nullopt;
    return detail::normalize_coloring(std::move(colors));
}

/// Exact chromatic number with certificates: a chi-coloring, a maximum
/// clique, and (when the clique bound is not tight) the color count whose
/// infeasibility was refuted by complete search.
struct ChromaticResult {
    int chi = 0;
    Coloring coloring;
    std::vector<int> clique;
    int refuted_k = -1;  // -1: optimality followed from the lower bound alone
};

inline ChromaticResult chromatic_number(const Graph& g) {
    ChromaticResult res;
    int n = g.order();
    if (n == 0) return res;
    res.clique = max_clique(g);
    if (g.edge_count() == 0) {
        res.chi = 1;
        res.coloring = Coloring{std::vector<int>(n, 0), 1};
        return res;
    }
    if (auto two = two_coloring(g)) {
        res.chi = 2;
        res.coloring = *two;
        return res;
    }
    int lb = std::max<int>(3, static_cast<int>(res.clique.size()));
    res.coloring = greedy_dsatur(g);
    int k = res.coloring.k - 1;
    while (k >= lb) {
        auto probe = is_k_colorable(g, k);
        if (!probe) {
            res.refuted_k = k;
            break;
        }
        res.coloring = *probe;
        k = res.coloring.k - 1;
    }
    res.chi = res.coloring.k;
    return res;
}

inline std::vector<int> max_independent_set(const Graph& g) {
    return max_clique(complement(g));
}

inline int independence_number(const Graph& g) {
    return static_cast<int>(max_independent_set(g).size());
}

/// Closed form for the chromatic number of the complement of a union of
/// cycles: triangles contribute 1 each, a cycle of length m >= 4 contributes
/// ceil(m/2).
inline int predicted_chi_cycle_union(const std::vector<int>& lengths) {
    int chi = 0;
    for (int m : lengths) {
        if (m < 3) throw ValidationError("cycle length below 3");
        chi += (m == 3) ? 1 : (m + 1) / 2;
    }
    return chi;
}

/// ceil((omega + 1 + Delta) / 2), the conjectured chromatic upper bound.
inline int reed_value_from(int omega, int delta_max) {
    return (omega + 1 + delta_max + 1) / 2;
}

inline int reed_value(const Graph& g) {
    auto profile = g.degree_profile();
    int delta = profile.empty() ? 0 : profile.back();
    return reed_value_from(static_cast<int>(max_clique(g).size()), delta);
}

struct InvariantReport {
    int chi = 0;
    Coloring coloring;
    int omega = 0;
    std::vector<int> clique;
    int alpha = 0;
    std::vector<int> independent_set;
    int delta_max = 0;
    int reed_value = 0;
};

inline InvariantReport compute_invariants(const Graph& g) {
    InvariantReport rep;
    auto cr = chromatic_number(g);
    rep.chi = cr.chi;
    rep.coloring = std::move(cr.coloring);
    rep.clique = std::move(cr.clique);
    rep.omega = static_cast<int>(rep.clique.size());
    rep.independent_set = max_independent_set(g);
    rep.alpha = static_cast<int>(rep.independent_set.size());
    auto prof = g.degree_profile();
    rep.delta_max = prof.empty() ? 0 : prof.back();
    rep.reed_value = reed_value_from(rep.omega, rep.delta_max);
    return rep;
}

}  // namespace rcg
