#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "rcgraph/canonical.hpp"
#include "rcgraph/graph.hpp"

namespace rcg {

namespace detail {

/// Vertex-by-vertex extension for r-regular graphs on n <= 32 vertices.
/// Row i picks the neighbors of vertex i among i+1..n-1. Vertices with equal
/// adjacency history toward completed rows are interchangeable, so each
/// choice takes a prefix of every equal-history block; combined with final
/// canonical-form deduplication this yields exactly one representative per
/// isomorphism class.
struct RegularGen {
    int n, r;
    int stop_row;  // sink fires when this row is reached
    std::vector<std::uint32_t> adj;
    std::vector<int> deg;

    RegularGen(int n_, int r_) : n(n_), r(r_), stop_row(n_), adj(n_, 0), deg(n_, 0) {}

    /// Erdos-Gallai feasibility of the residual degree deficits of vertices
    /// past `row` (remaining edges may only be placed among them).
    bool residual_feasible(int row) const {
        std::vector<int> d;
        int sum = 0;
        for (int j = row + 1; j < n; ++j) {
            d.push_back(r - deg[j]);
            sum += r - deg[j];
        }
        if (sum % 2 != 0) return false;
        std::sort(d.begin(), d.end(), std::greater<int>());
        int m = static_cast<int>(d.size());
        if (m > 0 && d[0] > m - 1) return false;
        long prefix = 0;
        for (int k = 1; k <= m; ++k) {
            prefix += d[k - 1];
            long rhs = static_cast<long>(k) * (k - 1);
            for (int i = k; i < m; ++i) rhs += std::min(d[i], k);
            if (prefix > rhs) return false;
        }
        return true;
    }

    template <typename Sink>
    void run(int row, Sink&& sink) {
        if (row == stop_row) {
            sink(*this);
            return;
        }
        int need = r - deg[row];
        if (need < 0) return;
        if (need == 0) {
            if (residual_feasible(row)) run(row + 1, sink);
            return;
        }
        std::uint32_t done_mask = (std::uint32_t{1} << row) - 1;
        std::map<std::uint32_t, std::vector<int>> blocks;
        for (int j = row + 1; j < n; ++j)
            if (deg[j] < r) blocks[adj[j] & done_mask].push_back(j);
        std::vector<const std::vector<int>*> bl;
        bl.reserve(blocks.size());
        for (auto& [h, vs] : blocks) bl.push_back(&vs);
        choose(row, need, 0, bl, sink);
    }

    template <typename Sink>
    void choose(int row, int need, std::size_t bi,
                const std::vector<const std::vector<int>*>& bl, Sink&& sink) {
        if (need == 0) {
            if (residual_feasible(row)) run(row + 1, sink);
            return;
        }
        if (bi == bl.size()) return;
        int slack = 0;
        for (std::size_t k = bi; k < bl.size(); ++k)
            slack += static_cast<int>(bl[k]->size());
        if (slack < need) return;
        const auto& block = *bl[bi];
        int tmax = std::min<int>(need, static_cast<int>(block.size()));
        for (int t = 0; t <= tmax; ++t) {
            if (t > 0) link(row, block[t - 1]);
            choose(row, need - t, bi + 1, bl, sink);
        }
        for (int s = 0; s < tmax; ++s) unlink(row, block[s]);
    }

    void link(int u, int v) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
        ++deg[u];
        ++deg[v];
    }

    void unlink(int u, int v) {
        adj[u] &= ~(std::uint32_t{1} << v);
        adj[v] &= ~(std::uint32_t{1} << u);
        --deg[u];
        --deg[v];
    }

    Graph to_graph() const {
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u] >> v & 1) b.add_edge(u, v);
        return b.build();
    }
};

inline void collect_regular(int n, int r, int jobs,
                            std::map<CanonicalForm, Graph>& out) {
    auto complete_into = [](RegularGen gen, int from_row,
                            std::map<CanonicalForm, Graph>& dest) {
        gen.stop_row = gen.n;
        gen.run(from_row, [&](const RegularGen& s) {
            dest.insert(canonicalize(s.to_graph()));
        });
    };

    if (jobs <= 1 || n < 4) {
        complete_into(RegularGen(n, r), 0, out);
        return;
    }
    // fan out over partial states with the first few rows committed
    std::vector<RegularGen> frontier{RegularGen(n, r)};
    int depth = 0;
    while (depth < std::min(4, n - 1) &&
           static_cast<int>(frontier.size()) < 16 * jobs) {
        std::vector<RegularGen> next;
        for (auto& st : frontier) {
            st.stop_row = depth + 1;
            st.run(depth, [&](const RegularGen& s) { next.push_back(s); });
        }
        frontier = std::move(next);
        ++depth;
        if (frontier.empty()) return;
    }
    std::atomic<std::size_t> cursor{0};
    std::mutex merge_mu;
    auto worker = [&] {
        std::map<CanonicalForm, Graph> local;
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= frontier.size()) break;
            complete_into(frontier[i], depth, local);
        }
        std::lock_guard lock(merge_mu);
        out.merge(local);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace detail

/// All r-regular simple graphs on n vertices, one canonical representative
/// per isomorphism class, sorted by canonical form. When r > (n-1)/2 the
/// enumeration runs on (n-1-r)-regular complements.
inline std::vector<Graph> enumerate_regular(int n, int r, int jobs = 1) {
    if (n < 1 || r < 0 || r >= n)
        throw ValidationError("enumerate_regular requires 0 <= r < n");
    if (static_cast<long>(n) * r % 2 != 0)
        throw ValidationError("no such graphs (parity): n*r is odd");
    if (n > 32)
        throw ValidationError("enumerate_regular supports n <= 32");

    bool complemented = r > (n - 1) / 2;
    int gen_r = complemented ? n - 1 - r : r;
    std::map<CanonicalForm, Graph> reps;
    detail::collect_regular(n, gen_r, jobs, reps);
    if (complemented) {
        std::map<CanonicalForm, Graph> flipped;
        for (auto& [key, g] : reps) flipped.insert(canonicalize(complement(g)));
        reps = std::move(flipped);
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [key, g] : reps) out.push_back(std::move(g));
    return out;
}

}  // namespace rcg
