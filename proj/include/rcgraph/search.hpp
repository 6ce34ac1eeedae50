#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "rcgraph/bounds.hpp"
#include "rcgraph/census.hpp"
#include "rcgraph/chromatic.hpp"
#include "rcgraph/graph.hpp"

namespace rcg {

struct ExhaustedOrder {
    int n = 0;
    long count = 0;  // isomorphism classes of r-regular graphs on n vertices
};

/// Outcome of an exhaustive minimal-order search for (r|chi)-graphs. Every
/// parity-feasible order from the start order up to minimal_order (or
/// max_order when open) was fully enumerated.
struct SearchCertificate {
    int r = 0;
    int chi = 0;
    std::optional<int> minimal_order;
    int open_above = 0;  // meaningful when minimal_order is empty
    std::vector<std::string> witnesses;  // graph6, canonical order
    std::vector<ExhaustedOrder> exhausted;
    double seconds = 0.0;
};

struct SearchOptions {
    int jobs = 1;
    Census* census = nullptr;               // optional enumeration cache
    std::optional<int> start_order;         // default: lower_bound(r, chi)
};

/// Ascends from the order lower bound in parity-respecting steps, filtering
/// each full enumeration through the exact solver. Stops at the first order
/// carrying a witness and returns all witnesses at that order.
inline SearchCertificate extremal_search(int r, int chi, int max_order,
                                         const SearchOptions& opts = {}) {
    detail::require_feasible(r, chi);
    if (max_order < lower_bound(r, chi))
        throw ValidationError("max_order below the order lower bound");
    auto t0 = std::chrono::steady_clock::now();

    SearchCertificate cert;
    cert.r = r;
    cert.chi = chi;
    Census local;
    Census& census = opts.census ? *opts.census : local;

    int start = opts.start_order.value_or(lower_bound(r, chi));
    for (int n = std::max(start, r + 1); n <= max_order; ++n) {
        if (static_cast<long>(n) * r % 2 != 0) continue;
        const CensusEntry& cell = census.ensure(n, r, opts.jobs);
        cert.exhausted.push_back({n, cell.count});
        for (long i = 0; i < cell.count; ++i)
            if (cell.chi[i] == chi) cert.witnesses.push_back(cell.graphs[i]);
        if (!cert.witnesses.empty()) {
            cert.minimal_order = n;
            break;
        }
    }
    if (!cert.minimal_order) cert.open_above = max_order;
    cert.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

/// Re-checks a stored witness from its graph6 string alone.
inline bool verify_witness(const std::string& g6, int r, int chi) {
    Graph g = decode_graph6(g6);
    return g.regularity() == r && chromatic_number(g).chi == chi;
}

/// Settles the table's open (6,6) cell: full enumeration of 6-regular graphs
/// on 11 vertices (via their 4-regular complements). Either a witness exists
/// at 11, or n(6|6) = 12 with K_6 [] K_2 as the witness from the known
/// bracket 2k-1 <= n(k|k) <= 2k.
inline SearchCertificate resolve_66(const SearchOptions& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    SearchCertificate cert;
    cert.r = 6;
    cert.chi = 6;
    Census local;
    Census& census = opts.census ? *opts.census : local;

    const CensusEntry& cell = census.ensure(11, 6, opts.jobs);
    cert.exhausted.push_back({11, cell.count});
    for (long i = 0; i < cell.count; ++i)
        if (cell.chi[i] == 6) cert.witnesses.push_back(cell.graphs[i]);
    if (!cert.witnesses.empty()) {
        cert.minimal_order = 11;
    } else {
        cert.minimal_order = 12;
        Graph upper = cartesian_product(complete(6), complete(2));
        if (upper.regularity() != 6 || chromatic_number(upper).chi != 6)
            throw Error("upper-bound witness failed verification");
        cert.witnesses.push_back(encode_graph6(canonicalize(upper).second));
    }
    cert.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

}  // namespace rcg
