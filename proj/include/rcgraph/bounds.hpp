#pragma once

#include "rcgraph/graph.hpp"

namespace rcg {

/// True iff an (r|chi)-graph can exist: 2 <= chi <= r+1, plus the degenerate
/// chi = 1 case (edgeless, so r must be 0).
inline bool feasible(int r, int chi) {
    if (r < 0 || chi < 1) return false;
    if (chi == 1) return r == 0;
    return chi <= r + 1;
}

namespace detail {

inline void require_feasible(int r, int chi) {
    if (!feasible(r, chi))
        throw ValidationError("infeasible pair (r=" + std::to_string(r) +
                              ", chi=" + std::to_string(chi) + ")");
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace detail

/// ceil(r*chi/(chi-1)), the order lower bound before parity adjustment.
inline int raw_lower_bound(int r, int chi) {
    detail::require_feasible(r, chi);
    if (chi == 1) return 1;
    return detail::ceil_div(r * chi, chi - 1);
}

/// Parity-adjusted lower bound: odd-degree regular graphs have even order.
inline int lower_bound(int r, int chi) {
    int n = raw_lower_bound(r, chi);
    if (r % 2 != 0 && n % 2 != 0) ++n;
    return n;
}

/// r = a(chi-1) + b with b = r mod (chi-1); a >= 1 whenever the pair is
/// feasible.
struct Decomposition {
    int a = 0;
    int b = 0;
};

inline Decomposition decompose(int r, int chi) {
    detail::require_feasible(r, chi);
    if (chi == 1) return {0, 0};
    int b = r % (chi - 1);
    return {(r - b) / (chi - 1), b};
}

/// a*chi*(b+1): the Cayley-witness order of the existence construction.
inline int upper_bound_thm2(int r, int chi) {
    detail::require_feasible(r, chi);
    if (chi == 1) return 1;
    auto [a, b] = decompose(r, chi);
    return a * chi * (b + 1);
}

/// min{ 2*floor(r*chi/(chi-1)), a*chi*(b+1) }.
inline int upper_bound_thm3(int r, int chi) {
    detail::require_feasible(r, chi);
    if (chi == 1) return 1;
    int doubled = 2 * (r * chi / (chi - 1));
    auto [a, b] = decompose(r, chi);
    if (b == 0) return a * chi;  // bounds collapse, Turan attains them
    return std::min(doubled, upper_bound_thm2(r, chi));
}

struct BoundsReport {
    int r = 0;
    int chi = 0;
    int lower = 0;          // parity-adjusted
    int lower_raw = 0;      // theorem-statement ceiling
    int upper_thm2 = 0;
    int upper_thm3 = 0;
    Decomposition decomposition;
};

inline BoundsReport bounds_report(int r, int chi) {
    detail::require_feasible(r, chi);
    return BoundsReport{r,
                        chi,
                        lower_bound(r, chi),
                        raw_lower_bound(r, chi),
                        upper_bound_thm2(r, chi),
                        upper_bound_thm3(r, chi),
                        decompose(r, chi)};
}

}  // namespace rcg
