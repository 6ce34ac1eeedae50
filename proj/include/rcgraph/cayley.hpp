#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "rcgraph/canonical.hpp"
#include "rcgraph/constructions.hpp"
#include "rcgraph/graph.hpp"

namespace rcg {

/// Direct product of cyclic groups Z_m1 x ... x Z_mk. Elements are tuples
/// reduced componentwise; vertex order is lexicographic tuple order.
struct GroupSpec {
    std::vector<int> moduli;

    explicit GroupSpec(std::vector<int> ms) : moduli(std::move(ms)) {
        if (moduli.empty()) throw ValidationError("group needs at least one factor");
        for (int m : moduli)
            if (m < 1) throw ValidationError("moduli must be positive");
    }

    int order() const {
        int o = 1;
        for (int m : moduli) o *= m;
        return o;
    }

    std::vector<int> reduce(std::vector<int> e) const {
        for (std::size_t i = 0; i < moduli.size(); ++i)
            e[i] = ((e[i] % moduli[i]) + moduli[i]) % moduli[i];
        return e;
    }

    std::vector<int> add(const std::vector<int>& x, const std::vector<int>& y) const {
        std::vector<int> z(moduli.size());
        for (std::size_t i = 0; i < moduli.size(); ++i)
            z[i] = (x[i] + y[i]) % moduli[i];
        return z;
    }

    std::vector<int> inverse(const std::vector<int>& x) const {
        std::vector<int> z(moduli.size());
        for (std::size_t i = 0; i < moduli.size(); ++i)
            z[i] = (moduli[i] - x[i]) % moduli[i];
        return z;
    }

    bool is_identity(const std::vector<int>& x) const {
        return std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
    }

    int index_of(const std::vector<int>& e) const {
        int idx = 0;
        for (std::size_t i = 0; i < moduli.size(); ++i) idx = idx * moduli[i] + e[i];
        return idx;
    }

    std::vector<int> element_at(int idx) const {
        std::vector<int> e(moduli.size());
        for (int i = static_cast<int>(moduli.size()) - 1; i >= 0; --i) {
            e[i] = idx % moduli[i];
            idx /= moduli[i];
        }
        return e;
    }
};

/// Symmetric generating set candidate: X = X^{-1}, identity excluded.
struct ConnectionSet {
    std::vector<std::vector<int>> elements;
};

inline void validate_connection_set(const GroupSpec& group, const ConnectionSet& x) {
    std::set<std::vector<int>> seen;
    for (const auto& raw : x.elements) {
        if (raw.size() != group.moduli.size())
            throw ValidationError("connection-set element arity mismatch");
        auto e = group.reduce(raw);
        if (group.is_identity(e))
            throw ValidationError("connection set contains the identity");
        seen.insert(e);
    }
    for (const auto& e : seen)
        if (!seen.count(group.inverse(e)))
            throw ValidationError("connection set not closed under inversion");
}

/// True iff X generates the whole group (the Cayley graph is connected).
inline bool connection_set_generates(const GroupSpec& group, const ConnectionSet& x) {
    int n = group.order();
    std::vector<char> reached(n, 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        auto g = group.element_at(stack.back());
        stack.pop_back();
        for (const auto& raw : x.elements) {
            int h = group.index_of(group.add(g, group.reduce(raw)));
            if (!reached[h]) {
                reached[h] = 1;
                ++count;
                stack.push_back(h);
            }
        }
    }
    return count == n;
}

/// |X|-regular graph on the group elements, g ~ g+x for x in X.
inline Graph cayley_graph(const GroupSpec& group, const ConnectionSet& x) {
    validate_connection_set(group, x);
    std::set<std::vector<int>> xs;
    for (const auto& raw : x.elements) xs.insert(group.reduce(raw));
    GraphBuilder b(group.order());
    for (int g = 0; g < group.order(); ++g) {
        auto ge = group.element_at(g);
        for (const auto& e : xs) b.add_edge(g, group.index_of(group.add(ge, e)));
    }
    return b.build();
}

/// X = {(i,j) : 0 <= i < a, 0 < j < k} over Z_a x Z_k; size a(k-1).
inline ConnectionSet lemma1_connection_set(int a, int k) {
    if (a < 1) throw ValidationError("lemma1_connection_set requires a >= 1");
    if (k < 2) throw ValidationError("lemma1_connection_set requires k >= 2");
    ConnectionSet x;
    for (int i = 0; i < a; ++i)
        for (int j = 1; j < k; ++j) x.elements.push_back({i, j});
    return x;
}

/// Checks Cay(Z_a x Z_k, lemma1 set) is isomorphic to T_{ak,k}.
inline bool verify_lemma1(int a, int k, int iso_limit = 20) {
    if (a * k > iso_limit)
        throw ValidationError("verify_lemma1: order " + std::to_string(a * k) +
                              " exceeds isomorphism limit " +
                              std::to_string(iso_limit));
    GroupSpec group({a, k});
    Graph cay = cayley_graph(group, lemma1_connection_set(a, k));
    return is_isomorphic(cay, turan(a * k, k));
}

}  // namespace rcg
