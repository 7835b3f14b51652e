#pragma once

// Brute-force reference computations for the tests. Everything here works
// from a plain edge list and a 0/1 membership vector, with no bit tricks and
// no code shared with the library's solvers.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline long long count_induced(const EdgeList& edges, const std::vector<bool>& in) {
    long long c = 0;
    for (auto [u, v] : edges)
        if (in[u] && in[v]) ++c;
    return c;
}

inline long long count_boundary(const EdgeList& edges, const std::vector<bool>& in) {
    long long c = 0;
    for (auto [u, v] : edges)
        if (in[u] != in[v]) ++c;
    return c;
}

struct Profile {
    std::vector<long long> induced;
    std::vector<long long> boundary;
};

/// I(m) and Θ(m) by visiting every subset in plain binary counting order.
inline Profile profile(int n, const EdgeList& edges) {
    Profile p{std::vector<long long>(n + 1, -1), std::vector<long long>(n + 1, 1LL << 60)};
    std::vector<bool> in(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int size = 0;
        for (int v = 0; v < n; ++v) {
            in[v] = (mask >> v) & 1U;
            size += in[v];
        }
        p.induced[size] = std::max(p.induced[size], count_induced(edges, in));
        p.boundary[size] = std::min(p.boundary[size], count_boundary(edges, in));
    }
    return p;
}

/// Number of m-subsets achieving `target` induced edges.
inline long long count_sets_with(int n, const EdgeList& edges, int m, long long target) {
    long long total = 0;
    std::vector<bool> in(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int size = 0;
        for (int v = 0; v < n; ++v) {
            in[v] = (mask >> v) & 1U;
            size += in[v];
        }
        if (size == m && count_induced(edges, in) == target) ++total;
    }
    return total;
}

/// Whether every prefix of `order` is optimal, checked against `p`.
inline bool order_is_optimal(int n, const EdgeList& edges, const std::vector<int>& order, const Profile& p) {
    std::vector<bool> in(n, false);
    for (int k = 1; k <= n; ++k) {
        in[order[k - 1]] = true;
        if (count_induced(edges, in) != p.induced[k]) return false;
    }
    return true;
}

/// Count of vertex permutations whose every prefix is optimal.
inline long long count_optimal_orders(int n, const EdgeList& edges) {
    const Profile p = profile(n, edges);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    long long total = 0;
    do {
        total += order_is_optimal(n, edges, perm, p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace oracle
