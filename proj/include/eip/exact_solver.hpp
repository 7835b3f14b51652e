#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eip/graph.hpp"
#include "eip/report.hpp"

namespace eip {

/// Size bounds for the exhaustive searches.
struct SolverLimits {
    /// Largest graph whose full 2^n profile is enumerated. Hard ceiling 40.
    int profile_cap = 28;
    /// Largest graph for which all optimal orders are enumerated.
    int order_cap = 20;
};

inline constexpr int kProfileHardCap = 40;

enum class Objective {
    induced,   ///< maximise |I(A)|
    boundary,  ///< minimise |Θ(A)|
};

/// Exact edge-isoperimetric values for every cardinality 0..n.
struct IsoProfile {
    std::string graph;
    int n = 0;
    std::vector<EdgeCount> induced;   ///< I(m)
    std::vector<EdgeCount> boundary;  ///< Θ(m)
    /// Numerically smallest bitmask achieving I(m), resp. Θ(m).
    std::vector<VertexSet> induced_witness;
    std::vector<VertexSet> boundary_witness;

    EdgeCount optimum(Objective obj, int m) const { return obj == Objective::induced ? induced[m] : boundary[m]; }

    friend bool operator==(const IsoProfile&, const IsoProfile&) = default;
};

/// Enumerates all 2^n subsets in Gray-code order, partitioned into blocks by
/// the high label bits and spread over `threads` workers (0 = worker_count()).
/// Output does not depend on the thread count.
IsoProfile iso_profile(const Graph& g, const SolverLimits& limits = {}, int threads = 0);

/// I(m) recomputed by walking only the m-subsets (Gosper's hack). Shares no
/// code with iso_profile.
EdgeCount max_induced_by_combinations(const Graph& g, int m, const SolverLimits& limits = {});

struct WitnessList {
    int size = 0;
    EdgeCount optimum = 0;
    /// At most `cap` optimal sets in increasing bitmask order.
    std::vector<VertexSet> sets;
    /// Number of optimal sets, even when `sets` was truncated.
    std::uint64_t total = 0;
};

WitnessList optimal_witnesses(const Graph& g, int m, std::size_t cap, const SolverLimits& limits = {});

/// A vertex permutation; `order[i]` is the i-th vertex.
struct OptimalOrder {
    std::vector<int> order;
    bool prefixes_optimal = false;

    friend bool operator==(const OptimalOrder&, const OptimalOrder&) = default;
};

struct NsResult {
    Objective objective = Objective::induced;
    /// The lexicographically least optimal order, if the graph has NS.
    std::optional<OptimalOrder> order;
    /// Longest prefix that could be kept optimal. Equals n on success.
    int deepest_prefix = 0;

    bool has_ns() const { return order.has_value(); }

    friend bool operator==(const NsResult&, const NsResult&) = default;
};

/// Depth-first search for nested solutions. Every prefix S must satisfy
/// I(S) = I(|S|) (or Θ(S) = Θ(|S|) for the boundary objective). Subsets
/// shown not to extend are memoised, so a negative answer is an exhausted
/// search.
NsResult find_nested_solutions(const Graph& g, const IsoProfile& profile, Objective objective = Objective::induced);
NsResult find_nested_solutions(const Graph& g, const SolverLimits& limits = {});

/// Number of edges from order[k] back to order[0..k-1], for each k.
std::vector<EdgeCount> prefix_deltas(const Graph& g, const std::vector<int>& order);

/// Compares every prefix of `order` with the profile. Throws InputError if
/// `order` is not a permutation of the vertices.
OptimalityReport verify_order(const Graph& g, const IsoProfile& profile, const std::vector<int>& order,
                              Objective objective = Objective::induced);

struct OrderEnumeration {
    std::vector<OptimalOrder> orders;  ///< lexicographic by vertex sequence
    std::uint64_t total = 0;           ///< saturates at UINT64_MAX
    bool truncated = false;
};

OrderEnumeration enumerate_optimal_orders(const Graph& g, const IsoProfile& profile, std::size_t cap,
                                          const SolverLimits& limits = {});

}  // namespace eip
