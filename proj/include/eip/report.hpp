#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eip/graph.hpp"

namespace eip {

/// One row of an optimality comparison: the candidate set of a given size
/// against the proven optimum for that size.
struct SizeCheck {
    int size = 0;
    EdgeCount candidate = 0;
    EdgeCount optimum = 0;
    bool pass = false;
    /// A set achieving `optimum` (hex bitmask or height vector); empty when
    /// the candidate itself is optimal.
    std::string witness;

    friend bool operator==(const SizeCheck&, const SizeCheck&) = default;
};

/// Per-size comparison of a chain of candidate sets against optima.
struct OptimalityReport {
    std::string subject;
    std::vector<SizeCheck> sizes;
    bool pass = false;
    /// Set when `optimum` is only a heuristic lower bound, not a proven value.
    bool evidence_only = false;
    std::string note;

    std::optional<SizeCheck> first_failure() const;
    int passing_sizes() const;

    /// Recomputes `pass` from the rows.
    void finalize();

    friend bool operator==(const OptimalityReport&, const OptimalityReport&) = default;
};

}  // namespace eip
