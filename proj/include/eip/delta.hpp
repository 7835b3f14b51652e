#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eip/exact_solver.hpp"
#include "eip/graph.hpp"

namespace eip {

/// δ(m) = I(m) - I(m-1) for m = 1..n.
///
/// Entries are stored 0-based but read 1-based through operator(); that
/// accessor is the only place the two conventions meet.
class DeltaSequence {
public:
    DeltaSequence() = default;
    DeltaSequence(std::vector<EdgeCount> entries, std::string graph = {}, bool from_nested_solutions = false);

    /// δ(m), 1 <= m <= length().
    EdgeCount operator()(int m) const;
    int length() const { return static_cast<int>(entries_.size()); }
    EdgeCount sum() const;

    const std::vector<EdgeCount>& entries() const { return entries_; }
    const std::string& graph() const { return graph_; }
    /// True when the source graph was verified to have nested solutions.
    bool from_nested_solutions() const { return from_nested_solutions_; }

    /// Prefix sums: cumulative(k) = δ(1) + ... + δ(k), cumulative(0) = 0.
    EdgeCount cumulative(int k) const;

    /// "(0,1,1,1,2)"
    std::string to_string() const;

    friend bool operator==(const DeltaSequence&, const DeltaSequence&) = default;

private:
    std::vector<EdgeCount> entries_;
    std::string graph_;
    bool from_nested_solutions_ = false;
};

/// Successive differences of the profile. Throws eip::Error if the result
/// breaks δ(1) = 0, δ >= 0, or (when `from_nested_solutions`) the gap bound.
DeltaSequence delta_of(const IsoProfile& profile, bool from_nested_solutions = false);

/// Profile, nested-solution search and δ in one call.
DeltaSequence delta_of(const Graph& g, const SolverLimits& limits = {});

struct GapCheck {
    bool pass = true;
    /// Least i with δ(i+1) - δ(i) > 1.
    std::optional<int> first_violation;
};

GapCheck gap_check(const DeltaSequence& d);

/// Inclusive 1-based index range of one strictly increasing run.
struct Segment {
    int first = 0;
    int last = 0;
    int length() const { return last - first + 1; }
    friend bool operator==(const Segment&, const Segment&) = default;
};

struct SegmentDecomposition {
    std::vector<Segment> segments;
    /// starts[i] = δ(first index of segment i).
    std::vector<EdgeCount> starts;
    /// False when the sequence does not come from a graph with verified NS,
    /// where the run structure carries no guarantee.
    bool within_gap_lemma = false;

    int count() const { return static_cast<int>(segments.size()); }
    friend bool operator==(const SegmentDecomposition&, const SegmentDecomposition&) = default;
};

/// Maximal strictly increasing runs; a repeated or smaller value opens a new run.
SegmentDecomposition segments_of(const DeltaSequence& d);

struct DenseCheck {
    bool dense = true;
    /// 1-based index of the first segment after the first whose start is <= 1.
    std::optional<int> offending_segment;
    EdgeCount offending_start = 0;
};

DenseCheck is_delta_dense(const DeltaSequence& d);

struct SymmetryCheck {
    bool symmetric = true;
    /// Least i with δ(i) + δ(n - i + 1) != δ(n).
    std::optional<int> first_asymmetric;
};

SymmetryCheck is_symmetric(const DeltaSequence& d);

struct RegularityVerdict {
    bool symmetric = false;
    bool regular = false;
    std::optional<int> degree;
    /// symmetric == regular. A mismatch means the computation is wrong.
    bool consistent = false;
};

RegularityVerdict regularity_crosscheck(const Graph& g, const DeltaSequence& d);

}  // namespace eip
