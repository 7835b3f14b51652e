#include "eip/delta.hpp"

#include <numeric>
#include <sstream>

#include "eip/errors.hpp"

namespace eip {

DeltaSequence::DeltaSequence(std::vector<EdgeCount> entries, std::string graph, bool from_nested_solutions)
    : entries_(std::move(entries)), graph_(std::move(graph)), from_nested_solutions_(from_nested_solutions) {}

EdgeCount DeltaSequence::operator()(int m) const {
    if (m < 1 || m > length())
        throw InputError("delta index " + std::to_string(m) + " outside 1.." + std::to_string(length()));
    return entries_[m - 1];
}

EdgeCount DeltaSequence::sum() const { return std::accumulate(entries_.begin(), entries_.end(), EdgeCount{0}); }

EdgeCount DeltaSequence::cumulative(int k) const {
    if (k < 0 || k > length()) throw InputError("prefix length " + std::to_string(k) + " out of range");
    return std::accumulate(entries_.begin(), entries_.begin() + k, EdgeCount{0});
}

std::string DeltaSequence::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) out << (i ? "," : "") << entries_[i];
    out << ')';
    return out.str();
}

DeltaSequence delta_of(const IsoProfile& profile, bool from_nested_solutions) {
    std::vector<EdgeCount> entries;
    for (int m = 1; m <= profile.n; ++m) entries.push_back(profile.induced[m] - profile.induced[m - 1]);
    DeltaSequence d(std::move(entries), profile.graph, from_nested_solutions);

    if (d.length() > 0 && d(1) != 0) throw Error("delta(1) = " + std::to_string(d(1)) + ", expected 0");
    for (int m = 1; m <= d.length(); ++m)
        if (d(m) < 0) throw Error("negative delta at m = " + std::to_string(m));
    if (from_nested_solutions) {
        if (auto gap = gap_check(d); !gap.pass)
            throw Error("graph with nested solutions has delta gap > 1 at i = " + std::to_string(*gap.first_violation));
    }
    return d;
}

DeltaSequence delta_of(const Graph& g, const SolverLimits& limits) {
    const IsoProfile profile = iso_profile(g, limits);
    const bool ns = find_nested_solutions(g, profile).has_ns();
    return delta_of(profile, ns);
}

GapCheck gap_check(const DeltaSequence& d) {
    for (int i = 1; i < d.length(); ++i)
        if (d(i + 1) - d(i) > 1) return {false, i};
    return {};
}

SegmentDecomposition segments_of(const DeltaSequence& d) {
    SegmentDecomposition out;
    out.within_gap_lemma = d.from_nested_solutions();
    for (int i = 1; i <= d.length(); ++i) {
        if (i == 1 || d(i) <= d(i - 1)) {
            out.segments.push_back({i, i});
            out.starts.push_back(d(i));
        } else {
            out.segments.back().last = i;
        }
    }
    return out;
}

DenseCheck is_delta_dense(const DeltaSequence& d) {
    const auto seg = segments_of(d);
    for (int i = 1; i < seg.count(); ++i)
        if (seg.starts[i] <= 1) return {false, i + 1, seg.starts[i]};
    return {};
}

SymmetryCheck is_symmetric(const DeltaSequence& d) {
    const int n = d.length();
    for (int i = 1; i <= n; ++i)
        if (d(i) + d(n - i + 1) != d(n)) return {false, i};
    return {};
}

RegularityVerdict regularity_crosscheck(const Graph& g, const DeltaSequence& d) {
    if (d.length() != g.order()) throw InputError("delta sequence length does not match the graph order");
    RegularityVerdict v;
    v.symmetric = is_symmetric(d).symmetric;
    v.degree = g.regular_degree();
    v.regular = v.degree.has_value();
    v.consistent = v.symmetric == v.regular;
    return v;
}

}  // namespace eip
