#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "eip/exact_solver.hpp"
#include "eip/graph.hpp"

namespace eip {

enum class CaseStatus {
    pass,           ///< every step agreed exactly
    fail,           ///< some exact check disagreed; see failed_step
    evidence_only,  ///< sampled or exploratory output, no verdict claimed
};

std::string to_string(CaseStatus s);

/// Outcome of one reproducible claim.
struct CasebookResult {
    std::string id;
    std::string claim;
    CaseStatus status = CaseStatus::fail;
    /// First step whose check failed; empty unless status == fail.
    std::string failed_step;
    /// Step name -> rendered value (sequences, witnesses, counts).
    std::vector<std::pair<std::string, std::string>> artifacts;
    double seconds = 0.0;

    bool ok() const { return status != CaseStatus::fail; }

    friend bool operator==(const CasebookResult&, const CasebookResult&) = default;
};

void to_json(nlohmann::json& j, const CasebookResult& r);
void from_json(const nlohmann::json& j, CasebookResult& r);

struct CasebookOptions {
    SolverLimits limits;
    std::uint64_t seed = 20240611;
    int threads = 0;
};

/// A reproducible claim: identifier, the mathematical statement it checks,
/// and the pipeline that checks it.
struct Claim {
    std::string id;
    std::string claim;
    /// Excluded from default runs (minutes of exhaustive enumeration).
    bool slow = false;
    std::function<CasebookResult(const CasebookOptions&)> run;
};

/// Every claim, in a fixed order. Ids are unique.
const std::vector<Claim>& casebook_claims();
const Claim& find_claim(const std::string& id);

/// Runs a claim, stamps id, claim text and wall time.
CasebookResult run_claim(const Claim& c, const CasebookOptions& options = {});

/// Knobs for the counterexample pipeline, including fault injection.
struct CounterexampleOptions {
    std::function<Graph()> build = [] { return graph_z(2); };
    /// Flip the symmetry predicate before the regularity cross-check.
    bool invert_symmetry = false;
    SolverLimits limits;
    int threads = 0;
};

/// The printed δ of Z(2).
const std::vector<EdgeCount>& printed_z2_delta();

/// Z(2) -> exhaustive profile -> NS -> δ equals the printed tuple ->
/// asymmetric and irregular, consistently -> lex optimal on Z(2)² for every size.
CasebookResult verify_counterexample(const CounterexampleOptions& options = {});

/// Compressed optimal orders of G². δ-dense inputs pass iff the set is exactly
/// {lex, colex}; other inputs are reported as evidence only.
CasebookResult check_uniqueness(const Graph& g, std::size_t cap, const SolverLimits& limits = {});

}  // namespace eip
