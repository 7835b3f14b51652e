#pragma once

#include <istream>
#include <ostream>

#include "json.hpp"

#include "eip/delta.hpp"
#include "eip/exact_solver.hpp"
#include "eip/product_compress.hpp"
#include "eip/report.hpp"

namespace eip {

// nlohmann::json hooks. Every type here round-trips: from_json(to_json(x)) == x.
// Vertex sets are written as hex bitmasks (see VertexSet::to_hex).

void to_json(nlohmann::json& j, const IsoProfile& p);
void from_json(const nlohmann::json& j, IsoProfile& p);

void to_json(nlohmann::json& j, const OptimalOrder& o);
void from_json(const nlohmann::json& j, OptimalOrder& o);

void to_json(nlohmann::json& j, const NsResult& r);
void from_json(const nlohmann::json& j, NsResult& r);

void to_json(nlohmann::json& j, const WitnessList& w);

/// Includes the derived segments, starts and predicates as read-only extras.
void to_json(nlohmann::json& j, const DeltaSequence& d);
void from_json(const nlohmann::json& j, DeltaSequence& d);

void to_json(nlohmann::json& j, const Segment& s);
void from_json(const nlohmann::json& j, Segment& s);
void to_json(nlohmann::json& j, const SegmentDecomposition& s);
void from_json(const nlohmann::json& j, SegmentDecomposition& s);

void to_json(nlohmann::json& j, const SizeCheck& c);
void from_json(const nlohmann::json& j, SizeCheck& c);
void to_json(nlohmann::json& j, const OptimalityReport& r);
void from_json(const nlohmann::json& j, OptimalityReport& r);

/// Diagrams serialise as their height string "h0,h1,..." plus the box height.
void to_json(nlohmann::json& j, const Diagram& d);
void from_json(const nlohmann::json& j, Diagram& d);

void to_json(nlohmann::json& j, const CompressedChain& c);
void from_json(const nlohmann::json& j, CompressedChain& c);
void to_json(nlohmann::json& j, const ChainEnumeration& e);

/// CSV with header "m,I,Theta,witness"; the witness is the I-optimal set.
void write_profile_csv(std::ostream& out, const IsoProfile& p);
/// Inverse of write_profile_csv. Θ witnesses are not stored in the CSV and
/// come back empty.
IsoProfile read_profile_csv(std::istream& in);

}  // namespace eip
