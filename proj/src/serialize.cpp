#include "eip/serialize.hpp"

#include <charconv>
#include <sstream>
#include <string>

#include "eip/errors.hpp"

namespace eip {

using nlohmann::json;

namespace {

ChainKind chain_kind_from(const std::string& s) {
    if (s == "lex") return ChainKind::lex;
    if (s == "colex") return ChainKind::colex;
    if (s == "other") return ChainKind::other;
    throw InputError("unknown chain kind '" + s + "'");
}

std::string objective_name(Objective o) { return o == Objective::induced ? "induced" : "boundary"; }

Objective objective_from(const std::string& s) {
    if (s == "induced") return Objective::induced;
    if (s == "boundary") return Objective::boundary;
    throw InputError("unknown objective '" + s + "'");
}

std::vector<std::string> hex_list(const std::vector<VertexSet>& sets) {
    std::vector<std::string> out;
    for (const auto& s : sets) out.push_back(s.to_hex());
    return out;
}

std::vector<VertexSet> sets_from_hex(int n, const json& j) {
    std::vector<VertexSet> out;
    for (const auto& h : j) out.push_back(VertexSet::from_hex(n, h.get<std::string>()));
    return out;
}

}  // namespace

void to_json(json& j, const IsoProfile& p) {
    j = json{{"graph", p.graph},
             {"n", p.n},
             {"induced", p.induced},
             {"boundary", p.boundary},
             {"induced_witness", hex_list(p.induced_witness)},
             {"boundary_witness", hex_list(p.boundary_witness)}};
}

void from_json(const json& j, IsoProfile& p) {
    j.at("graph").get_to(p.graph);
    j.at("n").get_to(p.n);
    j.at("induced").get_to(p.induced);
    j.at("boundary").get_to(p.boundary);
    p.induced_witness = sets_from_hex(p.n, j.at("induced_witness"));
    p.boundary_witness = sets_from_hex(p.n, j.at("boundary_witness"));
}

void to_json(json& j, const OptimalOrder& o) {
    j = json{{"order", o.order}, {"prefixes_optimal", o.prefixes_optimal}};
}

void from_json(const json& j, OptimalOrder& o) {
    j.at("order").get_to(o.order);
    j.at("prefixes_optimal").get_to(o.prefixes_optimal);
}

void to_json(json& j, const NsResult& r) {
    j = json{{"objective", objective_name(r.objective)},
             {"has_ns", r.has_ns()},
             {"deepest_prefix", r.deepest_prefix},
             {"order", r.order ? json(*r.order) : json(nullptr)}};
}

void from_json(const json& j, NsResult& r) {
    r.objective = objective_from(j.at("objective").get<std::string>());
    j.at("deepest_prefix").get_to(r.deepest_prefix);
    if (j.at("order").is_null()) r.order.reset();
    else r.order = j.at("order").get<OptimalOrder>();
}

void to_json(json& j, const WitnessList& w) {
    j = json{{"size", w.size}, {"optimum", w.optimum}, {"total", w.total}, {"sets", hex_list(w.sets)}};
}

void to_json(json& j, const DeltaSequence& d) {
    const auto seg = segments_of(d);
    const auto dense = is_delta_dense(d);
    const auto sym = is_symmetric(d);
    j = json{{"graph", d.graph()},
             {"entries", d.entries()},
             {"from_nested_solutions", d.from_nested_solutions()},
             {"text", d.to_string()},
             {"segments", seg},
             {"delta_dense", dense.dense},
             {"symmetric", sym.symmetric},
             {"gap_ok", gap_check(d).pass}};
}

void from_json(const json& j, DeltaSequence& d) {
    d = DeltaSequence(j.at("entries").get<std::vector<EdgeCount>>(), j.at("graph").get<std::string>(),
                      j.at("from_nested_solutions").get<bool>());
}

void to_json(json& j, const Segment& s) { j = json::array({s.first, s.last}); }

void from_json(const json& j, Segment& s) {
    s.first = j.at(0).get<int>();
    s.last = j.at(1).get<int>();
}

void to_json(json& j, const SegmentDecomposition& s) {
    j = json{{"count", s.count()},
             {"ranges", s.segments},
             {"starts", s.starts},
             {"within_gap_lemma", s.within_gap_lemma}};
}

void from_json(const json& j, SegmentDecomposition& s) {
    j.at("ranges").get_to(s.segments);
    j.at("starts").get_to(s.starts);
    j.at("within_gap_lemma").get_to(s.within_gap_lemma);
}

void to_json(json& j, const SizeCheck& c) {
    j = json{{"size", c.size},
             {"candidate", c.candidate},
             {"optimum", c.optimum},
             {"pass", c.pass},
             {"witness", c.witness.empty() ? json(nullptr) : json(c.witness)}};
}

void from_json(const json& j, SizeCheck& c) {
    j.at("size").get_to(c.size);
    j.at("candidate").get_to(c.candidate);
    j.at("optimum").get_to(c.optimum);
    j.at("pass").get_to(c.pass);
    c.witness = j.at("witness").is_null() ? std::string{} : j.at("witness").get<std::string>();
}

void to_json(json& j, const OptimalityReport& r) {
    j = json{{"subject", r.subject},
             {"pass", r.pass},
             {"evidence_only", r.evidence_only},
             {"note", r.note},
             {"passing_sizes", r.passing_sizes()},
             {"sizes", r.sizes}};
}

void from_json(const json& j, OptimalityReport& r) {
    j.at("subject").get_to(r.subject);
    j.at("pass").get_to(r.pass);
    j.at("evidence_only").get_to(r.evidence_only);
    j.at("note").get_to(r.note);
    j.at("sizes").get_to(r.sizes);
}

void to_json(json& j, const Diagram& d) { j = json{{"heights", d.to_string()}, {"box_height", d.box_height}}; }

void from_json(const json& j, Diagram& d) {
    const int box = j.at("box_height").get<int>();
    const auto text = j.at("heights").get<std::string>();
    d = text.empty() ? Diagram{{}, box} : Diagram::parse(text, box);
}

void to_json(json& j, const CompressedChain& c) {
    json cells = json::array();
    for (auto [x, y] : c.cells) cells.push_back(json::array({x, y}));
    j = json{{"columns", c.columns}, {"box_height", c.box_height}, {"kind", to_string(c.kind)}, {"cells", cells}};
}

void from_json(const json& j, CompressedChain& c) {
    j.at("columns").get_to(c.columns);
    j.at("box_height").get_to(c.box_height);
    c.kind = chain_kind_from(j.at("kind").get<std::string>());
    c.cells.clear();
    for (const auto& cell : j.at("cells")) c.cells.emplace_back(cell.at(0).get<int>(), cell.at(1).get<int>());
}

void to_json(json& j, const ChainEnumeration& e) {
    j = json{{"total", e.total},
             {"truncated", e.truncated},
             {"lex", e.lex},
             {"colex", e.colex},
             {"other", e.other},
             {"exactly_lex_and_colex", e.exactly_lex_and_colex()},
             {"chains", e.chains}};
}

void write_profile_csv(std::ostream& out, const IsoProfile& p) {
    out << "m,I,Theta,witness\n";
    for (int m = 0; m <= p.n; ++m)
        out << m << ',' << p.induced[m] << ',' << p.boundary[m] << ',' << p.induced_witness[m].to_hex() << '\n';
}

namespace {

long long csv_integer(const std::string& field, const std::string& line) {
    long long value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size())
        throw InputError("non-integer field '" + field + "' in profile CSV row '" + line + "'");
    return value;
}

}  // namespace

IsoProfile read_profile_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "m,I,Theta,witness") throw InputError("missing profile CSV header");
    std::vector<std::string> witnesses;
    IsoProfile p;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string m, induced, theta, witness;
        if (!std::getline(row, m, ',') || !std::getline(row, induced, ',') || !std::getline(row, theta, ',') ||
            !std::getline(row, witness))
            throw InputError("malformed profile CSV row '" + line + "'");
        if (csv_integer(m, line) != static_cast<long long>(p.induced.size())) throw InputError("profile CSV rows out of order");
        p.induced.push_back(csv_integer(induced, line));
        p.boundary.push_back(csv_integer(theta, line));
        witnesses.push_back(witness);
    }
    if (p.induced.empty()) throw InputError("empty profile CSV");
    p.n = static_cast<int>(p.induced.size()) - 1;
    for (const auto& w : witnesses) p.induced_witness.push_back(VertexSet::from_hex(p.n, w));
    return p;
}

}  // namespace eip
