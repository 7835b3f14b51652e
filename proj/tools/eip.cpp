// eip: command-line front end for the edge-isoperimetric toolkit.
//
// Exit codes: 0 all requested checks pass (or are evidence only), 1 a check
// failed, 2 usage or input error, 3 capacity exceeded.

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eip/casebook.hpp"
#include "eip/delta.hpp"
#include "eip/errors.hpp"
#include "eip/exact_solver.hpp"
#include "eip/graph_io.hpp"
#include "eip/product_compress.hpp"
#include "eip/serialize.hpp"

namespace {

using nlohmann::json;

enum ExitCode { kPass = 0, kCheckFailed = 1, kUsage = 2, kCapacity = 3 };

struct Common {
    bool json = false;
    bool csv = false;
    int max_vertices = eip::SolverLimits{}.profile_cap;
    double max_seconds = 120.0;

    eip::SolverLimits limits() const {
        eip::SolverLimits l;
        l.profile_cap = max_vertices;
        return l;
    }
};

std::string graph_label(const eip::Graph& g) {
    std::ostringstream out;
    out << (g.name().empty() ? "graph" : g.name()) << " (" << g.order() << " vertices, " << g.edge_count()
        << " edges)";
    return out.str();
}

std::vector<int> parse_order(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        try {
            out.push_back(std::stoi(field));
        } catch (const std::exception&) {
            throw eip::InputError("bad vertex '" + field + "' in order");
        }
    }
    return out;
}

void print_report(const eip::OptimalityReport& r, bool failures_only) {
    std::cout << r.subject << ": " << (r.pass ? "optimal" : "NOT optimal") << " (" << r.passing_sizes() << "/"
              << r.sizes.size() << " sizes pass)" << (r.evidence_only ? " [evidence only]" : "") << '\n';
    if (!r.note.empty()) std::cout << "note: " << r.note << '\n';
    for (const auto& row : r.sizes) {
        if (failures_only && row.pass) continue;
        std::cout << "  m=" << row.size << " candidate=" << row.candidate << " optimum=" << row.optimum
                  << (row.pass ? "" : "  FAIL") << (row.witness.empty() ? "" : "  witness " + row.witness) << '\n';
    }
}

int cmd_delta(const Common& c, const std::string& spec) {
    const eip::Graph g = eip::load_graph(spec);
    const eip::IsoProfile profile = eip::iso_profile(g, c.limits());
    const eip::NsResult ns = eip::find_nested_solutions(g, profile);
    const eip::DeltaSequence d = eip::delta_of(profile, ns.has_ns());
    const auto seg = eip::segments_of(d);
    const auto dense = eip::is_delta_dense(d);
    const auto sym = eip::is_symmetric(d);
    const auto verdict = eip::regularity_crosscheck(g, d);

    if (c.json) {
        json j = d;
        j["regular"] = verdict.regular;
        j["has_ns"] = ns.has_ns();
        j["regularity_consistent"] = verdict.consistent;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "graph: " << graph_label(g) << '\n'
                  << "delta: " << d.to_string() << '\n'
                  << "segments: " << seg.count() << ", starts " << eip::DeltaSequence(seg.starts).to_string()
                  << (seg.within_gap_lemma ? "" : " (no nested solutions: outside gap-lemma hypothesis)") << '\n'
                  << "delta-dense: "
                  << (dense.dense ? "yes"
                                  : "no (s_" + std::to_string(*dense.offending_segment) + " = " +
                                        std::to_string(dense.offending_start) + ")")
                  << '\n'
                  << "symmetric: "
                  << (sym.symmetric ? "yes" : "no (first at i = " + std::to_string(*sym.first_asymmetric) + ")")
                  << '\n'
                  << "regular: " << (verdict.regular ? "yes (degree " + std::to_string(*verdict.degree) + ")" : "no")
                  << '\n'
                  << "nested solutions: " << (ns.has_ns() ? "yes" : "no") << '\n';
    }
    if (!verdict.consistent) {
        std::cerr << "internal inconsistency: symmetry and regularity disagree\n";
        return kCheckFailed;
    }
    return kPass;
}

int cmd_solve(const Common& c, const std::string& spec, int witness_size, std::size_t cap) {
    const eip::Graph g = eip::load_graph(spec);
    if (witness_size >= 0) {
        const auto w = eip::optimal_witnesses(g, witness_size, cap, c.limits());
        if (c.json) {
            std::cout << json(w).dump(2) << '\n';
        } else {
            std::cout << "I(" << w.size << ") = " << w.optimum << ", " << w.total << " optimal set(s)"
                      << (w.sets.size() < w.total ? ", showing " + std::to_string(w.sets.size()) : "") << '\n';
            for (const auto& s : w.sets) std::cout << "  " << s.to_hex() << '\n';
        }
        return kPass;
    }
    const eip::IsoProfile p = eip::iso_profile(g, c.limits());
    if (c.json) {
        std::cout << json(p).dump(2) << '\n';
    } else if (c.csv) {
        eip::write_profile_csv(std::cout, p);
    } else {
        std::cout << "graph: " << graph_label(g) << '\n'
                  << "I     = " << eip::DeltaSequence(p.induced).to_string() << '\n'
                  << "Theta = " << eip::DeltaSequence(p.boundary).to_string() << '\n';
        for (int m = 0; m <= p.n; ++m)
            std::cout << "  m=" << std::setw(2) << m << "  I=" << p.induced[m] << "  Theta=" << p.boundary[m]
                      << "  witness " << p.induced_witness[m].to_hex() << '\n';
    }
    return kPass;
}

int cmd_ns(const Common& c, const std::string& spec, bool boundary, const std::string& verify) {
    const eip::Graph g = eip::load_graph(spec);
    const eip::IsoProfile profile = eip::iso_profile(g, c.limits());
    const auto objective = boundary ? eip::Objective::boundary : eip::Objective::induced;
    if (!verify.empty()) {
        const auto report = eip::verify_order(g, profile, parse_order(verify), objective);
        if (c.json) std::cout << json(report).dump(2) << '\n';
        else print_report(report, false);
        return report.pass ? kPass : kCheckFailed;
    }
    const eip::NsResult ns = eip::find_nested_solutions(g, profile, objective);
    if (c.json) {
        json j = ns;
        if (ns.has_ns()) j["prefix_deltas"] = eip::prefix_deltas(g, ns.order->order);
        std::cout << j.dump(2) << '\n';
    } else if (ns.has_ns()) {
        std::cout << "graph: " << graph_label(g) << '\n' << "optimal order:";
        for (int v : ns.order->order) std::cout << ' ' << v;
        std::cout << "\nprefix deltas: " << eip::DeltaSequence(eip::prefix_deltas(g, ns.order->order)).to_string()
                  << '\n';
    } else {
        std::cout << "graph: " << graph_label(g) << '\n'
                  << "no nested solutions (search exhausted; deepest optimal prefix " << ns.deepest_prefix << ")\n";
    }
    return ns.has_ns() ? kPass : kCheckFailed;
}

int cmd_orders(const Common& c, const std::string& spec, std::size_t cap) {
    const eip::Graph g = eip::load_graph(spec);
    const eip::IsoProfile profile = eip::iso_profile(g, c.limits());
    const auto e = eip::enumerate_optimal_orders(g, profile, cap, c.limits());
    if (c.json) {
        std::cout << json{{"total", e.total}, {"truncated", e.truncated}, {"orders", e.orders}}.dump(2) << '\n';
    } else {
        std::cout << "graph: " << graph_label(g) << '\n'
                  << e.total << " optimal order(s)" << (e.truncated ? ", showing " + std::to_string(e.orders.size()) : "")
                  << '\n';
        for (const auto& o : e.orders) {
            std::cout << ' ';
            for (int v : o.order) std::cout << ' ' << v;
            std::cout << '\n';
        }
    }
    return kPass;
}

void print_case(const eip::CasebookResult& r) {
    std::cout << '[' << eip::to_string(r.status) << "] " << r.id << "  (" << std::fixed << std::setprecision(2)
              << r.seconds << "s)\n"
              << "  claim: " << r.claim << '\n';
    if (!r.failed_step.empty()) std::cout << "  failed step: " << r.failed_step << '\n';
    for (const auto& [k, v] : r.artifacts) std::cout << "  " << k << ": " << v << '\n';
}

int cmd_uniqueness(const Common& c, const std::string& spec, std::size_t cap) {
    const eip::Graph g = eip::load_graph(spec);
    auto r = eip::check_uniqueness(g, cap, c.limits());
    r.id = "uniqueness";
    r.claim = "compressed optimal orders of " + (g.name().empty() ? std::string("G") : g.name()) + "^2";
    if (c.json) std::cout << json(r).dump(2) << '\n';
    else print_case(r);
    return r.ok() ? kPass : kCheckFailed;
}

int cmd_lex2(const Common& c, const std::string& spec) {
    const eip::Graph g = eip::load_graph(spec);
    const auto report = eip::verify_lex_square(g, c.limits());
    if (c.json) std::cout << json(report).dump(2) << '\n';
    else print_report(report, true);
    return report.pass ? kPass : kCheckFailed;
}

int cmd_power_check(const Common& c, const std::string& spec, int d, bool sampled, std::uint64_t seed) {
    const eip::Graph g = eip::load_graph(spec);
    eip::PowerCheckOptions opts;
    opts.mode = sampled ? eip::CheckMode::sampled : eip::CheckMode::exhaustive;
    opts.limits = c.limits();
    opts.seed = seed;
    const auto report = eip::power_lex_check(g, d, opts);
    if (c.json) std::cout << json(report).dump(2) << '\n';
    else print_report(report, true);
    return report.pass ? kPass : kCheckFailed;
}

int cmd_casebook(const Common& c, const std::vector<std::string>& ids, bool list, bool slow) {
    if (list) {
        for (const auto& claim : eip::casebook_claims())
            std::cout << claim.id << (claim.slow ? "  [slow]" : "") << "\n  " << claim.claim << '\n';
        return kPass;
    }
    std::vector<const eip::Claim*> selected;
    if (ids.empty()) {
        // The slow tier carries a 15-minute budget.
        const bool include_slow = slow || c.max_seconds >= 900.0;
        for (const auto& claim : eip::casebook_claims())
            if (!claim.slow || include_slow) selected.push_back(&claim);
    } else {
        for (const auto& id : ids) selected.push_back(&eip::find_claim(id));
    }
    eip::CasebookOptions opts;
    opts.limits = c.limits();
    bool ok = true;
    json all = json::array();
    for (const auto* claim : selected) {
        const auto r = eip::run_claim(*claim, opts);
        ok = ok && r.ok();
        if (c.json) all.push_back(r);
        else print_case(r);
    }
    if (c.json) std::cout << all.dump(2) << '\n';
    return ok ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact edge-isoperimetric toolkit for small graphs and their Cartesian products"};
    app.require_subcommand(1);

    Common common;
    app.add_flag("--json", common.json, "Machine-readable JSON output");
    app.add_flag("--csv", common.csv, "CSV output (solve only)");
    app.add_option("--max-vertices", common.max_vertices, "Largest graph for exhaustive 2^n enumeration")
        ->check(CLI::Range(1, eip::kProfileHardCap));
    app.add_option("--max-seconds", common.max_seconds, "Runtime budget; >= 900 enables the slow casebook tier");

    std::string graph_spec;
    const std::string graph_help = "Edge-list file or constructor expression, e.g. 'power(complete(2),3)'";

    auto* delta = app.add_subcommand("delta", "Delta-sequence, segments and structural predicates");
    delta->add_option("graph", graph_spec, graph_help)->required();

    int witness_size = -1;
    std::size_t cap = 10;
    auto* solve = app.add_subcommand("solve", "Exact I(m) and Theta(m) for every m");
    solve->add_option("graph", graph_spec, graph_help)->required();
    solve->add_option("--witnesses", witness_size, "List optimal sets of this size instead");
    solve->add_option("--cap", cap, "Maximum number of sets or orders listed");

    bool boundary = false;
    std::string verify;
    auto* ns = app.add_subcommand("ns", "Search for nested solutions (an optimal order)");
    ns->add_option("graph", graph_spec, graph_help)->required();
    ns->add_flag("--boundary", boundary, "Use the boundary objective instead of induced edges");
    ns->add_option("--verify", verify, "Check a given order 'v0,v1,...' prefix by prefix");

    auto* orders = app.add_subcommand("orders", "Enumerate optimal orders");
    orders->add_option("graph", graph_spec, graph_help)->required();
    orders->add_option("--cap", cap, "Maximum number of orders listed");

    auto* uniqueness = app.add_subcommand("uniqueness", "Compressed optimal orders of G^2 versus {lex, colex}");
    uniqueness->add_option("graph", graph_spec, graph_help)->required();
    uniqueness->add_option("--cap", cap, "Maximum number of chains listed");

    auto* lex2 = app.add_subcommand("lex2", "Check lex initial segments of G^2 against the compressed optimum");
    lex2->add_option("graph", graph_spec, graph_help)->required();

    int exponent = 2;
    bool exhaustive = false;
    bool sampled = false;
    std::uint64_t seed = 1;
    auto* power = app.add_subcommand("power-check", "Check lex initial segments of G^d");
    power->add_option("graph", graph_spec, graph_help)->required();
    power->add_option("--d", exponent, "Exponent d >= 1")->required();
    auto* ex_flag = power->add_flag("--exhaustive", exhaustive, "Exact profile of G^d (default)");
    power->add_flag("--sampled", sampled, "Heuristic lower bounds only (evidence)")->excludes(ex_flag);
    power->add_option("--seed", seed, "Random seed for sampled mode");

    std::vector<std::string> claim_ids;
    bool list = false;
    bool slow = false;
    auto* casebook = app.add_subcommand("casebook", "Run the reproducible claims");
    casebook->add_option("claims", claim_ids, "Claim ids (default: all except the slow tier)");
    casebook->add_flag("--list", list, "List claim ids");
    casebook->add_flag("--slow", slow, "Include the slow tier");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*delta) return cmd_delta(common, graph_spec);
        if (*solve) return cmd_solve(common, graph_spec, witness_size, cap);
        if (*ns) return cmd_ns(common, graph_spec, boundary, verify);
        if (*orders) return cmd_orders(common, graph_spec, cap);
        if (*uniqueness) return cmd_uniqueness(common, graph_spec, cap);
        if (*lex2) return cmd_lex2(common, graph_spec);
        if (*power) return cmd_power_check(common, graph_spec, exponent, sampled, seed);
        if (*casebook) return cmd_casebook(common, claim_ids, list, slow);
    } catch (const eip::CapacityError& e) {
        std::cerr << e.what() << '\n';
        return kCapacity;
    } catch (const eip::InputError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const eip::Error& e) {
        std::cerr << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}
