#include "eip/casebook.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "eip/delta.hpp"
#include "eip/errors.hpp"
#include "eip/product_compress.hpp"
#include "eip/random_graphs.hpp"

namespace eip {

using nlohmann::json;

std::string to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::evidence_only: return "evidence-only";
    }
    return "fail";
}

namespace {

CaseStatus status_from(const std::string& s) {
    if (s == "pass") return CaseStatus::pass;
    if (s == "fail") return CaseStatus::fail;
    if (s == "evidence-only") return CaseStatus::evidence_only;
    throw InputError("unknown casebook status '" + s + "'");
}

}  // namespace

void to_json(json& j, const CasebookResult& r) {
    json artifacts = json::array();
    for (const auto& [k, v] : r.artifacts) artifacts.push_back(json::array({k, v}));
    j = json{{"id", r.id},
             {"claim", r.claim},
             {"status", to_string(r.status)},
             {"failed_step", r.failed_step},
             {"artifacts", artifacts},
             {"seconds", r.seconds}};
}

void from_json(const json& j, CasebookResult& r) {
    j.at("id").get_to(r.id);
    j.at("claim").get_to(r.claim);
    r.status = status_from(j.at("status").get<std::string>());
    j.at("failed_step").get_to(r.failed_step);
    r.artifacts.clear();
    for (const auto& a : j.at("artifacts")) r.artifacts.emplace_back(a.at(0).get<std::string>(), a.at(1).get<std::string>());
    j.at("seconds").get_to(r.seconds);
}

namespace {

// Accumulates step outcomes; the first failing step names the failure.
class Pipeline {
public:
    bool check(const std::string& step, bool ok, const std::string& value = {}) {
        result_.artifacts.emplace_back(step, value.empty() ? (ok ? "ok" : "FAILED") : value);
        if (!ok && result_.failed_step.empty()) result_.failed_step = step;
        return ok;
    }

    void note(const std::string& step, const std::string& value) { result_.artifacts.emplace_back(step, value); }

    bool failed() const { return !result_.failed_step.empty(); }

    CasebookResult finish(bool evidence_only = false) {
        result_.status = failed() ? CaseStatus::fail : evidence_only ? CaseStatus::evidence_only : CaseStatus::pass;
        return result_;
    }

private:
    CasebookResult result_;
};

std::string join_ints(const std::vector<EdgeCount>& v) { return DeltaSequence(v).to_string(); }

std::vector<EdgeCount> tree_delta(int n) {
    std::vector<EdgeCount> d(n, 1);
    d[0] = 0;
    return d;
}

std::vector<EdgeCount> complete_delta(int n) {
    std::vector<EdgeCount> d(n);
    for (int i = 0; i < n; ++i) d[i] = i;
    return d;
}

const std::vector<EdgeCount> kPetersenDelta{0, 1, 1, 1, 2, 1, 2, 2, 2, 3};

std::vector<Graph> trees() {
    std::vector<Graph> out;
    for (int n = 3; n <= 7; ++n) {
        out.push_back(path_graph(n));
        out.push_back(star_graph(n));
    }
    return out;
}

CasebookResult claim_delta_sequences(const CasebookOptions& o) {
    Pipeline p;
    for (int n = 2; n <= 6; ++n) {
        const auto d = delta_of(complete_graph(n), o.limits);
        p.check("complete(" + std::to_string(n) + ")", d.entries() == complete_delta(n), d.to_string());
    }
    for (const auto& t : trees()) {
        const auto d = delta_of(t, o.limits);
        p.check(t.name(), d.entries() == tree_delta(t.order()), d.to_string());
    }
    const auto d = delta_of(petersen_graph(), o.limits);
    p.check("petersen", d.entries() == kPetersenDelta, d.to_string());
    return p.finish();
}

CasebookResult claim_segments(const CasebookOptions& o) {
    Pipeline p;
    for (int n = 2; n <= 6; ++n) {
        const auto s = segments_of(delta_of(complete_graph(n), o.limits));
        p.check("complete(" + std::to_string(n) + ")", s.count() == 1, std::to_string(s.count()) + " segment(s)");
    }
    const auto pet = segments_of(delta_of(petersen_graph(), o.limits));
    p.check("petersen", pet.count() == 6 && pet.starts == std::vector<EdgeCount>{0, 1, 1, 1, 2, 2},
            std::to_string(pet.count()) + " segments, starts " + join_ints(pet.starts));
    for (const auto& t : trees()) {
        const auto s = segments_of(delta_of(t, o.limits));
        p.check(t.name(), s.count() == t.order() - 1, std::to_string(s.count()) + " segments");
    }
    return p.finish();
}

CasebookResult claim_delta_dense(const CasebookOptions& o) {
    Pipeline p;
    for (int n = 2; n <= 6; ++n)
        p.check("complete(" + std::to_string(n) + ")", is_delta_dense(delta_of(complete_graph(n), o.limits)).dense);
    const auto pet = is_delta_dense(delta_of(petersen_graph(), o.limits));
    p.check("petersen", !pet.dense,
            pet.dense ? "dense" : "not dense: s_" + std::to_string(*pet.offending_segment) + " = " +
                                      std::to_string(pet.offending_start));
    for (const auto& t : trees()) p.check(t.name(), !is_delta_dense(delta_of(t, o.limits)).dense);
    return p.finish();
}

CasebookResult claim_regular_identity(const CasebookOptions& o) {
    Pipeline p;
    std::mt19937_64 rng(o.seed);
    std::vector<Graph> corpus{petersen_graph(), cartesian_power(complete_graph(2), 3).renamed("Q3"), cycle_graph(5),
                              complete_graph(6)};
    while (corpus.size() < 54) {
        const int n = 4 + static_cast<int>(rng() % 7);
        const int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        if ((n * d) % 2 != 0) continue;
        corpus.push_back(random_regular_graph(n, d, rng));
    }
    int checked = 0;
    for (const auto& g : corpus) {
        const int r = *g.regular_degree();
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            const VertexSet a = random_subset(g.order(), rng);
            ok = boundary_edges(g, a) + 2 * induced_edges(g, a) == static_cast<EdgeCount>(r) * a.size();
            ++checked;
        }
        if (!p.check(g.name(), ok)) break;
    }
    p.note("subsets", std::to_string(checked) + " subsets over " + std::to_string(corpus.size()) + " graphs");
    return p.finish();
}

std::vector<Graph> named_corpus() {
    std::vector<Graph> out;
    for (int n = 1; n <= 6; ++n) out.push_back(complete_graph(n));
    for (int n = 1; n <= 7; ++n) {
        out.push_back(path_graph(n));
        out.push_back(star_graph(n));
        out.push_back(empty_graph(n));
    }
    for (int n = 3; n <= 8; ++n) out.push_back(cycle_graph(n));
    out.push_back(petersen_graph());
    out.push_back(graph_x());
    out.push_back(graph_y());
    out.push_back(graph_z(1));
    out.push_back(graph_z(2));
    out.push_back(cartesian_power(complete_graph(2), 3).renamed("Q3"));
    out.push_back(cartesian_power(complete_graph(2), 4).renamed("Q4"));
    out.push_back(cartesian_power(complete_graph(3), 2).renamed("K3^2"));
    out.push_back(cartesian_product(path_graph(3), path_graph(3)).renamed("grid(3,3)"));
    out.push_back(join(empty_graph(2), empty_graph(3)).renamed("K2,3"));
    return out;
}

std::vector<Graph> random_corpus(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> prob(0.25, 0.85);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) out.push_back(random_connected_graph(2 + static_cast<int>(rng() % 8), prob(rng), rng));
    return out;
}

CasebookResult claim_gap_lemma(const CasebookOptions& o) {
    Pipeline p;
    int with_ns = 0;
    auto corpus = named_corpus();
    for (auto& g : random_corpus(o.seed + 1, 100)) corpus.push_back(std::move(g));
    for (const auto& g : corpus) {
        const IsoProfile profile = iso_profile(g, o.limits, o.threads);
        if (!find_nested_solutions(g, profile).has_ns()) continue;
        ++with_ns;
        const auto gap = gap_check(delta_of(profile));
        if (!p.check(g.name(), gap.pass, gap.pass ? "" : "gap at i = " + std::to_string(*gap.first_violation))) break;
    }
    p.note("graphs-with-ns", std::to_string(with_ns) + " of " + std::to_string(corpus.size()));
    return p.finish();
}

// Factor truncations: a graph relabelled by its optimal order, cut to its first k vertices.
std::vector<std::pair<OrderedFactor, DeltaSequence>> weight_factors(const SolverLimits& limits) {
    std::vector<std::pair<OrderedFactor, DeltaSequence>> out;
    for (const Graph& base : {complete_graph(5), path_graph(5), cycle_graph(5), petersen_graph()}) {
        const auto ordered = OrderedFactor::with_nested_solutions(base, limits);
        const Graph relabeled = base.relabeled(ordered.order);
        for (int k = 1; k <= 5; ++k) {
            Graph t = relabeled.prefix_subgraph(k);
            std::vector<int> identity(k);
            for (int i = 0; i < k; ++i) identity[i] = i;
            const auto profile = iso_profile(t, limits);
            out.push_back({OrderedFactor{t, identity}, delta_of(profile, true)});
        }
    }
    return out;
}

CasebookResult claim_weight_formula(const CasebookOptions& o) {
    Pipeline p;
    long long diagrams = 0;
    const auto factors = weight_factors(o.limits);
    for (const auto& [h, dh] : factors) {
        for (const auto& [g, dg] : factors) {
            const Graph product = cartesian_product(h.graph, g.graph);
            // All height vectors in the box, by odometer.
            Diagram d = Diagram::empty(h.graph.order(), g.graph.order());
            bool ok = true;
            for (;;) {
                if (d.valid()) {
                    ++diagrams;
                    if (diagram_weight(dh, dg, d) != induced_edges(product, d.to_set())) {
                        ok = false;
                        break;
                    }
                }
                int x = 0;
                while (x < d.columns() && d.heights[x] == d.box_height) d.heights[x++] = 0;
                if (x == d.columns()) break;
                ++d.heights[x];
            }
            if (!ok) {
                p.check("box " + product.name(), false, "mismatch at " + d.to_string());
                return p.finish();
            }
        }
    }
    p.check("all-small-boxes", true, std::to_string(diagrams) + " diagrams");

    std::mt19937_64 rng(o.seed + 2);
    for (const Graph& base : {petersen_graph(), graph_z(2)}) {
        const auto ordered = OrderedFactor::with_nested_solutions(base, o.limits);
        const Graph g = base.relabeled(ordered.order);
        const DeltaSequence d = delta_of(iso_profile(g, o.limits, o.threads), true);
        const Graph square = cartesian_product(g, g);
        const int n = g.order();
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            std::vector<int> h(n);
            for (auto& v : h) v = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
            std::sort(h.begin(), h.end(), std::greater<>());
            const Diagram diagram(h, n);
            ok = diagram_weight(d, d, diagram) == induced_edges(square, diagram.to_set());
        }
        p.check("random " + std::to_string(n) + "x" + std::to_string(n), ok, ok ? "1000 diagrams" : "mismatch");
    }
    return p.finish();
}

CasebookResult claim_compression_dp(const CasebookOptions& o) {
    Pipeline p;
    const std::vector<std::pair<Graph, Graph>> pairs{{complete_graph(2), complete_graph(2)},
                                                     {complete_graph(2), complete_graph(3)},
                                                     {complete_graph(3), complete_graph(3)},
                                                     {path_graph(3), path_graph(3)}};
    for (const auto& [h, g] : pairs) {
        const auto dh = delta_of(h, o.limits);
        const auto dg = delta_of(g, o.limits);
        const CompressedOptimum opt(dh, dg);
        const Graph product = cartesian_product(h, g);
        const IsoProfile brute = iso_profile(product, o.limits, o.threads);
        std::vector<EdgeCount> dp;
        for (int m = 0; m <= opt.max_size(); ++m) dp.push_back(opt.optimum(m));
        p.check(product.name(), dp == brute.induced, "I = " + join_ints(dp));
    }
    return p.finish();
}

CasebookResult claim_uniqueness_complete(const CasebookOptions& o) {
    Pipeline p;
    for (int n = 3; n <= 5; ++n) {
        const auto e = enumerate_compressed_optimal_orders(complete_graph(n), 16, o.limits);
        p.check("complete(" + std::to_string(n) + ")^2", e.exactly_lex_and_colex(),
                std::to_string(e.total) + " chains (lex " + std::to_string(e.lex) + ", colex " +
                    std::to_string(e.colex) + ", other " + std::to_string(e.other) + ")");
    }
    return p.finish();
}

CasebookResult claim_z_reading(const CasebookOptions& o) {
    Pipeline p;
    const Graph two_part = join(graph_x(), graph_y()).renamed("X*Y");
    const Graph three_part = graph_z(2);
    const auto d_two = delta_of(iso_profile(two_part, o.limits, o.threads));
    const auto d_three = delta_of(iso_profile(three_part, o.limits, o.threads));
    p.note("X*Y", std::to_string(two_part.order()) + " vertices, delta " + d_two.to_string());
    p.note("X*Y*Y", std::to_string(three_part.order()) + " vertices, delta " + d_three.to_string());
    p.check("X*Y-differs", d_two.entries() != printed_z2_delta());
    p.check("X*Y*Y-matches", d_three.entries() == printed_z2_delta());
    return p.finish();
}

CasebookResult claim_counterexample(const CasebookOptions& o) {
    CounterexampleOptions c;
    c.limits = o.limits;
    c.threads = o.threads;
    return verify_counterexample(c);
}

CasebookResult claim_uniqueness_z2(const CasebookOptions& o) { return check_uniqueness(graph_z(2), 16, o.limits); }

CasebookResult claim_uniqueness_petersen(const CasebookOptions& o) {
    return check_uniqueness(petersen_graph(), 16, o.limits);
}

CasebookResult claim_symmetry_regularity(const CasebookOptions& o) {
    Pipeline p;
    auto corpus = named_corpus();
    const auto randoms = random_corpus(o.seed + 3, 120);
    corpus.insert(corpus.end(), randoms.begin(), randoms.end());
    int symmetric = 0;
    for (const auto& g : corpus) {
        const auto verdict = regularity_crosscheck(g, delta_of(iso_profile(g, o.limits, o.threads)));
        symmetric += verdict.symmetric;
        if (!p.check(g.name(), verdict.consistent,
                     std::string(verdict.symmetric ? "symmetric" : "asymmetric") + "/" +
                         (verdict.regular ? "regular" : "irregular")))
            break;
    }
    p.note("corpus", std::to_string(corpus.size()) + " graphs, " + std::to_string(symmetric) + " symmetric");
    return p.finish();
}

CasebookResult power_claim(const Graph& g, int d, const CasebookOptions& o) {
    Pipeline p;
    PowerCheckOptions opts;
    opts.limits = o.limits;
    opts.threads = o.threads;
    const auto report = power_lex_check(g, d, opts);
    p.check(report.subject, report.pass,
            std::to_string(report.passing_sizes()) + "/" + std::to_string(report.sizes.size()) + " sizes");
    return p.finish();
}

CasebookResult claim_local_global_small(const CasebookOptions& o) {
    Pipeline p;
    for (int d : {3, 4}) {
        PowerCheckOptions opts;
        opts.limits = o.limits;
        opts.threads = o.threads;
        const auto report = power_lex_check(complete_graph(2), d, opts);
        p.check(report.subject, report.pass,
                std::to_string(report.passing_sizes()) + "/" + std::to_string(report.sizes.size()) + " sizes");
    }
    return p.finish();
}

CasebookResult claim_local_global_k3_cube(const CasebookOptions& o) { return power_claim(complete_graph(3), 3, o); }

}  // namespace

const std::vector<EdgeCount>& printed_z2_delta() {
    static const std::vector<EdgeCount> d{0, 1, 2, 3, 4, 5, 6, 7, 7, 6, 7, 8, 9, 10, 11, 12, 13};
    return d;
}

CasebookResult verify_counterexample(const CounterexampleOptions& options) {
    Pipeline p;
    const Graph z = options.build();
    p.note("build", std::to_string(z.order()) + " vertices, " + std::to_string(z.edge_count()) + " edges");
    if (z.order() > std::min(options.limits.profile_cap, kProfileHardCap)) {
        p.check("profile", false, "graph exceeds the exhaustive cap");
        return p.finish();
    }
    const IsoProfile profile = iso_profile(z, options.limits, options.threads);
    p.note("profile", "2^" + std::to_string(z.order()) + " subsets");

    const DeltaSequence delta = delta_of(profile);
    if (!p.check("delta-match", delta.entries() == printed_z2_delta(), delta.to_string())) return p.finish();

    const NsResult ns = find_nested_solutions(z, profile);
    if (!p.check("nested-solutions", ns.has_ns(), "deepest prefix " + std::to_string(ns.deepest_prefix)))
        return p.finish();
    if (!p.check("order-verified", verify_order(z, profile, ns.order->order).pass)) return p.finish();

    const DeltaSequence verified(delta.entries(), z.name(), true);
    RegularityVerdict verdict = regularity_crosscheck(z, verified);
    if (options.invert_symmetry) {
        verdict.symmetric = !verdict.symmetric;
        verdict.consistent = verdict.symmetric == verdict.regular;
    }
    if (!p.check("regularity-crosscheck", verdict.consistent)) return p.finish();

    const SymmetryCheck sym = is_symmetric(verified);
    if (!p.check("asymmetry", !sym.symmetric && sym.first_asymmetric == 9,
                 sym.symmetric ? "symmetric" : "first asymmetric index " + std::to_string(*sym.first_asymmetric)))
        return p.finish();
    if (!p.check("irregular", !z.is_regular())) return p.finish();

    const OptimalityReport lex = verify_lex_square(z, options.limits);
    p.check("lex-square", lex.pass,
            std::to_string(lex.passing_sizes()) + "/" + std::to_string(lex.sizes.size()) + " sizes");
    return p.finish();
}

CasebookResult check_uniqueness(const Graph& g, std::size_t cap, const SolverLimits& limits) {
    Pipeline p;
    const IsoProfile profile = iso_profile(g, limits);
    if (!find_nested_solutions(g, profile).has_ns())
        throw PreconditionError((g.name().empty() ? std::string("graph") : g.name()) + " has no nested solutions");
    const DeltaSequence d = delta_of(profile, true);
    const DenseCheck dense = is_delta_dense(d);
    p.note("delta", d.to_string());
    p.note("delta-dense", dense.dense ? "yes" : "no (exploratory mode)");

    const ChainEnumeration e = enumerate_compressed_optimal_orders(d, d, cap);
    std::ostringstream summary;
    summary << e.total << " chains (lex " << e.lex << ", colex " << e.colex << ", other " << e.other << ")";
    for (std::size_t i = 0; i < e.chains.size(); ++i) {
        std::ostringstream cells;
        for (auto [x, y] : e.chains[i].cells) cells << '(' << x << ',' << y << ')';
        p.note("chain " + std::to_string(i + 1) + " [" + to_string(e.chains[i].kind) + "]", cells.str());
    }
    if (!dense.dense) {
        p.note("compressed-optimal-orders", summary.str());
        return p.finish(true);
    }
    p.check("compressed-optimal-orders", e.exactly_lex_and_colex(), summary.str());
    return p.finish();
}

const std::vector<Claim>& casebook_claims() {
    static const std::vector<Claim> claims{
        {"delta-sequences", "delta of K_n is (0,1,...,n-1); of any tree (0,1,...,1); of Petersen (0,1,1,1,2,1,2,2,2,3)",
         false, claim_delta_sequences},
        {"segment-structure", "K_n has one monotone segment, Petersen six, a tree on n vertices n-1", false,
         claim_segments},
        {"delta-dense", "K_n is delta-dense; Petersen and trees on at least three vertices are not", false,
         claim_delta_dense},
        {"regular-identity", "for an r-regular graph |Theta(A)| + 2|I(A)| = r|A|", false, claim_regular_identity},
        {"gap-lemma", "a graph with nested solutions has delta(i+1) - delta(i) <= 1", false, claim_gap_lemma},
        {"weight-formula", "Bezrukov: a compressed A has |I(A)| = sum over (x,y) in A of delta_H(x) + delta_G(y)",
         false, claim_weight_formula},
        {"compression-dp", "optimising over compressed sets gives I(m) of the product for factors with NS", false,
         claim_compression_dp},
        {"uniqueness-complete", "for delta-dense G with NS, lex and colex are the only compressed optimal orders of G^2 "
                                "(K_3, K_4, K_5)",
         false, claim_uniqueness_complete},
        {"z-reading", "Z_2 read as X*Y*Y (join) reproduces the printed 17-entry delta; X*Y does not", false,
         claim_z_reading},
        {"counterexample", "Z_2 is irregular yet lex is optimal for Z_2^2, refuting the Bezrukov-Elsasser conjecture",
         false, claim_counterexample},
        {"uniqueness-z2", "lex and colex are the only compressed optimal orders of Z_2^2", false, claim_uniqueness_z2},
        {"uniqueness-petersen", "compressed optimal orders of Petersen^2 (not delta-dense; exploratory)", false,
         claim_uniqueness_petersen},
        {"symmetry-regularity", "Bonnet-Sykora: delta_G is symmetric iff G is regular", false,
         claim_symmetry_regularity},
        {"local-global-small", "Ahlswede-Cai spot check: lex is optimal for K_2^3 and K_2^4", false,
         claim_local_global_small},
        {"local-global-k3-cube", "Ahlswede-Cai spot check: lex is optimal for K_3^3 (2^27 subsets)", true,
         claim_local_global_k3_cube},
    };
    return claims;
}

const Claim& find_claim(const std::string& id) {
    for (const auto& c : casebook_claims())
        if (c.id == id) return c;
    throw InputError("unknown casebook claim '" + id + "'");
}

CasebookResult run_claim(const Claim& c, const CasebookOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    CasebookResult r = c.run(options);
    r.id = c.id;
    r.claim = c.claim;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace eip
