#include "doctest.h"

#include <set>

#include "eip/casebook.hpp"
#include "eip/errors.hpp"

using namespace eip;

TEST_CASE("claim ids are unique and findable") {
    std::set<std::string> ids;
    for (const auto& c : casebook_claims()) {
        CHECK(ids.insert(c.id).second);
        CHECK(&find_claim(c.id) == &c);
        CHECK_FALSE(c.claim.empty());
    }
    CHECK_THROWS_AS(find_claim("no-such-claim"), InputError);
}

TEST_CASE("fast claims pass") {
    for (const auto& c : casebook_claims()) {
        if (c.slow) continue;
        CAPTURE(c.id);
        const auto r = run_claim(c);
        CHECK(r.ok());
        CHECK(r.failed_step.empty());
        CHECK(r.id == c.id);
        CHECK(r.seconds >= 0.0);
    }
    CHECK(run_claim(find_claim("uniqueness-petersen")).status == CaseStatus::evidence_only);
}

TEST_CASE("counterexample pipeline") {
    const auto r = verify_counterexample();
    CHECK(r.status == CaseStatus::pass);
    bool saw_delta = false;
    for (const auto& [step, value] : r.artifacts)
        if (step == "delta-match") {
            saw_delta = true;
            CHECK(value == "(0,1,2,3,4,5,6,7,7,6,7,8,9,10,11,12,13)");
        }
    CHECK(saw_delta);
}

TEST_CASE("counterexample pipeline catches a misbuilt graph") {
    CounterexampleOptions o;
    o.build = [] { return join(graph_x(), graph_y()); };
    const auto r = verify_counterexample(o);
    CHECK(r.status == CaseStatus::fail);
    CHECK(r.failed_step == "delta-match");
}

TEST_CASE("counterexample pipeline catches an inverted symmetry predicate") {
    CounterexampleOptions o;
    o.invert_symmetry = true;
    const auto r = verify_counterexample(o);
    CHECK(r.status == CaseStatus::fail);
    CHECK(r.failed_step == "regularity-crosscheck");
}

TEST_CASE("uniqueness checks") {
    for (int n = 3; n <= 5; ++n) CHECK(check_uniqueness(complete_graph(n), 10).status == CaseStatus::pass);
    CHECK(check_uniqueness(graph_z(2), 10).status == CaseStatus::pass);
    CHECK(check_uniqueness(path_graph(4), 10).status == CaseStatus::evidence_only);
    const Graph no_ns = Graph::from_edge_list(10, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}, {7, 8}, {8, 9}, {9, 6}});
    CHECK_THROWS_AS(check_uniqueness(no_ns, 10), PreconditionError);
}

TEST_CASE("casebook result JSON") {
    const auto r = run_claim(find_claim("delta-sequences"));
    const nlohmann::json j = r;
    CHECK(j.at("status") == "pass");
    CHECK(j.get<CasebookResult>() == r);
}
