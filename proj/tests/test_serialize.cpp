#include "doctest.h"

#include <sstream>

#include "eip/errors.hpp"
#include "eip/graph_io.hpp"
#include "eip/product_compress.hpp"
#include "eip/serialize.hpp"

using namespace eip;
using nlohmann::json;

namespace {

template <typename T>
T round_trip(const T& value) {
    const json j = value;
    return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("JSON round trips") {
    const Graph pet = petersen_graph();
    const IsoProfile profile = iso_profile(pet);
    CHECK(round_trip(profile) == profile);

    const NsResult ns = find_nested_solutions(pet, profile);
    REQUIRE(ns.has_ns());
    CHECK(round_trip(*ns.order) == *ns.order);
    const NsResult back = round_trip(ns);
    CHECK(back.order == ns.order);
    CHECK(back.deepest_prefix == ns.deepest_prefix);
    CHECK(back.objective == ns.objective);

    const DeltaSequence d = delta_of(profile, true);
    CHECK(round_trip(d) == d);
    const json dj = d;
    CHECK(dj.at("delta_dense") == false);
    CHECK(dj.at("symmetric") == true);
    CHECK(dj.at("text") == "(0,1,1,1,2,1,2,2,2,3)");

    const SegmentDecomposition s = segments_of(d);
    CHECK(round_trip(s) == s);

    const OptimalityReport report = verify_lex_square(path_graph(3));
    CHECK(round_trip(report) == report);
    CHECK(json(report).at("sizes").at(0).at("witness").is_null());

    const Diagram diagram({3, 1, 0}, 3);
    CHECK(round_trip(diagram) == diagram);
    CHECK(round_trip(lex_chain(3, 2)) == lex_chain(3, 2));

    const json e = enumerate_compressed_optimal_orders(complete_graph(3), 5);
    CHECK(e.at("total") == 2);
    CHECK(e.at("chains").size() == 2);

    const json w = optimal_witnesses(pet, 4, 3);
    CHECK(w.at("total") == 70);
    CHECK(w.at("sets").size() == 3);
}

TEST_CASE("profile CSV round trip") {
    const IsoProfile profile = iso_profile(graph_x());
    std::stringstream ss;
    write_profile_csv(ss, profile);
    CHECK(ss.str().rfind("m,I,Theta,witness\n", 0) == 0);
    const IsoProfile back = read_profile_csv(ss);
    CHECK(back.n == profile.n);
    CHECK(back.induced == profile.induced);
    CHECK(back.boundary == profile.boundary);
    CHECK(back.induced_witness == profile.induced_witness);

    std::istringstream bad("m,I,Theta,witness\n0,zero,0,0x0\n");
    CHECK_THROWS_AS(read_profile_csv(bad), InputError);
}

TEST_CASE("edge list IO") {
    std::stringstream ss;
    write_edge_list(ss, petersen_graph());
    const Graph g = read_edge_list(ss);
    CHECK(g.order() == 10);
    CHECK(g.edges() == petersen_graph().edges());

    std::istringstream with_comments("# a triangle\nn 4\n0 1\n1 2 # middle\n2 0\n");
    const Graph t = read_edge_list(with_comments);
    CHECK(t.order() == 4);
    CHECK(t.edge_count() == 3);
    CHECK(t.degree(3) == 0);

    std::istringstream loop("n 3\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(loop), InputError);
    std::istringstream range("n 3\n0 3\n");
    CHECK_THROWS_AS(read_edge_list(range), InputError);
    std::istringstream junk("n 3\n0 x\n");
    CHECK_THROWS_AS(read_edge_list(junk), InputError);
}

TEST_CASE("graph expressions") {
    CHECK(parse_graph_expression("petersen").edges() == petersen_graph().edges());
    CHECK(parse_graph_expression("Z(2)").edge_count() == 111);
    CHECK(parse_graph_expression("join(X, join(Y, Y))").edges() == graph_z(2).edges());
    const Graph q3 = parse_graph_expression("power(complete(2), 3)");
    CHECK(q3.order() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(parse_graph_expression(" product( path(3) , cycle(4) ) ").order() == 12);
    CHECK(parse_graph_expression("union(complete(3), empty(2))").edge_count() == 3);
    CHECK(parse_graph_expression("star(5)").max_degree() == 4);

    CHECK_THROWS_AS(parse_graph_expression("complete("), InputError);
    CHECK_THROWS_AS(parse_graph_expression("banana(3)"), InputError);
    CHECK_THROWS_AS(parse_graph_expression("cycle(2)"), InputError);
    CHECK_THROWS_AS(parse_graph_expression("complete(3) extra"), InputError);
    CHECK_THROWS_AS(parse_graph_expression("power(complete(3), 9)"), CapacityError);
}
