#include "doctest.h"

#include <random>

#include "eip/errors.hpp"
#include "eip/graph.hpp"
#include "eip/random_graphs.hpp"

using namespace eip;

TEST_CASE("from_edge_list builds, deduplicates and validates") {
    const Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2 == complete_graph(2));

    const Graph x = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(x == graph_x());

    CHECK(Graph::from_edge_list(3, {}).edge_count() == 0);
    CHECK(Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), InputError);
}

TEST_CASE("named constructors") {
    CHECK(complete_graph(4).edge_count() == 6);
    const Graph p = petersen_graph();
    CHECK(p.order() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(p.regular_degree() == 3);
    CHECK(graph_y().order() == 6);
    CHECK(graph_y().edge_count() == 6);
    CHECK(star_graph(4).edge_count() == 3);
    CHECK(cycle_graph(5).regular_degree() == 2);
    CHECK_THROWS_AS(complete_graph(0), InputError);
    CHECK_THROWS_AS(path_graph(-2), InputError);
    CHECK_THROWS_AS(cycle_graph(2), InputError);
    CHECK_THROWS_AS(graph_z(0), InputError);
}

TEST_CASE("join") {
    CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
    const Graph k23 = join(empty_graph(2), empty_graph(3));
    CHECK(k23.order() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK_FALSE(k23.adjacent(0, 1));
    CHECK(k23.adjacent(1, 4));

    const Graph xy = join(graph_x(), graph_y());
    CHECK(xy.order() == 11);
    CHECK(xy.edge_count() == 3 + 6 + 30);

    const Graph z2 = graph_z(2);
    CHECK(z2.order() == 17);
    CHECK(z2.edge_count() == 111);
    CHECK_FALSE(z2.is_regular());
}

TEST_CASE("cartesian products and powers") {
    const Graph c4 = cartesian_product(complete_graph(2), complete_graph(2));
    CHECK(c4.order() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.regular_degree() == 2);

    CHECK(cartesian_power(complete_graph(2), 3).edge_count() == 12);
    CHECK(cartesian_product(path_graph(3), path_graph(3)).edge_count() == 12);
    CHECK(cartesian_power(complete_graph(2), 1) == complete_graph(2));
    CHECK(cartesian_power(complete_graph(3), 2).edge_count() == 18);
    CHECK(cartesian_power(graph_z(2), 2).order() == 289);

    CHECK_THROWS_AS(cartesian_power(complete_graph(2), 0), InputError);
    CHECK_THROWS_AS(cartesian_power(complete_graph(2), 13), CapacityError);
    CHECK_THROWS_AS(cartesian_product(complete_graph(65), complete_graph(64)), CapacityError);
    CHECK(cartesian_power(complete_graph(2), 12).order() == 4096);
}

TEST_CASE("power labels are base-n tuples with the first coordinate most significant") {
    const Graph g = path_graph(3);
    const Graph p = cartesian_power(g, 3);
    auto label = [](int a, int b, int c) { return (a * 3 + b) * 3 + c; };
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int a2 = 0; a2 < 3; ++a2)
                    for (int b2 = 0; b2 < 3; ++b2)
                        for (int c2 = 0; c2 < 3; ++c2) {
                            const int diffs = (a != a2) + (b != b2) + (c != c2);
                            const bool expect = diffs == 1 && ((a != a2 && g.adjacent(a, a2)) ||
                                                               (b != b2 && g.adjacent(b, b2)) ||
                                                               (c != c2 && g.adjacent(c, c2)));
                            CHECK(p.adjacent(label(a, b, c), label(a2, b2, c2)) == expect);
                        }
}

TEST_CASE("edge counting") {
    const Graph p = petersen_graph();
    CHECK(induced_edges(p, p.all_vertices()) == 15);
    CHECK(induced_edges(complete_graph(2), VertexSet(2, {0, 1})) == 1);
    CHECK(induced_edges(complete_graph(4), VertexSet(4, {0, 1, 2})) == 3);

    CHECK(cross_edges(complete_graph(2), VertexSet(2, {0}), VertexSet(2, {1})) == 1);
    CHECK(cross_edges(path_graph(3), VertexSet(3, {0}), VertexSet(3, {2})) == 0);
    CHECK(cross_edges(complete_graph(4), VertexSet(4, {0, 1}), VertexSet(4, {2, 3})) == 4);

    CHECK(boundary_edges(cycle_graph(4), VertexSet(4, {0, 1})) == 2);
    CHECK(boundary_edges(p, VertexSet(10)) == 0);
    CHECK(boundary_edges(p, VertexSet(10, {0, 1, 2, 3, 4})) == 3 * 5 - 2 * 5);
}

TEST_CASE("properties on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = random_connected_graph(n, 0.4, rng);
        for (int v = 0; v < n; ++v) {
            CHECK_FALSE(g.adjacent(v, v));
            for (int u = 0; u < n; ++u) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
        const VertexSet a = random_subset(n, rng);
        const VertexSet b = random_subset(n, rng);
        EdgeCount degsum = 0;
        for (int v : a.members()) degsum += g.degree(v);
        CHECK(boundary_edges(g, a) + 2 * induced_edges(g, a) == degsum);
        CHECK(cross_edges(g, a, b) == cross_edges(g, b, a));
        CHECK(cross_edges(g, a, a) == induced_edges(g, a));

        const Graph h = random_connected_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
        CHECK(cartesian_product(g, h).edge_count() == g.order() * h.edge_count() + h.order() * g.edge_count());
        CHECK(join(g, h).edge_count() == g.edge_count() + h.edge_count() + g.order() * h.order());
    }
}

TEST_CASE("random regular graphs are regular and simple") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 10; ++n)
        for (int d = 0; d < n; ++d) {
            if ((n * d) % 2) {
                CHECK_THROWS_AS(random_regular_graph(n, d, rng), InputError);
                continue;
            }
            const Graph g = random_regular_graph(n, d, rng);
            CHECK(g.regular_degree() == d);
        }
}

TEST_CASE("relabeling and prefix subgraphs") {
    const Graph p = path_graph(4);
    const Graph r = p.relabeled({1, 0, 2, 3});  // old vertex 1 becomes 0
    CHECK(r.adjacent(0, 1));
    CHECK(r.adjacent(0, 2));
    CHECK_FALSE(r.adjacent(1, 2));
    CHECK(p.prefix_subgraph(2) == complete_graph(2));
    CHECK_THROWS_AS(p.relabeled({0, 0, 1, 2}), InputError);
}

TEST_CASE("vertex set hex encoding round-trips") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 300);
        const VertexSet s = random_subset(n, rng);
        CHECK(VertexSet::from_hex(n, s.to_hex()) == s);
    }
    CHECK(VertexSet(5, {0, 1, 2, 3, 4}).to_hex() == "0x1f");
    CHECK(VertexSet(5).to_hex() == "0x0");
    CHECK_THROWS_AS(VertexSet::from_hex(4, "0x1f"), InputError);
    CHECK_THROWS_AS(VertexSet::from_hex(8, "0xzz"), InputError);
}
