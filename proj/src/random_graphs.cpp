#include "eip/random_graphs.hpp"

#include <algorithm>
#include <set>

#include "eip/errors.hpp"

namespace eip {

namespace {

Graph complement(const Graph& g) {
    std::vector<Edge> e;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph::from_edge_list(g.order(), e);
}

}  // namespace

Graph random_regular_graph(int n, int d, std::mt19937_64& rng) {
    if (n < 1 || d < 0 || d >= n || (n * d) % 2 != 0)
        throw InputError("no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
    if (2 * d > n - 1) {
        Graph g = complement(random_regular_graph(n, n - 1 - d, rng));
        return g.renamed("random-regular(" + std::to_string(n) + "," + std::to_string(d) + ")");
    }
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) points.push_back(v);
    for (;;) {
        std::shuffle(points.begin(), points.end(), rng);
        std::set<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
            auto [u, v] = std::minmax(points[i], points[i + 1]);
            simple = u != v && edges.emplace(u, v).second;
        }
        if (simple)
            return Graph::from_edge_list(n, {edges.begin(), edges.end()},
                                         "random-regular(" + std::to_string(n) + "," + std::to_string(d) + ")");
    }
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    if (n < 1) throw InputError("random graph needs n >= 1");
    if (n > 1 && p <= 0.0) throw InputError("edge probability must be positive");
    std::bernoulli_distribution coin(std::min(p, 1.0));
    for (;;) {
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) e.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, e, "random-connected(" + std::to_string(n) + ")");
        if (g.is_connected()) return g;
    }
}

VertexSet random_subset(int n, std::mt19937_64& rng) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (rng() & 1U) s.insert(v);
    return s;
}

}  // namespace eip
