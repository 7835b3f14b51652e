#include "eip/graph.hpp"

#include <algorithm>
#include <numeric>

#include "eip/errors.hpp"

namespace eip {

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges, std::string name) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.name_ = std::move(name);
    g.adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint outside 0.." +
                             std::to_string(n - 1));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        g.adj_[u].insert(v);
        g.adj_[v].insert(u);
    }
    g.degree_.resize(n);
    EdgeCount twice = 0;
    for (int v = 0; v < n; ++v) {
        g.degree_[v] = g.adj_[v].size();
        twice += g.degree_[v];
    }
    g.edges_ = twice / 2;
    return g;
}

Graph Graph::renamed(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

int Graph::max_degree() const { return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end()); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u].members())
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return 0;
    for (int d : degree_)
        if (d != degree_[0]) return std::nullopt;
    return degree_[0];
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    VertexSet seen(n_);
    std::vector<int> stack{0};
    seen.insert(0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : (adj_[v] - seen).members()) {
            seen.insert(u);
            stack.push_back(u);
        }
    }
    return seen.size() == n_;
}

Graph Graph::relabeled(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != n_) throw InputError("relabeling must list every vertex once");
    std::vector<int> rank(n_, -1);
    for (int i = 0; i < n_; ++i) {
        int v = order[i];
        if (v < 0 || v >= n_ || rank[v] != -1) throw InputError("relabeling is not a permutation");
        rank[v] = i;
    }
    std::vector<Edge> relabeled_edges;
    for (auto [u, v] : edges()) relabeled_edges.emplace_back(rank[u], rank[v]);
    return from_edge_list(n_, relabeled_edges, name_);
}

Graph Graph::prefix_subgraph(int k) const {
    if (k < 0 || k > n_) throw InputError("prefix size out of range");
    std::vector<Edge> kept;
    for (auto [u, v] : edges())
        if (u < k && v < k) kept.emplace_back(u, v);
    return from_edge_list(k, kept, name_.empty() ? std::string{} : name_ + "[0.." + std::to_string(k) + ")");
}

EdgeCount induced_edges(const Graph& g, const VertexSet& a) {
    EdgeCount twice = 0;
    for (int v : a.members()) twice += g.neighbors(v).intersection_size(a);
    return twice / 2;
}

EdgeCount cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
    // Ordered pairs (u in a, v in b) count an edge inside a∩b twice.
    EdgeCount ordered = 0;
    for (int u : a.members()) ordered += g.neighbors(u).intersection_size(b);
    return ordered - induced_edges(g, a & b);
}

EdgeCount boundary_edges(const Graph& g, const VertexSet& a) {
    EdgeCount out = 0;
    for (int v : a.members()) out += g.degree(v) - g.neighbors(v).intersection_size(a);
    return out;
}

namespace {

void require_positive(int n, const char* what) {
    if (n < 1) throw InputError(std::string(what) + " needs n >= 1, got " + std::to_string(n));
}

void require_within_cap(long long n, int max_vertices) {
    if (n > max_vertices)
        throw CapacityError(std::to_string(n) + " vertices exceeds the cap of " + std::to_string(max_vertices));
}

std::string paren(const std::string& s) { return s.empty() ? "?" : s; }

}  // namespace

Graph complete_graph(int n) {
    require_positive(n, "complete");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edge_list(n, e, "complete(" + std::to_string(n) + ")");
}

Graph path_graph(int n) {
    require_positive(n, "path");
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, e, "path(" + std::to_string(n) + ")");
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, e, "cycle(" + std::to_string(n) + ")");
}

Graph star_graph(int n) {
    require_positive(n, "star");
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return Graph::from_edge_list(n, e, "star(" + std::to_string(n) + ")");
}

Graph empty_graph(int n) {
    require_positive(n, "empty");
    return Graph::from_edge_list(n, {}, "empty(" + std::to_string(n) + ")");
}

Graph petersen_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edge_list(10, e, "petersen");
}

Graph graph_x() { return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {3, 4}}, "X"); }

Graph graph_y() { return Graph::from_edge_list(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}, "Y"); }

Graph graph_z(int copies) {
    require_positive(copies, "Z");
    Graph z = graph_x();
    for (int i = 0; i < copies; ++i) z = join(z, graph_y());
    return z.renamed("Z(" + std::to_string(copies) + ")");
}

Graph disjoint_union(const Graph& g, const Graph& h, int max_vertices) {
    require_within_cap(static_cast<long long>(g.order()) + h.order(), max_vertices);
    std::vector<Edge> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + g.order(), v + g.order());
    return Graph::from_edge_list(g.order() + h.order(), e, "union(" + paren(g.name()) + "," + paren(h.name()) + ")");
}

Graph join(const Graph& g, const Graph& h, int max_vertices) {
    require_within_cap(static_cast<long long>(g.order()) + h.order(), max_vertices);
    std::vector<Edge> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + g.order(), v + g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) e.emplace_back(u, g.order() + v);
    return Graph::from_edge_list(g.order() + h.order(), e, "join(" + paren(g.name()) + "," + paren(h.name()) + ")");
}

Graph cartesian_product(const Graph& g, const Graph& h, int max_vertices) {
    const long long n = static_cast<long long>(g.order()) * h.order();
    require_within_cap(n, max_vertices);
    const int nh = h.order();
    std::vector<Edge> e;
    for (int x = 0; x < g.order(); ++x)
        for (auto [y, v] : h.edges()) e.emplace_back(x * nh + y, x * nh + v);
    for (auto [x, u] : g.edges())
        for (int y = 0; y < nh; ++y) e.emplace_back(x * nh + y, u * nh + y);
    return Graph::from_edge_list(static_cast<int>(n), e,
                                 "product(" + paren(g.name()) + "," + paren(h.name()) + ")");
}

Graph cartesian_power(const Graph& g, int d, int max_vertices) {
    if (d < 1) throw InputError("power exponent must be >= 1, got " + std::to_string(d));
    long long n = 1;
    for (int i = 0; i < d; ++i) {
        n *= g.order();
        require_within_cap(n, max_vertices);
    }
    // Left-nesting keeps x_1 as the most significant digit.
    Graph p = g;
    for (int i = 1; i < d; ++i) p = cartesian_product(p, g, max_vertices);
    return p.renamed("power(" + paren(g.name()) + "," + std::to_string(d) + ")");
}

}  // namespace eip
