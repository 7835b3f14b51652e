#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eip/vertex_set.hpp"

namespace eip {

using EdgeCount = std::int64_t;
using Edge = std::pair<int, int>;

/// Default bound on the number of vertices of any constructed graph.
inline constexpr int kDefaultMaxVertices = 4096;

/// Immutable simple undirected graph on vertices 0..n-1 with bit-vector rows.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an unordered edge list; duplicates are merged.
    /// Throws InputError on self-loops or endpoints outside 0..n-1.
    static Graph from_edge_list(int n, const std::vector<Edge>& edges, std::string name = {});

    int order() const { return n_; }
    EdgeCount edge_count() const { return edges_; }
    const std::string& name() const { return name_; }
    Graph renamed(std::string name) const;

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return degree_[v]; }
    const std::vector<int>& degrees() const { return degree_; }
    int max_degree() const;

    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    /// The common degree if every vertex has the same degree.
    std::optional<int> regular_degree() const;
    bool is_regular() const { return regular_degree().has_value(); }
    bool is_connected() const;

    /// Vertex `order[i]` of this graph becomes vertex i of the result.
    Graph relabeled(const std::vector<int>& order) const;

    /// Subgraph induced on vertices 0..k-1.
    Graph prefix_subgraph(int k) const;

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    EdgeCount edges_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<int> degree_;
    std::string name_;
};

// Edge counting. Every set argument must have universe == g.order().

/// |I(A)|: edges with both endpoints in `a`.
EdgeCount induced_edges(const Graph& g, const VertexSet& a);
/// |I(A,B)|: edges {u,v} with u in `a` and v in `b`.
EdgeCount cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b);
/// |Θ(A)|: edges with exactly one endpoint in `a`.
EdgeCount boundary_edges(const Graph& g, const VertexSet& a);

// Named constructors.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph empty_graph(int n);
Graph petersen_graph();
/// Two disjoint paths on 3 and 2 vertices.
Graph graph_x();
/// Two disjoint triangles.
Graph graph_y();
/// X joined with `copies` copies of Y; Z(2) has 17 vertices and 111 edges.
Graph graph_z(int copies);

/// Disjoint union; g's vertices first.
Graph disjoint_union(const Graph& g, const Graph& h, int max_vertices = kDefaultMaxVertices);
/// Disjoint union plus every edge between the two parts.
Graph join(const Graph& g, const Graph& h, int max_vertices = kDefaultMaxVertices);
/// G□H with (x, y) encoded as x * h.order() + y.
Graph cartesian_product(const Graph& g, const Graph& h, int max_vertices = kDefaultMaxVertices);
/// G^d; tuple (x_1..x_d) is the base-n number with x_1 most significant.
Graph cartesian_power(const Graph& g, int d, int max_vertices = kDefaultMaxVertices);

}  // namespace eip
