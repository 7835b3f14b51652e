#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "eip/graph.hpp"

namespace eip {

/// Reads the edge-list text format:
///
///     # comment
///     n 5
///     0 1
///     1 2
///
/// Blank lines and '#' comments (whole-line or trailing) are ignored.
Graph read_edge_list(std::istream& in, int max_vertices = kDefaultMaxVertices);
void write_edge_list(std::ostream& out, const Graph& g);

/// Parses a constructor expression such as "join(X, power(complete(2), 3))".
///
/// Grammar (names are case-insensitive):
///   expr := complete(n) | path(n) | cycle(n) | star(n) | empty(n) | petersen
///         | union(expr, expr) | join(expr, expr) | product(expr, expr)
///         | power(expr, d) | X | Y | Z(n)
Graph parse_graph_expression(const std::string& text, int max_vertices = kDefaultMaxVertices);

/// Resolves a command-line graph argument: an existing file is read as an
/// edge list, anything else is parsed as a constructor expression.
Graph load_graph(const std::string& spec, int max_vertices = kDefaultMaxVertices);

}  // namespace eip
