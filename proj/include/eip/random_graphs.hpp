#pragma once

#include <random>

#include "eip/graph.hpp"

namespace eip {

/// Uniform-ish random d-regular simple graph on n vertices (pairing model with
/// rejection; dense degrees are generated through the complement).
/// Throws InputError when n*d is odd or d >= n.
Graph random_regular_graph(int n, int d, std::mt19937_64& rng);

/// G(n, p) conditioned on connectivity by rejection.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

/// Each vertex included independently with probability 1/2.
VertexSet random_subset(int n, std::mt19937_64& rng);

}  // namespace eip
