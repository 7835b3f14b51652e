#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eip/delta.hpp"
#include "eip/exact_solver.hpp"
#include "eip/graph.hpp"
#include "eip/report.hpp"

namespace eip {

// Conventions for a two-factor product H□G:
//   - cell (x, y) has x in 0..n_H-1 (column) and y in 0..n_G-1 (row);
//   - both coordinates are ranks in an optimal order of their factor;
//   - the product vertex label is x * n_G + y, matching cartesian_product(H, G).

/// A compressed set stored as column heights: (x, y) is a member iff y < heights[x].
struct Diagram {
    std::vector<int> heights;
    int box_height = 0;  ///< n_G

    Diagram() = default;
    Diagram(std::vector<int> h, int box) : heights(std::move(h)), box_height(box) {}
    static Diagram empty(int columns, int box_height) { return {std::vector<int>(columns, 0), box_height}; }

    int columns() const { return static_cast<int>(heights.size()); }
    int size() const;
    bool contains(int x, int y) const { return y < heights[x]; }
    /// Heights are non-increasing and within 0..box_height.
    bool valid() const;

    /// Cell (x, heights[x]) can be added without breaking validity.
    bool addable(int x) const;

    /// Members as product labels x * box_height + y.
    VertexSet to_set() const;

    /// "h0,h1,...,h_{n_H-1}"
    std::string to_string() const;
    static Diagram parse(const std::string& text, int box_height);

    friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Σ over cells (x, y) of dH(x+1) + dG(y+1). Equals the induced-edge count
/// of the corresponding set when both factors are labelled by optimal orders.
EdgeCount diagram_weight(const DeltaSequence& dH, const DeltaSequence& dG, const Diagram& d);

/// Best weight over all diagrams of every size in an n_H × n_G box.
///
/// The table is a column-by-column recursion on (column, cells left, height
/// cap), filled once for all sizes in O(n_H · n_H n_G · n_G^2).
class CompressedOptimum {
public:
    CompressedOptimum(const DeltaSequence& dH, const DeltaSequence& dG);

    int max_size() const { return columns_ * rows_; }
    EdgeCount optimum(int m) const;
    /// Among optimal diagrams of size m, the one with the lexicographically
    /// greatest height vector (equivalently, the least set under label order;
    /// the lex initial segment whenever that is optimal).
    Diagram witness(int m) const;

private:
    EdgeCount& at(int x, int r, int cap) { return table_[index(x, r, cap)]; }
    EdgeCount at(int x, int r, int cap) const { return table_[index(x, r, cap)]; }
    std::size_t index(int x, int r, int cap) const {
        return (static_cast<std::size_t>(x) * (max_size() + 1) + r) * (rows_ + 1) + cap;
    }
    EdgeCount column_weight(int x, int h) const { return h * dh_[x] + prefix_g_[h]; }

    int columns_;
    int rows_;
    std::vector<EdgeCount> dh_;        // dH(x+1)
    std::vector<EdgeCount> prefix_g_;  // dG(1) + ... + dG(h)
    std::vector<EdgeCount> table_;
};

struct CompressedMax {
    EdgeCount weight = 0;
    Diagram witness;
};

CompressedMax max_compressed(const DeltaSequence& dH, const DeltaSequence& dG, int m);

/// A factor graph with one of its optimal orders; order[i] is the vertex of rank i.
struct OrderedFactor {
    Graph graph;
    std::vector<int> order;

    /// Runs the nested-solution search; throws PreconditionError without NS.
    static OrderedFactor with_nested_solutions(const Graph& g, const SolverLimits& limits = {});
};

struct Compression {
    VertexSet set;    ///< in product labels of cartesian_product(H.graph, G.graph)
    Diagram diagram;  ///< the same set in rank coordinates
    int rounds = 0;
};

/// Alternately pushes every column and every row section down to an initial
/// segment of the factor order until nothing moves. Cardinality is preserved
/// and the induced-edge count never drops. Throws eip::Error if the round
/// bound n_H · n_G · max(n_H, n_G) is hit.
Compression compress_set(const OrderedFactor& h, const OrderedFactor& g, const VertexSet& a);

enum class ChainKind { lex, colex, other };

std::string to_string(ChainKind kind);

/// A chain of diagrams growing one cell at a time from empty to the full box.
struct CompressedChain {
    int columns = 0;
    int box_height = 0;
    std::vector<std::pair<int, int>> cells;  ///< cells[k] is added at step k+1
    ChainKind kind = ChainKind::other;

    Diagram prefix(int k) const;
    /// Every prefix is a valid diagram and the chain ends at the full box.
    bool valid() const;

    friend bool operator==(const CompressedChain&, const CompressedChain&) = default;
};

/// Fills column 0 bottom to top, then column 1, and so on.
CompressedChain lex_chain(int columns, int box_height);
/// Fills row 0 left to right, then row 1, and so on.
CompressedChain colex_chain(int columns, int box_height);

/// Lex initial segments of G² against the compressed optimum for every size.
/// Throws PreconditionError if G has no nested solutions.
OptimalityReport verify_lex_square(const Graph& g, const SolverLimits& limits = {});

struct ChainEnumeration {
    std::vector<CompressedChain> chains;  ///< at most `cap`, in DFS order by column
    std::uint64_t total = 0;              ///< saturating
    bool truncated = false;
    int lex = 0;
    int colex = 0;
    int other = 0;

    /// The complete set of chains is exactly {lex, colex} (or the single
    /// chain when the two coincide).
    bool exactly_lex_and_colex() const;
};

/// All chains whose every prefix attains the compressed optimum of its size.
ChainEnumeration enumerate_compressed_optimal_orders(const DeltaSequence& dH, const DeltaSequence& dG,
                                                     std::size_t cap);
/// Same for G², after checking that G has nested solutions.
ChainEnumeration enumerate_compressed_optimal_orders(const Graph& g, std::size_t cap,
                                                     const SolverLimits& limits = {});

enum class CheckMode { exhaustive, sampled };

struct PowerCheckOptions {
    CheckMode mode = CheckMode::exhaustive;
    SolverLimits limits;
    int max_vertices = kDefaultMaxVertices;
    std::uint64_t seed = 1;
    int greedy_restarts = 8;
    int threads = 0;
};

/// Lex initial segments of G^d (coordinates ranked by an optimal order of G).
///
/// Exhaustive mode compares against the exact profile of G^d. Sampled mode
/// only compares against greedy and local-search lower bounds, and marks the
/// report evidence-only.
OptimalityReport power_lex_check(const Graph& g, int d, const PowerCheckOptions& options = {});

}  // namespace eip
