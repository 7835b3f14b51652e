#include "eip/product_compress.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "eip/errors.hpp"

namespace eip {

// ---------------------------------------------------------------------------
// Diagram

int Diagram::size() const {
    int total = 0;
    for (int h : heights) total += h;
    return total;
}

bool Diagram::valid() const {
    for (int x = 0; x < columns(); ++x) {
        if (heights[x] < 0 || heights[x] > box_height) return false;
        if (x > 0 && heights[x] > heights[x - 1]) return false;
    }
    return true;
}

bool Diagram::addable(int x) const {
    return heights[x] < box_height && (x == 0 || heights[x - 1] > heights[x]);
}

VertexSet Diagram::to_set() const {
    VertexSet s(columns() * box_height);
    for (int x = 0; x < columns(); ++x)
        for (int y = 0; y < heights[x]; ++y) s.insert(x * box_height + y);
    return s;
}

std::string Diagram::to_string() const {
    std::ostringstream out;
    for (int x = 0; x < columns(); ++x) out << (x ? "," : "") << heights[x];
    return out.str();
}

Diagram Diagram::parse(const std::string& text, int box_height) {
    Diagram d;
    d.box_height = box_height;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        try {
            std::size_t used = 0;
            d.heights.push_back(std::stoi(field, &used));
            if (used != field.size()) throw InputError("bad height '" + field + "'");
        } catch (const std::logic_error&) {
            throw InputError("bad height '" + field + "' in diagram '" + text + "'");
        }
    }
    if (!d.valid()) throw InputError("'" + text + "' is not a valid diagram of height " + std::to_string(box_height));
    return d;
}

namespace {

void require_fits(const DeltaSequence& dH, const DeltaSequence& dG, const Diagram& d) {
    if (d.columns() != dH.length() || d.box_height != dG.length())
        throw InputError("diagram is " + std::to_string(d.columns()) + "x" + std::to_string(d.box_height) +
                         " but the factors are " + std::to_string(dH.length()) + "x" + std::to_string(dG.length()));
}

}  // namespace

EdgeCount diagram_weight(const DeltaSequence& dH, const DeltaSequence& dG, const Diagram& d) {
    require_fits(dH, dG, d);
    if (!d.valid()) throw InputError("not a valid diagram: " + d.to_string());
    EdgeCount total = 0;
    for (int x = 0; x < d.columns(); ++x) total += d.heights[x] * dH(x + 1) + dG.cumulative(d.heights[x]);
    return total;
}

// ---------------------------------------------------------------------------
// Compressed optimum

namespace {

constexpr EdgeCount kUnreachable = std::numeric_limits<EdgeCount>::min() / 4;
constexpr std::size_t kMaxTableEntries = std::size_t{1} << 26;

}  // namespace

CompressedOptimum::CompressedOptimum(const DeltaSequence& dH, const DeltaSequence& dG)
    : columns_(dH.length()), rows_(dG.length()), dh_(dH.entries()) {
    const std::size_t entries =
        static_cast<std::size_t>(columns_ + 1) * (static_cast<std::size_t>(max_size()) + 1) * (rows_ + 1);
    if (entries > kMaxTableEntries)
        throw CapacityError("compressed-set table for a " + std::to_string(columns_) + "x" + std::to_string(rows_) +
                            " box is too large");
    prefix_g_.assign(rows_ + 1, 0);
    for (int h = 1; h <= rows_; ++h) prefix_g_[h] = prefix_g_[h - 1] + dG(h);

    table_.assign(entries, kUnreachable);
    for (int cap = 0; cap <= rows_; ++cap) at(columns_, 0, cap) = 0;
    for (int x = columns_ - 1; x >= 0; --x) {
        for (int r = 0; r <= max_size(); ++r) {
            for (int cap = 0; cap <= rows_; ++cap) {
                EdgeCount best = kUnreachable;
                for (int h = 0; h <= std::min(cap, r); ++h) {
                    const EdgeCount rest = at(x + 1, r - h, h);
                    if (rest != kUnreachable) best = std::max(best, column_weight(x, h) + rest);
                }
                at(x, r, cap) = best;
            }
        }
    }
}

EdgeCount CompressedOptimum::optimum(int m) const {
    if (m < 0 || m > max_size())
        throw InputError("size " + std::to_string(m) + " outside 0.." + std::to_string(max_size()));
    return at(0, m, rows_);
}

Diagram CompressedOptimum::witness(int m) const {
    const EdgeCount target = optimum(m);
    Diagram d = Diagram::empty(columns_, rows_);
    int remaining = m;
    int cap = rows_;
    EdgeCount want = target;
    for (int x = 0; x < columns_; ++x) {
        for (int h = std::min(cap, remaining); h >= 0; --h) {
            const EdgeCount rest = at(x + 1, remaining - h, h);
            if (rest != kUnreachable && column_weight(x, h) + rest == want) {
                d.heights[x] = h;
                want = rest;
                remaining -= h;
                cap = h;
                break;
            }
        }
    }
    return d;
}

CompressedMax max_compressed(const DeltaSequence& dH, const DeltaSequence& dG, int m) {
    CompressedOptimum table(dH, dG);
    return {table.optimum(m), table.witness(m)};
}

// ---------------------------------------------------------------------------
// Compression

OrderedFactor OrderedFactor::with_nested_solutions(const Graph& g, const SolverLimits& limits) {
    const NsResult ns = find_nested_solutions(g, limits);
    if (!ns.has_ns())
        throw PreconditionError((g.name().empty() ? std::string("graph") : g.name()) +
                                " has no nested solutions (deepest optimal prefix " +
                                std::to_string(ns.deepest_prefix) + ")");
    return {g, ns.order->order};
}

namespace {

std::vector<int> ranks_of(const OrderedFactor& f) {
    const int n = f.graph.order();
    if (static_cast<int>(f.order.size()) != n) throw InputError("factor order must list every vertex");
    std::vector<int> rank(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = f.order[i];
        if (v < 0 || v >= n || rank[v] != -1) throw InputError("factor order is not a permutation");
        rank[v] = i;
    }
    return rank;
}

// Pushes the occupied entries of each line down to a prefix; returns whether anything moved.
bool compress_lines(std::vector<std::vector<char>>& grid, bool columns) {
    const int nx = static_cast<int>(grid.size());
    const int ny = nx == 0 ? 0 : static_cast<int>(grid[0].size());
    bool moved = false;
    const int lines = columns ? nx : ny;
    const int length = columns ? ny : nx;
    for (int line = 0; line < lines; ++line) {
        auto cell = [&](int i) -> char& { return columns ? grid[line][i] : grid[i][line]; };
        int count = 0;
        for (int i = 0; i < length; ++i) count += cell(i);
        for (int i = 0; i < length; ++i) {
            const char want = i < count ? 1 : 0;
            if (cell(i) != want) {
                cell(i) = want;
                moved = true;
            }
        }
    }
    return moved;
}

}  // namespace

Compression compress_set(const OrderedFactor& h, const OrderedFactor& g, const VertexSet& a) {
    const int nh = h.graph.order();
    const int ng = g.graph.order();
    if (a.universe() != nh * ng) throw InputError("set does not live in the product of the two factors");
    const auto rank_h = ranks_of(h);
    const auto rank_g = ranks_of(g);

    std::vector<std::vector<char>> grid(nh, std::vector<char>(ng, 0));
    for (int v : a.members()) grid[rank_h[v / ng]][rank_g[v % ng]] = 1;

    const int bound = nh * ng * std::max(nh, ng);
    Compression out;
    for (;;) {
        const bool moved_cols = compress_lines(grid, true);
        const bool moved_rows = compress_lines(grid, false);
        if (!moved_cols && !moved_rows) break;
        if (++out.rounds > bound)
            throw Error("compression did not reach a fixpoint within " + std::to_string(bound) + " rounds");
    }

    out.set = VertexSet(nh * ng);
    out.diagram = Diagram::empty(nh, ng);
    for (int x = 0; x < nh; ++x)
        for (int y = 0; y < ng; ++y)
            if (grid[x][y]) {
                out.set.insert(h.order[x] * ng + g.order[y]);
                ++out.diagram.heights[x];
            }
    if (!out.diagram.valid()) throw Error("compression produced an invalid diagram " + out.diagram.to_string());
    return out;
}

// ---------------------------------------------------------------------------
// Chains

std::string to_string(ChainKind kind) {
    switch (kind) {
        case ChainKind::lex: return "lex";
        case ChainKind::colex: return "colex";
        case ChainKind::other: return "other";
    }
    return "other";
}

Diagram CompressedChain::prefix(int k) const {
    if (k < 0 || k > static_cast<int>(cells.size())) throw InputError("chain prefix out of range");
    Diagram d = Diagram::empty(columns, box_height);
    for (int i = 0; i < k; ++i) ++d.heights[cells[i].first];
    return d;
}

bool CompressedChain::valid() const {
    if (static_cast<int>(cells.size()) != columns * box_height) return false;
    Diagram d = Diagram::empty(columns, box_height);
    for (auto [x, y] : cells) {
        if (x < 0 || x >= columns || d.heights[x] != y || !d.addable(x)) return false;
        ++d.heights[x];
    }
    return true;
}

CompressedChain lex_chain(int columns, int box_height) {
    CompressedChain c{columns, box_height, {}, ChainKind::lex};
    for (int x = 0; x < columns; ++x)
        for (int y = 0; y < box_height; ++y) c.cells.emplace_back(x, y);
    return c;
}

CompressedChain colex_chain(int columns, int box_height) {
    CompressedChain c{columns, box_height, {}, ChainKind::colex};
    for (int y = 0; y < box_height; ++y)
        for (int x = 0; x < columns; ++x) c.cells.emplace_back(x, y);
    if (columns <= 1 || box_height <= 1) c.kind = ChainKind::lex;  // the two orders coincide
    return c;
}

namespace {

// Whether every prefix of `chain` attains the compressed optimum.
bool chain_is_optimal(const CompressedChain& chain, const DeltaSequence& dH, const DeltaSequence& dG,
                      const CompressedOptimum& opt) {
    EdgeCount weight = 0;
    for (std::size_t k = 0; k < chain.cells.size(); ++k) {
        auto [x, y] = chain.cells[k];
        weight += dH(x + 1) + dG(y + 1);
        if (weight != opt.optimum(static_cast<int>(k) + 1)) return false;
    }
    return true;
}

DeltaSequence verified_delta(const Graph& g, const SolverLimits& limits) {
    const IsoProfile profile = iso_profile(g, limits);
    const NsResult ns = find_nested_solutions(g, profile);
    if (!ns.has_ns())
        throw PreconditionError((g.name().empty() ? std::string("graph") : g.name()) +
                                " has no nested solutions; the compressed-set reduction does not apply");
    return delta_of(profile, true);
}

class ChainSearch {
public:
    ChainSearch(const DeltaSequence& dH, const DeltaSequence& dG)
        : dh_(dH), dg_(dG), opt_(dH, dG), columns_(dH.length()), rows_(dG.length()) {}

    const CompressedOptimum& optimum() const { return opt_; }

    std::uint64_t completions(Diagram& d, int size, EdgeCount weight) {
        if (size == columns_ * rows_) return 1;
        if (auto it = memo_.find(d.heights); it != memo_.end()) return it->second;
        std::uint64_t total = 0;
        for (int x = 0; x < columns_; ++x) {
            if (!d.addable(x)) continue;
            const EdgeCount next = weight + dh_(x + 1) + dg_(d.heights[x] + 1);
            if (next != opt_.optimum(size + 1)) continue;
            ++d.heights[x];
            const std::uint64_t sub = completions(d, size + 1, next);
            --d.heights[x];
            total = sub > std::numeric_limits<std::uint64_t>::max() - total ? std::numeric_limits<std::uint64_t>::max()
                                                                             : total + sub;
        }
        memo_.emplace(d.heights, total);
        return total;
    }

    void list(Diagram& d, int size, EdgeCount weight, std::vector<std::pair<int, int>>& cells, std::size_t cap,
              std::vector<CompressedChain>& out) {
        if (out.size() >= cap) return;
        if (size == columns_ * rows_) {
            out.push_back({columns_, rows_, cells, ChainKind::other});
            return;
        }
        for (int x = 0; x < columns_ && out.size() < cap; ++x) {
            if (!d.addable(x)) continue;
            const int y = d.heights[x];
            const EdgeCount next = weight + dh_(x + 1) + dg_(y + 1);
            if (next != opt_.optimum(size + 1)) continue;
            ++d.heights[x];
            if (completions(d, size + 1, next) > 0) {
                cells.emplace_back(x, y);
                list(d, size + 1, next, cells, cap, out);
                cells.pop_back();
            }
            --d.heights[x];
        }
    }

private:
    const DeltaSequence& dh_;
    const DeltaSequence& dg_;
    CompressedOptimum opt_;
    int columns_;
    int rows_;
    std::map<std::vector<int>, std::uint64_t> memo_;
};

}  // namespace

OptimalityReport verify_lex_square(const Graph& g, const SolverLimits& limits) {
    const DeltaSequence d = verified_delta(g, limits);
    const CompressedOptimum opt(d, d);
    const CompressedChain lex = lex_chain(d.length(), d.length());

    OptimalityReport report;
    report.subject = "lex on " + (g.name().empty() ? std::string("G") : g.name()) + "^2";
    EdgeCount weight = 0;
    for (std::size_t k = 0; k < lex.cells.size(); ++k) {
        auto [x, y] = lex.cells[k];
        weight += d(x + 1) + d(y + 1);
        SizeCheck row;
        row.size = static_cast<int>(k) + 1;
        row.candidate = weight;
        row.optimum = opt.optimum(row.size);
        row.pass = row.candidate == row.optimum;
        if (!row.pass) row.witness = opt.witness(row.size).to_string();
        report.sizes.push_back(row);
    }
    report.finalize();
    return report;
}

bool ChainEnumeration::exactly_lex_and_colex() const { return total >= 1 && other == 0 && lex == 1 && colex == 1; }

ChainEnumeration enumerate_compressed_optimal_orders(const DeltaSequence& dH, const DeltaSequence& dG,
                                                     std::size_t cap) {
    ChainSearch search(dH, dG);
    ChainEnumeration out;
    Diagram d = Diagram::empty(dH.length(), dG.length());
    out.total = search.completions(d, 0, 0);
    std::vector<std::pair<int, int>> cells;
    search.list(d, 0, 0, cells, cap, out.chains);
    out.truncated = out.chains.size() < out.total;

    const CompressedChain lex = lex_chain(dH.length(), dG.length());
    const CompressedChain colex = colex_chain(dH.length(), dG.length());
    const bool coincide = lex.cells == colex.cells;
    out.lex = chain_is_optimal(lex, dH, dG, search.optimum()) ? 1 : 0;
    out.colex = coincide ? out.lex : (chain_is_optimal(colex, dH, dG, search.optimum()) ? 1 : 0);
    out.other = static_cast<int>(std::min<std::uint64_t>(
        out.total - static_cast<std::uint64_t>(out.lex + (coincide ? 0 : out.colex)),
        static_cast<std::uint64_t>(std::numeric_limits<int>::max())));
    for (auto& c : out.chains) {
        if (c.cells == lex.cells) c.kind = ChainKind::lex;
        else if (c.cells == colex.cells) c.kind = ChainKind::colex;
    }
    return out;
}

ChainEnumeration enumerate_compressed_optimal_orders(const Graph& g, std::size_t cap, const SolverLimits& limits) {
    const DeltaSequence d = verified_delta(g, limits);
    return enumerate_compressed_optimal_orders(d, d, cap);
}

// ---------------------------------------------------------------------------
// Powers

namespace {

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> out(g.order());
    for (int v = 0; v < g.order(); ++v) out[v] = g.neighbors(v).members();
    return out;
}

// Per-size lower bounds on I(m) from greedy growth and swap local search.
std::vector<EdgeCount> heuristic_lower_bounds(const Graph& p, const PowerCheckOptions& options) {
    const int n = p.order();
    const auto adj = adjacency_lists(p);
    std::mt19937_64 rng(options.seed);
    std::vector<EdgeCount> best(n + 1, 0);

    for (int run = 0; run < std::max(1, options.greedy_restarts); ++run) {
        std::vector<int> pull(n, 0);
        std::vector<char> in(n, 0);
        EdgeCount induced = 0;
        int next = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        for (int k = 1; k <= n; ++k) {
            in[next] = 1;
            induced += pull[next];
            for (int u : adj[next]) ++pull[u];
            best[k] = std::max(best[k], induced);
            int chosen = -1;
            int ties = 0;
            for (int v = 0; v < n; ++v) {
                if (in[v]) continue;
                if (chosen < 0 || pull[v] > pull[chosen]) {
                    chosen = v;
                    ties = 1;
                } else if (pull[v] == pull[chosen] && rng() % static_cast<std::uint64_t>(++ties) == 0) {
                    chosen = v;
                }
            }
            next = chosen;
        }
    }

    // Swap local search from random starts on a spread of sizes.
    const int samples = std::min(n, n <= 64 ? n : 16);
    for (int i = 1; i <= samples; ++i) {
        const int m = std::max(1, static_cast<int>(static_cast<long long>(i) * n / (samples + 1)));
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<char> in(n, 0);
        for (int j = 0; j < m; ++j) in[perm[j]] = 1;
        std::vector<int> pull(n, 0);
        EdgeCount induced = 0;
        for (int v = 0; v < n; ++v)
            if (in[v])
                for (int u : adj[v]) {
                    ++pull[u];
                    if (in[u] && u < v) ++induced;
                }
        for (int pass = 0; pass < 4; ++pass) {
            bool improved = false;
            for (int out_v = 0; out_v < n; ++out_v) {
                if (!in[out_v]) continue;
                for (int in_v = 0; in_v < n; ++in_v) {
                    if (in[in_v]) continue;
                    const int gain = pull[in_v] - pull[out_v] - (p.adjacent(out_v, in_v) ? 1 : 0);
                    if (gain <= 0) continue;
                    in[out_v] = 0;
                    for (int u : adj[out_v]) --pull[u];
                    in[in_v] = 1;
                    for (int u : adj[in_v]) ++pull[u];
                    induced += gain;
                    improved = true;
                    break;
                }
            }
            if (!improved) break;
        }
        best[m] = std::max(best[m], induced);
    }
    return best;
}

}  // namespace

OptimalityReport power_lex_check(const Graph& g, int d, const PowerCheckOptions& options) {
    if (d < 1) throw InputError("power exponent must be >= 1, got " + std::to_string(d));
    const OrderedFactor factor = OrderedFactor::with_nested_solutions(g, options.limits);

    long long n = 1;
    for (int i = 0; i < d; ++i) {
        n *= g.order();
        if (n > options.max_vertices)
            throw CapacityError(std::to_string(g.order()) + "^" + std::to_string(d) + " vertices exceeds the cap of " +
                                std::to_string(options.max_vertices));
    }
    if (options.mode == CheckMode::exhaustive && n > std::min(options.limits.profile_cap, kProfileHardCap))
        throw CapacityError("exhaustive check of a " + std::to_string(n) + "-vertex power exceeds the cap of " +
                            std::to_string(options.limits.profile_cap) + " vertices");

    // Relabel so that vertex rank = label; lex on tuples is then numeric order.
    const Graph base = g.relabeled(factor.order);
    const Graph power = cartesian_power(base, d, options.max_vertices);
    std::vector<int> identity(power.order());
    for (int v = 0; v < power.order(); ++v) identity[v] = v;

    const std::string subject =
        "lex on " + (g.name().empty() ? std::string("G") : g.name()) + "^" + std::to_string(d);
    if (options.mode == CheckMode::exhaustive) {
        OptimalityReport report = verify_order(power, iso_profile(power, options.limits, options.threads), identity);
        report.subject = subject;
        return report;
    }

    const auto bounds = heuristic_lower_bounds(power, options);
    OptimalityReport report;
    report.subject = subject;
    report.evidence_only = true;
    report.note = "evidence, not verification: optimum column holds heuristic lower bounds";
    const auto deltas = prefix_deltas(power, identity);
    EdgeCount induced = 0;
    for (int k = 1; k <= power.order(); ++k) {
        induced += deltas[k - 1];
        report.sizes.push_back({k, induced, bounds[k], induced >= bounds[k], {}});
    }
    report.finalize();
    return report;
}

}  // namespace eip
