#include "eip/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "eip/errors.hpp"
#include "eip/parallel.hpp"

namespace eip {

namespace {

using Mask = std::uint64_t;

void require_profile_cap(const Graph& g, const SolverLimits& limits) {
    const int cap = std::min(limits.profile_cap, kProfileHardCap);
    if (g.order() > cap)
        throw CapacityError(std::to_string(g.order()) + "-vertex graph exceeds the exhaustive cap of " +
                            std::to_string(cap) + " vertices");
}

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.order());
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v).to_mask();
    return adj;
}

int induced_of_mask(const std::vector<Mask>& adj, Mask s) {
    int twice = 0;
    for (Mask rest = s; rest; rest &= rest - 1) twice += std::popcount(adj[std::countr_zero(rest)] & s);
    return twice / 2;
}

// Running optimum per cardinality; ties go to the smaller mask so that the
// merge of per-block results is order independent.
struct Extremes {
    std::vector<int> imax;
    std::vector<Mask> iwit;
    std::vector<int> tmin;
    std::vector<Mask> twit;

    explicit Extremes(int n)
        : imax(n + 1, -1), iwit(n + 1, 0), tmin(n + 1, std::numeric_limits<int>::max()), twit(n + 1, 0) {}

    void offer(int k, int induced, int theta, Mask s) {
        if (induced > imax[k] || (induced == imax[k] && s < iwit[k])) {
            imax[k] = induced;
            iwit[k] = s;
        }
        if (theta < tmin[k] || (theta == tmin[k] && s < twit[k])) {
            tmin[k] = theta;
            twit[k] = s;
        }
    }

    void merge(const Extremes& o) {
        for (std::size_t k = 0; k < imax.size(); ++k) {
            if (o.imax[k] < 0) continue;  // no subset of this size in o's blocks
            if (o.imax[k] > imax[k] || (o.imax[k] == imax[k] && o.iwit[k] < iwit[k])) {
                imax[k] = o.imax[k];
                iwit[k] = o.iwit[k];
            }
            if (o.tmin[k] < tmin[k] || (o.tmin[k] == tmin[k] && o.twit[k] < twit[k])) {
                tmin[k] = o.tmin[k];
                twit[k] = o.twit[k];
            }
        }
    }
};

// Walks the 2^low_bits subsets whose high bits equal `high`, in reflected
// Gray-code order, updating |I| and the degree sum by one vertex per step.
void scan_block(const std::vector<Mask>& adj, const std::vector<int>& deg, int low_bits, Mask high, Extremes& out) {
    Mask s = high;
    int induced = induced_of_mask(adj, s);
    int degsum = 0;
    for (Mask rest = s; rest; rest &= rest - 1) degsum += deg[std::countr_zero(rest)];
    int k = std::popcount(s);
    out.offer(k, induced, degsum - 2 * induced, s);

    const Mask steps = Mask{1} << low_bits;
    for (Mask i = 1; i < steps; ++i) {
        const int v = std::countr_zero(i);
        const Mask bit = Mask{1} << v;
        if (s & bit) {
            s ^= bit;
            induced -= std::popcount(adj[v] & s);
            degsum -= deg[v];
            --k;
        } else {
            induced += std::popcount(adj[v] & s);
            s |= bit;
            degsum += deg[v];
            ++k;
        }
        out.offer(k, induced, degsum - 2 * induced, s);
    }
}

}  // namespace

IsoProfile iso_profile(const Graph& g, const SolverLimits& limits, int threads) {
    require_profile_cap(g, limits);
    const int n = g.order();
    const auto adj = adjacency_masks(g);
    const std::vector<int>& deg = g.degrees();

    // 2^high_bits independent blocks; enough for load balancing, few enough
    // that the per-block setup is negligible.
    const int high_bits = std::min(n, n >= 16 ? 6 : 0);
    const int low_bits = n - high_bits;
    const Mask blocks = Mask{1} << high_bits;
    const int workers = std::max(1, std::min<int>(threads > 0 ? threads : worker_count(), static_cast<int>(blocks)));

    Extremes total(n);
    std::mutex merge_mutex;
    std::atomic<Mask> next_block{0};
    auto work = [&] {
        Extremes local(n);
        for (Mask b = next_block++; b < blocks; b = next_block++) scan_block(adj, deg, low_bits, b << low_bits, local);
        std::lock_guard lock(merge_mutex);
        total.merge(local);
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    }

    IsoProfile p;
    p.graph = g.name();
    p.n = n;
    for (int m = 0; m <= n; ++m) {
        p.induced.push_back(total.imax[m]);
        p.boundary.push_back(total.tmin[m]);
        p.induced_witness.push_back(VertexSet::from_mask(n, total.iwit[m]));
        p.boundary_witness.push_back(VertexSet::from_mask(n, total.twit[m]));
    }
    return p;
}

namespace {

// Calls f(mask) for every m-subset of {0..n-1} in increasing numeric order.
template <typename F>
void for_each_combination(int n, int m, F&& f) {
    if (m == 0) {
        f(Mask{0});
        return;
    }
    const Mask limit = Mask{1} << n;
    for (Mask s = (Mask{1} << m) - 1; s < limit;) {
        f(s);
        const Mask low = s & (~s + 1);
        const Mask ripple = s + low;
        s = (((ripple ^ s) >> 2) / low) | ripple;
    }
}

void require_size(const Graph& g, int m) {
    if (m < 0 || m > g.order())
        throw InputError("cardinality " + std::to_string(m) + " outside 0.." + std::to_string(g.order()));
}

}  // namespace

EdgeCount max_induced_by_combinations(const Graph& g, int m, const SolverLimits& limits) {
    require_profile_cap(g, limits);
    require_size(g, m);
    const auto adj = adjacency_masks(g);
    int best = 0;
    for_each_combination(g.order(), m, [&](Mask s) { best = std::max(best, induced_of_mask(adj, s)); });
    return best;
}

WitnessList optimal_witnesses(const Graph& g, int m, std::size_t cap, const SolverLimits& limits) {
    require_profile_cap(g, limits);
    require_size(g, m);
    const auto adj = adjacency_masks(g);
    WitnessList out;
    out.size = m;
    out.optimum = -1;
    std::vector<Mask> kept;
    for_each_combination(g.order(), m, [&](Mask s) {
        const int value = induced_of_mask(adj, s);
        if (value > out.optimum) {
            out.optimum = value;
            out.total = 0;
            kept.clear();
        }
        if (value == out.optimum) {
            ++out.total;
            if (kept.size() < cap) kept.push_back(s);
        }
    });
    for (Mask s : kept) out.sets.push_back(VertexSet::from_mask(g.order(), s));
    return out;
}

namespace {

class NestedSearch {
public:
    NestedSearch(const Graph& g, const IsoProfile& profile, Objective objective)
        : n_(g.order()), adj_(adjacency_masks(g)), deg_(g.degrees()), profile_(profile), objective_(objective) {}

    // Value of the objective after adding v to s, given its value on s.
    EdgeCount extended(Mask s, int v, EdgeCount value) const {
        const int back = std::popcount(adj_[v] & s);
        return objective_ == Objective::induced ? value + back : value + deg_[v] - 2 * back;
    }

    bool admissible(int k, EdgeCount value) const { return value == profile_.optimum(objective_, k); }

    NsResult first_order() {
        NsResult result;
        result.objective = objective_;
        std::vector<int> order;
        if (first_from(0, 0, order, result.deepest_prefix)) result.order = OptimalOrder{order, true};
        return result;
    }

    // Number of optimal orders extending the prefix that produced s.
    std::uint64_t completions(Mask s, int depth, EdgeCount value) {
        if (depth == n_) return 1;
        if (auto it = count_memo_.find(s); it != count_memo_.end()) return it->second;
        std::uint64_t total = 0;
        for (int v = 0; v < n_; ++v) {
            if ((s >> v) & 1U) continue;
            const EdgeCount next = extended(s, v, value);
            if (!admissible(depth + 1, next)) continue;
            const std::uint64_t sub = completions(s | (Mask{1} << v), depth + 1, next);
            total = sub > std::numeric_limits<std::uint64_t>::max() - total ? std::numeric_limits<std::uint64_t>::max()
                                                                             : total + sub;
        }
        count_memo_.emplace(s, total);
        return total;
    }

    void list_orders(Mask s, int depth, EdgeCount value, std::vector<int>& prefix, std::size_t cap,
                     std::vector<OptimalOrder>& out) {
        if (out.size() >= cap) return;
        if (depth == n_) {
            out.push_back(OptimalOrder{prefix, true});
            return;
        }
        for (int v = 0; v < n_ && out.size() < cap; ++v) {
            if ((s >> v) & 1U) continue;
            const EdgeCount next = extended(s, v, value);
            if (!admissible(depth + 1, next)) continue;
            const Mask grown = s | (Mask{1} << v);
            if (completions(grown, depth + 1, next) == 0) continue;
            prefix.push_back(v);
            list_orders(grown, depth + 1, next, prefix, cap, out);
            prefix.pop_back();
        }
    }

private:
    bool first_from(Mask s, EdgeCount value, std::vector<int>& prefix, int& deepest) {
        const int depth = static_cast<int>(prefix.size());
        deepest = std::max(deepest, depth);
        if (depth == n_) return true;
        if (dead_.contains(s)) return false;
        for (int v = 0; v < n_; ++v) {
            if ((s >> v) & 1U) continue;
            const EdgeCount next = extended(s, v, value);
            if (!admissible(depth + 1, next)) continue;
            prefix.push_back(v);
            if (first_from(s | (Mask{1} << v), next, prefix, deepest)) return true;
            prefix.pop_back();
        }
        dead_.insert(s);
        return false;
    }

    int n_;
    std::vector<Mask> adj_;
    std::vector<int> deg_;
    const IsoProfile& profile_;
    Objective objective_;
    std::unordered_set<Mask> dead_;
    std::unordered_map<Mask, std::uint64_t> count_memo_;
};

void require_matching_profile(const Graph& g, const IsoProfile& profile) {
    if (profile.n != g.order()) throw InputError("profile does not belong to this graph");
}

}  // namespace

NsResult find_nested_solutions(const Graph& g, const IsoProfile& profile, Objective objective) {
    require_matching_profile(g, profile);
    if (g.order() > kProfileHardCap) throw CapacityError("nested-solution search is limited to 40 vertices");
    return NestedSearch(g, profile, objective).first_order();
}

NsResult find_nested_solutions(const Graph& g, const SolverLimits& limits) {
    return find_nested_solutions(g, iso_profile(g, limits));
}

std::vector<EdgeCount> prefix_deltas(const Graph& g, const std::vector<int>& order) {
    VertexSet prefix(g.order());
    std::vector<EdgeCount> out;
    out.reserve(order.size());
    for (int v : order) {
        out.push_back(g.neighbors(v).intersection_size(prefix));
        prefix.insert(v);
    }
    return out;
}

OptimalityReport verify_order(const Graph& g, const IsoProfile& profile, const std::vector<int>& order,
                              Objective objective) {
    require_matching_profile(g, profile);
    const int n = g.order();
    if (static_cast<int>(order.size()) != n) throw InputError("order must list all " + std::to_string(n) + " vertices");
    std::vector<bool> seen(n, false);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) throw InputError("order is not a permutation of 0.." + std::to_string(n - 1));
        seen[v] = true;
    }

    OptimalityReport report;
    report.subject = (g.name().empty() ? "graph" : g.name()) + " order";
    VertexSet prefix(n);
    EdgeCount induced = 0;
    EdgeCount theta = 0;
    for (int k = 1; k <= n; ++k) {
        const int v = order[k - 1];
        const int back = g.neighbors(v).intersection_size(prefix);
        induced += back;
        theta += g.degree(v) - 2 * back;
        prefix.insert(v);
        SizeCheck row;
        row.size = k;
        row.candidate = objective == Objective::induced ? induced : theta;
        row.optimum = profile.optimum(objective, k);
        row.pass = row.candidate == row.optimum;
        if (!row.pass)
            row.witness = (objective == Objective::induced ? profile.induced_witness : profile.boundary_witness)[k].to_hex();
        report.sizes.push_back(row);
    }
    report.finalize();
    return report;
}

OrderEnumeration enumerate_optimal_orders(const Graph& g, const IsoProfile& profile, std::size_t cap,
                                          const SolverLimits& limits) {
    require_matching_profile(g, profile);
    if (g.order() > limits.order_cap)
        throw CapacityError(std::to_string(g.order()) + "-vertex graph exceeds the order-enumeration cap of " +
                            std::to_string(limits.order_cap) + " vertices");
    NestedSearch search(g, profile, Objective::induced);
    OrderEnumeration out;
    out.total = search.completions(0, 0, 0);
    std::vector<int> prefix;
    search.list_orders(0, 0, 0, prefix, cap, out.orders);
    out.truncated = out.orders.size() < out.total;
    return out;
}

}  // namespace eip
