// Copyright 2026 The clumin authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clumin/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "clumin/errors.hpp"
#include "clumin/reductions.hpp"

namespace clumin {

namespace {

// Depth at which the decision tree is split into independent root tasks.
// Tasks never share incumbents, so totals and tie-breaks are bitwise
// identical for any worker count.
constexpr int kSplitDepthCap = 5;

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void validate_config(const SolverConfig& config) {
    if (config.parallel_workers < 1) throw InputError("parallel_workers must be >= 1");
    if (config.node_budget && *config.node_budget == 0) {
        throw InputError("node_budget must be positive");
    }
}

// Advances a sorted index combination to its lexicographic successor.
bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Rational subset_cost(const WeightedEdgeInstance& instance, const std::vector<int>& subset,
                     std::uint64_t& pair_evaluations) {
    Rational total(0);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            total += instance.weight(subset[i], subset[j]);
            ++pair_evaluations;
        }
    }
    return total;
}

Solution solve_exhaustive(const WeightedEdgeInstance& instance, const SolverConfig& config) {
    const int n = instance.vertex_count();
    const int size = instance.selection_size();
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);

    Solution best;
    bool have_best = false;
    std::uint64_t nodes = 0;
    std::uint64_t pair_evaluations = 0;
    while (true) {
        ++nodes;
        if (config.node_budget && nodes > *config.node_budget) {
            best.proven_optimal = false;
            best.pair_evaluations = pair_evaluations;
            best.nodes_explored = nodes - 1;
            throw BudgetError("node budget of " + std::to_string(*config.node_budget) +
                                  " exhausted during exhaustive enumeration",
                              best);
        }
        Rational cost = subset_cost(instance, comb, pair_evaluations);
        if (!have_best || cost < best.objective) {
            best.objective = std::move(cost);
            best.selected = comb;
            have_best = true;
        }
        if (!next_combination(comb, n)) break;
    }
    best.proven_optimal = true;
    best.pair_evaluations = pair_evaluations;
    best.nodes_explored = nodes;
    return best;
}

// --- branch and bound -------------------------------------------------

struct Precomp {
    // prefix_sums[u][t] = sum of the t smallest weights w(u, x) over x != u
    std::vector<std::vector<Rational>> prefix_sums;
    std::uint64_t pair_evaluations = 0;
};

Precomp precompute_rows(const WeightedEdgeInstance& instance) {
    const int n = instance.vertex_count();
    Precomp pre;
    pre.prefix_sums.resize(n);
    std::vector<Rational> row;
    for (int u = 0; u < n; ++u) {
        row.clear();
        for (int x = 0; x < n; ++x) {
            if (x == u) continue;
            row.push_back(instance.weight(u, x));
            ++pre.pair_evaluations;
        }
        std::sort(row.begin(), row.end());
        auto& sums = pre.prefix_sums[u];
        sums.resize(row.size() + 1);
        sums[0] = Rational(0);
        for (std::size_t t = 0; t < row.size(); ++t) sums[t + 1] = sums[t] + row[t];
    }
    return pre;
}

// Sum of the k cheapest optimistic marginals among pool vertices {v..n-1}.
Rational k_smallest_marginal_sum(const Precomp& pre, const std::vector<Rational>& to_chosen,
                                 int v, int n, int k, std::vector<Rational>& scratch) {
    static const Rational kHalf(1, 2);
    scratch.clear();
    for (int u = v; u < n; ++u) {
        scratch.push_back(to_chosen[u] + kHalf * pre.prefix_sums[u][k - 1]);
    }
    std::nth_element(scratch.begin(), scratch.begin() + (k - 1), scratch.end());
    Rational sum(0);
    for (int t = 0; t < k; ++t) sum += scratch[t];
    return sum;
}

struct SearchLimits {
    std::atomic<std::uint64_t>* nodes = nullptr;
    std::optional<std::uint64_t> budget;
    std::atomic<bool>* exhausted = nullptr;
};

struct TaskResult {
    std::optional<std::vector<int>> subset;
    Rational value;
    std::uint64_t pair_evaluations = 0;
};

struct ExhaustedSignal {};

// One independent subtree of the decision tree. Seeded with the greedy value
// only; never updated from other tasks, so its result depends on nothing but
// the instance.
class BnbTask {
public:
    BnbTask(const WeightedEdgeInstance& instance, const Precomp& pre, Rational seed_value,
            SearchLimits limits)
        : instance_(instance),
          pre_(pre),
          limits_(limits),
          best_value_(std::move(seed_value)),
          to_chosen_(instance.vertex_count(), Rational(0)) {}

    TaskResult run(const std::vector<bool>& include_prefix) {
        Rational cost(0);
        for (int v = 0; v < static_cast<int>(include_prefix.size()); ++v) {
            if (!include_prefix[v]) continue;
            cost += to_chosen_[v];
            add_to_chosen(v);
            chosen_.push_back(v);
        }
        try {
            dfs(static_cast<int>(include_prefix.size()), cost);
        } catch (const ExhaustedSignal&) {
            // partial result; the caller sees the shared exhausted flag
        }
        TaskResult result;
        result.value = best_value_;
        result.subset = std::move(best_subset_);
        result.pair_evaluations = pair_evaluations_;
        return result;
    }

private:
    void node_tick() {
        std::uint64_t total = limits_.nodes->fetch_add(1, std::memory_order_relaxed) + 1;
        if (limits_.budget && total > *limits_.budget) {
            limits_.exhausted->store(true, std::memory_order_relaxed);
        }
        if (limits_.exhausted->load(std::memory_order_relaxed)) throw ExhaustedSignal{};
    }

    void add_to_chosen(int v) {
        const int n = instance_.vertex_count();
        for (int u = v + 1; u < n; ++u) {
            to_chosen_[u] += instance_.weight(u, v);
            ++pair_evaluations_;
        }
    }

    void remove_from_chosen(int v) {
        const int n = instance_.vertex_count();
        for (int u = v + 1; u < n; ++u) {
            to_chosen_[u] -= instance_.weight(u, v);
            ++pair_evaluations_;
        }
    }

    void dfs(int v, const Rational& cost) {
        node_tick();
        const int n = instance_.vertex_count();
        const int size = instance_.selection_size();
        if (static_cast<int>(chosen_.size()) == size) {
            // DFS visits subsets in lexicographic order, so the first
            // optimum found at a value is already the tie-break winner.
            if (cost < best_value_ || (cost == best_value_ && !best_subset_)) {
                best_value_ = cost;
                best_subset_ = chosen_;
            }
            return;
        }
        const int needed = size - static_cast<int>(chosen_.size());
        if (v >= n || n - v < needed) return;
        Rational bound =
            cost + k_smallest_marginal_sum(pre_, to_chosen_, v, n, needed, scratch_);
        // Equality pruning is sound only against an incumbent found in this
        // task's own subtree; the greedy seed prunes strict excess only.
        if (best_subset_ ? bound >= best_value_ : bound > best_value_) return;

        chosen_.push_back(v);
        Rational included_cost = cost + to_chosen_[v];
        add_to_chosen(v);
        dfs(v + 1, included_cost);
        remove_from_chosen(v);
        chosen_.pop_back();

        dfs(v + 1, cost);
    }

    const WeightedEdgeInstance& instance_;
    const Precomp& pre_;
    SearchLimits limits_;
    Rational best_value_;
    std::optional<std::vector<int>> best_subset_;
    std::vector<int> chosen_;
    std::vector<Rational> to_chosen_;
    std::vector<Rational> scratch_;
    std::uint64_t pair_evaluations_ = 0;
};

// All feasible include/skip assignments of the first `depth` vertices, in
// the same order the sequential search would reach them.
std::vector<std::vector<bool>> enumerate_tasks(int n, int size, int depth) {
    std::vector<std::vector<bool>> tasks;
    std::vector<bool> current(depth, false);
    auto rec = [&](auto&& self, int pos, int included) -> void {
        if (included > size || included + (n - pos) < size) return;
        if (pos == depth) {
            tasks.push_back(current);
            return;
        }
        current[pos] = true;
        self(self, pos + 1, included + 1);
        current[pos] = false;
        self(self, pos + 1, included);
    };
    rec(rec, 0, 0);
    return tasks;
}

Solution solve_branch_and_bound(const WeightedEdgeInstance& instance,
                                const SolverConfig& config) {
    const int n = instance.vertex_count();
    Solution seed = greedy_upper_bound(instance);
    Precomp pre = precompute_rows(instance);

    const int depth = std::min(kSplitDepthCap, n - 1);
    std::vector<std::vector<bool>> tasks =
        enumerate_tasks(n, instance.selection_size(), depth);

    std::atomic<std::uint64_t> node_counter{0};
    std::atomic<bool> exhausted{false};
    SearchLimits limits{&node_counter, config.node_budget, &exhausted};

    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next_task{0};
    auto work = [&] {
        while (!exhausted.load(std::memory_order_relaxed)) {
            std::size_t t = next_task.fetch_add(1, std::memory_order_relaxed);
            if (t >= tasks.size()) break;
            BnbTask task(instance, pre, seed.objective, limits);
            results[t] = task.run(tasks[t]);
        }
    };

    const int workers =
        std::min<std::size_t>(static_cast<std::size_t>(config.parallel_workers), tasks.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& thread : pool) thread.join();
    }

    // Deterministic merge: value first, then lexicographic subset.
    const TaskResult* best = nullptr;
    std::uint64_t search_pair_evaluations = 0;
    for (const TaskResult& result : results) {
        search_pair_evaluations += result.pair_evaluations;
        if (!result.subset) continue;
        if (!best || result.value < best->value ||
            (result.value == best->value && lex_less(*result.subset, *best->subset))) {
            best = &result;
        }
    }

    Solution out;
    out.pair_evaluations = seed.pair_evaluations + pre.pair_evaluations + search_pair_evaluations;
    out.nodes_explored = node_counter.load();
    if (exhausted.load()) {
        if (best) {
            out.selected = *best->subset;
            out.objective = best->value;
        } else {
            out.selected = seed.selected;
            out.objective = seed.objective;
        }
        out.proven_optimal = false;
        throw BudgetError("node budget of " + std::to_string(*config.node_budget) +
                              " exhausted during branch-and-bound",
                          out);
    }
    // The greedy subset is itself a leaf of some task, so a result exists.
    out.selected = *best->subset;
    out.objective = best->value;
    out.proven_optimal = true;
    return out;
}

// --- native UDG search -------------------------------------------------
//
// Works on center distances directly; no edge weights are ever
// materialized, which keeps this an independent check of the reduction.

class UdgSearch {
public:
    UdgSearch(const UdgInstance& instance, std::optional<std::uint64_t> budget)
        : instance_(instance), budget_(budget) {}

    Solution exhaustive() {
        const int n = instance_.centers().size();
        const int size = instance_.target_size();
        std::vector<int> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            node_tick();
            std::int64_t conflicts = 0;
            for (std::size_t i = 0; i < comb.size(); ++i) {
                for (std::size_t j = i + 1; j < comb.size(); ++j) {
                    conflicts += conflict(comb[i], comb[j]) ? 1 : 0;
                }
            }
            if (!best_conflicts_ || conflicts < *best_conflicts_) {
                best_conflicts_ = conflicts;
                best_subset_ = comb;
            }
            if (!next_combination(comb, n)) break;
        }
        return make_solution(best_subset_, *best_conflicts_, true);
    }

    Solution branch_and_bound() {
        dfs(0, 0);
        return make_solution(best_subset_, *best_conflicts_, true);
    }

    Solution greedy() {
        const int n = instance_.centers().size();
        const int size = instance_.target_size();
        std::vector<bool> chosen(n, false);
        std::vector<int> selection;
        std::int64_t total = 0;
        for (int step = 0; step < size; ++step) {
            int best = -1;
            std::int64_t best_marginal = 0;
            for (int u = 0; u < n; ++u) {
                if (chosen[u]) continue;
                std::int64_t marginal = 0;
                for (int c : selection) marginal += conflict(u, c) ? 1 : 0;
                if (best < 0 || marginal < best_marginal) {
                    best = u;
                    best_marginal = marginal;
                }
            }
            chosen[best] = true;
            selection.push_back(best);
            total += best_marginal;
            ++nodes_;
        }
        std::sort(selection.begin(), selection.end());
        return make_solution(selection, total, false);
    }

private:
    bool conflict(int i, int j) {
        ++pair_evaluations_;
        return instance_.conflicts(i, j);
    }

    void node_tick() {
        ++nodes_;
        if (budget_ && nodes_ > *budget_) {
            --nodes_;
            Solution incumbent;
            if (best_conflicts_) {
                incumbent = make_solution(best_subset_, *best_conflicts_, false);
            } else {
                // nothing complete yet; fall back to a greedy selection
                incumbent = UdgSearch(instance_, std::nullopt).greedy();
                incumbent.nodes_explored = nodes_;
            }
            throw BudgetError("node budget of " + std::to_string(*budget_) +
                                  " exhausted during independent-set search",
                              incumbent);
        }
    }

    void dfs(int v, std::int64_t conflicts) {
        node_tick();
        const int n = instance_.centers().size();
        const int size = instance_.target_size();
        if (static_cast<int>(chosen_.size()) == size) {
            if (!best_conflicts_ || conflicts < *best_conflicts_) {
                best_conflicts_ = conflicts;
                best_subset_ = chosen_;
            }
            return;
        }
        if (v >= n || n - v < size - static_cast<int>(chosen_.size())) return;
        // conflicts never decrease along a branch, so the count so far is an
        // admissible bound
        if (best_conflicts_ && conflicts >= *best_conflicts_) return;

        std::int64_t added = 0;
        for (int c : chosen_) added += conflict(v, c) ? 1 : 0;
        chosen_.push_back(v);
        dfs(v + 1, conflicts + added);
        chosen_.pop_back();

        dfs(v + 1, conflicts);
    }

    Solution make_solution(std::vector<int> subset, std::int64_t conflicts, bool proven) const {
        Solution out;
        out.selected = std::move(subset);
        out.objective = Rational(conflicts);
        out.proven_optimal = proven;
        out.pair_evaluations = pair_evaluations_;
        out.nodes_explored = nodes_;
        return out;
    }

    const UdgInstance& instance_;
    std::optional<std::uint64_t> budget_;
    std::optional<std::int64_t> best_conflicts_;
    std::vector<int> best_subset_;
    std::vector<int> chosen_;
    std::uint64_t pair_evaluations_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

const char* algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::exhaustive: return "exhaustive";
        case Algorithm::branch_and_bound: return "branch_and_bound";
        case Algorithm::greedy: return "greedy";
    }
    return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "exhaustive") return Algorithm::exhaustive;
    if (name == "branch_and_bound" || name == "branch-and-bound") {
        return Algorithm::branch_and_bound;
    }
    if (name == "greedy") return Algorithm::greedy;
    throw InputError("unknown algorithm '" + name + "'");
}

Solution solve_weighted_edge(const WeightedEdgeInstance& instance, const SolverConfig& config) {
    validate_config(config);
    switch (config.algorithm) {
        case Algorithm::exhaustive: return solve_exhaustive(instance, config);
        case Algorithm::branch_and_bound: return solve_branch_and_bound(instance, config);
        case Algorithm::greedy: return greedy_upper_bound(instance);
    }
    throw InputError("unknown algorithm");
}

Solution solve_cluster_min(const ClusterMinInstance& instance, const SolverConfig& config) {
    return solve_weighted_edge(cluster_to_weighted_edge(instance), config);
}

Solution solve_udg_independent_set(const UdgInstance& instance, const SolverConfig& config) {
    validate_config(config);
    UdgSearch search(instance, config.node_budget);
    switch (config.algorithm) {
        case Algorithm::exhaustive: return search.exhaustive();
        case Algorithm::branch_and_bound: return search.branch_and_bound();
        case Algorithm::greedy: return search.greedy();
    }
    throw InputError("unknown algorithm");
}

Solution greedy_upper_bound(const WeightedEdgeInstance& instance) {
    const int n = instance.vertex_count();
    const int size = instance.selection_size();
    std::vector<bool> chosen(n, false);
    std::vector<Rational> to_chosen(n, Rational(0));
    Solution out;
    Rational cost(0);
    for (int step = 0; step < size; ++step) {
        int best = -1;
        for (int u = 0; u < n; ++u) {
            if (chosen[u]) continue;
            if (best < 0 || to_chosen[u] < to_chosen[best]) best = u;
        }
        chosen[best] = true;
        cost += to_chosen[best];
        out.selected.push_back(best);
        ++out.nodes_explored;
        for (int u = 0; u < n; ++u) {
            if (chosen[u]) continue;
            to_chosen[u] += instance.weight(u, best);
            ++out.pair_evaluations;
        }
    }
    std::sort(out.selected.begin(), out.selected.end());
    out.objective = std::move(cost);
    out.proven_optimal = false;
    return out;
}

EnergyResult energy(const ClusterMinInstance& instance, const std::vector<int>& selection) {
    if (static_cast<int>(selection.size()) != instance.particle_count()) {
        throw InputError("selection has " + std::to_string(selection.size()) +
                         " indices, instance asks for " +
                         std::to_string(instance.particle_count()));
    }
    const int n = instance.sites().size();
    std::vector<bool> seen(n, false);
    for (int index : selection) {
        if (index < 0 || index >= n) {
            throw InputError("site index " + std::to_string(index) + " out of range [0, " +
                             std::to_string(n) + ")");
        }
        if (seen[index]) throw InputError("duplicate site index " + std::to_string(index));
        seen[index] = true;
    }
    EnergyResult result{Rational(0), 0};
    for (std::size_t i = 0; i < selection.size(); ++i) {
        for (std::size_t j = i + 1; j < selection.size(); ++j) {
            result.value += potential_value(
                instance.potential(), squared_distance(instance.sites(), selection[i], selection[j]));
            ++result.pair_evaluations;
        }
    }
    return result;
}

namespace detail {

Rational completion_lower_bound(const WeightedEdgeInstance& instance,
                                const std::vector<int>& chosen, int next_vertex) {
    const int n = instance.vertex_count();
    const int k = instance.selection_size() - static_cast<int>(chosen.size());
    std::uint64_t scratch_evals = 0;
    Rational cost = subset_cost(instance, chosen, scratch_evals);
    if (k == 0) return cost;
    std::vector<Rational> to_chosen(n, Rational(0));
    for (int u = next_vertex; u < n; ++u) {
        for (int c : chosen) to_chosen[u] += instance.weight(u, c);
    }
    Precomp pre = precompute_rows(instance);
    std::vector<Rational> scratch;
    return cost + k_smallest_marginal_sum(pre, to_chosen, next_vertex, n, k, scratch);
}

}  // namespace detail

}  // namespace clumin
