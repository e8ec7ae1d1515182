#pragma once

#include <kempe/error.hpp>
#include <kempe/graph.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace kempe::detail {

/// Each rule can be switched off individually; verdicts must not change, only
/// node counts.
struct PruningRules {
    /// Remove bag j from every undecided vertex that bag j can no longer reach
    /// through undecided vertices still allowing j.
    bool connectivity = true;
    /// Fail when an unmet pattern edge has no possible realising edge.
    bool edge_reachability = true;
    /// A bag that cannot grow and has a single candidate neighbour for an unmet
    /// pattern edge forces that neighbour into the partner bag.
    bool size_forcing = true;
    /// Bags whose pattern edges are all met stop growing.
    bool freeze_satisfied = true;
};

struct SearchLimits {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 300.0;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    int max_depth = 0;
    double elapsed_ms = 0.0;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<VertexSet> bags;
    SearchStats stats;
};

/// Exact search for disjoint connected bags, one per pattern vertex, such that
/// every pattern edge joins two adjacent bags. Bags with a seed are rooted at
/// it; unseeded bags are placed by the search at their smallest vertex.
///
/// State: every vertex is in a bag, unused, or undecided with a domain of
/// bags it may still join. Bags only grow by absorbing an adjacent undecided
/// vertex, so they stay connected throughout. Branching is binary: a frontier
/// vertex v joins bag j, or j leaves v's domain.
class BagSearch {
  public:
    static constexpr int max_bags = 31;

    BagSearch(const Graph & g, int bag_count, std::vector<Edge> pattern_edges, std::vector<int> seeds, PruningRules rules = {}) :
        graph_(g), bag_count_(bag_count), pattern_(std::move(pattern_edges)), seeds_(std::move(seeds)), rules_(rules)
    {
        if (bag_count_ < 0 || bag_count_ > max_bags)
            throw SizeLimitError("bag search supports at most " + std::to_string(max_bags) + " bags");
        if (static_cast<int>(seeds_.size()) != bag_count_)
            throw PreconditionError("bag search: one seed entry per bag required");
        pattern_degree_.assign(static_cast<std::size_t>(bag_count_), 0);
        for (auto [a, b] : pattern_) {
            ++pattern_degree_[static_cast<std::size_t>(a)];
            ++pattern_degree_[static_cast<std::size_t>(b)];
        }
    }

    auto run(const SearchLimits & limits, int threads = 1) -> SearchResult
    {
        start_ = std::chrono::steady_clock::now();
        limits_ = limits;
        nodes_ = 0;
        max_depth_ = 0;
        budget_hit_ = false;
        found_index_ = std::numeric_limits<std::size_t>::max();

        SearchResult result;
        auto initial = initial_state();
        if (! initial) {
            result.status = SearchStatus::Exhausted;
            result.stats = stats();
            return result;
        }

        if (threads <= 1) {
            std::optional<State> solution;
            bool found = dfs(*initial, 0, 0, solution);
            result = finish(found ? std::move(solution) : std::nullopt);
            return result;
        }

        // Split the tree into subproblems in DFS order; the lowest-index
        // solution wins so the certificate does not depend on thread count.
        std::vector<Item> items;
        int split_depth = 4 + static_cast<int>(std::bit_width(static_cast<unsigned>(threads)));
        collect(*initial, 0, split_depth, items);
        std::vector<std::optional<State>> solutions(items.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                auto i = next.fetch_add(1);
                if (i >= items.size() || budget_hit_.load())
                    return;
                if (found_index_.load() < i)
                    continue;
                if (items[i].solved) {
                    solutions[i] = items[i].state;
                    note_found(i);
                    continue;
                }
                std::optional<State> solution;
                if (dfs(items[i].state, items[i].depth, i, solution)) {
                    solutions[i] = std::move(solution);
                    note_found(i);
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
        for (auto & s : solutions)
            if (s)
                return finish(std::move(s));
        return finish(std::nullopt);
    }

  private:
    static constexpr int undecided = -2;
    static constexpr int unused = -1;

    struct State {
        std::vector<int> owner;
        std::vector<std::uint32_t> domain;
        std::vector<int> seed;
    };

    struct Item {
        State state;
        int depth;
        bool solved;
    };

    enum class Outcome { Conflict, Solved, Open };

    auto stats() const -> SearchStats
    {
        SearchStats s;
        s.nodes = nodes_.load();
        s.max_depth = max_depth_.load();
        s.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        return s;
    }

    auto finish(std::optional<State> solution) -> SearchResult
    {
        SearchResult r;
        r.stats = stats();
        if (solution) {
            r.status = SearchStatus::Found;
            r.bags.assign(static_cast<std::size_t>(bag_count_), VertexSet(graph_.order()));
            for (int v = 0; v < graph_.order(); ++v) {
                int o = solution->owner[static_cast<std::size_t>(v)];
                if (o >= 0)
                    r.bags[static_cast<std::size_t>(o)].insert(v);
            }
        }
        else
            r.status = budget_hit_.load() ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
        return r;
    }

    auto note_found(std::size_t i) -> void
    {
        auto cur = found_index_.load();
        while (i < cur && ! found_index_.compare_exchange_weak(cur, i)) {
        }
    }

    auto all_bags_mask() const -> std::uint32_t
    {
        return bag_count_ == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << bag_count_) - 1);
    }

    auto initial_state() const -> std::optional<State>
    {
        const int n = graph_.order();
        State s;
        s.owner.assign(static_cast<std::size_t>(n), undecided);
        s.domain.assign(static_cast<std::size_t>(n), all_bags_mask());
        s.seed = seeds_;
        for (int b = 0; b < bag_count_; ++b) {
            int v = seeds_[static_cast<std::size_t>(b)];
            if (v < 0)
                continue;
            if (v >= n)
                throw PreconditionError("bag search: seed out of range");
            if (s.owner[static_cast<std::size_t>(v)] >= 0)
                return std::nullopt;
            s.owner[static_cast<std::size_t>(v)] = b;
            s.domain[static_cast<std::size_t>(v)] = 0;
        }
        return s;
    }

    auto out_of_budget() -> bool
    {
        if (budget_hit_.load())
            return true;
        auto n = ++nodes_;
        if (n > limits_.max_nodes) {
            budget_hit_ = true;
            return true;
        }
        if ((n & 255U) == 0) {
            auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            if (secs > limits_.max_seconds) {
                budget_hit_ = true;
                return true;
            }
        }
        return false;
    }

    auto note_depth(int depth) -> void
    {
        int cur = max_depth_.load();
        while (depth > cur && ! max_depth_.compare_exchange_weak(cur, depth)) {
        }
    }

    /// Fixpoint of the enabled pruning rules.
    auto propagate(State & s) const -> Outcome
    {
        const int n = graph_.order();
        const auto bc = static_cast<std::size_t>(bag_count_);
        std::vector<std::uint32_t> adj_bags(bc), region(static_cast<std::size_t>(n));
        std::vector<int> unmet(bc);

        for (;;) {
            std::fill(adj_bags.begin(), adj_bags.end(), 0U);
            for (int v = 0; v < n; ++v) {
                int o = s.owner[static_cast<std::size_t>(v)];
                if (o < 0)
                    continue;
                for (int w : graph_.neighbors(v)) {
                    int p = s.owner[static_cast<std::size_t>(w)];
                    if (p >= 0 && p != o)
                        adj_bags[static_cast<std::size_t>(o)] |= 1U << p;
                }
            }

            std::uint32_t placed = 0;
            for (int b = 0; b < bag_count_; ++b)
                if (s.seed[static_cast<std::size_t>(b)] >= 0)
                    placed |= 1U << b;

            std::fill(unmet.begin(), unmet.end(), 0);
            std::vector<Edge> open;
            for (auto [a, b] : pattern_)
                if (! ((adj_bags[static_cast<std::size_t>(a)] >> b) & 1U)) {
                    open.emplace_back(a, b);
                    ++unmet[static_cast<std::size_t>(a)];
                    ++unmet[static_cast<std::size_t>(b)];
                }
            if (open.empty() && placed == all_bags_mask())
                return Outcome::Solved;

            bool changed = false;
            auto set_domain = [&](int v, std::uint32_t d) {
                auto & cur = s.domain[static_cast<std::size_t>(v)];
                if (d == cur)
                    return;
                cur = d;
                changed = true;
                if (d == 0)
                    s.owner[static_cast<std::size_t>(v)] = unused;
            };

            if (rules_.freeze_satisfied) {
                std::uint32_t frozen = 0;
                for (int b = 0; b < bag_count_; ++b)
                    if (((placed >> b) & 1U) && unmet[static_cast<std::size_t>(b)] == 0)
                        frozen |= 1U << b;
                if (frozen != 0)
                    for (int v = 0; v < n; ++v)
                        if (s.owner[static_cast<std::size_t>(v)] == undecided)
                            set_domain(v, s.domain[static_cast<std::size_t>(v)] & ~frozen);
            }

            // Regions of placed bags: the bag plus undecided vertices reachable
            // through undecided vertices whose domain still allows the bag.
            std::fill(region.begin(), region.end(), 0U);
            for (int b = 0; b < bag_count_; ++b) {
                if (! ((placed >> b) & 1U))
                    continue;
                std::vector<int> stack;
                for (int v = 0; v < n; ++v)
                    if (s.owner[static_cast<std::size_t>(v)] == b) {
                        region[static_cast<std::size_t>(v)] |= 1U << b;
                        stack.push_back(v);
                    }
                while (! stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int w : graph_.neighbors(v)) {
                        auto wi = static_cast<std::size_t>(w);
                        if (s.owner[wi] == undecided && ((s.domain[wi] >> b) & 1U) && ! ((region[wi] >> b) & 1U)) {
                            region[wi] |= 1U << b;
                            stack.push_back(w);
                        }
                    }
                }
            }
            // Unplaced bags may still start anywhere in their domain.
            for (int v = 0; v < n; ++v)
                if (s.owner[static_cast<std::size_t>(v)] == undecided)
                    region[static_cast<std::size_t>(v)] |= s.domain[static_cast<std::size_t>(v)] & ~placed;

            if (rules_.connectivity) {
                for (int v = 0; v < n; ++v)
                    if (s.owner[static_cast<std::size_t>(v)] == undecided)
                        set_domain(v, s.domain[static_cast<std::size_t>(v)] & region[static_cast<std::size_t>(v)]);
                if (changed)
                    continue;
            }

            auto in_reach = [&](int v, int b) {
                int o = s.owner[static_cast<std::size_t>(v)];
                if (o >= 0)
                    return o == b;
                return o == undecided && ((region[static_cast<std::size_t>(v)] >> b) & 1U) &&
                    ((s.domain[static_cast<std::size_t>(v)] >> b) & 1U);
            };

            if (rules_.edge_reachability) {
                for (auto [a, b] : open) {
                    bool possible = false;
                    for (int v = 0; v < n && ! possible; ++v) {
                        if (! in_reach(v, a))
                            continue;
                        for (int w : graph_.neighbors(v))
                            if (in_reach(w, b)) {
                                possible = true;
                                break;
                            }
                    }
                    if (! possible)
                        return Outcome::Conflict;
                }
            }

            if (rules_.size_forcing) {
                for (auto [a, b] : open) {
                    if (! (((placed >> a) & 1U) && ((placed >> b) & 1U)))
                        continue;
                    for (auto [closed, partner] : {Edge{a, b}, Edge{b, a}}) {
                        bool can_grow = false;
                        int candidate = -1, candidates = 0;
                        VertexSet seen(n);
                        for (int v = 0; v < n; ++v) {
                            if (s.owner[static_cast<std::size_t>(v)] != closed)
                                continue;
                            for (int w : graph_.neighbors(v)) {
                                auto wi = static_cast<std::size_t>(w);
                                if (s.owner[wi] != undecided || seen.contains(w))
                                    continue;
                                seen.insert(w);
                                if ((s.domain[wi] >> closed) & 1U)
                                    can_grow = true;
                                if (in_reach(w, partner)) {
                                    candidate = w;
                                    ++candidates;
                                }
                            }
                        }
                        if (can_grow)
                            continue;
                        if (candidates == 0)
                            return Outcome::Conflict;
                        if (candidates == 1) {
                            bool touches = false;
                            for (int w : graph_.neighbors(candidate))
                                if (s.owner[static_cast<std::size_t>(w)] == partner)
                                    touches = true;
                            if (touches) {
                                s.owner[static_cast<std::size_t>(candidate)] = partner;
                                s.domain[static_cast<std::size_t>(candidate)] = 0;
                                changed = true;
                                break;
                            }
                        }
                    }
                    if (changed)
                        break;
                }
            }

            if (! changed)
                return Outcome::Open;
        }
    }

    /// Children in exploration order, or nothing when no branch exists.
    auto branch(const State & s) const -> std::vector<State>
    {
        const int n = graph_.order();

        int unplaced = -1;
        for (int b = 0; b < bag_count_; ++b)
            if (s.seed[static_cast<std::size_t>(b)] < 0 &&
                (unplaced < 0 || pattern_degree_[static_cast<std::size_t>(b)] > pattern_degree_[static_cast<std::size_t>(unplaced)]))
                unplaced = b;
        if (unplaced >= 0) {
            int v = -1;
            for (int u = 0; u < n && v < 0; ++u)
                if (s.owner[static_cast<std::size_t>(u)] == undecided && ((s.domain[static_cast<std::size_t>(u)] >> unplaced) & 1U))
                    v = u;
            if (v < 0)
                return {};
            State take = s, skip = s;
            take.owner[static_cast<std::size_t>(v)] = unplaced;
            take.domain[static_cast<std::size_t>(v)] = 0;
            take.seed[static_cast<std::size_t>(unplaced)] = v;
            skip.domain[static_cast<std::size_t>(v)] &= ~(1U << unplaced);
            if (skip.domain[static_cast<std::size_t>(v)] == 0)
                skip.owner[static_cast<std::size_t>(v)] = unused;
            return {std::move(take), std::move(skip)};
        }

        std::vector<std::uint32_t> adj_bags(static_cast<std::size_t>(bag_count_), 0U);
        for (int v = 0; v < n; ++v) {
            int o = s.owner[static_cast<std::size_t>(v)];
            if (o < 0)
                continue;
            for (int w : graph_.neighbors(v)) {
                int p = s.owner[static_cast<std::size_t>(w)];
                if (p >= 0 && p != o)
                    adj_bags[static_cast<std::size_t>(o)] |= 1U << p;
            }
        }
        std::vector<int> unmet(static_cast<std::size_t>(bag_count_), 0);
        for (auto [a, b] : pattern_)
            if (! ((adj_bags[static_cast<std::size_t>(a)] >> b) & 1U)) {
                ++unmet[static_cast<std::size_t>(a)];
                ++unmet[static_cast<std::size_t>(b)];
            }

        int best_v = -1, best_bag = -1, best_score = 0;
        for (int v = 0; v < n; ++v) {
            if (s.owner[static_cast<std::size_t>(v)] != undecided)
                continue;
            std::uint32_t touching = 0;
            for (int w : graph_.neighbors(v)) {
                int p = s.owner[static_cast<std::size_t>(w)];
                if (p >= 0)
                    touching |= 1U << p;
            }
            touching &= s.domain[static_cast<std::size_t>(v)];
            int score = 0, bag = -1;
            for (int b = 0; b < bag_count_; ++b) {
                if (! ((touching >> b) & 1U) || unmet[static_cast<std::size_t>(b)] == 0)
                    continue;
                score += unmet[static_cast<std::size_t>(b)];
                if (bag < 0 || unmet[static_cast<std::size_t>(b)] > unmet[static_cast<std::size_t>(bag)])
                    bag = b;
            }
            if (bag >= 0 && score > best_score) {
                best_score = score;
                best_v = v;
                best_bag = bag;
            }
        }
        if (best_v < 0)
            return {};
        State take = s, skip = s;
        take.owner[static_cast<std::size_t>(best_v)] = best_bag;
        take.domain[static_cast<std::size_t>(best_v)] = 0;
        skip.domain[static_cast<std::size_t>(best_v)] &= ~(1U << best_bag);
        if (skip.domain[static_cast<std::size_t>(best_v)] == 0)
            skip.owner[static_cast<std::size_t>(best_v)] = unused;
        return {std::move(take), std::move(skip)};
    }

    auto dfs(State s, int depth, std::size_t item, std::optional<State> & solution) -> bool
    {
        if (out_of_budget() || found_index_.load() < item)
            return false;
        note_depth(depth);
        switch (propagate(s)) {
        case Outcome::Conflict: return false;
        case Outcome::Solved: solution = std::move(s); return true;
        case Outcome::Open: break;
        }
        for (auto & child : branch(s))
            if (dfs(std::move(child), depth + 1, item, solution))
                return true;
        return false;
    }

    auto collect(State s, int depth, int limit, std::vector<Item> & items) -> void
    {
        ++nodes_;
        note_depth(depth);
        switch (propagate(s)) {
        case Outcome::Conflict: return;
        case Outcome::Solved: items.push_back({std::move(s), depth, true}); return;
        case Outcome::Open: break;
        }
        if (depth >= limit) {
            items.push_back({std::move(s), depth, false});
            return;
        }
        for (auto & child : branch(s))
            collect(std::move(child), depth + 1, limit, items);
    }

    const Graph & graph_;
    int bag_count_;
    std::vector<Edge> pattern_;
    std::vector<int> seeds_;
    PruningRules rules_;
    std::vector<int> pattern_degree_;

    SearchLimits limits_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<int> max_depth_{0};
    std::atomic<bool> budget_hit_{false};
    std::atomic<std::size_t> found_index_{std::numeric_limits<std::size_t>::max()};
};

} // namespace kempe::detail
