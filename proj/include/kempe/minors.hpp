#pragma once

#include <kempe/detail/bag_search.hpp>
#include <kempe/error.hpp>
#include <kempe/generators.hpp>
#include <kempe/graph.hpp>
#include <kempe/kempe.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kempe {

/// Bags indexed by pattern vertex.
struct MinorEmbedding {
    std::vector<VertexSet> bags;
};

inline constexpr int minor_pattern_limit = 8;
inline constexpr int minor_host_limit = 40;

struct MinorOptions {
    std::uint64_t max_nodes = 50'000'000;
    double max_seconds = 300.0;
    int threads = 1;
};

/// Empty when `emb` is a valid model of h in g.
inline auto embedding_problems(const Graph & g, const Graph & h, const MinorEmbedding & emb) -> std::vector<std::string>
{
    std::vector<std::string> out;
    if (static_cast<int>(emb.bags.size()) != h.order()) {
        out.push_back("expected " + std::to_string(h.order()) + " bags, got " + std::to_string(emb.bags.size()));
        return out;
    }
    VertexSet used(g.order());
    for (int i = 0; i < h.order(); ++i) {
        const auto & bag = emb.bags[static_cast<std::size_t>(i)];
        if (bag.universe() != g.order()) {
            out.push_back("bag " + std::to_string(i) + " is over the wrong vertex range");
            return out;
        }
        if (bag.empty())
            out.push_back("bag " + std::to_string(i) + " is empty");
        else if (! is_connected_subset(g, bag))
            out.push_back("bag " + std::to_string(i) + " is disconnected");
        if (used.intersects(bag))
            out.push_back("bag " + std::to_string(i) + " overlaps an earlier bag");
        used |= bag;
    }
    for (auto [a, b] : h.edges()) {
        bool joined = false;
        emb.bags[static_cast<std::size_t>(a)].for_each([&](int v) {
            if (g.neighbor_set(v).intersects(emb.bags[static_cast<std::size_t>(b)]))
                joined = true;
        });
        if (! joined)
            out.push_back("bags " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
    }
    return out;
}

namespace detail {
    /// Host after removing vertices that cannot matter: degree <= 1 when the
    /// pattern has minimum degree >= 2, and degree-2 vertices suppressed when
    /// it has minimum degree >= 3.
    struct ReducedHost {
        Graph graph;
        std::vector<int> to_original;
        /// (v, a, b): v was suppressed between a and b; undone in reverse.
        std::vector<std::array<int, 3>> suppressed;
    };

    inline auto reduce_host(const Graph & g, int pattern_min_degree) -> ReducedHost
    {
        const int n = g.order();
        std::vector<VertexSet> adj;
        for (int v = 0; v < n; ++v)
            adj.push_back(g.neighbor_set(v));
        VertexSet alive = g.vertex_set();
        std::vector<std::array<int, 3>> suppressed;

        auto drop = [&](int v) {
            alive.erase(v);
            adj[static_cast<std::size_t>(v)].for_each([&](int w) { adj[static_cast<std::size_t>(w)].erase(v); });
            adj[static_cast<std::size_t>(v)] = VertexSet(n);
        };
        bool changed = pattern_min_degree >= 2;
        while (changed) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (! alive.contains(v))
                    continue;
                int d = adj[static_cast<std::size_t>(v)].size();
                if (d <= 1) {
                    drop(v);
                    changed = true;
                }
                else if (d == 2 && pattern_min_degree >= 3) {
                    int a = adj[static_cast<std::size_t>(v)].first();
                    auto rest = adj[static_cast<std::size_t>(v)];
                    rest.erase(a);
                    int b = rest.first();
                    bool triangle = adj[static_cast<std::size_t>(a)].contains(b);
                    drop(v);
                    if (! triangle) {
                        adj[static_cast<std::size_t>(a)].insert(b);
                        adj[static_cast<std::size_t>(b)].insert(a);
                        suppressed.push_back({v, a, b});
                    }
                    changed = true;
                }
            }
        }

        std::vector<int> to_original = alive.members();
        std::vector<int> to_new(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < to_original.size(); ++i)
            to_new[static_cast<std::size_t>(to_original[i])] = static_cast<int>(i);
        std::vector<Edge> edges;
        for (int v : to_original)
            adj[static_cast<std::size_t>(v)].for_each([&](int w) {
                if (v < w)
                    edges.emplace_back(to_new[static_cast<std::size_t>(v)], to_new[static_cast<std::size_t>(w)]);
            });
        return {Graph(static_cast<int>(to_original.size()), edges), std::move(to_original), std::move(suppressed)};
    }

    inline auto min_degree(const Graph & h) -> int
    {
        int m = h.order() == 0 ? 0 : h.degree(0);
        for (int v = 1; v < h.order(); ++v)
            m = std::min(m, h.degree(v));
        return m;
    }
} // namespace detail

/// Exact search for h as a minor of g.
inline auto has_minor(const Graph & g, const Graph & h, const MinorOptions & opts = {}) -> std::optional<MinorEmbedding>
{
    if (h.order() > minor_pattern_limit)
        throw SizeLimitError("minor patterns are limited to " + std::to_string(minor_pattern_limit) + " vertices");
    if (g.order() > minor_host_limit)
        throw SizeLimitError("minor hosts are limited to " + std::to_string(minor_host_limit) + " vertices");
    if (h.order() > g.order() || h.size() > g.size())
        return std::nullopt;

    auto reduced = detail::reduce_host(g, detail::min_degree(h));
    if (h.order() > reduced.graph.order())
        return std::nullopt;
    detail::BagSearch search(reduced.graph, h.order(), h.edges(), std::vector<int>(static_cast<std::size_t>(h.order()), -1));
    auto result = search.run({opts.max_nodes, opts.max_seconds}, opts.threads);
    if (result.status == detail::SearchStatus::BudgetExceeded)
        throw BudgetExceeded("minor search exceeded its budget after " + std::to_string(result.stats.nodes) + " nodes");
    if (result.status == detail::SearchStatus::Exhausted)
        return std::nullopt;

    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < h.order(); ++i)
        result.bags[static_cast<std::size_t>(i)].for_each(
            [&](int v) { owner[static_cast<std::size_t>(reduced.to_original[static_cast<std::size_t>(v)])] = i; });
    for (auto it = reduced.suppressed.rbegin(); it != reduced.suppressed.rend(); ++it) {
        auto [v, a, b] = *it;
        int oa = owner[static_cast<std::size_t>(a)], ob = owner[static_cast<std::size_t>(b)];
        if (oa >= 0 && ob >= 0)
            owner[static_cast<std::size_t>(v)] = oa;
    }
    MinorEmbedding emb;
    emb.bags.assign(static_cast<std::size_t>(h.order()), VertexSet(g.order()));
    for (int v = 0; v < g.order(); ++v)
        if (owner[static_cast<std::size_t>(v)] >= 0)
            emb.bags[static_cast<std::size_t>(owner[static_cast<std::size_t>(v)])].insert(v);
    if (auto bad = embedding_problems(g, h, emb); ! bad.empty())
        throw std::logic_error("minor search produced an invalid embedding: " + bad.front());
    return emb;
}

struct PlanarityWitness {
    std::string minor; // "K5" or "K3,3"
    MinorEmbedding embedding;
};

/// A K5 or K3,3 minor, K5 tried first; none means the graph is planar.
inline auto nonplanarity_witness(const Graph & g, const MinorOptions & opts = {}) -> std::optional<PlanarityWitness>
{
    if (g.order() > minor_host_limit)
        throw SizeLimitError("planarity checks are limited to " + std::to_string(minor_host_limit) + " vertices");
    if (auto k5 = has_minor(g, family({"complete", {5}}), opts))
        return PlanarityWitness{"K5", std::move(*k5)};
    if (auto k33 = has_minor(g, family({"complete_bipartite", {3, 3}}), opts))
        return PlanarityWitness{"K3,3", std::move(*k33)};
    return std::nullopt;
}

inline auto is_planar(const Graph & g, const MinorOptions & opts = {}) -> bool { return ! nonplanarity_witness(g, opts).has_value(); }

struct RemarkReport {
    /// Every pair of representatives shares a Kempe chain.
    bool premises_ok = false;
    bool planar = false;
    bool has_k5_minor = false;
    std::optional<PlanarityWitness> nonplanarity;
    std::optional<MinorEmbedding> k5;
    /// Premises hold but a conclusion fails.
    bool counterexample = false;
};

inline auto validate_remarks(const ColoredInstance & inst, const MinorOptions & opts = {}) -> RemarkReport
{
    if (inst.class_count() != 5)
        throw PreconditionError("remark validation needs exactly 5 classes, got " + std::to_string(inst.class_count()));
    RemarkReport r;
    auto h = h_graph(inst).graph;
    r.premises_ok = h.size() == 10;
    const auto & g = inst.graph();
    r.k5 = has_minor(g, family({"complete", {5}}), opts);
    r.has_k5_minor = r.k5.has_value();
    if (r.k5)
        r.nonplanarity = PlanarityWitness{"K5", *r.k5};
    else
        r.nonplanarity = nonplanarity_witness(g, opts);
    r.planar = ! r.nonplanarity.has_value();
    r.counterexample = r.premises_ok && (r.planar || ! r.has_k5_minor);
    return r;
}

} // namespace kempe
