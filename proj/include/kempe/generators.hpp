#pragma once

#include <kempe/error.hpp>
#include <kempe/graph.hpp>
#include <kempe/kempe.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace kempe {

struct FamilySpec {
    std::string name;
    std::vector<int> params;
};

inline auto family_names() -> std::vector<std::string>
{
    return {"cycle", "path", "complete", "complete_bipartite", "petersen", "hourglass", "k23", "c5plus", "wheel", "prism", "wagner", "g7"};
}

/// Fixed labelings:
///   cycle n: 0-1-...-(n-1)-0          path n: 0-1-...-(n-1)
///   complete_bipartite a b: parts 0..a-1 and a..a+b-1
///   petersen: outer cycle 0..4, spokes i-(i+5), inner i+5 ~ (i+2)%5+5
///   hourglass: triangles 0,1,2 and 0,3,4         k23: {0,1} x {2,3,4}
///   c5plus: 5-cycle plus chord 0-2
///   wheel n: rim cycle 0..n-1, centre n
///   prism: triangles 0,2,4 and 1,3,5 with rungs 0-1, 2-3, 4-5
///   wagner: 8-cycle plus i-(i+4)
///   g7: 6-cycle 0..5, vertex 6 adjacent to 0 and 3
inline auto family(const FamilySpec & spec) -> Graph
{
    const auto & p = spec.params;
    auto need = [&](std::size_t count) {
        if (p.size() != count)
            throw PreconditionError("family " + spec.name + " takes " + std::to_string(count) + " parameter(s), got " +
                std::to_string(p.size()));
    };
    auto at_least = [&](int value, int min, const char * what) {
        if (value < min)
            throw PreconditionError("family " + spec.name + ": " + what + " must be at least " + std::to_string(min));
        if (value > 10000)
            throw PreconditionError("family " + spec.name + ": " + what + " is too large");
    };
    std::vector<Edge> e;
    auto cycle_edges = [&](int n, int offset) {
        for (int i = 0; i < n; ++i)
            e.emplace_back(std::min(offset + i, offset + (i + 1) % n), std::max(offset + i, offset + (i + 1) % n));
    };

    const auto & name = spec.name;
    if (name == "cycle") {
        need(1);
        at_least(p[0], 3, "length");
        cycle_edges(p[0], 0);
        return Graph(p[0], e);
    }
    if (name == "path") {
        need(1);
        at_least(p[0], 1, "order");
        for (int i = 0; i + 1 < p[0]; ++i)
            e.emplace_back(i, i + 1);
        return Graph(p[0], e);
    }
    if (name == "complete") {
        need(1);
        at_least(p[0], 1, "order");
        for (int i = 0; i < p[0]; ++i)
            for (int j = i + 1; j < p[0]; ++j)
                e.emplace_back(i, j);
        return Graph(p[0], e);
    }
    if (name == "complete_bipartite") {
        need(2);
        at_least(p[0], 1, "first part");
        at_least(p[1], 1, "second part");
        for (int i = 0; i < p[0]; ++i)
            for (int j = 0; j < p[1]; ++j)
                e.emplace_back(i, p[0] + j);
        return Graph(p[0] + p[1], e);
    }
    if (name == "petersen") {
        need(0);
        cycle_edges(5, 0);
        for (int i = 0; i < 5; ++i) {
            e.emplace_back(i, i + 5);
            int a = i + 5, b = (i + 2) % 5 + 5;
            e.emplace_back(std::min(a, b), std::max(a, b));
        }
        return Graph(10, e);
    }
    if (name == "hourglass") {
        need(0);
        return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    }
    if (name == "k23") {
        need(0);
        return family({"complete_bipartite", {2, 3}});
    }
    if (name == "c5plus") {
        need(0);
        cycle_edges(5, 0);
        e.emplace_back(0, 2);
        return Graph(5, e);
    }
    if (name == "wheel") {
        need(1);
        at_least(p[0], 3, "rim length");
        cycle_edges(p[0], 0);
        for (int i = 0; i < p[0]; ++i)
            e.emplace_back(i, p[0]);
        return Graph(p[0] + 1, e);
    }
    if (name == "prism") {
        need(0);
        return Graph(6, {{0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}, {0, 1}, {2, 3}, {4, 5}});
    }
    if (name == "wagner") {
        need(0);
        cycle_edges(8, 0);
        for (int i = 0; i < 4; ++i)
            e.emplace_back(i, i + 4);
        return Graph(8, e);
    }
    if (name == "g7") {
        need(0);
        cycle_edges(6, 0);
        e.emplace_back(0, 6);
        e.emplace_back(3, 6);
        return Graph(7, e);
    }
    throw PreconditionError("unknown family '" + name + "'");
}

struct PathSystemSpec {
    Graph pattern;
    std::uint64_t seed = 0;
    /// Upper bound on internal vertices per path; must be even.
    int max_internal = 4;
    double extra_edge_prob = 0.0;
    bool kempe_complete = false;
};

struct PathSystem {
    ColoredInstance instance;
    /// Extra edges dropped because they would have joined the roots of a
    /// class pair that is not a pattern edge.
    int rejected_extra_edges = 0;
};

/// Class i has root i. Each pattern edge ab gets a fresh path a, (b), (a), ..., b
/// alternating between the two classes, with an even number of internal
/// vertices drawn uniformly from 0, 2, ..., max_internal.
inline auto random_path_system(const PathSystemSpec & spec) -> PathSystem
{
    const int k = spec.pattern.order();
    if (k < 1 || k > max_classes)
        throw PreconditionError("path systems need between 1 and " + std::to_string(max_classes) + " pattern vertices");
    if (spec.max_internal < 0 || spec.max_internal % 2 != 0)
        throw PreconditionError("max_internal must be a nonnegative even number");
    if (! (spec.extra_edge_prob >= 0.0 && spec.extra_edge_prob <= 1.0))
        throw PreconditionError("extra_edge_prob must lie in [0, 1]");

    std::mt19937_64 rng(spec.seed);
    std::vector<int> label;
    for (int c = 0; c < k; ++c)
        label.push_back(c);
    std::vector<Edge> edges;
    auto add_path = [&](int a, int b) {
        std::uniform_int_distribution<int> half(0, spec.max_internal / 2);
        int internal = 2 * half(rng);
        int prev = a;
        for (int i = 0; i < internal; ++i) {
            int v = static_cast<int>(label.size());
            label.push_back(i % 2 == 0 ? b : a);
            edges.emplace_back(prev, v);
            prev = v;
        }
        edges.emplace_back(std::min(prev, b), std::max(prev, b));
    };

    auto pattern_edges = spec.pattern.edges();
    for (auto [a, b] : pattern_edges)
        add_path(a, b);

    auto build = [&]() {
        std::vector<Edge> sorted = edges;
        for (auto & ed : sorted)
            if (ed.first > ed.second)
                std::swap(ed.first, ed.second);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> reps(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c)
            reps[static_cast<std::size_t>(c)] = c;
        return ColoredInstance(Graph(static_cast<int>(label.size()), sorted), Coloring::from_labels(label), Transversal{reps});
    };

    int rejected = 0;
    if (spec.extra_edge_prob > 0.0) {
        std::bernoulli_distribution coin(spec.extra_edge_prob);
        const int n = static_cast<int>(label.size());
        auto current = build();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int cu = label[static_cast<std::size_t>(u)], cv = label[static_cast<std::size_t>(v)];
                if (cu == cv || current.graph().adjacent(u, v) || ! coin(rng))
                    continue;
                edges.emplace_back(u, v);
                auto trial = build();
                if (! spec.kempe_complete && ! spec.pattern.adjacent(cu, cv) && reps_share_chain(trial, cu, cv)) {
                    edges.pop_back();
                    ++rejected;
                    continue;
                }
                current = std::move(trial);
            }
    }

    if (spec.kempe_complete) {
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (! spec.pattern.adjacent(a, b))
                    add_path(a, b);
        auto current = build();
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                auto comps = components(current.graph(), current.class_pair(a, b));
                for (const auto & comp : comps) {
                    if (comp.contains(a))
                        continue;
                    int u = comp.first();
                    int target = label[static_cast<std::size_t>(u)] == a ? b : a;
                    edges.emplace_back(std::min(u, target), std::max(u, target));
                }
            }
    }
    return {build(), rejected};
}

namespace detail {
    inline auto graph_from_canonical_key(const std::string & key) -> Graph
    {
        const int n = static_cast<unsigned char>(key[0]);
        std::vector<Edge> edges;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit) {
                auto byte = static_cast<unsigned char>(key[static_cast<std::size_t>(1 + bit / 8)]);
                if ((byte >> (7 - bit % 8)) & 1U)
                    edges.emplace_back(i, j);
            }
        return Graph(n, edges);
    }
} // namespace detail

inline constexpr int enumerate_limit = 7;

/// One graph per isomorphism class on exactly n vertices, in canonical
/// labelling, ordered by edge count and then canonical key.
inline auto enumerate_graphs(int n) -> std::vector<Graph>
{
    if (n < 0 || n > enumerate_limit)
        throw SizeLimitError("graph enumeration supports 0.." + std::to_string(enumerate_limit) + " vertices");
    std::map<std::pair<std::size_t, std::string>, Graph> layer;
    layer.emplace(std::pair{std::size_t{0}, canonical_key(Graph(0))}, Graph(0));
    for (int m = 1; m <= n; ++m) {
        std::map<std::pair<std::size_t, std::string>, Graph> next;
        for (const auto & [_, g] : layer) {
            const int v = m - 1;
            for (std::uint32_t mask = 0; mask < (1U << v); ++mask) {
                auto edges = g.edges();
                for (int u = 0; u < v; ++u)
                    if ((mask >> u) & 1U)
                        edges.emplace_back(u, v);
                Graph h(m, edges);
                auto key = canonical_key(h);
                auto id = std::pair{h.size(), key};
                if (! next.contains(id))
                    next.emplace(id, detail::graph_from_canonical_key(key));
            }
        }
        layer = std::move(next);
    }
    std::vector<Graph> out;
    for (auto & [_, g] : layer)
        out.push_back(std::move(g));
    return out;
}

} // namespace kempe
