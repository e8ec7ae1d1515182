#pragma once

#include <kempe/error.hpp>
#include <kempe/vertex_set.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kempe {

using Edge = std::pair<int, int>;

/// Finite undirected simple graph on the vertices 0..n-1. Immutable once built.
class Graph {
  public:
    Graph() = default;

    explicit Graph(int n) : adjacency_(static_cast<std::size_t>(check_order(n))), rows_(static_cast<std::size_t>(n), VertexSet(n)) {}

    /// Throws GraphError on loops, parallel edges (in either orientation) or
    /// out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges) : Graph(n)
    {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint outside 0.." +
                    std::to_string(n - 1));
            if (u == v)
                throw GraphError("self-loop at vertex " + std::to_string(u));
            if (rows_[static_cast<std::size_t>(u)].contains(v))
                throw GraphError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
            rows_[static_cast<std::size_t>(u)].insert(v);
            rows_[static_cast<std::size_t>(v)].insert(u);
            ++edge_count_;
        }
        for (int v = 0; v < n; ++v)
            adjacency_[static_cast<std::size_t>(v)] = rows_[static_cast<std::size_t>(v)].members();
    }

    Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    Graph(int n, const std::vector<Edge> & edges) : Graph(n, std::span<const Edge>(edges)) {}

    auto order() const -> int { return static_cast<int>(adjacency_.size()); }
    auto size() const -> std::size_t { return edge_count_; }

    /// Sorted neighbour list.
    auto neighbors(int v) const -> std::span<const int> { return adjacency_[static_cast<std::size_t>(v)]; }
    auto neighbor_set(int v) const -> const VertexSet & { return rows_[static_cast<std::size_t>(v)]; }
    auto degree(int v) const -> int { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    auto adjacent(int u, int v) const -> bool { return rows_[static_cast<std::size_t>(u)].contains(v); }

    /// All edges as (u, v) with u < v, sorted.
    auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (int u = 0; u < order(); ++u)
            for (int v : neighbors(u))
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    auto vertex_set() const -> VertexSet { return VertexSet::full(order()); }

    friend auto operator==(const Graph & a, const Graph & b) -> bool { return a.adjacency_ == b.adjacency_; }

  private:
    static auto check_order(int n) -> int
    {
        if (n < 0)
            throw GraphError("negative vertex count");
        return n;
    }

    std::vector<std::vector<int>> adjacency_;
    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
};

/// Connected components of g[within], ordered by smallest contained vertex.
inline auto components(const Graph & g, const VertexSet & within) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    VertexSet seen(g.order());
    within.for_each([&](int start) {
        if (seen.contains(start))
            return;
        VertexSet comp(g.order());
        std::deque<int> queue{start};
        seen.insert(start);
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.insert(v);
            for (int w : g.neighbors(v))
                if (within.contains(w) && ! seen.contains(w)) {
                    seen.insert(w);
                    queue.push_back(w);
                }
        }
        out.push_back(std::move(comp));
    });
    return out;
}

inline auto components(const Graph & g) -> std::vector<VertexSet> { return components(g, g.vertex_set()); }

/// True iff g[s] is connected and nonempty.
inline auto is_connected_subset(const Graph & g, const VertexSet & s) -> bool
{
    if (s.empty())
        return false;
    return components(g, s).size() == 1;
}

inline auto is_connected(const Graph & g) -> bool { return g.order() == 0 || is_connected_subset(g, g.vertex_set()); }

/// Induced subgraph together with the new-index -> old-index map.
struct Subgraph {
    Graph graph;
    std::vector<int> to_original;
};

inline auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Subgraph
{
    std::vector<int> to_original = keep.members();
    std::vector<int> to_new(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < to_original.size(); ++i)
        to_new[static_cast<std::size_t>(to_original[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (to_new[static_cast<std::size_t>(u)] >= 0 && to_new[static_cast<std::size_t>(v)] >= 0)
            edges.emplace_back(to_new[static_cast<std::size_t>(u)], to_new[static_cast<std::size_t>(v)]);
    return {Graph(static_cast<int>(to_original.size()), edges), std::move(to_original)};
}

/// Result of contracting vertex groups: `map[old] = new`.
struct Contraction {
    Graph graph;
    std::vector<int> map;
};

/// Contracts each part to one vertex. New vertices are numbered by the
/// smallest original vertex of their group, so untouched vertices keep their
/// relative order. Parallel edges merge and loops vanish.
inline auto contract(const Graph & g, std::span<const VertexSet> parts) -> Contraction
{
    const int n = g.order();
    std::vector<int> group(static_cast<std::size_t>(n), -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].universe() != n)
            throw PreconditionError("contract: part " + std::to_string(p) + " refers to a different vertex universe");
        if (parts[p].empty())
            throw PreconditionError("contract: part " + std::to_string(p) + " is empty");
        if (! is_connected_subset(g, parts[p]))
            throw PreconditionError("contract: part " + std::to_string(p) + " does not induce a connected subgraph");
        bool overlap = false;
        parts[p].for_each([&](int v) {
            if (group[static_cast<std::size_t>(v)] >= 0)
                overlap = true;
            group[static_cast<std::size_t>(v)] = static_cast<int>(p);
        });
        if (overlap)
            throw PreconditionError("contract: part " + std::to_string(p) + " overlaps an earlier part");
    }

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<int> part_target(parts.size(), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int p = group[static_cast<std::size_t>(v)];
        if (p < 0)
            map[static_cast<std::size_t>(v)] = next++;
        else {
            if (part_target[static_cast<std::size_t>(p)] < 0)
                part_target[static_cast<std::size_t>(p)] = next++;
            map[static_cast<std::size_t>(v)] = part_target[static_cast<std::size_t>(p)];
        }
    }

    std::vector<VertexSet> rows(static_cast<std::size_t>(next), VertexSet(next));
    for (auto [u, v] : g.edges()) {
        int a = map[static_cast<std::size_t>(u)], b = map[static_cast<std::size_t>(v)];
        if (a != b) {
            rows[static_cast<std::size_t>(a)].insert(b);
            rows[static_cast<std::size_t>(b)].insert(a);
        }
    }
    std::vector<Edge> edges;
    for (int a = 0; a < next; ++a)
        rows[static_cast<std::size_t>(a)].for_each([&](int b) {
            if (a < b)
                edges.emplace_back(a, b);
        });
    return {Graph(next, edges), std::move(map)};
}

/// Graph obtained by renaming vertex v to perm[v].
inline auto relabel(const Graph & g, std::span<const int> perm) -> Graph
{
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Graph(g.order(), edges);
}

/// Disjoint union; vertices of b are shifted by a.order().
inline auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    auto edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), edges);
}

inline auto with_edges_added(const Graph & g, std::span<const Edge> extra) -> Graph
{
    auto edges = g.edges();
    for (auto [u, v] : extra)
        if (! g.adjacent(u, v))
            edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(g.order(), edges);
}

inline auto is_independent(const Graph & g, const VertexSet & s) -> bool
{
    bool ok = true;
    s.for_each([&](int v) {
        if (g.neighbor_set(v).intersects(s))
            ok = false;
    });
    return ok;
}

/// Open neighbourhood N(s) \ s.
inline auto neighborhood(const Graph & g, const VertexSet & s) -> VertexSet
{
    VertexSet out(g.order());
    s.for_each([&](int v) { out |= g.neighbor_set(v); });
    return out - s;
}

inline auto is_triangle_free(const Graph & g) -> bool
{
    for (auto [u, v] : g.edges())
        if (g.neighbor_set(u).intersects(g.neighbor_set(v)))
            return false;
    return true;
}

inline auto is_bipartite(const Graph & g) -> bool
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (side[static_cast<std::size_t>(w)] < 0) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                }
                else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)])
                    return false;
            }
        }
    }
    return true;
}

/// Length of a shortest cycle, or 0 for forests.
inline auto girth(const Graph & g) -> int
{
    const int n = g.order();
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                }
                else if (parent[static_cast<std::size_t>(v)] != w) {
                    int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (best == 0 || len < best)
                        best = len;
                }
            }
        }
    }
    return best;
}

/// Vertices whose removal disconnects their component, ascending.
inline auto cut_vertices(const Graph & g) -> std::vector<int>
{
    std::vector<int> out;
    const auto base = components(g).size();
    for (int v = 0; v < g.order(); ++v) {
        auto rest = g.vertex_set();
        rest.erase(v);
        if (components(g, rest).size() > base)
            out.push_back(v);
    }
    return out;
}

inline constexpr int canonical_key_limit = 10;

/// Lexicographically smallest upper-triangle adjacency code over all vertex
/// orders. Pairs are read column by column: (0,1), (0,2), (1,2), (0,3), ...
/// The key starts with one byte holding n, followed by the code bits packed
/// MSB-first. Equal keys iff isomorphic.
inline auto canonical_key(const Graph & g) -> std::string
{
    const int n = g.order();
    if (n > canonical_key_limit)
        throw SizeLimitError("canonical_key supports at most " + std::to_string(canonical_key_limit) + " vertices, got " +
            std::to_string(n));

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1U << v;
        adj[static_cast<std::size_t>(v)] |= 1U << u;
    }

    const int total_bits = n * (n - 1) / 2;
    std::uint64_t best = ~std::uint64_t{0};
    bool have_best = false;
    std::vector<int> perm(static_cast<std::size_t>(n));

    // Column j contributes j bits; the prefix after column j has j(j+1)/2 bits.
    auto recurse = [&](auto & self, int pos, std::uint32_t used, std::uint64_t code, bool strictly_less) -> void {
        if (pos == n) {
            if (! have_best || code < best) {
                best = code;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1U)
                continue;
            std::uint64_t next = code;
            for (int i = 0; i < pos; ++i) {
                next <<= 1;
                if ((adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >> v) & 1U)
                    next |= 1U;
            }
            bool less = strictly_less;
            if (have_best && ! strictly_less) {
                int prefix_bits = pos * (pos + 1) / 2;
                std::uint64_t best_prefix = best >> (total_bits - prefix_bits);
                if (next > best_prefix)
                    continue;
                less = next < best_prefix;
            }
            perm[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, used | (1U << v), next, less);
        }
    };
    recurse(recurse, 0, 0U, 0, false);

    std::string key;
    key.push_back(static_cast<char>(n));
    const int bytes = (total_bits + 7) / 8;
    std::uint64_t aligned = total_bits == 0 ? 0 : best << (bytes * 8 - total_bits);
    for (int b = bytes - 1; b >= 0; --b)
        key.push_back(static_cast<char>((aligned >> (8 * b)) & 0xFFU));
    return key;
}

} // namespace kempe
