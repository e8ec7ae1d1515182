#pragma once

#include <kempe/certificate.hpp>
#include <kempe/error.hpp>
#include <kempe/graph.hpp>
#include <kempe/kempe.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace kempe {

/// The doubled graph of a base graph G: vertex (x, i) for i in {1, 2} is
/// index 2x + i - 1, and (x,i)(y,j) is an edge iff xy is an edge of G and
/// not both copies are 1. Classes are {(x,1), (x,2)}; the transversal is
/// the copy-1 layer, so class x has representative 2x.
struct ZInstance {
    Graph base;
    ColoredInstance inst;
};

inline constexpr auto z_vertex(int x, int copy) -> int { return 2 * x + copy - 1; }
inline constexpr auto z_base(int v) -> int { return v / 2; }
inline constexpr auto z_copy(int v) -> int { return v % 2 + 1; }

/// The other copy of the same base vertex.
inline constexpr auto bar(int v) -> int { return v ^ 1; }

inline auto z_of(const Graph & g) -> ZInstance
{
    if (g.order() < 1)
        throw PreconditionError("the base graph needs at least one vertex");
    if (g.order() > max_classes)
        throw SizeLimitError("the base graph has " + std::to_string(g.order()) + " vertices; at most " +
            std::to_string(max_classes) + " are supported");
    std::vector<Edge> edges;
    for (auto [x, y] : g.edges()) {
        edges.emplace_back(z_vertex(x, 1), z_vertex(y, 2));
        edges.emplace_back(z_vertex(x, 2), z_vertex(y, 1));
        edges.emplace_back(z_vertex(x, 2), z_vertex(y, 2));
    }
    for (auto & e : edges)
        if (e.first > e.second)
            std::swap(e.first, e.second);
    const int n = g.order();
    std::vector<int> labels(static_cast<std::size_t>(2 * n)), reps(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        labels[static_cast<std::size_t>(z_vertex(x, 1))] = x;
        labels[static_cast<std::size_t>(z_vertex(x, 2))] = x;
        reps[static_cast<std::size_t>(x)] = z_vertex(x, 1);
    }
    return {g, ColoredInstance(Graph(2 * n, edges), Coloring::from_labels(labels), Transversal{std::move(reps)})};
}

/// f as an index array: f[x] is the image of x.
struct GoodPermutation {
    std::vector<int> f;
};

/// Condition (ii) for the edge xy.
inline auto good_on_edge(const Graph & g, std::span<const int> f, int x, int y) -> bool
{
    int fx = f[static_cast<std::size_t>(x)], fy = f[static_cast<std::size_t>(y)];
    return g.adjacent(fx, y) || g.adjacent(fx, fy) || g.adjacent(fy, x);
}

/// Checks (i), (ii) and bijectivity; returns the first problem found.
inline auto good_permutation_problem(const Graph & g, std::span<const int> f) -> std::optional<std::string>
{
    const int n = g.order();
    if (static_cast<int>(f.size()) != n)
        return "permutation has " + std::to_string(f.size()) + " entries for " + std::to_string(n) + " vertices";
    std::vector<bool> hit(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        int fx = f[static_cast<std::size_t>(x)];
        if (fx < 0 || fx >= n || hit[static_cast<std::size_t>(fx)])
            return "f is not a permutation (entry " + std::to_string(x) + ")";
        hit[static_cast<std::size_t>(fx)] = true;
        if (! g.adjacent(x, fx))
            return "condition (i) fails at " + std::to_string(x) + ": " + std::to_string(x) + "-" + std::to_string(fx) +
                " is not an edge";
    }
    for (auto [x, y] : g.edges())
        if (! good_on_edge(g, f, x, y))
            return "condition (ii) fails on edge " + std::to_string(x) + "-" + std::to_string(y);
    return std::nullopt;
}

inline constexpr int good_permutation_limit = 12;

/// Backtracking over vertices in degree-descending order; (ii) is checked as
/// soon as both ends of an edge have an image.
inline auto find_good_permutation(const Graph & g) -> std::optional<GoodPermutation>
{
    const int n = g.order();
    if (n > good_permutation_limit)
        throw SizeLimitError("good permutation search supports at most " + std::to_string(good_permutation_limit) + " vertices");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> f(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n));
    auto rec = [&](auto & self, std::size_t pos) -> bool {
        if (pos == order.size())
            return true;
        int x = order[pos];
        for (int fx : g.neighbors(x)) {
            if (used[static_cast<std::size_t>(fx)])
                continue;
            f[static_cast<std::size_t>(x)] = fx;
            bool ok = true;
            for (int y : g.neighbors(x))
                if (f[static_cast<std::size_t>(y)] >= 0 && ! good_on_edge(g, f, x, y)) {
                    ok = false;
                    break;
                }
            if (ok) {
                used[static_cast<std::size_t>(fx)] = true;
                if (self(self, pos + 1))
                    return true;
                used[static_cast<std::size_t>(fx)] = false;
            }
        }
        f[static_cast<std::size_t>(x)] = -1;
        return false;
    };
    if (! rec(rec, 0))
        return std::nullopt;
    return GoodPermutation{std::move(f)};
}

/// Bags {(x,1), (f(x),2)}.
inline auto permutation_certificate(const ZInstance & z, const GoodPermutation & p) -> RootedCertificate
{
    if (auto problem = good_permutation_problem(z.base, p.f))
        throw PreconditionError("not a good permutation: " + *problem);
    RootedCertificate cert;
    const int n = z.base.order();
    for (int x = 0; x < n; ++x)
        cert.bags.push_back(VertexSet(2 * n, {z_vertex(x, 1), z_vertex(p.f[static_cast<std::size_t>(x)], 2)}));
    return cert;
}

enum class CountingVerdict { UnsatCertified, Inconclusive };

inline auto to_string(CountingVerdict v) -> const char *
{
    return v == CountingVerdict::UnsatCertified ? "UNSAT_CERTIFIED" : "INCONCLUSIVE";
}

/// If A is the set of singleton bags, every H-neighbour of A needs at least
/// three vertices and everything else at least two, so
/// q >= |A| + 3|N(A)| + 2(k - |A| - |N(A)|) = 2k + |N(A)| - |A|.
struct AnticliqueBound {
    VertexSet members;
    int neighborhood = 0;
    int q_lower_bound = 0;
};

/// Regular-graph accounting: with A, B, C the classes whose bags have one,
/// two, at least three vertices, d|A| < d|C| forces q > |V(Z)|.
struct RegularAccounting {
    bool applies = false;
    bool connected = false;
    int degree = -1;
    int girth = 0;
    bool bipartite = false;
};

struct CountingReport {
    bool applicable = false;
    bool good_perm_exists = false;
    std::optional<GoodPermutation> good_permutation;
    std::optional<VertexSet> violating_anticlique;
    CountingVerdict verdict = CountingVerdict::Inconclusive;
    std::vector<AnticliqueBound> table;
    int min_bound = 0;
    int vertex_count = 0;
    RegularAccounting regular;
    std::string reason;
};

inline auto regular_accounting(const Graph & g) -> RegularAccounting
{
    RegularAccounting r;
    r.connected = is_connected(g);
    r.girth = girth(g);
    r.bipartite = is_bipartite(g);
    if (g.order() > 0) {
        r.degree = g.degree(0);
        for (int v = 1; v < g.order(); ++v)
            if (g.degree(v) != r.degree)
                r.degree = -1;
    }
    r.applies = r.connected && r.degree >= 3 && ! r.bipartite && r.girth >= 5;
    return r;
}

inline auto counting_unsat_check(const ZInstance & z) -> CountingReport
{
    CountingReport rep;
    const auto h = h_graph(z.inst).graph;
    const int k = h.order();
    rep.vertex_count = z.inst.graph().order();
    rep.min_bound = 2 * k;
    rep.regular = regular_accounting(z.base);
    rep.applicable = is_triangle_free(h);
    if (! rep.applicable) {
        rep.reason = "H has a triangle";
        return rep;
    }

    rep.good_permutation = find_good_permutation(z.base);
    rep.good_perm_exists = rep.good_permutation.has_value();

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
    for (auto [a, b] : h.edges()) {
        adj[static_cast<std::size_t>(a)] |= 1U << b;
        adj[static_cast<std::size_t>(b)] |= 1U << a;
    }
    bool first = true;
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
        std::uint32_t nb = 0;
        bool independent = true;
        for (int v = 0; v < k; ++v)
            if ((mask >> v) & 1U) {
                if (adj[static_cast<std::size_t>(v)] & mask) {
                    independent = false;
                    break;
                }
                nb |= adj[static_cast<std::size_t>(v)];
            }
        if (! independent)
            continue;
        AnticliqueBound row{VertexSet(k), std::popcount(nb), 0};
        for (int v = 0; v < k; ++v)
            if ((mask >> v) & 1U)
                row.members.insert(v);
        row.q_lower_bound = 2 * k + row.neighborhood - row.members.size();
        if (first || row.q_lower_bound < rep.min_bound)
            rep.min_bound = row.q_lower_bound;
        first = false;
        if (row.neighborhood <= row.members.size() && ! rep.violating_anticlique)
            rep.violating_anticlique = row.members;
        rep.table.push_back(std::move(row));
    }
    std::sort(rep.table.begin(), rep.table.end(), [](const AnticliqueBound & a, const AnticliqueBound & b) {
        if (a.members.size() != b.members.size())
            return a.members.size() < b.members.size();
        return a.members < b.members;
    });

    if (rep.good_perm_exists)
        rep.reason = "a good permutation exists";
    else if (rep.violating_anticlique)
        rep.reason = "an anticlique A has |N_H(A)| <= |A|";
    else {
        rep.verdict = CountingVerdict::UnsatCertified;
        rep.reason = "q >= " + std::to_string(rep.min_bound) + " > " + std::to_string(rep.vertex_count) + " = |V(Z)|";
    }
    return rep;
}

} // namespace kempe
