#pragma once

#include <kempe/error.hpp>
#include <kempe/graph.hpp>
#include <kempe/kempe.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace kempe {

/// Pattern K over class indices 0..k-1. Pattern vertex i stands for the
/// transversal vertex of class i.
struct TargetPattern {
    int k = 0;
    std::vector<Edge> edges;

    TargetPattern() = default;

    /// Normalises edges to (a, b) with a < b, sorted; rejects loops,
    /// duplicates and out-of-range indices.
    TargetPattern(int k_, std::vector<Edge> edges_) : k(k_)
    {
        for (auto [a, b] : edges_) {
            if (a < 0 || b < 0 || a >= k || b >= k)
                throw InstanceError("pattern edge {" + std::to_string(a) + "," + std::to_string(b) + "} is out of range");
            if (a == b)
                throw InstanceError("pattern edge {" + std::to_string(a) + "," + std::to_string(a) + "} is a loop");
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw InstanceError("pattern has a duplicate edge");
    }

    static auto from_graph(const Graph & g) -> TargetPattern { return TargetPattern(g.order(), g.edges()); }

    /// The whole of H(G, C, T).
    static auto full(const ColoredInstance & inst) -> TargetPattern { return from_graph(h_graph(inst).graph); }

    auto graph() const -> Graph { return Graph(k, edges); }
};

/// Throws InstanceError unless `pat` is a spanning subgraph of h_graph(inst).
inline auto check_pattern(const ColoredInstance & inst, const TargetPattern & pat) -> void
{
    if (pat.k != inst.class_count())
        throw InstanceError("pattern has " + std::to_string(pat.k) + " vertices but the instance has " +
            std::to_string(inst.class_count()) + " classes");
    auto h = h_graph(inst).graph;
    for (auto [a, b] : pat.edges)
        if (! h.adjacent(a, b))
            throw InstanceError("pattern edge {" + std::to_string(a) + "," + std::to_string(b) +
                "} is not an edge of H: the representatives share no Kempe chain");
}

/// Bags indexed by class; bag c must contain the representative of class c.
struct RootedCertificate {
    std::vector<VertexSet> bags;
};

struct Violation {
    enum class Kind { BagCount, WrongUniverse, EmptyBag, MissingRoot, Overlap, Disconnected, UncoveredEdge };

    Kind kind;
    int bag = -1;
    int other_bag = -1;
    int vertex = -1;
    std::vector<VertexSet> components;
    std::string message;
};

inline auto to_string(Violation::Kind k) -> const char *
{
    switch (k) {
    case Violation::Kind::BagCount: return "bag_count";
    case Violation::Kind::WrongUniverse: return "wrong_universe";
    case Violation::Kind::EmptyBag: return "empty_bag";
    case Violation::Kind::MissingRoot: return "missing_root";
    case Violation::Kind::Overlap: return "overlap";
    case Violation::Kind::Disconnected: return "disconnected_bag";
    case Violation::Kind::UncoveredEdge: return "uncovered_pattern_edge";
    }
    return "unknown";
}

inline auto bags_adjacent(const Graph & g, const VertexSet & a, const VertexSet & b) -> bool
{
    bool found = false;
    a.for_each([&](int v) {
        if (! found && g.neighbor_set(v).intersects(b))
            found = true;
    });
    return found;
}

/// Checks every rooted-certificate invariant and reports each violation with
/// its witness. An empty result means the certificate is valid.
inline auto verify(const ColoredInstance & inst, const TargetPattern & pat, const RootedCertificate & cert) -> std::vector<Violation>
{
    std::vector<Violation> out;
    const auto & g = inst.graph();
    const int k = inst.class_count();
    if (static_cast<int>(cert.bags.size()) != k || pat.k != k) {
        out.push_back({Violation::Kind::BagCount, -1, -1, -1, {},
            "expected " + std::to_string(k) + " bags and pattern vertices, got " + std::to_string(cert.bags.size()) +
                " bags and " + std::to_string(pat.k) + " pattern vertices"});
        return out;
    }
    for (int c = 0; c < k; ++c)
        if (cert.bags[static_cast<std::size_t>(c)].universe() != g.order()) {
            out.push_back({Violation::Kind::WrongUniverse, c, -1, -1, {}, "bag " + std::to_string(c) + " is over the wrong vertex range"});
            return out;
        }

    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (int c = 0; c < k; ++c) {
        const auto & bag = cert.bags[static_cast<std::size_t>(c)];
        if (bag.empty())
            out.push_back({Violation::Kind::EmptyBag, c, -1, -1, {}, "bag " + std::to_string(c) + " is empty"});
        if (! bag.contains(inst.rep(c)))
            out.push_back({Violation::Kind::MissingRoot, c, -1, inst.rep(c), {},
                "bag " + std::to_string(c) + " does not contain its root " + std::to_string(inst.rep(c))});
        bag.for_each([&](int v) {
            auto & o = owner[static_cast<std::size_t>(v)];
            if (o >= 0)
                out.push_back({Violation::Kind::Overlap, o, c, v, {},
                    "vertex " + std::to_string(v) + " is in bags " + std::to_string(o) + " and " + std::to_string(c)});
            else
                o = c;
        });
        if (! bag.empty()) {
            auto comps = components(g, bag);
            if (comps.size() > 1)
                out.push_back({Violation::Kind::Disconnected, c, -1, -1, comps,
                    "bag " + std::to_string(c) + " induces " + std::to_string(comps.size()) + " components"});
        }
    }
    for (auto [a, b] : pat.edges)
        if (! bags_adjacent(g, cert.bags[static_cast<std::size_t>(a)], cert.bags[static_cast<std::size_t>(b)]))
            out.push_back({Violation::Kind::UncoveredEdge, a, b, -1, {},
                "no edge joins bags " + std::to_string(a) + " and " + std::to_string(b)});
    return out;
}

inline auto is_valid(const ColoredInstance & inst, const TargetPattern & pat, const RootedCertificate & cert) -> bool
{
    return verify(inst, pat, cert).empty();
}

/// Bags given as vertex lists, converted to sets over the instance's vertices.
inline auto make_certificate(const ColoredInstance & inst, const std::vector<std::vector<int>> & bags) -> RootedCertificate
{
    RootedCertificate cert;
    for (const auto & b : bags)
        cert.bags.push_back(VertexSet::of(inst.graph().order(), b));
    return cert;
}

} // namespace kempe
