#pragma once

#include <kempe/certificate.hpp>
#include <kempe/codec.hpp>
#include <kempe/error.hpp>
#include <kempe/kempe.hpp>
#include <kempe/solver.hpp>
#include <kempe/zmodel.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kempe {

// ---------------------------------------------------------------------------
// Matchable anticliques

/// Anticlique A of the pattern plus a matching M from the other pattern
/// vertices into A. Matching edges are stored as (s, t) with s outside A.
struct MatchingWitness {
    VertexSet anticlique;
    std::vector<Edge> matching;
};

namespace detail {
    /// G[P u Q] - t is connected, P and Q the classes of s and t.
    inline auto matching_edge_connected(const ColoredInstance & inst, int s, int t) -> bool
    {
        auto within = inst.class_pair(s, t);
        within.erase(inst.rep(t));
        return is_connected_subset(inst.graph(), within);
    }
} // namespace detail

/// Throws PreconditionError describing the first broken invariant.
inline auto check_witness(const ColoredInstance & inst, const TargetPattern & pat, const MatchingWitness & w) -> void
{
    const int k = pat.k;
    if (w.anticlique.universe() != k)
        throw PreconditionError("witness anticlique is over the wrong number of pattern vertices");
    auto pg = pat.graph();
    if (! is_independent(pg, w.anticlique))
        throw PreconditionError("witness set A is not an anticlique of the pattern");
    std::vector<int> matched_s(static_cast<std::size_t>(k), 0), matched_t(static_cast<std::size_t>(k), 0);
    for (auto [s, t] : w.matching) {
        auto name = "(" + std::to_string(s) + "," + std::to_string(t) + ")";
        if (s < 0 || t < 0 || s >= k || t >= k)
            throw PreconditionError("matching edge " + name + " is out of range");
        if (w.anticlique.contains(s) || ! w.anticlique.contains(t))
            throw PreconditionError("matching edge " + name + " does not go from outside A into A");
        if (! pg.adjacent(s, t))
            throw PreconditionError("matching edge " + name + " is not a pattern edge");
        if (matched_s[static_cast<std::size_t>(s)]++ || matched_t[static_cast<std::size_t>(t)]++)
            throw PreconditionError("matching edge " + name + " shares an endpoint with another matching edge");
        if (! detail::matching_edge_connected(inst, s, t))
            throw PreconditionError("matching edge " + name + ": removing the root of class " + std::to_string(t) +
                " disconnects the union of classes " + std::to_string(s) + " and " + std::to_string(t));
    }
    for (int s = 0; s < k; ++s)
        if (! w.anticlique.contains(s) && ! matched_s[static_cast<std::size_t>(s)])
            throw PreconditionError("pattern vertex " + std::to_string(s) + " outside A is not matched");
}

/// Exhausts anticliques in increasing bitmask order; for each, augmenting
/// paths look for a matching that uses only edges meeting the connectivity
/// condition.
inline auto find_matchable_anticlique(const ColoredInstance & inst, const TargetPattern & pat) -> std::optional<MatchingWitness>
{
    check_pattern(inst, pat);
    const int k = pat.k;
    auto pg = pat.graph();
    std::vector<std::vector<int>> usable(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s)
        for (int t : pg.neighbors(s))
            if (detail::matching_edge_connected(inst, s, t))
                usable[static_cast<std::size_t>(s)].push_back(t);

    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
        VertexSet a(k);
        for (int v = 0; v < k; ++v)
            if ((mask >> v) & 1U)
                a.insert(v);
        if (! is_independent(pg, a))
            continue;
        std::vector<int> owner(static_cast<std::size_t>(k), -1);
        auto augment = [&](auto & self, int s, std::vector<bool> & seen) -> bool {
            for (int t : usable[static_cast<std::size_t>(s)]) {
                if (! a.contains(t) || seen[static_cast<std::size_t>(t)])
                    continue;
                seen[static_cast<std::size_t>(t)] = true;
                if (owner[static_cast<std::size_t>(t)] < 0 || self(self, owner[static_cast<std::size_t>(t)], seen)) {
                    owner[static_cast<std::size_t>(t)] = s;
                    return true;
                }
            }
            return false;
        };
        bool ok = true;
        for (int s = 0; s < k && ok; ++s) {
            if (a.contains(s))
                continue;
            std::vector<bool> seen(static_cast<std::size_t>(k));
            ok = augment(augment, s, seen);
        }
        if (! ok)
            continue;
        MatchingWitness w{a, {}};
        for (int t = 0; t < k; ++t)
            if (owner[static_cast<std::size_t>(t)] >= 0)
                w.matching.emplace_back(owner[static_cast<std::size_t>(t)], t);
        std::sort(w.matching.begin(), w.matching.end());
        return w;
    }
    return std::nullopt;
}

/// Singletons on A; a matched s gets the union of its class and its
/// partner's class, minus the partner's root.
inline auto certificate_from_matching(const ColoredInstance & inst, const TargetPattern & pat, const MatchingWitness & w)
    -> RootedCertificate
{
    check_pattern(inst, pat);
    check_witness(inst, pat, w);
    const int n = inst.graph().order();
    RootedCertificate cert;
    for (int c = 0; c < pat.k; ++c)
        cert.bags.push_back(VertexSet(n, {inst.rep(c)}));
    for (auto [s, t] : w.matching) {
        auto bag = inst.class_pair(s, t);
        bag.erase(inst.rep(t));
        cert.bags[static_cast<std::size_t>(s)] = bag;
    }
    if (auto bad = verify(inst, pat, cert); ! bad.empty())
        throw std::logic_error("matching certificate failed verification: " + bad.front().message);
    return cert;
}

// ---------------------------------------------------------------------------
// Cycles and unicyclic patterns

namespace detail {
    /// Instance under reduction; origin[v] lists the input vertices folded into v.
    struct Work {
        ColoredInstance inst;
        std::vector<std::vector<int>> origin;
    };

    inline auto start_work(const ColoredInstance & inst) -> Work
    {
        Work w{inst, {}};
        for (int v = 0; v < inst.graph().order(); ++v)
            w.origin.push_back({v});
        return w;
    }

    inline auto minimalize(const Work & w, std::span<const Edge> edges) -> Work
    {
        auto sk = path_skeleton(w.inst, edges);
        std::vector<std::vector<int>> origin;
        for (int v : sk.to_original)
            origin.push_back(w.origin[static_cast<std::size_t>(v)]);
        return {std::move(sk.instance), std::move(origin)};
    }

    /// Contracts the path y-x-z (y, z in one class) to a vertex of that class.
    inline auto contract_triple(const Work & w, int y, int x, int z) -> Work
    {
        const auto & g = w.inst.graph();
        std::array<VertexSet, 1> parts{VertexSet(g.order(), {y, x, z})};
        auto c = contract(g, parts);
        std::vector<int> labels(static_cast<std::size_t>(c.graph.order()), -1);
        std::vector<std::vector<int>> origin(static_cast<std::size_t>(c.graph.order()));
        for (int v = 0; v < g.order(); ++v) {
            auto nv = static_cast<std::size_t>(c.map[static_cast<std::size_t>(v)]);
            if (v != x)
                labels[nv] = w.inst.class_of(v);
            auto & o = origin[nv];
            o.insert(o.end(), w.origin[static_cast<std::size_t>(v)].begin(), w.origin[static_cast<std::size_t>(v)].end());
        }
        for (auto & o : origin)
            std::sort(o.begin(), o.end());
        std::vector<int> reps;
        for (int cl = 0; cl < w.inst.class_count(); ++cl)
            reps.push_back(c.map[static_cast<std::size_t>(w.inst.rep(cl))]);
        return {ColoredInstance(std::move(c.graph), Coloring::from_labels(labels), Transversal{std::move(reps)}), std::move(origin)};
    }

    /// Keeps `keep`; `reps` are old indices of the new representatives.
    inline auto restrict_work(const Work & w, const VertexSet & keep, const std::vector<int> & reps) -> Work
    {
        auto sub = induced_subgraph(w.inst.graph(), keep);
        std::vector<int> to_new(static_cast<std::size_t>(w.inst.graph().order()), -1);
        std::vector<int> labels;
        std::vector<std::vector<int>> origin;
        for (std::size_t i = 0; i < sub.to_original.size(); ++i) {
            int v = sub.to_original[i];
            to_new[static_cast<std::size_t>(v)] = static_cast<int>(i);
            labels.push_back(w.inst.class_of(v));
            origin.push_back(w.origin[static_cast<std::size_t>(v)]);
        }
        std::vector<int> new_reps;
        for (int r : reps)
            new_reps.push_back(to_new[static_cast<std::size_t>(r)]);
        return {ColoredInstance(std::move(sub.graph), Coloring::from_labels(labels), Transversal{std::move(new_reps)}),
            std::move(origin)};
    }

    inline auto ring_edges(const std::vector<int> & ring) -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            int a = ring[i], b = ring[(i + 1) % ring.size()];
            out.emplace_back(std::min(a, b), std::max(a, b));
        }
        return out;
    }

    /// Smallest non-root vertex of a listed class with exactly two neighbours,
    /// both in one class; returns (y, x, z) or nothing.
    inline auto find_contractible(const Work & w, const VertexSet & classes) -> std::optional<std::array<int, 3>>
    {
        const auto & g = w.inst.graph();
        for (int x = 0; x < g.order(); ++x) {
            int c = w.inst.class_of(x);
            if (! classes.contains(c) || w.inst.rep(c) == x || g.degree(x) != 2)
                continue;
            int y = g.neighbors(x)[0], z = g.neighbors(x)[1];
            if (w.inst.class_of(y) == w.inst.class_of(z))
                return std::array<int, 3>{y, x, z};
        }
        return std::nullopt;
    }

    using BagLists = std::vector<std::vector<int>>;

    /// Bags (as input vertices) for the classes on `ring`; other entries stay empty.
    inline auto ring_bags(Work w, const std::vector<int> & ring) -> BagLists
    {
        const int k = w.inst.class_count();
        const auto edges = ring_edges(ring);
        VertexSet ring_set(k);
        for (int c : ring)
            ring_set.insert(c);

        for (;;) {
            w = minimalize(w, edges);
            auto triple = find_contractible(w, ring_set);
            if (! triple)
                break;
            w = contract_triple(w, (*triple)[0], (*triple)[1], (*triple)[2]);
        }

        BagLists bags(static_cast<std::size_t>(k));
        bool singletons = std::all_of(ring.begin(), ring.end(), [&](int c) { return w.inst.members(c).size() == 1; });
        if (singletons) {
            for (int c : ring)
                bags[static_cast<std::size_t>(c)] = w.origin[static_cast<std::size_t>(w.inst.rep(c))];
            return bags;
        }

        // Every non-root vertex now lies on both of its class's paths: peel the
        // root layer and root each class at the successor of the previous root.
        const auto l = ring.size();
        const auto & g = w.inst.graph();
        VertexSet keep = g.vertex_set();
        std::vector<int> reps = w.inst.transversal().reps;
        for (std::size_t i = 0; i < l; ++i) {
            int prev = ring[(i + l - 1) % l], cur = ring[i];
            int t_prev = w.inst.rep(prev);
            int next_root = -1;
            for (int v : g.neighbors(t_prev))
                if (w.inst.class_of(v) == cur)
                    next_root = v;
            if (next_root < 0 || next_root == w.inst.rep(cur))
                throw std::logic_error("cycle reduction reached a state without a peelable root layer");
            reps[static_cast<std::size_t>(cur)] = next_root;
            keep.erase(w.inst.rep(cur));
        }
        auto inner = ring_bags(restrict_work(w, keep, reps), ring);
        for (std::size_t i = 0; i < l; ++i) {
            int prev = ring[(i + l - 1) % l], cur = ring[i];
            auto bag = inner[static_cast<std::size_t>(cur)];
            const auto & root = w.origin[static_cast<std::size_t>(w.inst.rep(prev))];
            bag.insert(bag.end(), root.begin(), root.end());
            std::sort(bag.begin(), bag.end());
            bags[static_cast<std::size_t>(prev)] = std::move(bag);
        }
        return bags;
    }

    inline auto to_certificate(const ColoredInstance & inst, const BagLists & bags) -> RootedCertificate
    {
        return make_certificate(inst, bags);
    }

    inline auto require_valid(const ColoredInstance & inst, const TargetPattern & pat, const RootedCertificate & cert, const char * who)
        -> void
    {
        if (auto bad = verify(inst, pat, cert); ! bad.empty())
            throw std::logic_error(std::string(who) + " produced an invalid certificate: " + bad.front().message);
    }
} // namespace detail

/// Certificate for the cycle pattern ring[0] ring[1] ... ring[l-1] ring[0];
/// classes not on the ring get their root as a singleton bag.
inline auto cycle_certificate(const ColoredInstance & inst, const std::vector<int> & ring) -> RootedCertificate
{
    const int k = inst.class_count();
    if (ring.size() < 3)
        throw PreconditionError("a ring needs at least three classes");
    VertexSet seen(k);
    for (int c : ring) {
        if (c < 0 || c >= k)
            throw PreconditionError("ring class " + std::to_string(c) + " is out of range");
        if (seen.contains(c))
            throw PreconditionError("ring class " + std::to_string(c) + " appears twice");
        seen.insert(c);
    }
    TargetPattern pat(k, detail::ring_edges(ring));
    check_pattern(inst, pat);
    auto bags = detail::ring_bags(detail::start_work(inst), ring);
    for (int c = 0; c < k; ++c)
        if (! seen.contains(c))
            bags[static_cast<std::size_t>(c)] = {inst.rep(c)};
    auto cert = detail::to_certificate(inst, bags);
    detail::require_valid(inst, pat, cert, "cycle construction");
    return cert;
}

/// Works for any pattern whose components each contain at most one cycle.
/// Degree-1 pattern vertices are stripped smallest first; what remains is a
/// union of cycles, each handled by the cycle construction.
inline auto unicyclic_certificate(const ColoredInstance & inst, const TargetPattern & pat) -> RootedCertificate
{
    check_pattern(inst, pat);
    const int k = pat.k;
    auto pg = pat.graph();
    for (const auto & comp : components(pg)) {
        std::size_t inside = 0;
        for (auto [a, b] : pat.edges)
            if (comp.contains(a) && comp.contains(b))
                ++inside;
        if (inside > static_cast<std::size_t>(comp.size()))
            throw PreconditionError("pattern component containing vertex " + std::to_string(comp.first()) +
                " has more than one cycle");
    }

    auto w = detail::start_work(inst);
    auto edges = pat.edges;
    for (;;) {
        w = detail::minimalize(w, edges);
        std::vector<int> deg(static_cast<std::size_t>(k), 0);
        for (auto [a, b] : edges) {
            ++deg[static_cast<std::size_t>(a)];
            ++deg[static_cast<std::size_t>(b)];
        }
        int q = -1;
        for (int c = 0; c < k && q < 0; ++c)
            if (deg[static_cast<std::size_t>(c)] == 1)
                q = c;
        if (q < 0)
            break;
        int extra = -1;
        w.inst.members(q).for_each([&](int v) {
            if (extra < 0 && v != w.inst.rep(q))
                extra = v;
        });
        if (extra >= 0) {
            const auto & g = w.inst.graph();
            if (g.degree(extra) != 2)
                throw std::logic_error("pendant class vertex does not have degree two after reduction");
            w = detail::contract_triple(w, g.neighbors(extra)[0], extra, g.neighbors(extra)[1]);
            continue;
        }
        edges.erase(std::find_if(edges.begin(), edges.end(), [&](Edge e) { return e.first == q || e.second == q; }));
    }

    detail::BagLists bags(static_cast<std::size_t>(k));
    Graph rest(k, edges);
    VertexSet done(k);
    for (int c = 0; c < k; ++c) {
        if (done.contains(c))
            continue;
        if (rest.degree(c) == 0) {
            bags[static_cast<std::size_t>(c)] = w.origin[static_cast<std::size_t>(w.inst.rep(c))];
            done.insert(c);
            continue;
        }
        std::vector<int> ring{c};
        int prev = -1, cur = c;
        for (;;) {
            int next = rest.neighbors(cur)[0] == prev ? rest.neighbors(cur)[1] : rest.neighbors(cur)[0];
            if (next == c)
                break;
            ring.push_back(next);
            prev = cur;
            cur = next;
        }
        auto part = detail::ring_bags(w, ring);
        for (int r : ring) {
            bags[static_cast<std::size_t>(r)] = part[static_cast<std::size_t>(r)];
            done.insert(r);
        }
    }
    auto cert = detail::to_certificate(inst, bags);
    detail::require_valid(inst, pat, cert, "unicyclic construction");
    return cert;
}

// ---------------------------------------------------------------------------
// Good matchings (six-vertex patterns)

/// Three pattern edges (r_i, s_i), r_i < s_i, sorted.
struct GoodMatching {
    std::array<Edge, 3> edges;
};

inline auto is_good_matching(const Graph & pat, const std::array<Edge, 3> & n) -> bool
{
    std::array<int, 6> partner{};
    partner.fill(-1);
    for (auto [r, s] : n) {
        if (! pat.adjacent(r, s) || partner[static_cast<std::size_t>(r)] >= 0 || partner[static_cast<std::size_t>(s)] >= 0)
            return false;
        partner[static_cast<std::size_t>(r)] = s;
        partner[static_cast<std::size_t>(s)] = r;
    }
    for (auto [u, v] : pat.edges()) {
        int pu = partner[static_cast<std::size_t>(u)], pv = partner[static_cast<std::size_t>(v)];
        if (pu == v)
            continue;
        bool triangle = pat.adjacent(pu, v) || pat.adjacent(pv, u);
        bool square = pat.adjacent(pu, pv);
        if (! triangle && ! square)
            return false;
    }
    return true;
}

/// Perfect matchings are generated by pairing the smallest free vertex with
/// its neighbours in increasing order, which is lexicographic order on the
/// sorted edge lists.
inline auto find_good_matching(const Graph & pat) -> std::optional<GoodMatching>
{
    if (pat.order() != 6)
        throw PreconditionError("good matchings are defined for six-vertex patterns, got " + std::to_string(pat.order()));
    std::optional<GoodMatching> found;
    std::array<Edge, 3> chosen{};
    std::uint32_t used = 0;
    auto rec = [&](auto & self, std::size_t depth) -> void {
        if (found)
            return;
        if (depth == 3) {
            if (is_good_matching(pat, chosen))
                found = GoodMatching{chosen};
            return;
        }
        int u = std::countr_one(used);
        for (int v : pat.neighbors(u)) {
            if ((used >> v) & 1U)
                continue;
            chosen[depth] = {u, v};
            used |= (1U << u) | (1U << v);
            self(self, depth + 1);
            used &= ~((1U << u) | (1U << v));
        }
    };
    rec(rec, 0);
    return found;
}

// ---------------------------------------------------------------------------
// Z(G) for small G: ordered strategy ladder

struct ZStrategyReport {
    std::string rung;
    RootedCertificate certificate;
    /// Every rung tried, nested reductions indented, with the outcome.
    std::vector<std::string> trail;
    bool fallback_used = false;
};

inline constexpr int z_small_limit = 6;

namespace detail {
    struct ZOutcome {
        std::string rung;
        BagLists bags;
    };

    inline auto z_bags_valid(const Graph & base, const BagLists & bags) -> bool
    {
        auto z = z_of(base);
        return is_valid(z.inst, TargetPattern::full(z.inst), make_certificate(z.inst, bags));
    }

    /// Lifts bags from Z(base[kept]) to Z(base).
    inline auto lift_z_bags(const BagLists & sub_bags, const std::vector<int> & kept, BagLists & into) -> void
    {
        for (std::size_t x = 0; x < sub_bags.size(); ++x) {
            std::vector<int> bag;
            for (int v : sub_bags[x])
                bag.push_back(z_vertex(kept[static_cast<std::size_t>(z_base(v))], z_copy(v)));
            std::sort(bag.begin(), bag.end());
            into[static_cast<std::size_t>(kept[x])] = std::move(bag);
        }
    }

    /// Hamiltonian cycles through vertex 0 in lexicographic order, each
    /// direction listed once (second vertex < last vertex).
    inline auto hamiltonian_cycles(const Graph & g, const VertexSet & within) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        if (within.size() < 3)
            return out;
        std::vector<int> path{within.first()};
        VertexSet used(g.order());
        used.insert(path[0]);
        auto rec = [&](auto & self) -> void {
            if (static_cast<int>(path.size()) == within.size()) {
                if (g.adjacent(path.back(), path[0]) && path[1] < path.back())
                    out.push_back(path);
                return;
            }
            for (int w : g.neighbors(path.back())) {
                if (! within.contains(w) || used.contains(w))
                    continue;
                path.push_back(w);
                used.insert(w);
                self(self);
                used.erase(w);
                path.pop_back();
            }
        };
        rec(rec);
        return out;
    }

    /// V_{t_i} = {t_i, bar t_{i+1}} around a cycle of base vertices.
    inline auto rotated_bags(const std::vector<int> & cycle, BagLists & bags) -> void
    {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int t = cycle[i], nxt = cycle[(i + 1) % cycle.size()];
            bags[static_cast<std::size_t>(t)] = {z_vertex(t, 1), z_vertex(nxt, 2)};
            std::sort(bags[static_cast<std::size_t>(t)].begin(), bags[static_cast<std::size_t>(t)].end());
        }
    }

    inline auto z_ladder(const Graph & base, const SolveOptions & opts, ZStrategyReport & report, int depth) -> ZOutcome;

    /// Certificate for Z(base - removed), lifted into bags over Z(base).
    inline auto z_sub(const Graph & base, const VertexSet & removed, const SolveOptions & opts, ZStrategyReport & report,
        int depth, BagLists & bags) -> void
    {
        auto keep = base.vertex_set() - removed;
        if (keep.empty())
            return;
        auto sub = induced_subgraph(base, keep);
        auto inner = z_ladder(sub.graph, opts, report, depth + 1);
        lift_z_bags(inner.bags, sub.to_original, bags);
    }

    inline auto z_ladder(const Graph & base, const SolveOptions & opts, ZStrategyReport & report, int depth) -> ZOutcome
    {
        const int n = base.order();
        const auto indent = std::string(static_cast<std::size_t>(2 * depth), ' ');
        auto note = [&](const std::string & rung, const std::string & what) { report.trail.push_back(indent + rung + ": " + what); };
        BagLists bags(static_cast<std::size_t>(n));
        auto accept = [&](const std::string & rung) -> std::optional<ZOutcome> {
            if (z_bags_valid(base, bags)) {
                note(rung, "verified (n=" + std::to_string(n) + ")");
                return ZOutcome{rung, bags};
            }
            note(rung, "candidate rejected by the verifier");
            return std::nullopt;
        };

        if (n == 1) {
            bags[0] = {z_vertex(0, 1)};
            if (auto r = accept("single_vertex"))
                return *r;
        }

        auto comps = components(base);
        if (comps.size() > 1) {
            for (const auto & comp : comps)
                z_sub(base, base.vertex_set() - comp, opts, report, depth, bags);
            if (auto r = accept("components"))
                return *r;
        }

        if (comps.size() == 1) {
            auto cuts = cut_vertices(base);
            // A pendant component {t} first, then a two-vertex component {t, u}.
            for (int want = 1; want <= 2; ++want)
                for (int s : cuts) {
                    auto rest = base.vertex_set();
                    rest.erase(s);
                    for (const auto & c : components(base, rest)) {
                        if (c.size() != want)
                            continue;
                        std::fill(bags.begin(), bags.end(), std::vector<int>{});
                        auto members = c.members();
                        VertexSet removed = c;
                        if (want == 1) {
                            int t = members[0];
                            removed.insert(s);
                            bags[static_cast<std::size_t>(s)] = {z_vertex(s, 1), z_vertex(s, 2), z_vertex(t, 2)};
                            bags[static_cast<std::size_t>(t)] = {z_vertex(t, 1)};
                        }
                        else {
                            int t = members[0], u = members[1];
                            bags[static_cast<std::size_t>(t)] = {z_vertex(t, 1), z_vertex(u, 2)};
                            bags[static_cast<std::size_t>(u)] = {z_vertex(t, 2), z_vertex(u, 1)};
                        }
                        z_sub(base, removed, opts, report, depth, bags);
                        if (auto r = accept("cutvertex"))
                            return *r;
                    }
                }
        }

        {
            auto z = z_of(base);
            auto full = TargetPattern::full(z.inst);
            if (auto w = find_matchable_anticlique(z.inst, full)) {
                auto cert = certificate_from_matching(z.inst, full, *w);
                for (int x = 0; x < n; ++x)
                    bags[static_cast<std::size_t>(x)] = cert.bags[static_cast<std::size_t>(x)].members();
                if (auto r = accept("matchable_anticlique"))
                    return *r;
            }
        }

        if (n <= 5) {
            for (const auto & cycle : hamiltonian_cycles(base, base.vertex_set())) {
                rotated_bags(cycle, bags);
                if (z_bags_valid(base, bags)) {
                    note("spanning_cycle", "verified (n=" + std::to_string(n) + ")");
                    return {"spanning_cycle", bags};
                }
            }
        }

        if (n == 6) {
            for (const auto & cycle : hamiltonian_cycles(base, base.vertex_set())) {
                bool chord = false;
                for (int i = 0; i < 3; ++i)
                    chord = chord || base.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(i + 3)]);
                if (chord)
                    continue;
                rotated_bags(cycle, bags);
                if (z_bags_valid(base, bags)) {
                    note("spanning_6cycle", "verified");
                    return {"spanning_6cycle", bags};
                }
            }

            if (auto m = find_good_matching(base)) {
                for (auto [r, s] : m->edges) {
                    bags[static_cast<std::size_t>(r)] = {z_vertex(r, 1), z_vertex(s, 2)};
                    bags[static_cast<std::size_t>(s)] = {z_vertex(r, 2), z_vertex(s, 1)};
                }
                if (auto r = accept("good_matching"))
                    return *r;
            }

            for (int s = 0; s < n; ++s) {
                if (base.degree(s) != 5)
                    continue;
                auto rim = base.vertex_set();
                rim.erase(s);
                for (const auto & cycle : hamiltonian_cycles(base, rim)) {
                    rotated_bags(cycle, bags);
                    bags[static_cast<std::size_t>(s)] = {z_vertex(s, 1)};
                    if (z_bags_valid(base, bags)) {
                        note("wheel", "verified");
                        return {"wheel", bags};
                    }
                }
            }

            // Roles (s, u, t, c, b, a): V_s = {s, bar u}, V_u = {u, bar s},
            // V_t = {t, bar c}, V_c = {c, bar b}, V_b = {b, bar t}, V_a = {a}.
            std::array<int, 6> role{0, 1, 2, 3, 4, 5};
            do {
                auto [s, u, t, c, b, a] = role;
                bags[static_cast<std::size_t>(s)] = {z_vertex(s, 1), z_vertex(u, 2)};
                bags[static_cast<std::size_t>(u)] = {z_vertex(u, 1), z_vertex(s, 2)};
                bags[static_cast<std::size_t>(t)] = {z_vertex(t, 1), z_vertex(c, 2)};
                bags[static_cast<std::size_t>(c)] = {z_vertex(c, 1), z_vertex(b, 2)};
                bags[static_cast<std::size_t>(b)] = {z_vertex(b, 1), z_vertex(t, 2)};
                bags[static_cast<std::size_t>(a)] = {z_vertex(a, 1)};
                for (auto & bag : bags)
                    std::sort(bag.begin(), bag.end());
                if (z_bags_valid(base, bags)) {
                    note("separator_sporadic", "verified");
                    return {"separator_sporadic", bags};
                }
            } while (std::next_permutation(role.begin(), role.end()));
        }

        auto z = z_of(base);
        auto verdict = solve(z.inst, TargetPattern::full(z.inst), opts);
        if (verdict.status == SolveStatus::BudgetExceeded)
            throw BudgetExceeded("solver fallback ran out of budget on Z(G) with n=" + std::to_string(n));
        if (verdict.status != SolveStatus::Sat)
            throw std::logic_error("Z(G) with n=" + std::to_string(n) + " has no rooted certificate: graph6 " + to_graph6(base));
        report.fallback_used = true;
        for (int x = 0; x < n; ++x)
            bags[static_cast<std::size_t>(x)] = verdict.certificate->bags[static_cast<std::size_t>(x)].members();
        note("solver_fallback", "SAT after " + std::to_string(verdict.stats.nodes) + " nodes");
        return {"solver_fallback", bags};
    }
} // namespace detail

/// Certificate for Z(G), |V(G)| <= 6, via the first rung of the ladder that
/// produces verifier-clean bags.
inline auto z_small_certificate(const ZInstance & z, const SolveOptions & opts = {}) -> ZStrategyReport
{
    if (z.base.order() > z_small_limit)
        throw SizeLimitError("the strategy ladder handles base graphs with at most " + std::to_string(z_small_limit) + " vertices");
    ZStrategyReport report;
    auto out = detail::z_ladder(z.base, opts, report, 0);
    report.rung = out.rung;
    report.certificate = make_certificate(z.inst, out.bags);
    detail::require_valid(z.inst, TargetPattern::full(z.inst), report.certificate, "strategy ladder");
    return report;
}

} // namespace kempe
