#pragma once

#include <kempe/certificate.hpp>
#include <kempe/codec.hpp>
#include <kempe/constructive.hpp>
#include <kempe/error.hpp>
#include <kempe/kempe.hpp>
#include <kempe/minors.hpp>
#include <kempe/solver.hpp>
#include <kempe/zmodel.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace kempe {

using json = nlohmann::json;

inline auto set_to_json(const VertexSet & s) -> json
{
    json out = json::array();
    s.for_each([&](int v) { out.push_back(v); });
    return out;
}

// ----------------------------------------------------------------- instances

/// {"graph": {...}, "classes": [[...], ...], "transversal": [t_0, ...]},
/// transversal listed by class.
inline auto instance_to_json(const ColoredInstance & inst) -> json
{
    json classes = json::array();
    for (const auto & c : inst.coloring().classes())
        classes.push_back(set_to_json(c));
    return {{"graph", graph_to_json(inst.graph())}, {"classes", std::move(classes)}, {"transversal", inst.transversal().reps}};
}

inline auto instance_from_json(const json & j) -> ColoredInstance
{
    auto g = graph_from_json(detail::require_field(j, "graph", ""), "/graph");
    const auto & cj = detail::require_array(detail::require_field(j, "classes", ""), "/classes");
    std::vector<std::vector<int>> classes;
    for (std::size_t c = 0; c < cj.size(); ++c) {
        auto path = "/classes/" + std::to_string(c);
        const auto & members = detail::require_array(cj[c], path);
        std::vector<int> vs;
        for (std::size_t i = 0; i < members.size(); ++i)
            vs.push_back(detail::require_int(members[i], path + "/" + std::to_string(i)));
        classes.push_back(std::move(vs));
    }
    const auto & tj = detail::require_array(detail::require_field(j, "transversal", ""), "/transversal");
    std::vector<int> reps;
    for (std::size_t i = 0; i < tj.size(); ++i)
        reps.push_back(detail::require_int(tj[i], "/transversal/" + std::to_string(i)));
    const int n = g.order();
    return ColoredInstance(std::move(g), Coloring(n, std::move(classes)), Transversal{std::move(reps)});
}

inline auto parse_instance(std::string_view text) -> ColoredInstance { return instance_from_json(detail::parse_json_text(text)); }

// ------------------------------------------------------------------ patterns

inline auto pattern_to_json(const TargetPattern & p) -> json
{
    json edges = json::array();
    for (auto [a, b] : p.edges)
        edges.push_back({a, b});
    return {{"k", p.k}, {"edges", std::move(edges)}};
}

inline auto pattern_from_json(const json & j) -> TargetPattern
{
    int k = detail::require_int(detail::require_field(j, "k", ""), "/k");
    const auto & ej = detail::require_array(detail::require_field(j, "edges", ""), "/edges");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ej.size(); ++i) {
        auto path = "/edges/" + std::to_string(i);
        const auto & e = detail::require_array(ej[i], path);
        if (e.size() != 2)
            throw ParseError("pattern edge must have two endpoints at " + path, 0, path);
        edges.emplace_back(detail::require_int(e[0], path + "/0"), detail::require_int(e[1], path + "/1"));
    }
    return TargetPattern(k, std::move(edges));
}

// -------------------------------------------------------------- certificates

/// {"bags": {"<transversal vertex>": [members...]}}.
inline auto certificate_to_json(const ColoredInstance & inst, const RootedCertificate & cert) -> json
{
    json bags = json::object();
    for (std::size_t c = 0; c < cert.bags.size(); ++c)
        bags[std::to_string(inst.rep(static_cast<int>(c)))] = set_to_json(cert.bags[c]);
    return {{"bags", std::move(bags)}};
}

inline auto certificate_from_json(const ColoredInstance & inst, const json & j) -> RootedCertificate
{
    const auto & bj = detail::require_field(j, "bags", "");
    if (! bj.is_object())
        throw ParseError("expected an object at /bags", 0, "/bags");
    const int n = inst.graph().order();
    RootedCertificate cert;
    cert.bags.assign(static_cast<std::size_t>(inst.class_count()), VertexSet(n));
    for (const auto & [key, value] : bj.items()) {
        auto path = "/bags/" + key;
        int t = -1;
        try {
            std::size_t used = 0;
            t = std::stoi(key, &used);
            if (used != key.size())
                t = -1;
        }
        catch (const std::exception &) {
            t = -1;
        }
        if (t < 0 || t >= n || inst.class_of_rep(t) < 0)
            throw ParseError("bag key is not a transversal vertex at " + path, 0, path);
        int c = inst.class_of_rep(t);
        const auto & members = detail::require_array(value, path);
        for (std::size_t i = 0; i < members.size(); ++i) {
            int v = detail::require_int(members[i], path + "/" + std::to_string(i));
            if (v >= n)
                throw ParseError("vertex out of range at " + path + "/" + std::to_string(i), 0, path + "/" + std::to_string(i));
            cert.bags[static_cast<std::size_t>(c)].insert(v);
        }
    }
    return cert;
}

inline auto violation_to_json(const Violation & v) -> json
{
    json out{{"kind", to_string(v.kind)}, {"message", v.message}};
    if (v.bag >= 0)
        out["bag"] = v.bag;
    if (v.other_bag >= 0)
        out["other_bag"] = v.other_bag;
    if (v.vertex >= 0)
        out["vertex"] = v.vertex;
    if (! v.components.empty()) {
        json comps = json::array();
        for (const auto & c : v.components)
            comps.push_back(set_to_json(c));
        out["components"] = std::move(comps);
    }
    return out;
}

inline auto verdict_to_json(const ColoredInstance & inst, const SolveVerdict & v) -> json
{
    json out{{"status", to_string(v.status)},
        {"stats", {{"nodes", v.stats.nodes}, {"max_depth", v.stats.max_depth}, {"elapsed_ms", v.stats.elapsed_ms}}}};
    if (v.status == SolveStatus::Unsat)
        out["unsat_kind"] = to_string(v.unsat_kind);
    if (v.certificate)
        out["certificate"] = certificate_to_json(inst, *v.certificate);
    return out;
}

// ------------------------------------------------------------------- reports

inline auto counting_to_json(const CountingReport & r) -> json
{
    json table = json::array();
    for (const auto & row : r.table)
        table.push_back({{"anticlique", set_to_json(row.members)}, {"neighborhood", row.neighborhood}, {"q_lower_bound", row.q_lower_bound}});
    json out{{"verdict", to_string(r.verdict)},
        {"applicable", r.applicable},
        {"good_perm_exists", r.good_perm_exists},
        {"min_bound", r.min_bound},
        {"vertex_count", r.vertex_count},
        {"reason", r.reason},
        {"table", std::move(table)},
        {"regular",
            {{"applies", r.regular.applies},
                {"connected", r.regular.connected},
                {"degree", r.regular.degree},
                {"girth", r.regular.girth},
                {"bipartite", r.regular.bipartite}}}};
    if (r.good_permutation)
        out["good_permutation"] = r.good_permutation->f;
    if (r.violating_anticlique)
        out["violating_anticlique"] = set_to_json(*r.violating_anticlique);
    return out;
}

inline auto embedding_to_json(const MinorEmbedding & e) -> json
{
    json bags = json::array();
    for (const auto & b : e.bags)
        bags.push_back(set_to_json(b));
    return {{"bags", std::move(bags)}};
}

inline auto remarks_to_json(const RemarkReport & r) -> json
{
    json out{{"premises_ok", r.premises_ok}, {"planar", r.planar}, {"has_k5_minor", r.has_k5_minor}, {"counterexample", r.counterexample}};
    if (r.k5)
        out["k5_embedding"] = embedding_to_json(*r.k5);
    if (r.nonplanarity)
        out["nonplanarity"] = {{"minor", r.nonplanarity->minor}, {"embedding", embedding_to_json(r.nonplanarity->embedding)}};
    return out;
}

inline auto strategy_to_json(const ColoredInstance & inst, const ZStrategyReport & r) -> json
{
    return {{"rung", r.rung}, {"fallback_used", r.fallback_used}, {"trail", r.trail}, {"certificate", certificate_to_json(inst, r.certificate)}};
}

} // namespace kempe
