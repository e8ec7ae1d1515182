#pragma once

#include <kempe/certificate.hpp>
#include <kempe/detail/bag_search.hpp>
#include <kempe/error.hpp>
#include <kempe/kempe.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kempe {

using detail::PruningRules;

struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 300.0;
};

struct SolveOptions {
    Budget budget;
    int threads = 1;
    PruningRules rules;
};

enum class SolveStatus { Sat, Unsat, BudgetExceeded };

/// How an UNSAT verdict was reached.
enum class UnsatKind { None, Exhaustive, Counting };

inline auto to_string(SolveStatus s) -> const char *
{
    switch (s) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
    }
    return "?";
}

inline auto to_string(UnsatKind k) -> const char *
{
    switch (k) {
    case UnsatKind::None: return "NONE";
    case UnsatKind::Exhaustive: return "EXHAUSTIVE";
    case UnsatKind::Counting: return "COUNTING";
    }
    return "?";
}

struct SolveVerdict {
    SolveStatus status = SolveStatus::Unsat;
    UnsatKind unsat_kind = UnsatKind::None;
    std::optional<RootedCertificate> certificate;
    detail::SearchStats stats;
};

inline auto validate_options(const SolveOptions & opts) -> void
{
    if (opts.budget.max_nodes == 0)
        throw PreconditionError("budget: node limit must be positive");
    if (! (opts.budget.max_seconds > 0.0))
        throw PreconditionError("budget: time limit must be positive");
    if (opts.threads < 1)
        throw PreconditionError("threads must be at least 1");
}

/// Exact search for a rooted certificate of `pat` in `inst`. A SAT verdict
/// always carries a certificate that passes verify(); UNSAT means the whole
/// space was exhausted.
inline auto solve(const ColoredInstance & inst, const TargetPattern & pat, const SolveOptions & opts = {}) -> SolveVerdict
{
    validate_options(opts);
    check_pattern(inst, pat);
    detail::BagSearch search(inst.graph(), inst.class_count(), pat.edges, inst.transversal().reps, opts.rules);
    auto found = search.run({opts.budget.max_nodes, opts.budget.max_seconds}, opts.threads);

    SolveVerdict v;
    v.stats = found.stats;
    switch (found.status) {
    case detail::SearchStatus::Found: {
        v.status = SolveStatus::Sat;
        v.certificate = RootedCertificate{std::move(found.bags)};
        if (auto bad = verify(inst, pat, *v.certificate); ! bad.empty())
            throw std::logic_error("solver produced an invalid certificate: " + bad.front().message);
        break;
    }
    case detail::SearchStatus::Exhausted:
        v.status = SolveStatus::Unsat;
        v.unsat_kind = UnsatKind::Exhaustive;
        break;
    case detail::SearchStatus::BudgetExceeded: v.status = SolveStatus::BudgetExceeded; break;
    }
    return v;
}

/// Sub-instance made of the roots and, for each pattern edge, one shortest
/// two-coloured path between the two roots. Only path edges are kept.
struct PathSkeleton {
    ColoredInstance instance;
    std::vector<int> to_original;
};

inline auto path_skeleton(const ColoredInstance & inst, std::span<const Edge> pattern_edges) -> PathSkeleton
{
    const int n = inst.graph().order();
    VertexSet keep(n);
    for (int c = 0; c < inst.class_count(); ++c)
        keep.insert(inst.rep(c));
    std::vector<Edge> path_edges;
    for (auto [a, b] : pattern_edges) {
        auto path = two_colored_path(inst, a, b);
        if (path.empty())
            throw PreconditionError("classes " + std::to_string(a) + " and " + std::to_string(b) +
                " have no Kempe chain through both representatives");
        for (std::size_t i = 0; i < path.size(); ++i) {
            keep.insert(path[i]);
            if (i + 1 < path.size())
                path_edges.emplace_back(std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1]));
        }
    }
    std::sort(path_edges.begin(), path_edges.end());
    path_edges.erase(std::unique(path_edges.begin(), path_edges.end()), path_edges.end());

    std::vector<int> to_new(static_cast<std::size_t>(n), -1), to_original;
    keep.for_each([&](int v) {
        to_new[static_cast<std::size_t>(v)] = static_cast<int>(to_original.size());
        to_original.push_back(v);
    });
    std::vector<Edge> edges;
    for (auto [u, v] : path_edges)
        edges.emplace_back(to_new[static_cast<std::size_t>(u)], to_new[static_cast<std::size_t>(v)]);
    std::vector<int> labels, reps;
    for (int v : to_original)
        labels.push_back(inst.class_of(v));
    for (int c = 0; c < inst.class_count(); ++c)
        reps.push_back(to_new[static_cast<std::size_t>(inst.rep(c))]);
    return {ColoredInstance(Graph(static_cast<int>(to_original.size()), edges), Coloring::from_labels(labels), Transversal{reps}),
        std::move(to_original)};
}

/// Search restricted to a path skeleton. It can only ever confirm SAT: a
/// failure on the skeleton says nothing about the original instance.
class SatReduction {
  public:
    SatReduction(const ColoredInstance & original, TargetPattern pattern) :
        original_(original), pattern_(std::move(pattern)), skeleton_(path_skeleton(original, pattern_.edges))
    {
    }

    auto reduced() const -> const ColoredInstance & { return skeleton_.instance; }
    auto pattern() const -> const TargetPattern & { return pattern_; }
    auto to_original() const -> const std::vector<int> & { return skeleton_.to_original; }

    /// Maps a certificate of the reduced instance back to the original.
    auto lift(const RootedCertificate & reduced_cert) const -> RootedCertificate
    {
        RootedCertificate out;
        for (const auto & bag : reduced_cert.bags) {
            VertexSet lifted(original_.graph().order());
            bag.for_each([&](int v) { lifted.insert(skeleton_.to_original[static_cast<std::size_t>(v)]); });
            out.bags.push_back(std::move(lifted));
        }
        return out;
    }

    auto try_solve(const SolveOptions & opts = {}) const -> std::optional<RootedCertificate>
    {
        auto v = solve(skeleton_.instance, pattern_, opts);
        if (v.status != SolveStatus::Sat)
            return std::nullopt;
        auto cert = lift(*v.certificate);
        if (auto bad = verify(original_, pattern_, cert); ! bad.empty())
            throw std::logic_error("lifted certificate is invalid: " + bad.front().message);
        return cert;
    }

  private:
    ColoredInstance original_;
    TargetPattern pattern_;
    PathSkeleton skeleton_;
};

inline auto reduce_for_sat(const ColoredInstance & inst, const TargetPattern & pat) -> SatReduction
{
    check_pattern(inst, pat);
    return SatReduction(inst, pat);
}

} // namespace kempe
