// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include "../support/oracles.hpp"

#include <kempe/all.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace kempe;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    auto fail(const std::string & why) -> void
    {
        if (pass)
            detail.str("");
        pass = false;
        detail << why << "; ";
    }
};

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point t) -> double { return std::chrono::duration<double>(Clock::now() - t).count(); }

auto edge_list(const Graph & g) -> oracle::EdgeList
{
    oracle::EdgeList out;
    for (auto [a, b] : g.edges())
        out.emplace_back(a, b);
    return out;
}

auto edge_list(const TargetPattern & p) -> oracle::EdgeList
{
    oracle::EdgeList out(p.edges.begin(), p.edges.end());
    return out;
}

auto boost_planar(const Graph & g) -> bool
{
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(static_cast<std::size_t>(g.order()));
    for (auto [u, v] : g.edges())
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

auto graphs_up_to(int n) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (int i = 1; i <= n; ++i)
        for (auto & g : enumerate_graphs(i))
            out.push_back(std::move(g));
    return out;
}

// 1. z_of(G7), full pattern: exhaustive UNSAT, and the counting bound 15 > 14.
auto criterion_1(Outcome & o) -> void
{
    auto z = z_of(family({"g7", {}}));
    auto pat = TargetPattern::full(z.inst);
    if (pat.edges.size() != 8)
        o.fail("H has " + std::to_string(pat.edges.size()) + " edges, expected 8");
    auto start = Clock::now();
    auto v = solve(z.inst, pat);
    double secs = seconds_since(start);
    auto c = counting_unsat_check(z);
    if (v.status != SolveStatus::Unsat || v.unsat_kind != UnsatKind::Exhaustive)
        o.fail(std::string("solve returned ") + to_string(v.status));
    if (secs > 300.0)
        o.fail("solve took " + std::to_string(secs) + " s");
    if (c.verdict != CountingVerdict::UnsatCertified)
        o.fail("counting returned " + std::string(to_string(c.verdict)));
    if (c.min_bound != 15 || c.vertex_count != 14)
        o.fail("counting bound " + std::to_string(c.min_bound) + " vs " + std::to_string(c.vertex_count) + ", expected 15 vs 14");
    o.detail << "solve " << to_string(v.status) << "/" << to_string(v.unsat_kind) << " in " << v.stats.nodes << " nodes, "
             << secs << " s; counting " << to_string(c.verdict) << " " << c.min_bound << " > " << c.vertex_count;
}

// 2. Petersen: counting certifies in under a second, checked against brute force.
auto criterion_2(Outcome & o) -> void
{
    auto pet = family({"petersen", {}});
    auto z = z_of(pet);
    auto start = Clock::now();
    auto c = counting_unsat_check(z);
    double secs = seconds_since(start);
    if (c.verdict != CountingVerdict::UnsatCertified)
        o.fail(std::string("verdict ") + to_string(c.verdict) + " (" + c.reason + ")");
    if (secs > 1.0)
        o.fail("took " + std::to_string(secs) + " s");

    if (oracle::brute_good_permutation(oracle::matrix(pet)))
        o.fail("brute force found a good permutation");
    auto h = oracle::h_matrix(oracle::plain(z.inst));
    int independent_sets = 0;
    for (std::uint32_t mask = 1; mask < (1U << h.n); ++mask) {
        bool indep = true;
        std::uint32_t nb = 0;
        for (int a = 0; a < h.n; ++a) {
            if (! ((mask >> a) & 1U))
                continue;
            for (int b = 0; b < h.n; ++b)
                if (h.at(a, b)) {
                    nb |= 1U << b;
                    if ((mask >> b) & 1U)
                        indep = false;
                }
        }
        if (! indep)
            continue;
        ++independent_sets;
        if (std::popcount(nb) < std::popcount(mask) + 1)
            o.fail("anticlique with small neighbourhood");
    }
    if (static_cast<int>(c.table.size()) != independent_sets)
        o.fail("table has " + std::to_string(c.table.size()) + " rows, brute force " + std::to_string(independent_sets));
    o.detail << to_string(c.verdict) << " in " << secs << " s, " << independent_sets << " anticliques, min bound " << c.min_bound
             << " > " << c.vertex_count;
}

// 3. Every Z(G), |V(G)| <= 6, certified by the strategy ladder.
auto criterion_3(Outcome & o) -> void
{
    std::size_t expected = 0;
    for (int n = 1; n <= 6; ++n)
        expected += oracle::count_unlabelled(n);
    auto start = Clock::now();
    auto graphs = graphs_up_to(6);
    int fallbacks = 0, verified = 0;
    std::map<std::string, int> rungs;
    for (const auto & g : graphs) {
        auto z = z_of(g);
        auto rep = z_small_certificate(z);
        auto full = edge_list(h_graph(z.inst).graph);
        // H recomputed independently, then compared with the library's edge set.
        auto hm = oracle::h_matrix(oracle::plain(z.inst));
        oracle::EdgeList oracle_edges;
        for (int a = 0; a < hm.n; ++a)
            for (int b = a + 1; b < hm.n; ++b)
                if (hm.at(a, b))
                    oracle_edges.emplace_back(a, b);
        if (oracle_edges != full)
            o.fail("H mismatch on " + to_graph6(g));
        if (oracle::certificate_ok(z.inst, oracle_edges, rep.certificate.bags))
            ++verified;
        else
            o.fail("bad certificate on " + to_graph6(g));
        if (rep.fallback_used) {
            ++fallbacks;
            std::cerr << "  fallback rung fired on " << to_graph6(g) << '\n';
        }
        ++rungs[rep.rung];
    }
    double secs = seconds_since(start);
    if (graphs.size() != expected)
        o.fail(std::to_string(graphs.size()) + " classes, brute force says " + std::to_string(expected));
    if (secs > 600.0)
        o.fail("took " + std::to_string(secs) + " s");
    o.detail << graphs.size() << "/" << expected << " classes, " << verified << " verified, fallback " << fallbacks << ", " << secs
             << " s; rungs:";
    for (auto & [r, n] : rungs)
        o.detail << ' ' << r << '=' << n;
}

// 4. Good permutations against all n! permutations; short cycles at degree >= 3.
auto criterion_4(Outcome & o) -> void
{
    int with = 0, without = 0;
    for (const auto & g : graphs_up_to(6)) {
        auto m = oracle::matrix(g);
        bool brute = oracle::brute_good_permutation(m).has_value();
        auto found = find_good_permutation(g);
        if (found && ! oracle::is_good(m, found->f))
            o.fail("returned permutation is not good on " + to_graph6(g));
        if (found.has_value() != brute)
            o.fail("disagreement on " + to_graph6(g));
        (brute ? with : without)++;
    }
    int checked = 0;
    for (const auto & g : graphs_up_to(7)) {
        auto m = oracle::matrix(g);
        if (! oracle::brute_good_permutation(m))
            continue;
        ++checked;
        for (int v = 0; v < m.n; ++v)
            if (m.degree(v) >= 3 && ! oracle::on_short_cycle(m, v))
                o.fail("degree >= 3 vertex off short cycles on " + to_graph6(g));
    }
    o.detail << "208-class agreement (" << with << " with, " << without << " without); short-cycle property on " << checked
             << " graphs with a good permutation (n <= 7)";
}

// 5. Solver against exhaustive assignment enumeration.
auto criterion_5(Outcome & o) -> void
{
    std::mt19937_64 rng(20240501);
    int sat = 0, unsat = 0, disagreements = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        int n = k + static_cast<int>(rng() % static_cast<std::uint64_t>(10 - k));
        double p = 0.2 + 0.1 * static_cast<double>(rng() % 4);
        auto inst = oracle::random_instance(rng, n, k, p);
        auto h = oracle::h_matrix(oracle::plain(inst));
        std::vector<Edge> edges;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (h.at(a, b) && rng() % 4 != 0)
                    edges.emplace_back(a, b);
        TargetPattern pat(k, edges);
        auto v = solve(inst, pat);
        bool brute = oracle::brute_rooted_exists(oracle::plain(inst), edge_list(pat));
        if ((v.status == SolveStatus::Sat) != brute || v.status == SolveStatus::BudgetExceeded) {
            ++disagreements;
            o.fail("trial " + std::to_string(trial) + ": solve " + to_string(v.status) + ", brute force " + (brute ? "SAT" : "UNSAT"));
        }
        if (v.certificate && ! oracle::certificate_ok(inst, edge_list(pat), v.certificate->bags))
            o.fail("trial " + std::to_string(trial) + ": certificate rejected by oracle");
        (brute ? sat : unsat)++;
    }
    o.detail << "300 instances (" << sat << " SAT, " << unsat << " UNSAT), " << disagreements << " disagreements";

    // Spanning subgraphs of H on <= 4 vertices are always certifiable, so the
    // rooted search engine is also driven with arbitrary class-pair patterns
    // to exercise exhaustive UNSAT answers, once serial and once on 4 threads.
    int engine_sat = 0, engine_unsat = 0, engine_bad = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int k = 2 + static_cast<int>(rng() % 3);
        int n = k + static_cast<int>(rng() % static_cast<std::uint64_t>(10 - k));
        auto inst = oracle::random_instance(rng, n, k, 0.15 + 0.1 * static_cast<double>(rng() % 3));
        std::vector<Edge> edges;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (rng() % 3 != 0)
                    edges.emplace_back(a, b);
        bool brute = oracle::brute_rooted_exists(oracle::plain(inst), oracle::EdgeList(edges.begin(), edges.end()));
        for (int threads : {1, 4}) {
            detail::BagSearch search(inst.graph(), k, edges, inst.transversal().reps);
            auto r = search.run({}, threads);
            bool found = r.status == detail::SearchStatus::Found;
            if (found != brute || r.status == detail::SearchStatus::BudgetExceeded ||
                (found && ! oracle::certificate_ok(inst, oracle::EdgeList(edges.begin(), edges.end()), r.bags))) {
                ++engine_bad;
                o.fail("engine trial " + std::to_string(trial) + " on " + std::to_string(threads) + " threads disagrees");
            }
        }
        (brute ? engine_sat : engine_unsat)++;
    }
    o.detail << "; engine with arbitrary patterns: 300 instances (" << engine_sat << " SAT, " << engine_unsat << " UNSAT), "
             << engine_bad << " disagreements over 1 and 4 threads";
}

auto path_system_trial(const Graph & pattern, std::uint64_t seed) -> PathSystem
{
    PathSystemSpec spec{pattern, seed, 4, seed % 2 == 1 ? 0.2 : 0.0, seed % 3 == 0};
    return random_path_system(spec);
}

// 6. Patterns on at most four vertices and the three five-vertex patterns.
auto criterion_6(Outcome & o) -> void
{
    std::vector<std::pair<std::string, Graph>> patterns;
    for (const auto & g : graphs_up_to(4))
        patterns.emplace_back(to_graph6(g), g);
    for (const char * name : {"hourglass", "k23", "c5plus"})
        patterns.emplace_back(name, family({name, {}}));
    int total = 0;
    for (const auto & [name, pattern] : patterns)
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            auto sys = path_system_trial(pattern, seed);
            auto pat = TargetPattern::from_graph(pattern);
            auto v = solve(sys.instance, pat);
            ++total;
            if (v.status != SolveStatus::Sat) {
                o.fail("COUNTEREXAMPLE pattern " + name + " seed " + std::to_string(seed) + ": " + to_string(v.status) + " " +
                    instance_to_json(sys.instance).dump());
                continue;
            }
            if (! oracle::certificate_ok(sys.instance, edge_list(pattern), v.certificate->bags))
                o.fail("oracle rejects certificate for " + name + " seed " + std::to_string(seed));
        }
    o.detail << patterns.size() << " patterns (all graphs on 1..4 vertices, hourglass, K2,3, C5+) x 100 seeds = " << total
             << " instances, all SAT";
}

auto random_unicyclic(std::mt19937_64 & rng) -> Graph
{
    bool tree = rng() % 4 == 0;
    int core = tree ? 1 : 3 + static_cast<int>(rng() % 3);
    int extra = static_cast<int>(rng() % 4) + (tree ? 1 : 0);
    std::vector<Edge> edges;
    if (! tree)
        for (int i = 0; i < core; ++i)
            edges.emplace_back(std::min(i, (i + 1) % core), std::max(i, (i + 1) % core));
    for (int v = core; v < core + extra; ++v)
        edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
    // shuffle labels so the cycle is not always on the smallest indices
    int n = core + extra;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(Graph(n, edges), perm);
}

// 7. Cycle and unicyclic builders against verify and solve.
auto criterion_7(Outcome & o) -> void
{
    auto start = Clock::now();
    int rings = 0, unicyclic = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int len = 3 + static_cast<int>(seed % 5);
        auto pattern = family({"cycle", {len}});
        auto sys = path_system_trial(pattern, seed);
        std::vector<int> ring(static_cast<std::size_t>(len));
        std::iota(ring.begin(), ring.end(), 0);
        bool built = false;
        try {
            auto cert = cycle_certificate(sys.instance, ring);
            built = oracle::certificate_ok(sys.instance, edge_list(pattern), cert.bags);
        }
        catch (const std::exception & e) {
            o.fail("ring seed " + std::to_string(seed) + ": " + e.what());
        }
        auto v = solve(sys.instance, TargetPattern::from_graph(pattern));
        if (! built || v.status != SolveStatus::Sat)
            o.fail("ring seed " + std::to_string(seed) + " builder/solve disagree");
        else
            ++rings;
    }
    std::mt19937_64 rng(77);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto pattern = random_unicyclic(rng);
        auto sys = path_system_trial(pattern, seed);
        auto pat = TargetPattern::from_graph(pattern);
        bool built = false;
        try {
            auto cert = unicyclic_certificate(sys.instance, pat);
            built = oracle::certificate_ok(sys.instance, edge_list(pattern), cert.bags);
        }
        catch (const std::exception & e) {
            o.fail("unicyclic seed " + std::to_string(seed) + ": " + e.what());
        }
        auto v = solve(sys.instance, pat);
        if (! built || v.status != SolveStatus::Sat)
            o.fail("unicyclic seed " + std::to_string(seed) + " builder/solve disagree");
        else
            ++unicyclic;
    }
    double secs = seconds_since(start);
    if (secs > 120.0)
        o.fail("took " + std::to_string(secs) + " s");
    o.detail << rings << "/200 ring and " << unicyclic << "/200 unicyclic instances verified and agreeing with solve, " << secs << " s";
}

// 8. Five classes with complete H: nonplanar and a K5 minor.
auto criterion_8(Outcome & o) -> void
{
    auto k5 = family({"complete", {5}});
    auto k33 = family({"complete_bipartite", {3, 3}});
    int good = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto sys = random_path_system({k5, seed, 2, 0.0, seed % 2 == 1});
        auto h = oracle::h_matrix(oracle::plain(sys.instance));
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                if (! h.at(a, b))
                    o.fail("seed " + std::to_string(seed) + ": H is not complete");
        auto rep = validate_remarks(sys.instance);
        const auto & g = sys.instance.graph();
        bool ok = rep.premises_ok && ! rep.planar && rep.has_k5_minor && ! rep.counterexample;
        if (rep.k5 && ! oracle::embedding_ok(g, k5, rep.k5->bags))
            ok = false;
        if (rep.nonplanarity && ! oracle::embedding_ok(g, rep.nonplanarity->minor == "K5" ? k5 : k33, rep.nonplanarity->embedding.bags))
            ok = false;
        if (boost_planar(g))
            ok = false;
        if (ok)
            ++good;
        else
            o.fail("seed " + std::to_string(seed) + " report does not show nonplanar and K5 minor");
    }
    o.detail << good << "/50 instances nonplanar (Boyer-Myrvold agrees) with oracle-checked K5 embeddings";
}

// 9. Matchable-anticlique certificates over the Z sweep.
auto criterion_9(Outcome & o) -> void
{
    int witnesses = 0;
    for (const auto & g : graphs_up_to(6)) {
        auto z = z_of(g);
        auto pat = TargetPattern::full(z.inst);
        auto w = find_matchable_anticlique(z.inst, pat);
        if (! w)
            continue;
        ++witnesses;
        auto cert = certificate_from_matching(z.inst, pat, *w);
        if (! oracle::certificate_ok(z.inst, edge_list(pat), cert.bags))
            o.fail("certificate rejected on " + to_graph6(g));
        const int n = z.inst.graph().order();
        for (int t : w->anticlique.members())
            if (cert.bags[static_cast<std::size_t>(t)] != VertexSet(n, {z.inst.rep(t)}))
                o.fail("anticlique bag is not a singleton on " + to_graph6(g));
        for (auto [s, t] : w->matching) {
            VertexSet expect(n);
            for (int v = 0; v < n; ++v) {
                int c = z.inst.class_of(v);
                if ((c == s || c == t) && v != z.inst.rep(t))
                    expect.insert(v);
            }
            if (cert.bags[static_cast<std::size_t>(s)] != expect)
                o.fail("bag of " + std::to_string(s) + " differs from (P u Q) - t on " + to_graph6(g));
        }
    }
    if (witnesses == 0)
        o.fail("no witnesses found");
    o.detail << witnesses << " witnesses across 208 Z instances, all certificates verified with exact bag contents";
}

} // namespace

int main()
{
    std::vector<std::pair<int, std::function<void(Outcome &)>>> criteria{{1, criterion_1}, {2, criterion_2}, {3, criterion_3},
        {4, criterion_4}, {5, criterion_5}, {6, criterion_6}, {7, criterion_7}, {8, criterion_8}, {9, criterion_9}};
    int failed = 0;
    for (auto & [id, run] : criteria) {
        Outcome o;
        try {
            run(o);
        }
        catch (const std::exception & e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail.str() << std::endl;
        failed += ! o.pass;
    }
    return failed == 0 ? 0 : 1;
}
