#include <kempe/all.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace kempe;

namespace {

enum Exit : int { ok = 0, violation = 1, usage = 2, budget = 3 };

/// Input problem tied to a flag or file; always exit 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

auto read_file(const std::string & path, const std::string & flag) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw UsageError(flag + ": cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Runs `f` on the contents of `path`, prefixing parse and validation errors
/// with the flag and file so the message names the offending input.
template <typename F>
auto load(const std::string & path, const std::string & flag, F && f)
{
    auto text = read_file(path, flag);
    try {
        return f(text);
    }
    catch (const ParseError & e) {
        throw UsageError(flag + " " + path + ": " + e.what());
    }
    catch (const GraphError & e) {
        throw UsageError(flag + " " + path + ": " + e.what());
    }
    catch (const InstanceError & e) {
        throw UsageError(flag + " " + path + ": " + e.what());
    }
}

auto load_graph(const std::string & path, const std::string & flag) -> Graph
{
    return load(path, flag, [](const std::string & t) { return parse_graph(t); });
}

auto load_instance(const std::string & path, const std::string & flag) -> ColoredInstance
{
    return load(path, flag, [](const std::string & t) { return parse_instance(t); });
}

auto print(const json & j) -> void { std::cout << j.dump(2) << '\n'; }

auto quote(const std::string & s) -> std::string
{
    if (s.find_first_of(" \t'\"$") == std::string::npos)
        return s;
    std::string out = "'";
    for (char c : s)
        out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

// ------------------------------------------------------------------- DOT

auto graph_dot(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v)
        out << "  " << v << ";\n";
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

auto instance_dot(const ColoredInstance & inst) -> std::string
{
    std::ostringstream out;
    out << "graph G {\n  node [style=filled, colorscheme=set312];\n";
    const auto & g = inst.graph();
    for (int v = 0; v < g.order(); ++v) {
        int c = inst.class_of(v);
        out << "  " << v << " [fillcolor=" << (c % 12 + 1);
        if (inst.class_of_rep(v) >= 0)
            out << ", penwidth=3, color=black";
        out << "];\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

// ------------------------------------------------------------- patterns

auto parse_family_token(const std::string & token) -> FamilySpec
{
    FamilySpec spec;
    auto colon = token.find(':');
    spec.name = token.substr(0, colon);
    if (colon != std::string::npos) {
        std::stringstream rest(token.substr(colon + 1));
        std::string part;
        while (std::getline(rest, part, ',')) {
            try {
                std::size_t used = 0;
                spec.params.push_back(std::stoi(part, &used));
                if (used != part.size())
                    throw std::invalid_argument(part);
            }
            catch (const std::exception &) {
                throw UsageError("--pattern: bad family parameter '" + part + "' in '" + token + "'");
            }
        }
    }
    return spec;
}

/// A family name with optional parameters ("cycle:5", "complete_bipartite:2,3"),
/// or a file holding a graph or a {"k", "edges"} pattern.
auto load_pattern_graph(const std::string & token) -> Graph
{
    auto spec = parse_family_token(token);
    const auto names = family_names();
    if (std::find(names.begin(), names.end(), spec.name) != names.end()) {
        try {
            return family(spec);
        }
        catch (const PreconditionError & e) {
            throw UsageError(std::string("--pattern: ") + e.what());
        }
    }
    return load(token, "--pattern", [](const std::string & text) {
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            auto j = detail::parse_json_text(text);
            if (j.is_object() && j.contains("k"))
                return pattern_from_json(j).graph();
        }
        return parse_graph(text);
    });
}

auto load_pattern(const std::string & token, const ColoredInstance & inst) -> TargetPattern
{
    if (token == "full")
        return TargetPattern::full(inst);
    return load(token, "--pattern", [](const std::string & t) { return pattern_from_json(detail::parse_json_text(t)); });
}

/// Cyclomatic number <= 1 in every component.
auto at_most_one_cycle_each(const Graph & g) -> bool
{
    for (const auto & comp : components(g)) {
        std::size_t inside = 0;
        for (auto [u, v] : g.edges())
            if (comp.contains(u))
                ++inside;
        if (inside > static_cast<std::size_t>(comp.size()))
            return false;
    }
    return true;
}

/// Ring order when g is a single cycle through every vertex.
auto ring_order(const Graph & g) -> std::optional<std::vector<int>>
{
    if (g.order() < 3 || ! is_connected(g))
        return std::nullopt;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            return std::nullopt;
    std::vector<int> ring{0};
    int prev = -1, cur = 0;
    while (true) {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) {
                next = w;
                break;
            }
        if (next == 0)
            break;
        ring.push_back(next);
        prev = cur;
        cur = next;
    }
    return ring;
}

// ------------------------------------------------------------- options

struct Common {
    int threads = 1;
    std::uint64_t budget_nodes = Budget{}.max_nodes;
    double budget_secs = Budget{}.max_seconds;

    auto solve_options() const -> SolveOptions
    {
        SolveOptions o;
        o.budget = {budget_nodes, budget_secs};
        o.threads = threads;
        return o;
    }

    auto minor_options() const -> MinorOptions { return {budget_nodes, budget_secs, threads}; }
};

auto add_budget(CLI::App * sub, Common & c) -> void
{
    sub->add_option("--budget-nodes", c.budget_nodes, "Search node limit")->check(CLI::PositiveNumber);
    sub->add_option("--budget-secs", c.budget_secs, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
}

auto budget_flags(const Common & c) -> std::string
{
    std::string out;
    if (c.budget_nodes != Budget{}.max_nodes)
        out += " --budget-nodes " + std::to_string(c.budget_nodes);
    if (c.budget_secs != Budget{}.max_seconds) {
        std::ostringstream s;
        s << c.budget_secs;
        out += " --budget-secs " + s.str();
    }
    return out;
}

// ------------------------------------------------------------ commands

struct FuzzArgs {
    std::string pattern;
    int trials = 100;
    std::uint64_t seed = 0;
    bool kempe_complete = false;
    int max_internal = 4;
    double extra_prob = 0.0;
};

auto fuzz_replay(const FuzzArgs & a, std::uint64_t seed, const Common & c) -> std::string
{
    std::ostringstream s;
    s << "kempe fuzz --pattern " << quote(a.pattern) << " --trials 1 --seed " << seed << " --max-internal " << a.max_internal;
    if (a.extra_prob > 0.0)
        s << " --extra-prob " << a.extra_prob;
    if (a.kempe_complete)
        s << " --kempe-complete";
    s << budget_flags(c);
    return s.str();
}

/// One trial: the generated instance realises the pattern, the solver finds a
/// certificate, and for patterns with at most one cycle per component the
/// constructive builders agree. Returns the failure reason, if any.
auto fuzz_trial(const Graph & pattern, const FuzzArgs & a, std::uint64_t seed, const Common & c, json & row)
    -> std::optional<std::string>
{
    PathSystemSpec spec{pattern, seed, a.max_internal, a.extra_prob, a.kempe_complete};
    auto sys = random_path_system(spec);
    const auto & inst = sys.instance;
    row["vertices"] = inst.graph().order();
    row["rejected_extra_edges"] = sys.rejected_extra_edges;

    auto h = h_graph(inst).graph;
    for (auto [x, y] : pattern.edges())
        if (! h.adjacent(x, y))
            return "H misses pattern edge " + std::to_string(x) + "-" + std::to_string(y);
    if (a.kempe_complete && ! is_kempe_coloring(inst).kempe)
        return "kempe-complete instance is not a Kempe coloring";

    auto pat = TargetPattern::from_graph(pattern);
    auto verdict = solve(inst, pat, c.solve_options());
    row["solve"] = to_string(verdict.status);
    row["nodes"] = verdict.stats.nodes;
    if (verdict.status == SolveStatus::BudgetExceeded)
        throw BudgetExceeded("solver budget exceeded at seed " + std::to_string(seed));
    if (verdict.status == SolveStatus::Unsat)
        return "no rooted certificate exists: counterexample instance " + instance_to_json(inst).dump();

    if (at_most_one_cycle_each(pattern)) {
        try {
            auto cert = unicyclic_certificate(inst, pat);
            if (auto bad = verify(inst, pat, cert); ! bad.empty())
                return "unicyclic builder failed verification: " + bad.front().message;
            row["builder"] = "unicyclic";
            if (auto ring = ring_order(pattern)) {
                auto cc = cycle_certificate(inst, *ring);
                if (auto bad = verify(inst, pat, cc); ! bad.empty())
                    return "cycle builder failed verification: " + bad.front().message;
                row["builder"] = "cycle";
            }
        }
        catch (const std::logic_error & e) {
            return std::string("builder failed: ") + e.what();
        }
    }
    return std::nullopt;
}

auto cmd_fuzz(const FuzzArgs & a, const Common & c) -> int
{
    auto pattern = load_pattern_graph(a.pattern);
    json failures = json::array();
    json rows = json::array();
    int passed = 0;
    for (int i = 0; i < a.trials; ++i) {
        auto seed = a.seed + static_cast<std::uint64_t>(i);
        json row{{"trial", i}, {"seed", seed}};
        std::optional<std::string> reason;
        try {
            reason = fuzz_trial(pattern, a, seed, c, row);
        }
        catch (const BudgetExceeded &) {
            std::cerr << "budget exceeded; replay: " << fuzz_replay(a, seed, c) << '\n';
            throw;
        }
        if (reason) {
            auto replay = fuzz_replay(a, seed, c);
            failures.push_back({{"trial", i}, {"seed", seed}, {"reason", *reason}, {"replay", replay}});
            std::cerr << "FAIL seed " << seed << ": " << *reason << "\n  replay: " << replay << '\n';
        }
        else
            ++passed;
        rows.push_back(std::move(row));
    }
    print({{"command", "fuzz"},
        {"pattern", a.pattern},
        {"pattern_graph", graph_to_json(pattern)},
        {"seed", a.seed},
        {"trials", a.trials},
        {"max_internal", a.max_internal},
        {"extra_prob", a.extra_prob},
        {"kempe_complete", a.kempe_complete},
        {"passed", passed},
        {"failed", failures.size()},
        {"failures", failures},
        {"rows", rows}});
    return failures.empty() ? ok : violation;
}

struct RemarkArgs {
    int trials = 50;
    std::uint64_t seed = 0;
    int max_internal = 2;
    bool kempe_complete = false;
};

auto cmd_remarks(const RemarkArgs & a, const Common & c) -> int
{
    auto k5 = family({"complete", {5}});
    int premises = 0, nonplanar = 0, with_k5 = 0;
    json failures = json::array(), rows = json::array();
    for (int i = 0; i < a.trials; ++i) {
        auto seed = a.seed + static_cast<std::uint64_t>(i);
        auto sys = random_path_system({k5, seed, a.max_internal, 0.0, a.kempe_complete});
        auto rep = validate_remarks(sys.instance, c.minor_options());
        const auto & g = sys.instance.graph();
        std::vector<std::string> problems;
        if (rep.k5)
            for (auto & p : embedding_problems(g, k5, *rep.k5))
                problems.push_back("K5 embedding: " + p);
        if (rep.nonplanarity) {
            auto h = rep.nonplanarity->minor == "K5" ? k5 : family({"complete_bipartite", {3, 3}});
            for (auto & p : embedding_problems(g, h, rep.nonplanarity->embedding))
                problems.push_back(rep.nonplanarity->minor + " embedding: " + p);
        }
        if (rep.counterexample)
            problems.push_back(rep.planar ? "premises hold but the graph is planar" : "premises hold but there is no K5 minor");
        premises += rep.premises_ok;
        nonplanar += ! rep.planar;
        with_k5 += rep.has_k5_minor;
        json row = remarks_to_json(rep);
        row["trial"] = i;
        row["seed"] = seed;
        row["vertices"] = g.order();
        row["edges"] = g.size();
        rows.push_back(std::move(row));
        if (! problems.empty()) {
            std::ostringstream replay;
            replay << "kempe remarks --trials 1 --seed " << seed << " --max-internal " << a.max_internal
                   << (a.kempe_complete ? " --kempe-complete" : "") << budget_flags(c);
            failures.push_back({{"seed", seed}, {"problems", problems}, {"replay", replay.str()}});
            std::cerr << "FAIL seed " << seed << ": " << problems.front() << "\n  replay: " << replay.str() << '\n';
        }
    }
    print({{"command", "remarks"},
        {"seed", a.seed},
        {"trials", a.trials},
        {"max_internal", a.max_internal},
        {"kempe_complete", a.kempe_complete},
        {"premises_ok", premises},
        {"nonplanar", nonplanar},
        {"k5_minor", with_k5},
        {"failures", failures},
        {"rows", rows}});
    return failures.empty() ? ok : violation;
}

auto cmd_zsweep(int max_n, bool cross_check, const Common & c) -> int
{
    auto start = std::chrono::steady_clock::now();
    json rows = json::array();
    std::map<std::string, int> rungs;
    int fallbacks = 0, bad = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            auto z = z_of(g);
            auto rep = z_small_certificate(z, c.solve_options());
            bool verified = is_valid(z.inst, TargetPattern::full(z.inst), rep.certificate);
            json row{{"graph6", to_graph6(g)}, {"n", n}, {"m", g.size()}, {"rung", rep.rung}, {"verified", verified}};
            if (cross_check) {
                auto v = solve(z.inst, TargetPattern::full(z.inst), c.solve_options());
                if (v.status == SolveStatus::BudgetExceeded)
                    throw BudgetExceeded("solver budget exceeded on " + to_graph6(g));
                row["solve"] = to_string(v.status);
                verified = verified && v.status == SolveStatus::Sat;
            }
            if (rep.fallback_used) {
                ++fallbacks;
                std::cerr << "fallback: " << to_graph6(g) << '\n';
            }
            if (! verified) {
                ++bad;
                std::cerr << "FAIL " << to_graph6(g) << "\n  replay: kempe zsweep --max-n " << n << " --cross-check\n";
            }
            ++rungs[rep.rung];
            rows.push_back(std::move(row));
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    print({{"command", "zsweep"},
        {"max_n", max_n},
        {"classes", rows.size()},
        {"verified", rows.size() - static_cast<std::size_t>(bad)},
        {"fallbacks", fallbacks},
        {"rungs", rungs},
        {"seconds", secs},
        {"rows", rows}});
    return bad == 0 ? ok : violation;
}

auto threads_from_env(int & threads) -> void
{
    const char * env = std::getenv("KEMPE_THREADS");
    if (env == nullptr || *env == '\0')
        return;
    try {
        std::size_t used = 0;
        int t = std::stoi(env, &used);
        if (used != std::string(env).size() || t < 1)
            throw std::invalid_argument(env);
        threads = t;
    }
    catch (const std::exception &) {
        throw UsageError(std::string("KEMPE_THREADS: expected a positive integer, got '") + env + "'");
    }
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Kempe chains, rooted certificates and the doubled-graph construction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "kempe 0.1.0");

    Common common;
    std::optional<int> threads_flag;
    app.add_option("--threads", threads_flag, "Worker threads (default: $KEMPE_THREADS or 1)")->check(CLI::PositiveNumber);

    // family
    auto * family_cmd = app.add_subcommand("family", "Print a named graph");
    std::string family_name, family_format = "json";
    std::optional<int> fam_n, fam_m;
    family_cmd->add_option("name", family_name, "Family name")->required()->check(CLI::IsMember(family_names()));
    family_cmd->add_option("--n", fam_n, "Size parameter");
    family_cmd->add_option("--m", fam_m, "Second size parameter (complete_bipartite)");
    family_cmd->add_option("--format", family_format, "json, graph6 or dot")->check(CLI::IsMember({"json", "graph6", "dot"}));

    // z
    auto * z_cmd = app.add_subcommand("z", "Build the doubled instance Z(G)");
    std::string z_in, z_format = "json";
    z_cmd->add_option("--in", z_in, "Base graph (JSON or graph6)")->required();
    z_cmd->add_option("--format", z_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    // hgraph
    auto * h_cmd = app.add_subcommand("hgraph", "Kempe chains and the derived transversal graph");
    std::string h_in;
    bool h_chains = false;
    h_cmd->add_option("--in", h_in, "Instance JSON")->required();
    h_cmd->add_flag("--chains", h_chains, "Also list every nontrivial Kempe chain");

    // goodperm
    auto * gp_cmd = app.add_subcommand("goodperm", "Search for a good permutation");
    std::string gp_in;
    gp_cmd->add_option("--in", gp_in, "Graph (JSON or graph6)")->required();

    // solve
    auto * solve_cmd = app.add_subcommand("solve", "Exact rooted-certificate search");
    std::string solve_in, solve_pattern = "full";
    solve_cmd->add_option("--in", solve_in, "Instance JSON")->required();
    solve_cmd->add_option("--pattern", solve_pattern, "Pattern JSON, or 'full' for all of H");
    add_budget(solve_cmd, common);

    // verify
    auto * verify_cmd = app.add_subcommand("verify", "Check a rooted certificate");
    std::string verify_in, verify_pattern = "full", verify_cert;
    verify_cmd->add_option("--in", verify_in, "Instance JSON")->required();
    verify_cmd->add_option("--pattern", verify_pattern, "Pattern JSON, or 'full'");
    verify_cmd->add_option("--cert", verify_cert, "Certificate JSON")->required();

    // counting
    auto * counting_cmd = app.add_subcommand("counting", "Counting bound on Z(G)");
    std::string counting_in;
    counting_cmd->add_option("--in", counting_in, "Base graph (JSON or graph6)")->required();

    // zsweep
    auto * sweep_cmd = app.add_subcommand("zsweep", "Certify Z(G) for every graph up to a size");
    int sweep_n = 6;
    bool sweep_cross = false;
    sweep_cmd->add_option("--max-n", sweep_n, "Largest base order")->check(CLI::Range(1, z_small_limit));
    sweep_cmd->add_flag("--cross-check", sweep_cross, "Also run the exact solver on every instance");
    add_budget(sweep_cmd, common);

    // fuzz
    auto * fuzz_cmd = app.add_subcommand("fuzz", "Seeded path-system trials for a pattern");
    FuzzArgs fuzz;
    fuzz_cmd->add_option("--pattern", fuzz.pattern, "Family name[:params] or graph/pattern file")->required();
    fuzz_cmd->add_option("--trials", fuzz.trials, "Number of trials")->check(CLI::NonNegativeNumber);
    fuzz_cmd->add_option("--seed", fuzz.seed, "Seed of the first trial");
    fuzz_cmd->add_flag("--kempe-complete", fuzz.kempe_complete, "Connect every class pair");
    fuzz_cmd->add_option("--max-internal", fuzz.max_internal, "Largest internal path length (even)")->check(CLI::NonNegativeNumber);
    fuzz_cmd->add_option("--extra-prob", fuzz.extra_prob, "Probability of each extra inter-class edge")->check(CLI::Range(0.0, 1.0));
    add_budget(fuzz_cmd, common);

    // remarks
    auto * remarks_cmd = app.add_subcommand("remarks", "Planarity and K5 minors of 5-class instances with complete H");
    RemarkArgs remarks;
    remarks_cmd->add_option("--trials", remarks.trials, "Number of trials")->check(CLI::NonNegativeNumber);
    remarks_cmd->add_option("--seed", remarks.seed, "Seed of the first trial");
    remarks_cmd->add_option("--max-internal", remarks.max_internal, "Largest internal path length (even)")->check(CLI::NonNegativeNumber);
    remarks_cmd->add_flag("--kempe-complete", remarks.kempe_complete, "Connect every class pair");
    add_budget(remarks_cmd, common);

    // minor
    auto * minor_cmd = app.add_subcommand("minor", "Search for h as a minor of g");
    minor_cmd->set_help_flag("--help", "Print this help message and exit");
    std::string minor_g, minor_h;
    minor_cmd->add_option("--g", minor_g, "Host graph")->required();
    minor_cmd->add_option("--h", minor_h, "Pattern graph")->required();
    add_budget(minor_cmd, common);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return usage;
    }

    try {
        if (threads_flag)
            common.threads = *threads_flag;
        else
            threads_from_env(common.threads);

        if (*family_cmd) {
            FamilySpec spec{family_name, {}};
            if (fam_n)
                spec.params.push_back(*fam_n);
            if (fam_m)
                spec.params.push_back(*fam_m);
            Graph g;
            try {
                g = family(spec);
            }
            catch (const PreconditionError & e) {
                throw UsageError(std::string("family: ") + e.what());
            }
            if (family_format == "graph6")
                std::cout << to_graph6(g) << '\n';
            else if (family_format == "dot")
                std::cout << graph_dot(g);
            else
                print(graph_to_json(g));
            return ok;
        }
        if (*z_cmd) {
            auto base = load_graph(z_in, "--in");
            auto z = z_of(base);
            if (z_format == "dot")
                std::cout << instance_dot(z.inst);
            else
                print({{"base", graph_to_json(base)}, {"instance", instance_to_json(z.inst)}});
            return ok;
        }
        if (*h_cmd) {
            auto inst = load_instance(h_in, "--in");
            auto h = h_graph(inst).graph;
            auto kc = is_kempe_coloring(inst);
            json out{{"graph", graph_to_json(h)},
                {"transversal", inst.transversal().reps},
                {"kempe_coloring", kc.kempe},
                {"connected_pairs", kc.connected_pairs}};
            if (h_chains) {
                json chains = json::array();
                for (const auto & ch : kempe_chains(inst))
                    chains.push_back({{"classes", {ch.class_a, ch.class_b}}, {"vertices", set_to_json(ch.vertices)}});
                out["chains"] = std::move(chains);
            }
            print(out);
            return ok;
        }
        if (*gp_cmd) {
            auto g = load_graph(gp_in, "--in");
            if (auto p = find_good_permutation(g))
                print({{"result", "found"}, {"permutation", p->f}});
            else
                print({{"result", "none"}});
            return ok;
        }
        if (*solve_cmd) {
            auto inst = load_instance(solve_in, "--in");
            auto pat = load_pattern(solve_pattern, inst);
            try {
                check_pattern(inst, pat);
            }
            catch (const InstanceError & e) {
                throw UsageError("--pattern " + solve_pattern + ": " + e.what());
            }
            auto v = solve(inst, pat, common.solve_options());
            print(verdict_to_json(inst, v));
            return v.status == SolveStatus::BudgetExceeded ? budget : ok;
        }
        if (*verify_cmd) {
            auto inst = load_instance(verify_in, "--in");
            auto pat = load_pattern(verify_pattern, inst);
            auto cert = load(verify_cert, "--cert", [&](const std::string & t) { return certificate_from_json(inst, detail::parse_json_text(t)); });
            auto bad = verify(inst, pat, cert);
            json list = json::array();
            for (const auto & v : bad)
                list.push_back(violation_to_json(v));
            print({{"ok", bad.empty()}, {"violations", list}});
            if (! bad.empty()) {
                std::cerr << "certificate rejected: " << bad.front().message << "\n  replay: kempe verify --in " << quote(verify_in)
                          << " --pattern " << quote(verify_pattern) << " --cert " << quote(verify_cert) << '\n';
                return violation;
            }
            return ok;
        }
        if (*counting_cmd) {
            auto g = load_graph(counting_in, "--in");
            print(counting_to_json(counting_unsat_check(z_of(g))));
            return ok;
        }
        if (*sweep_cmd)
            return cmd_zsweep(sweep_n, sweep_cross, common);
        if (*fuzz_cmd) {
            if (fuzz.max_internal % 2 != 0)
                throw UsageError("--max-internal must be even");
            return cmd_fuzz(fuzz, common);
        }
        if (*remarks_cmd) {
            if (remarks.max_internal % 2 != 0)
                throw UsageError("--max-internal must be even");
            return cmd_remarks(remarks, common);
        }
        if (*minor_cmd) {
            auto g = load_graph(minor_g, "--g");
            auto h = load_graph(minor_h, "--h");
            if (auto emb = has_minor(g, h, common.minor_options()))
                print({{"result", "found"}, {"embedding", embedding_to_json(*emb)}});
            else
                print({{"result", "none"}});
            return ok;
        }
    }
    catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return budget;
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    catch (const std::logic_error & e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return violation;
    }
    return ok;
}
