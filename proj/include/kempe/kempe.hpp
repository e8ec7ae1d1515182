#pragma once

#include <kempe/error.hpp>
#include <kempe/graph.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kempe {

inline constexpr int max_classes = 16;

/// Partition of V(G) into classes. Properness is checked by ColoredInstance,
/// which owns the graph.
class Coloring {
  public:
    Coloring() = default;

    /// Throws InstanceError unless `classes` partitions 0..n-1 into nonempty sets.
    Coloring(int n, std::vector<std::vector<int>> classes) : class_of_(static_cast<std::size_t>(n), -1)
    {
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (classes[c].empty())
                throw InstanceError("/classes/" + std::to_string(c) + ": color class is empty");
            VertexSet members(n);
            for (std::size_t i = 0; i < classes[c].size(); ++i) {
                int v = classes[c][i];
                auto where = "/classes/" + std::to_string(c) + "/" + std::to_string(i);
                if (v < 0 || v >= n)
                    throw InstanceError(where + ": vertex " + std::to_string(v) + " is out of range");
                if (class_of_[static_cast<std::size_t>(v)] >= 0)
                    throw InstanceError(where + ": vertex " + std::to_string(v) + " already belongs to class " +
                        std::to_string(class_of_[static_cast<std::size_t>(v)]));
                class_of_[static_cast<std::size_t>(v)] = static_cast<int>(c);
                members.insert(v);
            }
            classes_.push_back(std::move(members));
        }
        for (int v = 0; v < n; ++v)
            if (class_of_[static_cast<std::size_t>(v)] < 0)
                throw InstanceError("/classes: vertex " + std::to_string(v) + " is not covered by any class");
    }

    /// Builds from a per-vertex class index (classes 0..k-1 all nonempty).
    static auto from_labels(std::span<const int> labels) -> Coloring
    {
        int k = 0;
        for (int c : labels)
            k = std::max(k, c + 1);
        std::vector<std::vector<int>> classes(static_cast<std::size_t>(k));
        for (std::size_t v = 0; v < labels.size(); ++v) {
            if (labels[v] < 0)
                throw InstanceError("negative class label for vertex " + std::to_string(v));
            classes[static_cast<std::size_t>(labels[v])].push_back(static_cast<int>(v));
        }
        return Coloring(static_cast<int>(labels.size()), std::move(classes));
    }

    auto class_count() const -> int { return static_cast<int>(classes_.size()); }
    auto class_of(int v) const -> int { return class_of_[static_cast<std::size_t>(v)]; }
    auto members(int c) const -> const VertexSet & { return classes_[static_cast<std::size_t>(c)]; }
    auto classes() const -> const std::vector<VertexSet> & { return classes_; }
    auto labels() const -> const std::vector<int> & { return class_of_; }

  private:
    std::vector<VertexSet> classes_;
    std::vector<int> class_of_;
};

/// One representative per class, indexed by class.
struct Transversal {
    std::vector<int> reps;
};

/// (G, coloring, transversal). Construction validates everything, so every
/// value of this type is a proper coloring with a genuine transversal.
class ColoredInstance {
  public:
    ColoredInstance(Graph graph, Coloring coloring, Transversal transversal) :
        graph_(std::move(graph)), coloring_(std::move(coloring)), transversal_(std::move(transversal))
    {
        const int n = graph_.order();
        if (static_cast<int>(coloring_.labels().size()) != n)
            throw InstanceError("/classes: coloring covers " + std::to_string(coloring_.labels().size()) +
                " vertices but the graph has " + std::to_string(n));
        if (coloring_.class_count() > max_classes)
            throw InstanceError("/classes: " + std::to_string(coloring_.class_count()) + " classes exceed the limit of " +
                std::to_string(max_classes));
        for (auto [u, v] : graph_.edges())
            if (coloring_.class_of(u) == coloring_.class_of(v))
                throw InstanceError("/classes/" + std::to_string(coloring_.class_of(u)) + ": edge {" + std::to_string(u) +
                    "," + std::to_string(v) + "} lies inside the class");
        if (static_cast<int>(transversal_.reps.size()) != coloring_.class_count())
            throw InstanceError("/transversal: expected " + std::to_string(coloring_.class_count()) +
                " representatives, got " + std::to_string(transversal_.reps.size()));
        for (int c = 0; c < coloring_.class_count(); ++c) {
            int t = transversal_.reps[static_cast<std::size_t>(c)];
            if (t < 0 || t >= n || coloring_.class_of(t) != c)
                throw InstanceError("/transversal/" + std::to_string(c) + ": vertex " + std::to_string(t) +
                    " is not a member of class " + std::to_string(c));
        }
    }

    auto graph() const -> const Graph & { return graph_; }
    auto coloring() const -> const Coloring & { return coloring_; }
    auto transversal() const -> const Transversal & { return transversal_; }
    auto class_count() const -> int { return coloring_.class_count(); }
    auto rep(int c) const -> int { return transversal_.reps[static_cast<std::size_t>(c)]; }
    auto class_of(int v) const -> int { return coloring_.class_of(v); }
    auto members(int c) const -> const VertexSet & { return coloring_.members(c); }

    /// Vertex set of classes a and b together.
    auto class_pair(int a, int b) const -> VertexSet { return members(a) | members(b); }

    /// Class index of a transversal vertex, or -1.
    auto class_of_rep(int v) const -> int
    {
        int c = class_of(v);
        return rep(c) == v ? c : -1;
    }

  private:
    Graph graph_;
    Coloring coloring_;
    Transversal transversal_;
};

struct KempeChain {
    int class_a;
    int class_b;
    VertexSet vertices;
};

/// Components of G[A u B] for every class pair a < b, pairs in lexicographic
/// order and components by smallest vertex. Edgeless components are skipped
/// unless `include_trivial`.
inline auto kempe_chains(const ColoredInstance & inst, bool include_trivial = false) -> std::vector<KempeChain>
{
    std::vector<KempeChain> out;
    const int k = inst.class_count();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (auto & comp : components(inst.graph(), inst.class_pair(a, b)))
                if (include_trivial || comp.size() > 1)
                    out.push_back({a, b, std::move(comp)});
    return out;
}

/// The chain of classes (a, b) containing v, as a vertex set.
inline auto chain_containing(const ColoredInstance & inst, int a, int b, int v) -> VertexSet
{
    for (auto & comp : components(inst.graph(), inst.class_pair(a, b)))
        if (comp.contains(v))
            return comp;
    return VertexSet(inst.graph().order());
}

inline auto reps_share_chain(const ColoredInstance & inst, int a, int b) -> bool
{
    return chain_containing(inst, a, b, inst.rep(a)).contains(inst.rep(b));
}

/// Shortest path from rep(a) to rep(b) inside G[A u B], breaking ties toward
/// smaller vertices. Empty when the representatives share no chain.
inline auto two_colored_path(const ColoredInstance & inst, int a, int b) -> std::vector<int>
{
    const auto & g = inst.graph();
    auto allowed = inst.class_pair(a, b);
    std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
    int src = inst.rep(a), dst = inst.rep(b);
    parent[static_cast<std::size_t>(src)] = src;
    std::vector<int> queue{src};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        if (v == dst)
            break;
        for (int w : g.neighbors(v))
            if (allowed.contains(w) && parent[static_cast<std::size_t>(w)] < 0) {
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
    }
    if (parent[static_cast<std::size_t>(dst)] < 0)
        return {};
    std::vector<int> path{dst};
    while (path.back() != src)
        path.push_back(parent[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

/// Graph on class indices: i ~ j iff rep(i) and rep(j) share a Kempe chain.
/// Vertex i stands for the transversal vertex of class i.
struct HGraph {
    Graph graph;
};

inline auto h_graph(const ColoredInstance & inst) -> HGraph
{
    std::vector<Edge> edges;
    const int k = inst.class_count();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (reps_share_chain(inst, a, b))
                edges.emplace_back(a, b);
    return {Graph(k, edges)};
}

struct KempeColoringReport {
    bool kempe;
    int connected_pairs;
};

/// Whether every pair of classes induces a connected subgraph.
inline auto is_kempe_coloring(const ColoredInstance & inst) -> KempeColoringReport
{
    const int k = inst.class_count();
    int connected = 0;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (is_connected_subset(inst.graph(), inst.class_pair(a, b)))
                ++connected;
    return {connected == k * (k - 1) / 2, connected};
}

/// Joins the representatives of classes i and j by an edge.
struct AddTransversalEdge {
    int class_i;
    int class_j;
};

/// Adds K_m as m new singleton classes whose vertices join the transversal.
struct DisjointClique {
    int m;
};

using InstanceTransform = std::variant<AddTransversalEdge, DisjointClique>;

inline auto transform_instance(const ColoredInstance & inst, const InstanceTransform & spec) -> ColoredInstance
{
    if (const auto * add = std::get_if<AddTransversalEdge>(&spec)) {
        const int k = inst.class_count();
        if (add->class_i < 0 || add->class_j < 0 || add->class_i >= k || add->class_j >= k)
            throw PreconditionError("ADD_TRANSVERSAL_EDGE: class index out of range");
        if (add->class_i == add->class_j)
            throw PreconditionError("ADD_TRANSVERSAL_EDGE(" + std::to_string(add->class_i) + "," +
                std::to_string(add->class_j) + ") would put an edge inside a class");
        Edge e{inst.rep(add->class_i), inst.rep(add->class_j)};
        auto g = with_edges_added(inst.graph(), std::span<const Edge>(&e, 1));
        return ColoredInstance(std::move(g), inst.coloring(), inst.transversal());
    }

    const auto & clique = std::get<DisjointClique>(spec);
    if (clique.m < 0)
        throw PreconditionError("DISJOINT_CLIQUE: negative clique order");
    const int n = inst.graph().order();
    std::vector<Edge> edges;
    for (int a = 0; a < clique.m; ++a)
        for (int b = a + 1; b < clique.m; ++b)
            edges.emplace_back(a, b);
    auto g = disjoint_union(inst.graph(), Graph(clique.m, edges));
    auto labels = inst.coloring().labels();
    auto reps = inst.transversal().reps;
    for (int a = 0; a < clique.m; ++a) {
        labels.push_back(inst.class_count() + a);
        reps.push_back(n + a);
    }
    return ColoredInstance(std::move(g), Coloring::from_labels(labels), Transversal{std::move(reps)});
}

/// Instance restricted to `keep`, which must contain every representative.
/// Returns the new instance and the new-index -> old-index map.
inline auto restrict_instance(const ColoredInstance & inst, const VertexSet & keep) -> std::pair<ColoredInstance, std::vector<int>>
{
    auto sub = induced_subgraph(inst.graph(), keep);
    std::vector<int> to_new(static_cast<std::size_t>(inst.graph().order()), -1);
    for (std::size_t i = 0; i < sub.to_original.size(); ++i)
        to_new[static_cast<std::size_t>(sub.to_original[i])] = static_cast<int>(i);
    std::vector<int> labels;
    for (int v : sub.to_original)
        labels.push_back(inst.class_of(v));
    std::vector<int> reps;
    for (int c = 0; c < inst.class_count(); ++c) {
        int r = to_new[static_cast<std::size_t>(inst.rep(c))];
        if (r < 0)
            throw PreconditionError("restrict_instance: representative of class " + std::to_string(c) + " was removed");
        reps.push_back(r);
    }
    return {ColoredInstance(std::move(sub.graph), Coloring::from_labels(labels), Transversal{std::move(reps)}),
        std::move(sub.to_original)};
}

} // namespace kempe
