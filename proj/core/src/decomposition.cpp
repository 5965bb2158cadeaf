#include "pdzf/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pdzf/constructions.hpp"
#include "pdzf/error.hpp"
#include "pdzf/parallel.hpp"

namespace pdzf {

const char* to_string(SubtreeClass c) noexcept {
    switch (c) {
        case SubtreeClass::I: return "I";
        case SubtreeClass::IPrime: return "I'";
        case SubtreeClass::J: return "J";
    }
    return "?";
}

namespace {

void require_vertex(const Graph& g, Vertex v, const char* who) {
    if (v >= g.order()) {
        throw InputError(std::string(who) + ": vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(g.order()) + ")");
    }
}

void require_tree(const Graph& g, const char* who) {
    if (!is_tree(g)) throw InputError(std::string(who) + ": graph is not a tree");
}

VertexSet singleton(std::size_t n, Vertex v) {
    VertexSet s(n);
    s.insert(v);
    return s;
}

// The result of a pd solve on G - v, with the witness expressed in G's ids.
SolveResult solve_without(const Graph& g, Vertex v, const SolveOptions& opts) {
    InducedSubgraph rest = induced_subgraph(g, g.vertices() - singleton(g.order(), v));
    SolveResult r = restricted_pd_number(rest.graph, rest.graph.empty_set(), opts);
    r.witness = rest.lift(r.witness);
    return r;
}

void require_minimum_zfs(const Graph& g, const VertexSet& x, const SolveOptions& opts, const char* who) {
    if (g.empty()) throw InputError(std::string(who) + ": the empty graph has no zero forcing set");
    if (x.ambient() != g.order()) throw InputError(std::string(who) + ": X has the wrong ambient size");
    if (!is_zero_forcing_set(g, x)) {
        throw InputError(std::string(who) + ": " + x.to_string() + " is not a zero forcing set");
    }
    const std::size_t z = restricted_zf_number(g, g.empty_set(), opts).value;
    if (x.size() != z) {
        throw InputError(std::string(who) + ": " + x.to_string() + " is not minimum (Z(G) = " +
                         std::to_string(z) + ")");
    }
}

bool default_trace_realizes(const Graph& g, const VertexSet& x, const VertexSet& wanted) {
    return wanted.is_subset_of(forcing_chains(g, zf_closure(g, x)).terminals);
}

bool realizes_terminals(const Graph& g, const VertexSet& x, const VertexSet& wanted, std::size_t cap) {
    return default_trace_realizes(g, x, wanted) || has_terminal_superset(g, x, wanted, cap);
}

}  // namespace

Vertex centroid(const Graph& tree) {
    require_tree(tree, "centroid");
    const std::size_t n = tree.order();
    std::vector<Vertex> order;
    std::vector<Vertex> parent(n, n);
    order.reserve(n);
    order.push_back(0);
    parent[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex w : tree.neighbors(order[i])) {
            if (parent[w] == n) {
                parent[w] = order[i];
                order.push_back(w);
            }
        }
    }
    std::vector<std::size_t> size(n, 1);
    std::vector<std::size_t> heaviest(n, 0);
    for (std::size_t i = n; i-- > 1;) {
        const Vertex v = order[i];
        size[parent[v]] += size[v];
        heaviest[parent[v]] = std::max(heaviest[parent[v]], size[v]);
    }
    Vertex best = 0;
    std::size_t best_load = n;
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t load = std::max(heaviest[v], n - size[v]);
        if (load < best_load) {
            best_load = load;
            best = v;
        }
    }
    return best;
}

TreeSplit tree_split(const Graph& tree, Vertex v, std::size_t jobs, const SolveOptions& opts) {
    require_tree(tree, "tree_split");
    require_vertex(tree, v, "tree_split");
    if (tree.degree(v) < 2) {
        throw InputError("tree_split: split vertex " + std::to_string(v) + " has degree " +
                         std::to_string(tree.degree(v)) + ", needs at least 2");
    }
    TreeSplit split;
    split.v = v;

    const VertexSet center = singleton(tree.order(), v);
    InducedSubgraph rest = induced_subgraph(tree, tree.vertices() - center);
    for (const VertexSet& part : components(rest.graph)) {
        SplitSubtree sub;
        sub.piece = induced_subgraph(tree, rest.lift(part) | center);
        sub.root = sub.piece.from_parent[v];
        split.subtrees.push_back(std::move(sub));
    }

    const std::size_t k = split.subtrees.size();
    parallel_for(3 * k, jobs, [&](std::size_t task) {
        SplitSubtree& sub = split.subtrees[task / 3];
        const Graph& piece = sub.piece.graph;
        switch (task % 3) {
            case 0:
                sub.with_root = restricted_pd_number(piece, singleton(piece.order(), sub.root), opts);
                break;
            case 1: sub.plain = restricted_pd_number(piece, piece.empty_set(), opts); break;
            default: sub.without_root = solve_without(piece, sub.root, opts); break;
        }
    });

    split.g = -static_cast<long long>(k);
    for (std::size_t i = 0; i < k; ++i) {
        const SplitSubtree& sub = split.subtrees[i];
        split.g += static_cast<long long>(sub.with_root.value);
        SubtreeClass c;
        if (sub.with_root.value != sub.plain.value) {
            c = SubtreeClass::J;
            split.J.push_back(i);
        } else if (sub.without_root.value + 1 == sub.with_root.value) {
            c = SubtreeClass::IPrime;
            split.I_prime.push_back(i);
        } else {
            c = SubtreeClass::I;
            split.I.push_back(i);
        }
        split.classes.push_back(c);
    }
    return split;
}

SolveResult evaluate_split(const Graph& tree, const TreeSplit& split) {
    SolveResult result;
    result.mode = Mode::PowerDomination;
    result.method = Method::Decomposition;
    result.witness = tree.empty_set();

    const bool take_v = split.I.size() >= 2 || split.J.empty();
    for (std::size_t i = 0; i < split.subtrees.size(); ++i) {
        const SplitSubtree& sub = split.subtrees[i];
        VertexSet local;
        if (take_v || split.classes[i] == SubtreeClass::I) {
            local = sub.with_root.witness;
        } else if (split.classes[i] == SubtreeClass::J) {
            local = sub.plain.witness;
        } else {
            local = sub.without_root.witness;
        }
        local.erase(sub.root);
        result.witness |= sub.piece.lift(local);
        result.cuts_added += sub.with_root.cuts_added + sub.plain.cuts_added + sub.without_root.cuts_added;
        result.nodes += sub.with_root.nodes + sub.plain.nodes + sub.without_root.nodes;
    }
    if (take_v) result.witness.insert(split.v);
    result.value = static_cast<std::size_t>(split.g + (take_v ? 1 : 0));

    if (result.witness.size() != result.value || !is_power_dominating_set(tree, result.witness)) {
        throw std::logic_error("evaluate_split: assembled set " + result.witness.to_string() +
                               " does not certify the split value " + std::to_string(result.value));
    }
    return result;
}

SolveResult tree_pd_parallel(const Graph& tree, std::optional<Vertex> v, std::size_t jobs,
                             const SolveOptions& opts) {
    require_tree(tree, "tree_pd_parallel");
    if (v) require_vertex(tree, *v, "tree_pd_parallel");
    if (tree.order() <= 2) return restricted_pd_number(tree, tree.empty_set(), opts);
    const Vertex at = v ? *v : centroid(tree);
    if (tree.degree(at) < 2) return restricted_pd_number(tree, tree.empty_set(), opts);
    return evaluate_split(tree, tree_split(tree, at, jobs, opts));
}

LeafClassification leaf_classify(const Graph& g, Vertex u, const SolveOptions& opts) {
    require_vertex(g, u, "leaf_classify");
    if (g.degree(u) != 1) {
        throw InputError("leaf_classify: vertex " + std::to_string(u) + " has degree " +
                         std::to_string(g.degree(u)) + ", not a leaf");
    }
    const VertexSet x = singleton(g.order(), u);
    SolveResult restricted = restricted_pd_number(g, x, opts);
    SolveResult without = solve_without(g, u, opts);

    LeafClassification out;
    out.restricted = restricted.value;
    out.without = without.value;
    if (restricted.value == without.value + 1) {
        out.plus_one = true;
        out.witness = without.witness | x;
        if (!is_power_dominating_set(g, out.witness)) {
            throw std::logic_error("leaf_classify: S ∪ {u} witness fails to power dominate");
        }
    } else if (restricted.value == without.value) {
        out.witness = restricted.witness;
    } else {
        throw std::logic_error("leaf_classify: restricted value below gamma_P(G - u)");
    }
    return out;
}

MandatoryVertices mandatory_vertices(const Graph& g) {
    MandatoryVertices out;
    out.must = g.empty_set();
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet leaves = g.empty_set();
        for (Vertex w : g.neighbors(v)) {
            if (g.degree(w) == 1) leaves.insert(w);
        }
        if (leaves.size() >= 3) {
            out.must.insert(v);
        } else if (leaves.size() == 2) {
            out.either_or.emplace_back(v, std::move(leaves));
        }
    }
    return out;
}

BoundaryComposition compose_boundary_pd(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                                        const VertexSet& w1, const VertexSet& w2,
                                        const SolveOptions& opts) {
    const std::size_t n = g.order();
    for (const VertexSet* s : {&v1, &v2, &w1, &w2}) {
        if (s->ambient() != n) throw InputError("compose_boundary_pd: vertex set has the wrong ambient size");
    }
    if (v1.intersects(v2) || !(v1 | v2).is_full() || v1.empty() || v2.empty()) {
        throw InputError("compose_boundary_pd: V1 and V2 must partition V into nonempty parts");
    }
    if (!w1.is_subset_of(v1) || !w2.is_subset_of(v2)) {
        throw InputError("compose_boundary_pd: W1 must lie in V1 and W2 in V2");
    }
    const VertexSet boundary = (closed_neighborhood(g, v2) & v1) | (closed_neighborhood(g, v1) & v2);
    if (!boundary.is_subset_of(closed_neighborhood(g, w1 | w2))) {
        throw InputError("compose_boundary_pd: W1 ∪ W2 does not dominate the boundary " +
                         boundary.to_string());
    }
    InducedSubgraph g1 = induced_subgraph(g, v1);
    InducedSubgraph g2 = induced_subgraph(g, v2);
    BoundaryComposition out;
    out.part1 = restricted_pd_number(g1.graph, g1.restrict(w1), opts);
    out.part2 = restricted_pd_number(g2.graph, g2.restrict(w2), opts);
    out.part1.witness = g1.lift(out.part1.witness);
    out.part2.witness = g2.lift(out.part2.witness);
    out.bound = out.part1.value + out.part2.value;
    out.witness = out.part1.witness | out.part2.witness;
    if (!is_power_dominating_set(g, out.witness)) {
        throw std::logic_error("compose_boundary_pd: combined witness fails to power dominate");
    }
    return out;
}

PendantComposition compose_pendant_zf(const Graph& g, const VertexSet& x,
                                      std::span<const Pendant> pendants,
                                      std::optional<std::vector<Force>> forces,
                                      const SolveOptions& opts, std::size_t cap) {
    require_minimum_zfs(g, x, opts, "compose_pendant_zf");
    const std::size_t n = g.order();
    VertexSet at = g.empty_set();
    for (const Pendant& p : pendants) {
        require_vertex(g, p.at, "compose_pendant_zf");
        if (p.root >= p.graph.order()) {
            throw InputError("compose_pendant_zf: pendant root " + std::to_string(p.root) + " out of range");
        }
        if (!is_connected(p.graph)) throw InputError("compose_pendant_zf: pendant graph is not connected");
        if (at.contains(p.at)) {
            throw InputError("compose_pendant_zf: two pendants overlap at vertex " + std::to_string(p.at));
        }
        at.insert(p.at);
    }

    bool verified = false;
    if (forces) {
        ForcingChainDecomposition chains = forcing_chains(g, x, *forces);
        std::size_t colored = x.size() + forces->size();
        verified = colored == n && at.is_subset_of(chains.terminals);
    }
    if (!verified && !realizes_terminals(g, x, at, cap)) {
        throw InputError("compose_pendant_zf: " + at.to_string() +
                         " is not inside the terminal set of any chronological list for " + x.to_string());
    }

    PendantComposition out;
    std::vector<Edge> edges = g.edges();
    std::size_t next = n;
    for (const Pendant& p : pendants) {
        std::vector<Vertex> embed(p.graph.order());
        for (Vertex w = 0; w < p.graph.order(); ++w) embed[w] = w == p.root ? p.at : next++;
        for (auto [a, b] : p.graph.edges()) edges.emplace_back(embed[a], embed[b]);
        out.embed.push_back(std::move(embed));
    }
    out.composed = Graph::from_edges(next, edges);

    SolveResult& r = out.result;
    r.mode = Mode::ZeroForcing;
    r.method = Method::Decomposition;
    r.witness = VertexSet(next);
    for (Vertex v : x) r.witness.insert(v);
    long long value = static_cast<long long>(x.size()) - static_cast<long long>(pendants.size());
    for (std::size_t i = 0; i < pendants.size(); ++i) {
        const Pendant& p = pendants[i];
        SolveResult part = restricted_zf_number(p.graph, singleton(p.graph.order(), p.root), opts);
        value += static_cast<long long>(part.value);
        for (Vertex w : part.witness) {
            if (w != p.root) r.witness.insert(out.embed[i][w]);
        }
        r.cuts_added += part.cuts_added;
        r.nodes += part.nodes;
        out.pendant_values.push_back(std::move(part));
    }
    r.value = static_cast<std::size_t>(value);
    if (r.witness.size() != r.value || !is_zero_forcing_set(out.composed, r.witness)) {
        throw std::logic_error("compose_pendant_zf: assembled witness does not certify the formula");
    }
    return out;
}

ApexReport check_apex_terminal(const Graph& g, const VertexSet& x, const VertexSet& t,
                               const SolveOptions& opts, std::size_t cap) {
    require_minimum_zfs(g, x, opts, "check_apex_terminal");
    if (t.ambient() != g.order()) throw InputError("check_apex_terminal: T has the wrong ambient size");
    if (t.empty() || t.is_full()) {
        throw InputError("check_apex_terminal: T must be a nonempty proper subset of V");
    }
    ApexReport report;
    report.apex = apex_over(g, t);
    report.z_g = x.size();
    report.terminal_set = realizes_terminals(g, x, t, cap);

    VertexSet lifted(report.apex.order());
    for (Vertex v : x) lifted.insert(v);
    report.x_forces_apex = is_zero_forcing_set(report.apex, lifted);
    for (Vertex v : t) {
        if (realizes_terminals(g, x, singleton(g.order(), v), cap)) {
            report.some_terminal_in_t = true;
            break;
        }
    }
    report.z_apex = restricted_zf_number(report.apex, report.apex.empty_set(), opts).value;
    return report;
}

}  // namespace pdzf
