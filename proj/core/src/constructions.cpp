#include "pdzf/constructions.hpp"

#include <algorithm>

#include "pdzf/error.hpp"

namespace pdzf {
namespace {

Graph build(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

std::vector<Edge> one_based(std::initializer_list<Edge> edges) {
    std::vector<Edge> out;
    for (auto [u, v] : edges) out.emplace_back(u - 1, v - 1);
    return out;
}

std::vector<std::string> numeric_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

void require(bool cond, std::string_view family, std::string_view msg) {
    if (!cond) throw InputError(std::string(family) + ": " + std::string(msg));
}

}  // namespace

LeafAttachment attach_leaves(const Graph& g, const VertexSet& x, std::size_t r) {
    if (r == 0) throw InputError("attach_leaves: r must be positive");
    if (x.ambient() != g.order()) throw InputError("attach_leaves: X has the wrong ambient size");
    LeafAttachment out;
    out.leaves_per_vertex = r;
    auto edges = g.edges();
    Vertex next = g.order();
    for (Vertex v : x) {
        std::vector<Vertex> ids;
        for (std::size_t j = 0; j < r; ++j) {
            edges.emplace_back(v, next);
            ids.push_back(next++);
        }
        out.leaves.emplace_back(v, std::move(ids));
    }
    out.graph = build(next, edges);
    out.base = VertexSet(next);
    for (Vertex v = 0; v < g.order(); ++v) out.base.insert(v);
    return out;
}

Graph corollary_tightness(const Graph& g, const VertexSet& x) {
    VertexSet rest = g.vertices() - x;
    if (rest.empty()) return g;
    return attach_leaves(g, rest, 2).graph;
}

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build(n, edges);
}

Graph cycle(std::size_t n) {
    require(n >= 3, "cycle", "n must be at least 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build(n, edges);
}

Graph star(std::size_t p) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= p; ++i) edges.emplace_back(0, i);
    return build(p + 1, edges);
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build(n, edges);
}

Graph edgeless(std::size_t n) { return Graph(n); }

Graph grid2(std::size_t n) {
    require(n >= 1, "grid2", "n must be positive");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= n; ++i) {
        edges.emplace_back(grid2_id(i, 1), grid2_id(i, 2));
        if (i < n) {
            edges.emplace_back(grid2_id(i, 1), grid2_id(i + 1, 1));
            edges.emplace_back(grid2_id(i, 2), grid2_id(i + 1, 2));
        }
    }
    return build(2 * n, edges);
}

Graph grid2_triangles(std::size_t n) {
    require(n >= 2, "grid2_triangles", "n must be at least 2");
    auto edges = grid2(n).edges();
    const Vertex left = 2 * n;
    const Vertex right = 2 * n + 2;
    for (auto [base, anchor] : {Edge{left, grid2_id(1, 2)}, Edge{right, grid2_id(n, 2)}}) {
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base, anchor);
        edges.emplace_back(base + 1, anchor);
    }
    return build(2 * n + 4, edges);
}

Graph spider_complete(std::size_t n) {
    require(n >= 1, "spider_complete", "n must be positive");
    auto edges = complete(n).edges();
    for (Vertex i = 0; i < n; ++i) {
        const Vertex a = n + 3 * i;
        edges.emplace_back(i, a);
        edges.emplace_back(a, a + 1);
        edges.emplace_back(a, a + 2);
    }
    return build(4 * n, edges);
}

Graph double_star_join(std::size_t p, std::size_t q) {
    require(p >= 2 && q >= 2, "double_star_join", "both stars need at least two leaves");
    std::vector<Edge> edges;
    const Vertex c1 = 0;
    const Vertex c2 = p + 1;
    for (Vertex i = 1; i <= p; ++i) edges.emplace_back(c1, i);
    for (Vertex i = 1; i <= q; ++i) edges.emplace_back(c2, c2 + i);
    for (Vertex s : {Vertex{1}, Vertex{2}})
        for (Vertex t : {c2 + 1, c2 + 2}) edges.emplace_back(s, t);
    return build(p + q + 2, edges);
}

Generated fig_examples() {
    return {build(7, one_based({{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}})), numeric_labels(7)};
}

Generated fig_zpartition() {
    return {build(8, one_based({{4, 8}, {8, 7}, {7, 6}, {6, 5}, {8, 2}, {2, 6}, {2, 7}, {1, 2},
                                {1, 3}, {2, 3}})),
            numeric_labels(8)};
}

Generated fig_spread() {
    // v=0 u=1 A=2 B=3 D=4 F=5 E=6 J=7 K=8
    std::vector<Edge> edges{{2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 2},
                            {0, 2}, {7, 3}, {8, 4}, {6, 5}};
    return {build(9, edges), {"v", "u", "A", "B", "D", "F", "E", "J", "K"}};
}

Graph c5_hub(std::size_t k) {
    require(k >= 1, "c5_hub", "k must be positive");
    std::vector<Edge> edges;
    const Vertex x = c5::hub(k);
    for (std::size_t i = 0; i < k; ++i) {
        edges.emplace_back(c5::a(i), c5::b(i));
        edges.emplace_back(c5::b(i), c5::c(i));
        edges.emplace_back(c5::c(i), c5::v(i));
        edges.emplace_back(c5::v(i), c5::u(i));
        edges.emplace_back(c5::u(i), c5::a(i));
        edges.emplace_back(x, c5::v(i));
        edges.emplace_back(x, c5::u(i));
    }
    return build(5 * k + 1, edges);
}

Graph apex_over(const Graph& g, const VertexSet& t) {
    if (t.ambient() != g.order()) throw InputError("apex_over: T has the wrong ambient size");
    auto edges = g.edges();
    for (Vertex v : t) edges.emplace_back(v, g.order());
    return build(g.order() + 1, edges);
}

std::vector<std::string> family_names() {
    return {"path", "cycle", "star", "complete", "empty", "grid2", "grid2_triangles",
            "spider_complete", "double_star_join", "fig_examples", "fig_zpartition",
            "fig_spread", "c5_hub"};
}

Generated gen_family(std::string_view name, const std::vector<long long>& params) {
    auto arity = [&](std::size_t want) {
        if (params.size() != want) {
            throw InputError(std::string(name) + ": expected " + std::to_string(want) +
                             " parameter(s), got " + std::to_string(params.size()));
        }
        for (long long p : params) {
            if (p < 0) throw InputError(std::string(name) + ": parameters must be non-negative");
        }
    };
    auto p = [&](std::size_t i) { return static_cast<std::size_t>(params[i]); };

    if (name == "path") { arity(1); return {path(p(0)), {}}; }
    if (name == "cycle") { arity(1); return {cycle(p(0)), {}}; }
    if (name == "star") { arity(1); return {star(p(0)), {}}; }
    if (name == "complete") { arity(1); return {complete(p(0)), {}}; }
    if (name == "empty") { arity(1); return {edgeless(p(0)), {}}; }
    if (name == "grid2") { arity(1); return {grid2(p(0)), {}}; }
    if (name == "grid2_triangles") { arity(1); return {grid2_triangles(p(0)), {}}; }
    if (name == "spider_complete") { arity(1); return {spider_complete(p(0)), {}}; }
    if (name == "double_star_join") { arity(2); return {double_star_join(p(0), p(1)), {}}; }
    if (name == "fig_examples") { arity(0); return fig_examples(); }
    if (name == "fig_zpartition") { arity(0); return fig_zpartition(); }
    if (name == "fig_spread") { arity(0); return fig_spread(); }
    if (name == "c5_hub") { arity(1); return {c5_hub(p(0)), {}}; }
    throw InputError("unknown family '" + std::string(name) + "'");
}

}  // namespace pdzf
