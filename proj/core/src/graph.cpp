#include "pdzf/graph.hpp"

#include <algorithm>
#include <numeric>

#include "pdzf/error.hpp"

namespace pdzf {

Graph::Graph(std::size_t n) : adjacency_(n), rows_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "}: vertex out of range [0, " + std::to_string(n) + ")");
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (g.rows_[u].contains(v)) {
            throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        g.rows_[u].insert(v);
        g.rows_[v].insert(u);
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
        ++g.edge_count_;
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    VertexSet s = rows_[v];
    s.insert(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& sub) const {
    VertexSet out(from_parent.size());
    for (Vertex v : sub) out.insert(to_parent[v]);
    return out;
}

VertexSet InducedSubgraph::restrict(const VertexSet& parent) const {
    VertexSet out(to_parent.size());
    for (Vertex v : parent) {
        if (from_parent[v] != absent) out.insert(from_parent[v]);
    }
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    for (Vertex v : s) out |= g.neighbor_set(v);
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        VertexSet comp(n);
        stack.push_back(root);
        seen[root] = true;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.insert(u);
            for (Vertex w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() > 0 && components(g).size() == 1;
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() + 1 == g.order();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph sub;
    sub.from_parent.assign(g.order(), InducedSubgraph::absent);
    for (Vertex v : keep) {
        sub.from_parent[v] = sub.to_parent.size();
        sub.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (Vertex u : keep) {
        for (Vertex w : g.neighbors(u)) {
            if (u < w && keep.contains(w)) edges.emplace_back(sub.from_parent[u], sub.from_parent[w]);
        }
    }
    sub.graph = Graph::from_edges(sub.to_parent.size(), edges);
    return sub;
}

Graph delete_vertex(const Graph& g, Vertex v) {
    if (v >= g.order()) {
        throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    VertexSet keep = g.vertices();
    keep.erase(v);
    return induced_subgraph(g, keep).graph;
}

std::size_t max_degree(const Graph& g) {
    if (g.empty()) throw InputError("maximum degree of the empty graph is undefined");
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) out.insert(v);
    }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    const std::size_t shift = a.order();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::from_edges(a.order() + b.order(), edges);
}

void require_in_range(const Graph& g, std::span<const Vertex> members, std::string_view what) {
    for (Vertex v : members) {
        if (v >= g.order()) {
            throw InputError(std::string(what) + ": vertex " + std::to_string(v) +
                             " out of range [0, " + std::to_string(g.order()) + ")");
        }
    }
}

VertexSet make_set(const Graph& g, std::span<const Vertex> members, std::string_view what) {
    require_in_range(g, members, what);
    return VertexSet::of(g.order(), members);
}

}  // namespace pdzf
