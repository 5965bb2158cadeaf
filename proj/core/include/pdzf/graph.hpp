#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdzf/vertex_set.hpp"

namespace pdzf {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex range [0, n).
///
/// Immutable once built. Keeps both sorted neighbor lists and bitset rows so
/// that set-valued queries (closed neighborhoods, fort checks) stay cheap.
class Graph {
public:
    /// The empty graph (n = 0).
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Throws InputError on an out-of-range endpoint, a self-loop, or a
    /// repeated edge (in either orientation).
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return adjacency_.empty(); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
    const VertexSet& neighbor_set(Vertex v) const { return rows_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }

    VertexSet closed_neighborhood(Vertex v) const;
    VertexSet vertices() const { return VertexSet::full(order()); }
    VertexSet empty_set() const { return VertexSet(order()); }

    /// Canonical edge list: u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
};

/// A graph induced on a vertex subset together with the id correspondence.
struct InducedSubgraph {
    static constexpr Vertex absent = static_cast<Vertex>(-1);

    Graph graph;
    /// new id -> parent id, increasing.
    std::vector<Vertex> to_parent;
    /// parent id -> new id, or `absent`.
    std::vector<Vertex> from_parent;

    /// Maps a subset of the subgraph back into the parent's id space.
    VertexSet lift(const VertexSet& sub) const;
    /// Maps the part of a parent set that lies inside the subgraph.
    VertexSet restrict(const VertexSet& parent) const;
};

/// N[S] = union of N[v] over v in S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// Connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
/// Connected and acyclic; the empty graph is not a tree.
bool is_tree(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// G - v with ids above v shifted down by one. Throws InputError when v is
/// out of range.
Graph delete_vertex(const Graph& g, Vertex v);

/// Throws InputError on the empty graph; 0 for edgeless graphs.
std::size_t max_degree(const Graph& g);

/// Vertices of degree zero.
VertexSet isolated_vertices(const Graph& g);

/// Disjoint union: vertices of `b` are renumbered to follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Throws InputError naming the first member outside [0, n).
void require_in_range(const Graph& g, std::span<const Vertex> members, std::string_view what);
VertexSet make_set(const Graph& g, std::span<const Vertex> members, std::string_view what);

// Edge-list text format: '#' comment lines are ignored, first data line is
// "n m", followed by exactly m lines "u v".

/// Throws ParseError naming the offending line.
Graph from_edge_list(std::istream& in);
Graph from_edge_list(std::string_view text);
/// Canonical serialization with edges sorted lexicographically.
std::string to_edge_list(const Graph& g);

/// FNV-1a over the canonical serialization, as 16 lowercase hex digits.
std::string digest(const Graph& g);

}  // namespace pdzf
