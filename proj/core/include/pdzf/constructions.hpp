#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pdzf/graph.hpp"

namespace pdzf {

/// Result of attaching r pendant leaves to every vertex of X.
struct LeafAttachment {
    Graph graph;
    /// Vertex set of the base graph inside `graph` (ids 0..n-1).
    VertexSet base;
    std::size_t leaves_per_vertex = 0;
    /// For each member x of X in increasing order: (x, its new leaf ids).
    std::vector<std::pair<Vertex, std::vector<Vertex>>> leaves;
};

/// New leaf ids are n, n+1, ... in increasing order of x, then leaf index.
/// Throws InputError when X is out of range or r == 0.
LeafAttachment attach_leaves(const Graph& g, const VertexSet& x, std::size_t r);

/// Two leaves on every vertex outside X: the extremal family for the
/// floor((n + 2|X|) / 3) bound.
Graph corollary_tightness(const Graph& g, const VertexSet& x);

/// A generated graph plus display labels for its vertices when the family
/// comes from a drawing with its own naming (empty otherwise).
struct Generated {
    Graph graph;
    std::vector<std::string> labels;
};

// Labeling conventions (all ids 0-based):
//   path(n)               0-1-...-(n-1)
//   cycle(n)              path plus (n-1)-0, n >= 3
//   star(p)               center 0, leaves 1..p
//   complete(n)           K_n
//   empty(n)              n isolated vertices
//   grid2(n)              P_n x P_2; (i,j), 1 <= i <= n, j in {1,2}, has id 2(i-1)+(j-1)
//   grid2_triangles(n)    grid2(n) plus K_2 {2n, 2n+1} joined to (1,2) and
//                         K_2 {2n+2, 2n+3} joined to (n,2)
//   spider_complete(n)    K_n on v_i = i; a_i = n+3i, b_i = n+3i+1, c_i = n+3i+2
//                         with edges v_i a_i, a_i b_i, a_i c_i
//   double_star_join(p,q) c1 = 0, leaves 1..p (u1 = 1, v1 = 2); c2 = p+1,
//                         leaves p+2..p+q+1 (u2 = p+2, v2 = p+3); all four
//                         edges between {u1,v1} and {u2,v2}
//   fig_examples          7 vertices, drawing labels 1..7 at ids 0..6
//   fig_zpartition        8 vertices, drawing labels 1..8 at ids 0..7
//   fig_spread            9 vertices: v=0, u=1, A=2, B=3, D=4, F=5, E=6, J=7, K=8;
//                         cycle A-B-D-F-u-A with pendants v@A, J@B, K@D, E@F
//   c5_hub(k)             copy i: a=5i, b=5i+1, c=5i+2, v=5i+3, u=5i+4;
//                         hub x = 5k adjacent to every v_i and u_i

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t p);
Graph complete(std::size_t n);
Graph edgeless(std::size_t n);
Graph grid2(std::size_t n);
Graph grid2_triangles(std::size_t n);
Graph spider_complete(std::size_t n);
Graph double_star_join(std::size_t p, std::size_t q);
Generated fig_examples();
Generated fig_zpartition();
Generated fig_spread();
Graph c5_hub(std::size_t k);

/// G plus a new vertex n adjacent to every vertex of T.
Graph apex_over(const Graph& g, const VertexSet& t);

namespace c5 {
inline Vertex a(std::size_t i) { return 5 * i; }
inline Vertex b(std::size_t i) { return 5 * i + 1; }
inline Vertex c(std::size_t i) { return 5 * i + 2; }
inline Vertex v(std::size_t i) { return 5 * i + 3; }
inline Vertex u(std::size_t i) { return 5 * i + 4; }
inline Vertex hub(std::size_t k) { return 5 * k; }
}  // namespace c5

/// Grid coordinate (i, j), 1-based, to vertex id.
inline Vertex grid2_id(std::size_t i, std::size_t j) { return 2 * (i - 1) + (j - 1); }

namespace fig_spread_ids {
inline constexpr Vertex v = 0;
inline constexpr Vertex u = 1;
}  // namespace fig_spread_ids

/// Families addressable by name from the command line. `apex_over` is not
/// listed since it needs a base graph.
std::vector<std::string> family_names();

/// Throws InputError for an unknown family or invalid parameters.
Generated gen_family(std::string_view name, const std::vector<long long>& params);

}  // namespace pdzf
