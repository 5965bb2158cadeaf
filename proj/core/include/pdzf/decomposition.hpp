#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pdzf/graph.hpp"
#include "pdzf/propagation.hpp"
#include "pdzf/solver.hpp"

namespace pdzf {

// ---------------------------------------------------------------------------
// Trees split at a vertex

/// One branch T_i = T[V_i ∪ {v}] of a tree split at v, with the three
/// power domination values the split formula needs.
struct SplitSubtree {
    InducedSubgraph piece;
    /// Image of the split vertex inside `piece.graph`.
    Vertex root = 0;
    /// gamma_P(T_i; {v}) and a witness in piece ids.
    SolveResult with_root;
    /// gamma_P(T_i).
    SolveResult plain;
    /// gamma_P(T_i - v), witness in piece ids (the root is never in it).
    SolveResult without_root;
};

enum class SubtreeClass { I, IPrime, J };

const char* to_string(SubtreeClass c) noexcept;

struct TreeSplit {
    Vertex v = 0;
    /// Ordered by smallest member of V_i.
    std::vector<SplitSubtree> subtrees;
    std::vector<SubtreeClass> classes;
    std::vector<std::size_t> I, I_prime, J;
    /// -k + sum of gamma_P(T_i; {v}).
    long long g = 0;
};

/// Vertex minimizing the largest component of T - v, ties by id.
Vertex centroid(const Graph& tree);

/// Splits at v and runs the 3k subtree solves on `jobs` threads. Throws
/// InputError when T is not a tree or deg v < 2.
TreeSplit tree_split(const Graph& tree, Vertex v, std::size_t jobs = 1, const SolveOptions& opts = {});

/// Evaluates the split formula and assembles a minimum power dominating set
/// of the whole tree from the subtree witnesses.
SolveResult evaluate_split(const Graph& tree, const TreeSplit& split);

/// gamma_P(T) through a split at v (a centroid when omitted). Trees with at
/// most two vertices, or a split vertex of degree below two, are solved
/// directly. Throws InputError when T is not a tree.
SolveResult tree_pd_parallel(const Graph& tree, std::optional<Vertex> v = std::nullopt,
                             std::size_t jobs = 1, const SolveOptions& opts = {});

// ---------------------------------------------------------------------------
// Leaves

struct LeafClassification {
    /// true when gamma_P(G; {u}) = gamma_P(G - u) + 1 (u need neither
    /// dominate nor force); false when the two are equal.
    bool plus_one = false;
    std::size_t restricted = 0;  ///< gamma_P(G; {u})
    std::size_t without = 0;     ///< gamma_P(G - u)
    /// Minimum power dominating set of G containing u. In the +1 case it is
    /// S ∪ {u} for a minimum power dominating set S of G - u.
    VertexSet witness;
};

/// Throws InputError when u is not a leaf.
LeafClassification leaf_classify(const Graph& g, Vertex u, const SolveOptions& opts = {});

struct MandatoryVertices {
    /// Vertices with three or more leaf neighbors.
    VertexSet must;
    /// Vertices with exactly two leaf neighbors, with those leaves.
    std::vector<std::pair<Vertex, VertexSet>> either_or;
};

MandatoryVertices mandatory_vertices(const Graph& g);

// ---------------------------------------------------------------------------
// Compositions

struct BoundaryComposition {
    /// gamma_P(G1; W1) + gamma_P(G2; W2).
    std::size_t bound = 0;
    /// Union of the two subproblem witnesses, in ids of G.
    VertexSet witness;
    SolveResult part1, part2;
};

/// Throws InputError unless V1, V2 partition V into nonempty parts,
/// W_i ⊆ V_i, and W1 ∪ W2 dominates (N[V2] ∩ V1) ∪ (N[V1] ∩ V2).
BoundaryComposition compose_boundary_pd(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                                        const VertexSet& w1, const VertexSet& w2,
                                        const SolveOptions& opts = {});

/// A connected graph H glued to the base graph by identifying its vertex
/// `root` with the base vertex `at`.
struct Pendant {
    Graph graph;
    Vertex root = 0;
    Vertex at = 0;
};

struct PendantComposition {
    /// Base vertices keep their ids; the non-root vertices of each pendant
    /// follow in attachment order, increasing id within a pendant.
    Graph composed;
    /// Per pendant, the id map from its own ids into `composed`.
    std::vector<std::vector<Vertex>> embed;
    /// |X| - k + sum of Z(H_i; {u_i}), with witness X ∪ ⋃ (X_i \ {u_i}).
    SolveResult result;
    std::vector<SolveResult> pendant_values;
};

/// Glues H_1..H_k onto G and returns Z(G'; X) by the pendant formula. X must
/// be a minimum zero forcing set of G and the attachment vertices must be
/// terminals of one chronological list of forces for X: the supplied
/// `forces` (if any) or the default trace are tried first, then a bounded
/// search. Throws InputError on a failed precondition (repeated or
/// out-of-range attachment vertex, disconnected pendant, terminal check).
PendantComposition compose_pendant_zf(const Graph& g, const VertexSet& x,
                                      std::span<const Pendant> pendants,
                                      std::optional<std::vector<Force>> forces = std::nullopt,
                                      const SolveOptions& opts = {}, std::size_t cap = 1'000'000);

struct ApexReport {
    /// G plus v* (id n) adjacent to T.
    Graph apex;
    /// T lies inside the terminal set of some chronological list for X.
    bool terminal_set = false;
    /// X is a zero forcing set of G_T.
    bool x_forces_apex = false;
    /// Some vertex of T is a terminal of some chronological list for X.
    bool some_terminal_in_t = false;
    std::size_t z_g = 0;
    std::size_t z_apex = 0;
};

/// Reports the facts around the apex-over-terminals statement for (G, X, T).
/// Throws InputError when X is not a minimum zero forcing set of G or T = V.
ApexReport check_apex_terminal(const Graph& g, const VertexSet& x, const VertexSet& t,
                               const SolveOptions& opts = {}, std::size_t cap = 1'000'000);

}  // namespace pdzf
