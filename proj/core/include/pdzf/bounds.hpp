#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "pdzf/graph.hpp"
#include "pdzf/solver.hpp"

namespace pdzf {

using Rational = boost::rational<long long>;

/// "7", or "7/2" when the value is not an integer.
std::string to_string(const Rational& r);

/// One inequality lhs <= rhs evaluated exactly.
struct BoundReport {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool holds = false;
    bool tight = false;
    /// The objects the bound was evaluated on, as (key, rendered value).
    std::vector<std::pair<std::string, std::string>> context;
};

BoundReport make_report(std::string name, Rational lhs, Rational rhs,
                        std::vector<std::pair<std::string, std::string>> context = {});

// Every bound below checks its hypotheses and throws InputError when one
// fails. Parameter values come from the exact solver.

/// gamma(G) <= n/2; needs n >= 2 and no isolated vertex.
BoundReport bound_ore(const Graph& g, const SolveOptions& opts = {});

/// gamma_P(G) <= floor(n/3); needs G connected with n >= 3.
BoundReport bound_n3(const Graph& g, const SolveOptions& opts = {});

/// gamma_P(G; X) <= floor((n + 2|X|)/3); needs G connected with n >= 3.
BoundReport bound_leaf_corollary(const Graph& g, const VertexSet& x, const SolveOptions& opts = {});

// In the extension bounds G' is the big graph, `v` the vertex set of the
// induced subgraph G = G'[V], and S (or B) a power dominating (zero forcing)
// set of G given in the ids of G'.

/// gamma_P(G'; S) <= |S| + |V' \ V|/2 + t/2, t the isolated vertices of G'[V' \ V].
BoundReport bound_extension_half(const Graph& big, const VertexSet& v, const VertexSet& s,
                                 const SolveOptions& opts = {});

enum class NeighborRule {
    /// N_i = V(H_i) ∩ N_{G'}[V \ N_G[S]].
    Boundary,
    /// N_i = a minimum subset of V(H_i) dominating V(H_i) ∩ (N_{G'}[V] \ N_{G'}[S]).
    MinimumDominating,
};

/// gamma_P(G'; S) <= sum gamma_P(H_i; N_i) + |S| over the components H_i of G'[V' \ V].
BoundReport bound_component_sum_pd(const Graph& big, const VertexSet& v, const VertexSet& s,
                                   NeighborRule rule = NeighborRule::Boundary,
                                   const SolveOptions& opts = {});

/// gamma_P(G'; S) <= |S| + |V' \ V|/3 + |N_{G'}[V \ N_G[S]] ∩ (V' \ V)|; needs
/// V a proper subset and every component of G'[V' \ V] of order >= 3.
BoundReport bound_third_boundary(const Graph& big, const VertexSet& v, const VertexSet& s,
                                 const SolveOptions& opts = {});

/// Two reports: gamma_P(G) <= gamma_P(G; W1 ∪ W2) and
/// gamma_P(G; W1 ∪ W2) <= gamma_P(G1; W1) + gamma_P(G2; W2).
std::vector<BoundReport> bound_partition_pd(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                                            const VertexSet& w1, const VertexSet& w2,
                                            const SolveOptions& opts = {});

/// Z(G'; B) <= sum Z(H_i; N_i) + |B| with N_i = N_{G'}[V] ∩ V(H_i).
BoundReport bound_component_sum_zf(const Graph& big, const VertexSet& v, const VertexSet& b,
                                   const SolveOptions& opts = {});

/// Z(G) <= min(Z(G1) + Z(G2; N2), Z(G1; N1) + Z(G2)).
BoundReport bound_partition_zf(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                               const SolveOptions& opts = {});

struct DegreeSumReport {
    BoundReport report;
    /// Union of N[u] minus one chosen outside neighbor, over u in S.
    VertexSet zero_forcing_set;
};

/// Z(G; X) <= sum of deg u over u in S, for S a power dominating set
/// containing X and G without isolated vertices.
DegreeSumReport bound_degree_sum(const Graph& g, const VertexSet& x, const VertexSet& s,
                                 const SolveOptions& opts = {});

/// ceil(Z(G; X)/Delta) <= gamma_P(G; X); needs Delta >= 1.
BoundReport bound_delta_ratio(const Graph& g, const VertexSet& x, const SolveOptions& opts = {});

/// Z(G; N[X]) <= (Delta + 1) gamma_P(G; X).
BoundReport bound_naive_nbhd(const Graph& g, const VertexSet& x, const SolveOptions& opts = {});

/// The sandwich inequalities relating the restricted and plain numbers,
/// plus gamma_P(G; X) <= gamma(G; X).
std::vector<BoundReport> bound_sandwich(const Graph& g, const VertexSet& x, const SolveOptions& opts = {});

/// Y ⊆ X: gamma_P and Z grow with the restriction, by at most |X \ Y|.
std::vector<BoundReport> bound_monotone(const Graph& g, const VertexSet& y, const VertexSet& x,
                                        const SolveOptions& opts = {});

struct AuditInput {
    Graph graph;
    VertexSet x;
    /// Vertex set of the inner graph for the extension bounds and V1 for the
    /// partition bounds. Defaults to the lower half of the ids.
    std::optional<VertexSet> part;
    /// Power dominating set of G[part] for the extension bounds; defaults to
    /// a minimum one.
    std::optional<VertexSet> s;
};

struct AuditSkip {
    std::string name;
    std::string reason;
};

struct AuditResult {
    std::vector<BoundReport> reports;
    std::vector<AuditSkip> skipped;
    bool all_hold() const;
};

/// Runs every bound whose hypotheses hold for the input, on `jobs` threads.
/// Report order is fixed, independent of `jobs`.
AuditResult audit(const AuditInput& input, std::size_t jobs = 1, const SolveOptions& opts = {});

}  // namespace pdzf
