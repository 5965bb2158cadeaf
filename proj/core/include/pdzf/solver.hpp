#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "pdzf/forts.hpp"
#include "pdzf/graph.hpp"
#include "pdzf/mode.hpp"

namespace pdzf {

/// Size limits for the exponential routines. Configuration, not constants.
struct Guards {
    /// brute_force_min (subset enumeration with early exit).
    std::size_t oracle_n = 20;
    /// Routines that enumerate whole families (all minimum sets, all X of a size).
    std::size_t exhaustive_n = 16;
    /// Constraint generation on caller-supplied graphs.
    std::size_t cg_n = 64;

    /// Defaults, with PDZF_GUARD_N (if set) overriding both enumeration guards.
    static Guards from_env();
};

enum class Method { Oracle, ConstraintGeneration, Reduction, Decomposition };

const char* to_string(Method method) noexcept;

/// Minimum-size feasible set containing X for one of the three problems.
struct SolveResult {
    Mode mode = Mode::PowerDomination;
    std::size_t value = 0;
    VertexSet witness;
    Method method = Method::ConstraintGeneration;
    /// Fort constraints generated.
    std::size_t cuts_added = 0;
    /// Branch-and-bound nodes (master problem) or subsets tested (oracle).
    std::size_t nodes = 0;
};

enum class Separator {
    /// V \ cl(N[S]) (or V \ cl(S)): one closure per round.
    FailedSet,
    /// The failed set of a maximal infeasible superset T of S, grown greedily
    /// in branching order. Still disjoint from cl(N[S]), but far smaller;
    /// costs O(n) closures per round.
    MaximalFailedSet,
    /// Exact minimum violated fort: smaller cuts, exponential separation.
    MinimumFort,
};

struct SolveOptions {
    Separator separator = Separator::MaximalFailedSet;
    Guards guards;
    /// Called with the master solution and the fort that cuts it off, once
    /// per generated constraint.
    std::function<void(const VertexSet& incumbent, const Fort& cut)> on_cut;
};

bool is_feasible(const Graph& g, const VertexSet& s, Mode mode);

/// Enumerates supersets of X by increasing cardinality and returns the first
/// feasible one. Throws GuardExceeded when n > guards.oracle_n.
SolveResult brute_force_min(const Graph& g, const VertexSet& x, Mode mode, const Guards& guards = {});

/// Every minimum-cardinality feasible set containing X, in shortlex order.
/// Throws GuardExceeded when n > guards.exhaustive_n.
std::vector<VertexSet> enumerate_minimum_sets(const Graph& g, const VertexSet& x, Mode mode,
                                              const Guards& guards = {});

/// gamma_P(G; X) by fort constraint generation: the master keeps X and hits
/// N[F] for every pooled fort F; each infeasible master optimum yields a new
/// violated fort until the optimum observes the whole graph.
SolveResult restricted_pd_number(const Graph& g, const VertexSet& x, const SolveOptions& opts = {});
/// Z(G; X); the pooled covering sets are the forts themselves.
SolveResult restricted_zf_number(const Graph& g, const VertexSet& x, const SolveOptions& opts = {});
/// Minimum dominating set containing X (all N[v] constraints known upfront).
SolveResult restricted_dom_number(const Graph& g, const VertexSet& x, const SolveOptions& opts = {});

SolveResult solve(const Graph& g, const VertexSet& x, Mode mode, const SolveOptions& opts = {});

/// Sums per-component values: large components are solved exactly, and a
/// component with one or two vertices contributes max(|X ∩ C|, 1).
SolveResult pd_number_disconnected(const Graph& g, const VertexSet& x, const SolveOptions& opts = {});

/// gamma_P(G; X) as the unrestricted number of G with two leaves on every
/// vertex of X. The witness comes from the three-leaf attachment, whose
/// minimum power dominating sets are exactly those of G subject to X.
SolveResult reduction_pd_number(const Graph& g, const VertexSet& x, const SolveOptions& opts = {});

/// z_v(G) = Z(G) - Z(G - v), always in {-1, 0, 1}. Throws InputError when n < 2.
int spread(const Graph& g, Vertex v, const SolveOptions& opts = {});

/// Z(G; {v}). Spread +1 gives Z(G), spread -1 gives Z(G) + 1; spread 0 is
/// settled by a direct restricted solve.
SolveResult z_restricted_single(const Graph& g, Vertex v, const SolveOptions& opts = {});

/// max over |X| = k of the restricted number. Throws GuardExceeded when
/// n > guards.exhaustive_n.
std::size_t k_restricted_number(const Graph& g, std::size_t k, Mode mode, const SolveOptions& opts = {});

namespace detail {
/// Constraint generation without the size guard, for internal callers that
/// have already vetted the input.
SolveResult constraint_generation(const Graph& g, const VertexSet& x, Mode mode, const SolveOptions& opts);
}  // namespace detail

}  // namespace pdzf
