#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pdzf/graph.hpp"

namespace pdzf {

struct Force {
    Vertex forcer;
    Vertex forced;
    friend bool operator==(const Force&, const Force&) = default;
};

enum class Process { ZeroForcing, PowerDomination };

/// Record of one run of the color change rule.
///
/// For power domination the domination step N[S] \ S is kept apart from the
/// forces as round 0; each dominated vertex is attributed to its smallest
/// neighbor in S.
struct PropagationTrace {
    Process process = Process::ZeroForcing;
    /// B for zero forcing, S for power domination.
    VertexSet seed;
    /// B for zero forcing, N[S] for power domination.
    VertexSet initial;
    std::vector<Force> domination;
    /// Forcing rounds, starting at round 1.
    std::vector<std::vector<Force>> rounds;
    VertexSet final_set;

    std::vector<Force> chronological() const;
    std::size_t force_count() const;
};

/// Closure engine with reusable buffers, for hot loops that only need the
/// final set. Not thread-safe; use one per worker.
class Propagator {
public:
    explicit Propagator(const Graph& g);

    /// cl(B).
    VertexSet closure(const VertexSet& b);
    /// cl(N[S]).
    VertexSet observe(const VertexSet& s);
    bool forces_all(const VertexSet& b) { return closure(b).is_full(); }
    bool observes_all(const VertexSet& s) { return observe(s).is_full(); }

private:
    VertexSet run();

    const Graph& g_;
    std::vector<std::size_t> white_count_;
    std::vector<char> blue_;
    std::vector<Vertex> queue_;
};

/// Default trace: each round applies every force legal at the start of the
/// round in increasing forcer id, skipping forces whose target turned blue
/// earlier in the same round.
PropagationTrace zf_closure(const Graph& g, const VertexSet& b);
PropagationTrace pd_observe(const Graph& g, const VertexSet& s);

/// Set-only versions of the two processes.
VertexSet closure(const Graph& g, const VertexSet& b);
VertexSet power_observed(const Graph& g, const VertexSet& s);

bool is_zero_forcing_set(const Graph& g, const VertexSet& b);
bool is_power_dominating_set(const Graph& g, const VertexSet& s);

struct ForcingChainDecomposition {
    /// One chain per initial vertex, ordered by head id.
    std::vector<std::vector<Vertex>> chains;
    VertexSet terminals;
};

/// Replays the forces chronologically and throws InputError ("inconsistent
/// trace") on the first illegal one.
ForcingChainDecomposition forcing_chains(const Graph& g, const VertexSet& initial,
                                         std::span<const Force> forces);
ForcingChainDecomposition forcing_chains(const Graph& g, const PropagationTrace& trace);

/// Every distinct terminal set over all chronological lists of forces from
/// the zero forcing set B, in shortlex order.
///
/// Exhaustive backtracking over force choices, memoized on the pair
/// (blue set, set of vertices that already forced). Throws InputError when
/// B is not a zero forcing set and CapExceeded once more than `cap`
/// distinct sets have been found.
std::vector<VertexSet> enumerate_terminal_sets(const Graph& g, const VertexSet& b,
                                               std::size_t cap = 1'000'000);

/// True when some chronological list of forces from B has every vertex of
/// `wanted` among its terminals. Stops at the first witness.
bool has_terminal_superset(const Graph& g, const VertexSet& b, const VertexSet& wanted,
                           std::size_t cap = 1'000'000);

}  // namespace pdzf
