#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdzf/graph.hpp"
#include "pdzf/mode.hpp"

namespace pdzf {

/// A nonempty vertex set F such that no vertex outside F has exactly one
/// neighbor in F. Only constructible through the checked factories below.
class Fort {
public:
    const VertexSet& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    /// Throws InputError if `members` is not a fort of `g`.
    static Fort checked(const Graph& g, VertexSet members);

    friend bool operator==(const Fort& a, const Fort& b) { return a.members_ == b.members_; }

private:
    explicit Fort(VertexSet members) : members_(std::move(members)) {}
    VertexSet members_;
};

bool is_fort(const Graph& g, const VertexSet& f);

/// Evaluates the linear constraints of the violated-fort program literally:
/// for every ordered adjacent pair (v, w),
///   f_w + sum_{u in N(w) \ {v}} f_u >= f_v,
/// plus nonemptiness. Equivalent to is_fort; kept separate as a second route.
bool satisfies_fort_constraints(const Graph& g, const VertexSet& f);

/// V \ cl(N[S]) for power domination, V \ cl(S) for zero forcing. The result
/// is a fort that S violates. Throws InputError when S is already feasible
/// or mode is Domination.
Fort fort_from_failed_set(const Graph& g, const VertexSet& s, Mode mode);

/// Minimum-cardinality fort disjoint from `forbidden`, ties broken by the
/// lexicographically smallest member list. Exact branch-and-bound over
/// vertex inclusion. Throws InputError when no such fort exists.
Fort minimum_violated_fort(const Graph& g, const VertexSet& forbidden,
                           std::size_t* nodes = nullptr);

/// All forts by exhaustive subset check, in shortlex order. Throws
/// GuardExceeded when n > max_n.
std::vector<Fort> enumerate_forts(const Graph& g, std::size_t max_n = 16);

/// The covering set a fort contributes: N[F] for power domination, F itself
/// for zero forcing.
VertexSet cover_set(const Graph& g, const Fort& f, Mode mode);

}  // namespace pdzf
