#pragma once

#include <cstddef>
#include <vector>

#include "pdzf/vertex_set.hpp"

namespace pdzf {

/// Exact minimum hitting set over a growing pool of covering constraints.
///
/// Solves: min |P| subject to required ⊆ P and P ∩ C ≠ ∅ for every pooled C.
/// Depth-first branch-and-bound: branch on the uncovered constraint with the
/// fewest remaining candidates, try its members in `rank` order, bound with
/// a greedy packing of pairwise-disjoint uncovered constraints. A greedy
/// cover seeds the incumbent.
class HittingSetMaster {
public:
    /// `rank[v]` orders branching candidates, lower first.
    HittingSetMaster(std::size_t n, VertexSet required, std::vector<std::size_t> rank);

    void add(VertexSet constraint);
    std::size_t constraint_count() const noexcept { return constraints_.size(); }

    /// Optimum for the current pool. `lower_bound` is a value the optimum is
    /// known to reach (e.g. the previous round's optimum); the search stops
    /// as soon as an incumbent meets it.
    VertexSet solve(std::size_t lower_bound = 0);

    /// Nodes explored across all solve() calls.
    std::size_t nodes() const noexcept { return nodes_; }

private:
    VertexSet greedy() const;
    void search(VertexSet& chosen, VertexSet& excluded);
    std::size_t packing_bound(const std::vector<std::size_t>& open, const VertexSet& excluded) const;

    std::size_t n_;
    VertexSet required_;
    std::vector<std::size_t> rank_;
    std::vector<VertexSet> constraints_;

    VertexSet best_;
    std::size_t best_size_ = 0;
    std::size_t target_ = 0;
    bool done_ = false;
    std::size_t nodes_ = 0;
};

}  // namespace pdzf
