#include "pdzf/hitting_set.hpp"

#include <algorithm>
#include <limits>

namespace pdzf {

HittingSetMaster::HittingSetMaster(std::size_t n, VertexSet required, std::vector<std::size_t> rank)
    : n_(n), required_(std::move(required)), rank_(std::move(rank)) {}

void HittingSetMaster::add(VertexSet constraint) { constraints_.push_back(std::move(constraint)); }

VertexSet HittingSetMaster::greedy() const {
    VertexSet chosen = required_;
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        if (!constraints_[i].intersects(chosen)) open.push_back(i);
    }
    std::vector<std::size_t> hits(n_);
    while (!open.empty()) {
        std::fill(hits.begin(), hits.end(), 0);
        for (auto i : open)
            for (Vertex v : constraints_[i]) ++hits[v];
        Vertex pick = n_;
        for (Vertex v = 0; v < n_; ++v) {
            if (hits[v] == 0) continue;
            if (pick == n_ || hits[v] > hits[pick] || (hits[v] == hits[pick] && rank_[v] < rank_[pick])) {
                pick = v;
            }
        }
        chosen.insert(pick);
        std::erase_if(open, [&](std::size_t i) { return constraints_[i].contains(pick); });
    }
    return chosen;
}

std::size_t HittingSetMaster::packing_bound(const std::vector<std::size_t>& open,
                                            const VertexSet& excluded) const {
    std::vector<std::pair<std::size_t, std::size_t>> by_size;
    by_size.reserve(open.size());
    for (auto i : open) by_size.emplace_back((constraints_[i] - excluded).size(), i);
    std::sort(by_size.begin(), by_size.end());
    VertexSet used(n_);
    std::size_t packed = 0;
    for (auto [size, i] : by_size) {
        VertexSet avail = constraints_[i] - excluded;
        if (!avail.intersects(used)) {
            used |= avail;
            ++packed;
        }
    }
    return packed;
}

void HittingSetMaster::search(VertexSet& chosen, VertexSet& excluded) {
    ++nodes_;
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        if (!constraints_[i].intersects(chosen)) open.push_back(i);
    }
    if (open.empty()) {
        if (chosen.size() < best_size_) {
            best_ = chosen;
            best_size_ = chosen.size();
            if (best_size_ <= target_) done_ = true;
        }
        return;
    }
    if (chosen.size() + 1 >= best_size_) return;

    std::size_t branch = open.front();
    std::size_t branch_size = std::numeric_limits<std::size_t>::max();
    for (auto i : open) {
        std::size_t avail = (constraints_[i] - excluded).size();
        if (avail == 0) return;
        if (avail < branch_size) {
            branch_size = avail;
            branch = i;
        }
    }
    if (chosen.size() + packing_bound(open, excluded) >= best_size_) return;

    std::vector<Vertex> candidates = (constraints_[branch] - excluded).to_vector();
    std::sort(candidates.begin(), candidates.end(),
              [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
    std::size_t tried = 0;
    for (Vertex v : candidates) {
        chosen.insert(v);
        search(chosen, excluded);
        chosen.erase(v);
        excluded.insert(v);
        ++tried;
        if (done_) break;
    }
    for (std::size_t k = 0; k < tried; ++k) excluded.erase(candidates[k]);
}

VertexSet HittingSetMaster::solve(std::size_t lower_bound) {
    best_ = greedy();
    best_size_ = best_.size();
    target_ = std::max(lower_bound, required_.size());
    done_ = best_size_ <= target_;
    if (done_) return best_;
    // Search for anything strictly better than the greedy cover.
    VertexSet chosen = required_;
    VertexSet excluded(n_);
    search(chosen, excluded);
    return best_;
}

}  // namespace pdzf
