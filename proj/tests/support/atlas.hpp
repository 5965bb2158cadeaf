#pragma once

// All graphs of small order up to isomorphism, by brute-force canonical
// forms (the lexicographically smallest adjacency word over all relabelings).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "pdzf/graph.hpp"

namespace pdzf::testing {

namespace atlas_detail {

inline std::vector<std::pair<Vertex, Vertex>> pairs(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

inline std::uint32_t canonical(std::uint32_t word, std::size_t n,
                               const std::vector<std::vector<Vertex>>& perms,
                               const std::vector<std::pair<Vertex, Vertex>>& ps,
                               const std::vector<std::vector<int>>& index) {
    std::uint32_t best = UINT32_MAX;
    for (const auto& p : perms) {
        std::uint32_t w = 0;
        for (std::size_t e = 0; e < ps.size(); ++e) {
            if (!(word >> e & 1)) continue;
            w |= std::uint32_t{1} << index[p[ps[e].first]][p[ps[e].second]];
        }
        best = std::min(best, w);
    }
    (void)n;
    return best;
}

}  // namespace atlas_detail

/// Every graph of order n (n <= 7 is practical) up to isomorphism.
inline std::vector<Graph> atlas(std::size_t n) {
    using namespace atlas_detail;
    const auto ps = pairs(n);
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (std::size_t e = 0; e < ps.size(); ++e) {
        index[ps[e].first][ps[e].second] = static_cast<int>(e);
        index[ps[e].second][ps[e].first] = static_cast<int>(e);
    }
    std::vector<std::vector<Vertex>> perms;
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::set<std::uint32_t> seen;
    for (std::uint32_t word = 0; word < (std::uint32_t{1} << ps.size()); ++word) {
        seen.insert(canonical(word, n, perms, ps, index));
    }
    std::vector<Graph> out;
    for (std::uint32_t word : seen) {
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < ps.size(); ++e)
            if (word >> e & 1) edges.push_back(ps[e]);
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

inline std::vector<Graph> connected_atlas(std::size_t n) {
    std::vector<Graph> out;
    for (Graph& g : atlas(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace pdzf::testing
