#include "pdzf/propagation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "pdzf/error.hpp"

namespace pdzf {

std::vector<Force> PropagationTrace::chronological() const {
    std::vector<Force> out;
    for (const auto& round : rounds) out.insert(out.end(), round.begin(), round.end());
    return out;
}

std::size_t PropagationTrace::force_count() const {
    std::size_t total = 0;
    for (const auto& round : rounds) total += round.size();
    return total;
}

Propagator::Propagator(const Graph& g)
    : g_(g), white_count_(g.order()), blue_(g.order()) {
    queue_.reserve(g.order());
}

VertexSet Propagator::closure(const VertexSet& b) {
    std::fill(blue_.begin(), blue_.end(), 0);
    for (Vertex v : b) blue_[v] = 1;
    return run();
}

VertexSet Propagator::observe(const VertexSet& s) {
    std::fill(blue_.begin(), blue_.end(), 0);
    for (Vertex v : s) {
        blue_[v] = 1;
        for (Vertex w : g_.neighbors(v)) blue_[w] = 1;
    }
    return run();
}

VertexSet Propagator::run() {
    const std::size_t n = g_.order();
    queue_.clear();
    for (Vertex v = 0; v < n; ++v) {
        std::size_t white = 0;
        for (Vertex w : g_.neighbors(v)) white += blue_[w] ? 0 : 1;
        white_count_[v] = white;
        if (blue_[v] && white == 1) queue_.push_back(v);
    }
    while (!queue_.empty()) {
        Vertex u = queue_.back();
        queue_.pop_back();
        if (white_count_[u] != 1) continue;
        Vertex target = n;
        for (Vertex w : g_.neighbors(u)) {
            if (!blue_[w]) {
                target = w;
                break;
            }
        }
        blue_[target] = 1;
        if (white_count_[target] == 1) queue_.push_back(target);
        for (Vertex y : g_.neighbors(target)) {
            if (--white_count_[y] == 1 && blue_[y]) queue_.push_back(y);
        }
    }
    VertexSet out(n);
    for (Vertex v = 0; v < n; ++v) {
        if (blue_[v]) out.insert(v);
    }
    return out;
}

namespace {

// Runs the round-based color change rule from `initial` and fills the trace.
void run_rounds(const Graph& g, PropagationTrace& trace) {
    const std::size_t n = g.order();
    std::vector<char> blue(n, 0);
    std::vector<std::size_t> white(n, 0);
    for (Vertex v : trace.initial) blue[v] = 1;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) white[v] += blue[w] ? 0 : 1;
    }
    std::vector<Vertex> candidates;
    while (true) {
        candidates.clear();
        for (Vertex v = 0; v < n; ++v) {
            if (blue[v] && white[v] == 1) candidates.push_back(v);
        }
        std::vector<Force> round;
        for (Vertex u : candidates) {
            if (white[u] != 1) continue;  // target already forced this round
            auto it = std::find_if(g.neighbors(u).begin(), g.neighbors(u).end(),
                                   [&](Vertex w) { return !blue[w]; });
            Vertex w = *it;
            blue[w] = 1;
            for (Vertex y : g.neighbors(w)) --white[y];
            round.push_back({u, w});
        }
        if (round.empty()) break;
        trace.rounds.push_back(std::move(round));
    }
    trace.final_set = VertexSet(n);
    for (Vertex v = 0; v < n; ++v) {
        if (blue[v]) trace.final_set.insert(v);
    }
}

}  // namespace

PropagationTrace zf_closure(const Graph& g, const VertexSet& b) {
    PropagationTrace trace;
    trace.process = Process::ZeroForcing;
    trace.seed = b;
    trace.initial = b;
    run_rounds(g, trace);
    return trace;
}

PropagationTrace pd_observe(const Graph& g, const VertexSet& s) {
    PropagationTrace trace;
    trace.process = Process::PowerDomination;
    trace.seed = s;
    trace.initial = closed_neighborhood(g, s);
    for (Vertex v : trace.initial - s) {
        for (Vertex w : g.neighbors(v)) {
            if (s.contains(w)) {
                trace.domination.push_back({w, v});
                break;
            }
        }
    }
    run_rounds(g, trace);
    return trace;
}

VertexSet closure(const Graph& g, const VertexSet& b) { return Propagator(g).closure(b); }

VertexSet power_observed(const Graph& g, const VertexSet& s) { return Propagator(g).observe(s); }

bool is_zero_forcing_set(const Graph& g, const VertexSet& b) { return closure(g, b).is_full(); }

bool is_power_dominating_set(const Graph& g, const VertexSet& s) {
    return power_observed(g, s).is_full();
}

ForcingChainDecomposition forcing_chains(const Graph& g, const VertexSet& initial,
                                         std::span<const Force> forces) {
    const std::size_t n = g.order();
    if (initial.ambient() != n) throw InputError("inconsistent trace: wrong ambient size");
    std::vector<char> blue(n, 0);
    for (Vertex v : initial) blue[v] = 1;
    std::vector<Vertex> next(n, n);
    for (const Force& f : forces) {
        if (f.forcer >= n || f.forced >= n || !g.adjacent(f.forcer, f.forced)) {
            throw InputError("inconsistent trace: " + std::to_string(f.forcer) + "->" +
                             std::to_string(f.forced) + " is not an edge");
        }
        if (!blue[f.forcer] || blue[f.forced]) {
            throw InputError("inconsistent trace: " + std::to_string(f.forcer) + "->" +
                             std::to_string(f.forced) + " needs a blue forcer and a white target");
        }
        for (Vertex w : g.neighbors(f.forcer)) {
            if (w != f.forced && !blue[w]) {
                throw InputError("inconsistent trace: " + std::to_string(f.forcer) +
                                 " has a second white neighbor " + std::to_string(w));
            }
        }
        blue[f.forced] = 1;
        next[f.forcer] = f.forced;
    }
    ForcingChainDecomposition out;
    out.terminals = VertexSet(n);
    for (Vertex head : initial) {
        std::vector<Vertex> chain{head};
        while (next[chain.back()] != n) chain.push_back(next[chain.back()]);
        out.terminals.insert(chain.back());
        out.chains.push_back(std::move(chain));
    }
    return out;
}

ForcingChainDecomposition forcing_chains(const Graph& g, const PropagationTrace& trace) {
    auto forces = trace.chronological();
    return forcing_chains(g, trace.initial, forces);
}

namespace {

struct StateHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto w : key) h = (h ^ w) * 1099511628211ull;
        return h;
    }
};

// Depth-first search over chronological lists. `on_end` receives the set of
// vertices that never forced at each terminal state and returns true to stop.
class TerminalSearch {
public:
    TerminalSearch(const Graph& g, std::function<bool(const VertexSet&)> on_end)
        : g_(g), on_end_(std::move(on_end)) {}

    void run(const VertexSet& b) {
        VertexSet blue = b;
        VertexSet forcers(g_.order());
        visit(blue, forcers);
    }

private:
    bool visit(VertexSet& blue, VertexSet& forcers) {
        std::vector<std::uint64_t> key;
        boost::to_block_range(blue.bits(), std::back_inserter(key));
        boost::to_block_range(forcers.bits(), std::back_inserter(key));
        if (!seen_.insert(std::move(key)).second) return false;

        bool any = false;
        for (Vertex u : blue) {
            if (forcers.contains(u)) continue;
            Vertex target = g_.order();
            std::size_t white = 0;
            for (Vertex w : g_.neighbors(u)) {
                if (!blue.contains(w)) {
                    target = w;
                    if (++white > 1) break;
                }
            }
            if (white != 1) continue;
            any = true;
            blue.insert(target);
            forcers.insert(u);
            bool stop = visit(blue, forcers);
            blue.erase(target);
            forcers.erase(u);
            if (stop) return true;
        }
        if (!any) return on_end_(g_.vertices() - forcers);
        return false;
    }

    const Graph& g_;
    std::function<bool(const VertexSet&)> on_end_;
    std::unordered_set<std::vector<std::uint64_t>, StateHash> seen_;
};

void require_zfs(const Graph& g, const VertexSet& b, const char* who) {
    if (b.ambient() != g.order()) throw InputError(std::string(who) + ": wrong ambient size");
    if (!is_zero_forcing_set(g, b)) {
        throw InputError(std::string(who) + ": " + b.to_string() + " is not a zero forcing set");
    }
}

}  // namespace

std::vector<VertexSet> enumerate_terminal_sets(const Graph& g, const VertexSet& b, std::size_t cap) {
    require_zfs(g, b, "enumerate_terminal_sets");
    std::set<VertexSet, ShortlexLess> found;
    TerminalSearch search(g, [&](const VertexSet& terminals) {
        found.insert(terminals);
        if (found.size() > cap) {
            throw CapExceeded("enumerate_terminal_sets: too many distinct terminal sets", cap,
                              found.size());
        }
        return false;
    });
    search.run(b);
    return {found.begin(), found.end()};
}

bool has_terminal_superset(const Graph& g, const VertexSet& b, const VertexSet& wanted,
                           std::size_t cap) {
    require_zfs(g, b, "has_terminal_superset");
    std::size_t ends = 0;
    bool hit = false;
    TerminalSearch search(g, [&](const VertexSet& terminals) {
        if (wanted.is_subset_of(terminals)) {
            hit = true;
            return true;
        }
        if (++ends > cap) {
            throw CapExceeded("has_terminal_superset: search budget exhausted", cap, ends);
        }
        return false;
    });
    search.run(b);
    return hit;
}

}  // namespace pdzf
