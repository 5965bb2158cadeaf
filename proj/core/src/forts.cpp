#include "pdzf/forts.hpp"

#include <algorithm>

#include "pdzf/error.hpp"
#include "pdzf/propagation.hpp"

namespace pdzf {

const char* to_string(Mode mode) noexcept {
    switch (mode) {
        case Mode::PowerDomination: return "pd";
        case Mode::ZeroForcing: return "zf";
        case Mode::Domination: return "dom";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept {
    if (text == "pd") return Mode::PowerDomination;
    if (text == "zf") return Mode::ZeroForcing;
    if (text == "dom") return Mode::Domination;
    return std::nullopt;
}

Fort Fort::checked(const Graph& g, VertexSet members) {
    if (!is_fort(g, members)) throw InputError(members.to_string() + " is not a fort");
    return Fort(std::move(members));
}

bool is_fort(const Graph& g, const VertexSet& f) {
    if (f.ambient() != g.order() || f.empty()) return false;
    for (Vertex w = 0; w < g.order(); ++w) {
        if (f.contains(w)) continue;
        std::size_t inside = 0;
        for (Vertex u : g.neighbors(w)) inside += f.contains(u) ? 1 : 0;
        if (inside == 1) return false;
    }
    return true;
}

bool satisfies_fort_constraints(const Graph& g, const VertexSet& f) {
    if (f.ambient() != g.order() || f.empty()) return false;
    auto val = [&](Vertex v) { return f.contains(v) ? 1 : 0; };
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex w : g.neighbors(v)) {
            int lhs = val(w);
            for (Vertex u : g.neighbors(w)) {
                if (u != v) lhs += val(u);
            }
            if (lhs < val(v)) return false;
        }
    }
    return true;
}

Fort fort_from_failed_set(const Graph& g, const VertexSet& s, Mode mode) {
    if (mode == Mode::Domination) throw InputError("fort_from_failed_set: domination has no forts");
    VertexSet reached = mode == Mode::PowerDomination ? power_observed(g, s) : closure(g, s);
    if (reached.is_full()) {
        throw InputError("fort_from_failed_set: " + s.to_string() + " is already feasible");
    }
    return Fort::checked(g, reached.complement());
}

namespace {

// Iterative deepening on fort size; the include-first ascending DFS visits
// k-subsets in lexicographic order, so the first hit is the tie-break winner.
class MinFortSearch {
public:
    MinFortSearch(const Graph& g, const VertexSet& forbidden)
        : g_(g), status_(g.order(), Undecided), inside_(g.order(), 0), open_(g.order(), 0) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (forbidden.contains(v)) {
                status_[v] = Out;
            } else {
                order_.push_back(v);
            }
        }
        for (Vertex v = 0; v < g.order(); ++v) {
            for (Vertex w : g.neighbors(v)) open_[v] += status_[w] == Undecided ? 1 : 0;
        }
    }

    std::optional<VertexSet> run() {
        for (std::size_t k = 1; k <= order_.size(); ++k) {
            budget_ = k;
            chosen_ = 0;
            if (dfs(0)) return current();
        }
        return std::nullopt;
    }

    std::size_t nodes() const { return nodes_; }

private:
    enum Status : char { Undecided, In, Out };

    // An excluded vertex with exactly one member neighbor and no undecided
    // neighbor left can never be repaired.
    bool dead(Vertex w) const { return status_[w] == Out && inside_[w] == 1 && open_[w] == 0; }

    bool dfs(std::size_t idx) {
        ++nodes_;
        if (chosen_ == budget_) return closes_with_rest_out();
        if (order_.size() - idx < budget_ - chosen_) return false;
        const Vertex v = order_[idx];

        set(v, In);
        bool ok = true;
        for (Vertex w : g_.neighbors(v)) ok = ok && !dead(w);
        if (ok && dfs(idx + 1)) return true;
        unset(v);

        set(v, Out);
        ok = !dead(v);
        for (Vertex w : g_.neighbors(v)) ok = ok && !dead(w);
        if (ok && dfs(idx + 1)) return true;
        unset(v);
        return false;
    }

    // With the budget spent, every remaining vertex is excluded.
    bool closes_with_rest_out() const {
        for (Vertex w = 0; w < g_.order(); ++w) {
            if (status_[w] == In) continue;
            if (inside_[w] == 1) return false;
        }
        return true;
    }

    void set(Vertex v, Status s) {
        status_[v] = s;
        if (s == In) ++chosen_;
        for (Vertex w : g_.neighbors(v)) {
            --open_[w];
            if (s == In) ++inside_[w];
        }
    }

    void unset(Vertex v) {
        const bool was_in = status_[v] == In;
        status_[v] = Undecided;
        if (was_in) --chosen_;
        for (Vertex w : g_.neighbors(v)) {
            ++open_[w];
            if (was_in) --inside_[w];
        }
    }

    VertexSet current() const {
        VertexSet out(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (status_[v] == In) out.insert(v);
        }
        return out;
    }

    const Graph& g_;
    std::vector<Status> status_;
    std::vector<std::size_t> inside_;
    std::vector<std::size_t> open_;
    std::vector<Vertex> order_;
    std::size_t budget_ = 0;
    std::size_t chosen_ = 0;
    std::size_t nodes_ = 0;
};

}  // namespace

Fort minimum_violated_fort(const Graph& g, const VertexSet& forbidden, std::size_t* nodes) {
    if (forbidden.ambient() != g.order()) {
        throw InputError("minimum_violated_fort: forbidden set has the wrong ambient size");
    }
    MinFortSearch search(g, forbidden);
    auto found = search.run();
    if (nodes) *nodes = search.nodes();
    if (!found) {
        throw InputError("minimum_violated_fort: no fort avoids " + forbidden.to_string());
    }
    return Fort::checked(g, std::move(*found));
}

std::vector<Fort> enumerate_forts(const Graph& g, std::size_t max_n) {
    const std::size_t n = g.order();
    if (n > max_n) throw GuardExceeded("enumerate_forts: graph too large", max_n, n);
    std::vector<VertexSet> found;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet f(n);
        for (Vertex v = 0; v < n; ++v) {
            if (mask >> v & 1) f.insert(v);
        }
        if (is_fort(g, f)) found.push_back(std::move(f));
    }
    std::sort(found.begin(), found.end(), ShortlexLess{});
    std::vector<Fort> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(Fort::checked(g, std::move(f)));
    return out;
}

VertexSet cover_set(const Graph& g, const Fort& f, Mode mode) {
    return mode == Mode::PowerDomination ? closed_neighborhood(g, f.members()) : f.members();
}

}  // namespace pdzf
