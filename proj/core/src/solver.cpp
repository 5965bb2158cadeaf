#include "pdzf/solver.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pdzf/constructions.hpp"
#include "pdzf/error.hpp"
#include "pdzf/forts.hpp"
#include "pdzf/hitting_set.hpp"
#include "pdzf/propagation.hpp"

namespace pdzf {

Guards Guards::from_env() {
    Guards guards;
    const char* raw = std::getenv("PDZF_GUARD_N");
    if (raw == nullptr || *raw == '\0') return guards;
    std::string_view text(raw);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw InputError("PDZF_GUARD_N must be a non-negative integer, got '" + std::string(text) + "'");
    }
    guards.oracle_n = value;
    guards.exhaustive_n = value;
    return guards;
}

const char* to_string(Method method) noexcept {
    switch (method) {
        case Method::Oracle: return "oracle";
        case Method::ConstraintGeneration: return "constraint_generation";
        case Method::Reduction: return "reduction";
        case Method::Decomposition: return "decomposition";
    }
    return "?";
}

namespace {

void require_instance(const Graph& g, const VertexSet& x, const char* who) {
    if (g.empty()) throw InputError(std::string(who) + ": the empty graph has no parameter value");
    if (x.ambient() != g.order()) {
        throw InputError(std::string(who) + ": vertex set has ambient size " +
                         std::to_string(x.ambient()) + ", graph has " + std::to_string(g.order()));
    }
}

// Feasibility test with per-instance buffers.
class Checker {
public:
    Checker(const Graph& g, Mode mode) : g_(g), mode_(mode), prop_(g) {}

    VertexSet reached(const VertexSet& s) {
        switch (mode_) {
            case Mode::PowerDomination: return prop_.observe(s);
            case Mode::ZeroForcing: return prop_.closure(s);
            case Mode::Domination: return closed_neighborhood(g_, s);
        }
        return s;
    }
    bool feasible(const VertexSet& s) { return reached(s).is_full(); }

private:
    const Graph& g_;
    Mode mode_;
    Propagator prop_;
};

// Internal consistency of every result handed back to a caller.
void certify(const Graph& g, const VertexSet& x, const SolveResult& r) {
    if (r.witness.size() != r.value || !x.is_subset_of(r.witness) || !is_feasible(g, r.witness, r.mode)) {
        throw std::logic_error(std::string("solver produced an invalid ") + to_string(r.mode) +
                               " witness " + r.witness.to_string());
    }
}

// Visits every k-subset of `pool` in lexicographic order of positions;
// `visit` returns true to stop early.
template <class Visit>
bool for_each_subset(const std::vector<Vertex>& pool, std::size_t k, Visit&& visit) {
    if (k > pool.size()) return false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        if (visit(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::size_t> degree_rank(const Graph& g) {
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> rank(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    return rank;
}

}  // namespace

bool is_feasible(const Graph& g, const VertexSet& s, Mode mode) {
    if (s.ambient() != g.order()) throw InputError("is_feasible: wrong ambient size");
    return Checker(g, mode).feasible(s);
}

SolveResult brute_force_min(const Graph& g, const VertexSet& x, Mode mode, const Guards& guards) {
    require_instance(g, x, "brute_force_min");
    if (g.order() > guards.oracle_n) {
        throw GuardExceeded("brute_force_min: graph too large for the oracle", guards.oracle_n, g.order());
    }
    Checker check(g, mode);
    const std::vector<Vertex> rest = (g.vertices() - x).to_vector();
    SolveResult result;
    result.mode = mode;
    result.method = Method::Oracle;
    for (std::size_t extra = 0; extra <= rest.size(); ++extra) {
        bool found = for_each_subset(rest, extra, [&](const std::vector<std::size_t>& idx) {
            VertexSet s = x;
            for (auto i : idx) s.insert(rest[i]);
            ++result.nodes;
            if (!check.feasible(s)) return false;
            result.witness = std::move(s);
            return true;
        });
        if (found) break;
    }
    result.value = result.witness.size();
    certify(g, x, result);
    return result;
}

std::vector<VertexSet> enumerate_minimum_sets(const Graph& g, const VertexSet& x, Mode mode,
                                              const Guards& guards) {
    require_instance(g, x, "enumerate_minimum_sets");
    if (g.order() > guards.exhaustive_n) {
        throw GuardExceeded("enumerate_minimum_sets: graph too large for exhaustive enumeration",
                            guards.exhaustive_n, g.order());
    }
    const std::size_t best = brute_force_min(g, x, mode, guards).value;
    Checker check(g, mode);
    const std::vector<Vertex> rest = (g.vertices() - x).to_vector();
    std::vector<VertexSet> out;
    for_each_subset(rest, best - x.size(), [&](const std::vector<std::size_t>& idx) {
        VertexSet s = x;
        for (auto i : idx) s.insert(rest[i]);
        if (check.feasible(s)) out.push_back(std::move(s));
        return false;
    });
    std::sort(out.begin(), out.end(), ShortlexLess{});
    return out;
}

namespace {

Fort separate(const Graph& g, Checker& check, const VertexSet& s, VertexSet reached, Separator separator,
              const std::vector<Vertex>& order) {
    switch (separator) {
        case Separator::FailedSet: break;
        case Separator::MinimumFort: return minimum_violated_fort(g, reached);
        case Separator::MaximalFailedSet: {
            VertexSet grown = s;
            for (Vertex v : order) {
                if (reached.contains(v)) continue;
                grown.insert(v);
                VertexSet next = check.reached(grown);
                if (next.is_full()) {
                    grown.erase(v);
                } else {
                    reached = std::move(next);
                }
            }
            break;
        }
    }
    return Fort::checked(g, reached.complement());
}

}  // namespace

namespace detail {

SolveResult constraint_generation(const Graph& g, const VertexSet& x, Mode mode, const SolveOptions& opts) {
    SolveResult result;
    result.mode = mode;
    result.method = Method::ConstraintGeneration;

    std::vector<std::size_t> rank = degree_rank(g);
    std::vector<Vertex> order(g.order());
    for (Vertex v = 0; v < g.order(); ++v) order[rank[v]] = v;
    HittingSetMaster master(g.order(), x, std::move(rank));
    Checker check(g, mode);

    if (mode == Mode::Domination) {
        for (Vertex v = 0; v < g.order(); ++v) master.add(g.closed_neighborhood(v));
        result.witness = master.solve(x.size());
    } else {
        VertexSet s = x;
        std::size_t lower = x.size();
        while (true) {
            VertexSet reached = check.reached(s);
            if (reached.is_full()) break;
            Fort fort = separate(g, check, s, std::move(reached), opts.separator, order);
            if (opts.on_cut) opts.on_cut(s, fort);
            master.add(cover_set(g, fort, mode));
            ++result.cuts_added;
            s = master.solve(lower);
            lower = s.size();
        }
        result.witness = std::move(s);
    }
    result.value = result.witness.size();
    result.nodes = master.nodes();
    certify(g, x, result);
    return result;
}

}  // namespace detail

namespace {

SolveResult guarded_cg(const Graph& g, const VertexSet& x, Mode mode, const SolveOptions& opts,
                       const char* who) {
    require_instance(g, x, who);
    if (g.order() > opts.guards.cg_n) {
        throw GuardExceeded(std::string(who) + ": graph too large for constraint generation",
                            opts.guards.cg_n, g.order());
    }
    return detail::constraint_generation(g, x, mode, opts);
}

}  // namespace

SolveResult restricted_pd_number(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    return guarded_cg(g, x, Mode::PowerDomination, opts, "restricted_pd_number");
}

SolveResult restricted_zf_number(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    return guarded_cg(g, x, Mode::ZeroForcing, opts, "restricted_zf_number");
}

SolveResult restricted_dom_number(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    return guarded_cg(g, x, Mode::Domination, opts, "restricted_dom_number");
}

SolveResult solve(const Graph& g, const VertexSet& x, Mode mode, const SolveOptions& opts) {
    return guarded_cg(g, x, mode, opts, "solve");
}

SolveResult pd_number_disconnected(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    require_instance(g, x, "pd_number_disconnected");
    SolveResult total;
    total.mode = Mode::PowerDomination;
    total.method = Method::ConstraintGeneration;
    total.witness = VertexSet(g.order());
    for (const VertexSet& comp : components(g)) {
        const VertexSet inside = x & comp;
        if (comp.size() <= 2) {
            if (inside.empty()) {
                total.witness.insert(comp.first());
            } else {
                total.witness |= inside;
            }
            continue;
        }
        InducedSubgraph sub = induced_subgraph(g, comp);
        SolveResult part = restricted_pd_number(sub.graph, sub.restrict(inside), opts);
        total.witness |= sub.lift(part.witness);
        total.cuts_added += part.cuts_added;
        total.nodes += part.nodes;
    }
    total.value = total.witness.size();
    certify(g, x, total);
    return total;
}

SolveResult reduction_pd_number(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    require_instance(g, x, "reduction_pd_number");
    if (g.order() > opts.guards.cg_n) {
        throw GuardExceeded("reduction_pd_number: graph too large for constraint generation",
                            opts.guards.cg_n, g.order());
    }
    SolveResult result;
    result.mode = Mode::PowerDomination;
    result.method = Method::Reduction;
    if (x.empty()) {
        result = detail::constraint_generation(g, x, Mode::PowerDomination, opts);
        result.method = Method::Reduction;
        return result;
    }

    const Graph two = attach_leaves(g, x, 2).graph;
    SolveResult value = detail::constraint_generation(two, two.empty_set(), Mode::PowerDomination,
                                                      opts);
    const Graph three = attach_leaves(g, x, 3).graph;
    SolveResult witness = detail::constraint_generation(three, three.empty_set(),
                                                        Mode::PowerDomination, opts);

    VertexSet back(g.order());
    for (Vertex v : witness.witness) {
        if (v >= g.order()) {
            throw std::logic_error("reduction_pd_number: three-leaf optimum uses an attached leaf");
        }
        back.insert(v);
    }
    if (witness.value != value.value) {
        throw std::logic_error("reduction_pd_number: two- and three-leaf attachments disagree");
    }
    result.value = value.value;
    result.witness = std::move(back);
    result.cuts_added = value.cuts_added + witness.cuts_added;
    result.nodes = value.nodes + witness.nodes;
    certify(g, x, result);
    return result;
}

namespace {

SolveResult zf_unrestricted(const Graph& g, const SolveOptions& opts) {
    return detail::constraint_generation(g, g.empty_set(), Mode::ZeroForcing, opts);
}

}  // namespace

int spread(const Graph& g, Vertex v, const SolveOptions& opts) {
    if (g.order() < 2) throw InputError("spread: needs at least two vertices");
    if (v >= g.order()) throw InputError("spread: vertex " + std::to_string(v) + " out of range");
    if (g.order() > opts.guards.cg_n) {
        throw GuardExceeded("spread: graph too large for constraint generation", opts.guards.cg_n,
                            g.order());
    }
    const Graph minus = delete_vertex(g, v);
    const long long diff = static_cast<long long>(zf_unrestricted(g, opts).value) -
                           static_cast<long long>(zf_unrestricted(minus, opts).value);
    if (diff < -1 || diff > 1) throw std::logic_error("spread: value outside {-1, 0, 1}");
    return static_cast<int>(diff);
}

SolveResult z_restricted_single(const Graph& g, Vertex v, const SolveOptions& opts) {
    if (!g.empty() && v >= g.order()) {
        throw InputError("z_restricted_single: vertex " + std::to_string(v) + " out of range");
    }
    VertexSet x = g.empty_set();
    if (!g.empty()) x.insert(v);
    if (g.order() < 2) return restricted_zf_number(g, x, opts);

    const int z = spread(g, v, opts);
    if (z == 0) return restricted_zf_number(g, x, opts);

    SolveResult result;
    result.mode = Mode::ZeroForcing;
    result.method = Method::ConstraintGeneration;
    if (z == 1) {
        // A minimum ZFS of G - v plus v itself forces G.
        const VertexSet keep = g.vertices() - x;
        InducedSubgraph sub = induced_subgraph(g, keep);
        SolveResult inner = zf_unrestricted(sub.graph, opts);
        result.witness = sub.lift(inner.witness) | x;
        result.cuts_added = inner.cuts_added;
        result.nodes = inner.nodes;
    } else {
        SolveResult inner = zf_unrestricted(g, opts);
        result.witness = inner.witness | x;
        result.cuts_added = inner.cuts_added;
        result.nodes = inner.nodes;
    }
    result.value = result.witness.size();
    certify(g, x, result);
    return result;
}

std::size_t k_restricted_number(const Graph& g, std::size_t k, Mode mode, const SolveOptions& opts) {
    require_instance(g, g.empty_set(), "k_restricted_number");
    if (k > g.order()) {
        throw InputError("k_restricted_number: k = " + std::to_string(k) + " exceeds n = " +
                         std::to_string(g.order()));
    }
    if (g.order() > opts.guards.exhaustive_n) {
        throw GuardExceeded("k_restricted_number: graph too large to enumerate every X",
                            opts.guards.exhaustive_n, g.order());
    }
    const std::vector<Vertex> all = g.vertices().to_vector();
    std::size_t best = 0;
    for_each_subset(all, k, [&](const std::vector<std::size_t>& idx) {
        VertexSet x = g.empty_set();
        for (auto i : idx) x.insert(all[i]);
        best = std::max(best, detail::constraint_generation(g, x, mode, opts).value);
        return best == g.order();
    });
    return best;
}

}  // namespace pdzf
