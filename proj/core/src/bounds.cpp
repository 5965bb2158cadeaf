#include "pdzf/bounds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "pdzf/decomposition.hpp"
#include "pdzf/error.hpp"
#include "pdzf/hitting_set.hpp"
#include "pdzf/parallel.hpp"
#include "pdzf/propagation.hpp"

namespace pdzf {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

BoundReport make_report(std::string name, Rational lhs, Rational rhs,
                        std::vector<std::pair<std::string, std::string>> context) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.holds = lhs <= rhs;
    r.tight = lhs == rhs;
    r.context = std::move(context);
    return r;
}

bool AuditResult::all_hold() const {
    return std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.holds; });
}

namespace {

using Context = std::vector<std::pair<std::string, std::string>>;

Rational whole(std::size_t v) { return Rational(static_cast<long long>(v)); }

std::size_t pd(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    return restricted_pd_number(g, x, opts).value;
}
std::size_t zf(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    return restricted_zf_number(g, x, opts).value;
}
std::size_t dom(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    return restricted_dom_number(g, x, opts).value;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

void require_ambient(const Graph& g, const VertexSet& s, const char* who) {
    require(s.ambient() == g.order(), std::string(who) + ": vertex set has the wrong ambient size");
}

// The shared structure of the extension bounds: G' (big), V, G = G'[V], the
// outside part V' \ V and the components of G'[V' \ V] in ids of G'.
struct Extension {
    const Graph& big;
    VertexSet v;
    VertexSet outside;
    InducedSubgraph inner;
    std::vector<InducedSubgraph> pieces;

    Extension(const Graph& g, const VertexSet& part, const char* who) : big(g), v(part) {
        require(!g.empty(), std::string(who) + ": empty graph");
        require_ambient(g, part, who);
        require(!part.empty(), std::string(who) + ": V must be nonempty");
        outside = part.complement();
        inner = induced_subgraph(g, part);
        InducedSubgraph rest = induced_subgraph(g, outside);
        for (const VertexSet& comp : components(rest.graph)) {
            pieces.push_back(induced_subgraph(g, rest.lift(comp)));
        }
    }

    Context context(const std::string& key, const VertexSet& s) const {
        return {{"V", v.to_string()}, {key, s.to_string()}};
    }
};

void require_pds_of_inner(const Extension& e, const VertexSet& s, const char* who) {
    require_ambient(e.big, s, who);
    require(s.is_subset_of(e.v), std::string(who) + ": S must lie inside V");
    require(is_power_dominating_set(e.inner.graph, e.inner.restrict(s)),
            std::string(who) + ": " + s.to_string() + " is not a power dominating set of G'[V]");
}

// N_{G'}[V \ N_G[S]] in ids of G'.
VertexSet undominated_reach(const Extension& e, const VertexSet& s) {
    const VertexSet dominated = closed_neighborhood(e.big, s) & e.v;
    return closed_neighborhood(e.big, e.v - dominated);
}

// Minimum subset of the piece dominating `targets` (both in piece ids).
VertexSet minimum_dominator(const Graph& piece, const VertexSet& targets) {
    std::vector<std::size_t> rank(piece.order());
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    HittingSetMaster master(piece.order(), piece.empty_set(), std::move(rank));
    for (Vertex d : targets) master.add(piece.closed_neighborhood(d));
    return master.solve();
}

}  // namespace

BoundReport bound_ore(const Graph& g, const SolveOptions& opts) {
    require(g.order() >= 2, "bound_ore: needs at least two vertices");
    require(isolated_vertices(g).empty(), "bound_ore: graph has isolated vertices");
    return make_report("ore", whole(dom(g, g.empty_set(), opts)), Rational(static_cast<long long>(g.order()), 2));
}

BoundReport bound_n3(const Graph& g, const SolveOptions& opts) {
    require(g.order() >= 3 && is_connected(g), "bound_n3: needs a connected graph on at least 3 vertices");
    return make_report("n3", whole(pd(g, g.empty_set(), opts)), whole(g.order() / 3));
}

BoundReport bound_leaf_corollary(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    require(g.order() >= 3 && is_connected(g),
            "bound_leaf_corollary: needs a connected graph on at least 3 vertices");
    require_ambient(g, x, "bound_leaf_corollary");
    return make_report("leaf_corollary", whole(pd(g, x, opts)), whole((g.order() + 2 * x.size()) / 3),
                       {{"X", x.to_string()}});
}

BoundReport bound_extension_half(const Graph& big, const VertexSet& v, const VertexSet& s,
                                 const SolveOptions& opts) {
    Extension e(big, v, "bound_extension_half");
    require_pds_of_inner(e, s, "bound_extension_half");
    std::size_t t = 0;
    for (const auto& p : e.pieces) t += p.graph.order() == 1 ? 1 : 0;
    const Rational rhs = whole(s.size()) + Rational(static_cast<long long>(e.outside.size() + t), 2);
    Context ctx = e.context("S", s);
    ctx.emplace_back("t", std::to_string(t));
    return make_report("extension_half", whole(pd(big, s, opts)), rhs, std::move(ctx));
}

BoundReport bound_component_sum_pd(const Graph& big, const VertexSet& v, const VertexSet& s,
                                   NeighborRule rule, const SolveOptions& opts) {
    Extension e(big, v, "bound_component_sum_pd");
    require_pds_of_inner(e, s, "bound_component_sum_pd");
    const VertexSet reach = undominated_reach(e, s);
    const VertexSet remark_targets = closed_neighborhood(big, v) - closed_neighborhood(big, s);
    std::size_t sum = s.size();
    std::string chosen;
    for (const auto& p : e.pieces) {
        VertexSet n_i = rule == NeighborRule::Boundary
                            ? p.restrict(reach)
                            : minimum_dominator(p.graph, p.restrict(remark_targets));
        sum += pd(p.graph, n_i, opts);
        chosen += p.lift(n_i).to_string();
    }
    Context ctx = e.context("S", s);
    ctx.emplace_back("N_i", chosen);
    const char* name = rule == NeighborRule::Boundary ? "component_sum_pd" : "component_sum_pd_remark";
    return make_report(name, whole(pd(big, s, opts)), whole(sum), std::move(ctx));
}

BoundReport bound_third_boundary(const Graph& big, const VertexSet& v, const VertexSet& s,
                                 const SolveOptions& opts) {
    Extension e(big, v, "bound_third_boundary");
    require_pds_of_inner(e, s, "bound_third_boundary");
    require(!e.outside.empty(), "bound_third_boundary: V must be a proper subset");
    for (const auto& p : e.pieces) {
        require(p.graph.order() >= 3, "bound_third_boundary: a component of G'[V' \\ V] has fewer than 3 vertices");
    }
    const std::size_t boundary = (undominated_reach(e, s) & e.outside).size();
    const Rational rhs = whole(s.size() + boundary) + Rational(static_cast<long long>(e.outside.size()), 3);
    return make_report("third_boundary", whole(pd(big, s, opts)), rhs, e.context("S", s));
}

std::vector<BoundReport> bound_partition_pd(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                                            const VertexSet& w1, const VertexSet& w2,
                                            const SolveOptions& opts) {
    BoundaryComposition parts = compose_boundary_pd(g, v1, v2, w1, w2, opts);
    const VertexSet w = w1 | w2;
    const std::size_t restricted = pd(g, w, opts);
    Context ctx{{"V1", v1.to_string()}, {"W1", w1.to_string()}, {"W2", w2.to_string()}};
    return {make_report("partition_pd_lower", whole(pd(g, g.empty_set(), opts)), whole(restricted), ctx),
            make_report("partition_pd", whole(restricted), whole(parts.bound), ctx)};
}

BoundReport bound_component_sum_zf(const Graph& big, const VertexSet& v, const VertexSet& b,
                                   const SolveOptions& opts) {
    Extension e(big, v, "bound_component_sum_zf");
    require_ambient(big, b, "bound_component_sum_zf");
    require(b.is_subset_of(v), "bound_component_sum_zf: B must lie inside V");
    require(is_zero_forcing_set(e.inner.graph, e.inner.restrict(b)),
            "bound_component_sum_zf: " + b.to_string() + " is not a zero forcing set of G'[V]");
    const VertexSet reach = closed_neighborhood(big, v);
    std::size_t sum = b.size();
    for (const auto& p : e.pieces) sum += zf(p.graph, p.restrict(reach), opts);
    return make_report("component_sum_zf", whole(zf(big, b, opts)), whole(sum), e.context("B", b));
}

BoundReport bound_partition_zf(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                               const SolveOptions& opts) {
    require_ambient(g, v1, "bound_partition_zf");
    require_ambient(g, v2, "bound_partition_zf");
    require(!v1.intersects(v2) && (v1 | v2).is_full() && !v1.empty() && !v2.empty(),
            "bound_partition_zf: V1 and V2 must partition V into nonempty parts");
    InducedSubgraph g1 = induced_subgraph(g, v1);
    InducedSubgraph g2 = induced_subgraph(g, v2);
    const VertexSet n1 = g1.restrict(closed_neighborhood(g, v2) & v1);
    const VertexSet n2 = g2.restrict(closed_neighborhood(g, v1) & v2);
    const std::size_t first = zf(g1.graph, g1.graph.empty_set(), opts) + zf(g2.graph, n2, opts);
    const std::size_t second = zf(g1.graph, n1, opts) + zf(g2.graph, g2.graph.empty_set(), opts);
    return make_report("partition_zf", whole(zf(g, g.empty_set(), opts)), whole(std::min(first, second)),
                       {{"V1", v1.to_string()}});
}

DegreeSumReport bound_degree_sum(const Graph& g, const VertexSet& x, const VertexSet& s,
                                 const SolveOptions& opts) {
    require(!g.empty() && isolated_vertices(g).empty(), "bound_degree_sum: graph has isolated vertices");
    require_ambient(g, x, "bound_degree_sum");
    require_ambient(g, s, "bound_degree_sum");
    require(x.is_subset_of(s), "bound_degree_sum: X must lie inside S");
    require(is_power_dominating_set(g, s), "bound_degree_sum: " + s.to_string() + " is not a power dominating set");

    DegreeSumReport out;
    out.zero_forcing_set = g.empty_set();
    std::size_t degree_sum = 0;
    for (Vertex u : s) {
        degree_sum += g.degree(u);
        const VertexSet outside = g.neighbor_set(u) - s;
        if (outside.empty()) {
            out.zero_forcing_set.insert(u);
        } else {
            VertexSet part = g.closed_neighborhood(u);
            part.erase(outside.first());
            out.zero_forcing_set |= part;
        }
    }
    const VertexSet& b = out.zero_forcing_set;
    if (!x.is_subset_of(b) || b.size() > degree_sum || !is_zero_forcing_set(g, b)) {
        throw std::logic_error("bound_degree_sum: constructed set " + b.to_string() + " is not a valid ZFS");
    }
    out.report = make_report("degree_sum", whole(zf(g, x, opts)), whole(degree_sum),
                             {{"X", x.to_string()}, {"S", s.to_string()}, {"B", b.to_string()}});
    return out;
}

BoundReport bound_delta_ratio(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    require(!g.empty(), "bound_delta_ratio: empty graph");
    require_ambient(g, x, "bound_delta_ratio");
    const std::size_t delta = max_degree(g);
    require(delta >= 1, "bound_delta_ratio: needs maximum degree at least 1");
    const std::size_t z = zf(g, x, opts);
    return make_report("delta_ratio", whole((z + delta - 1) / delta), whole(pd(g, x, opts)),
                       {{"X", x.to_string()}, {"Delta", std::to_string(delta)}});
}

BoundReport bound_naive_nbhd(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    require(!g.empty(), "bound_naive_nbhd: empty graph");
    require_ambient(g, x, "bound_naive_nbhd");
    const std::size_t delta = max_degree(g);
    return make_report("naive_nbhd", whole(zf(g, closed_neighborhood(g, x), opts)),
                       whole((delta + 1) * pd(g, x, opts)), {{"X", x.to_string()}});
}

std::vector<BoundReport> bound_sandwich(const Graph& g, const VertexSet& x, const SolveOptions& opts) {
    require(!g.empty(), "bound_sandwich: empty graph");
    require_ambient(g, x, "bound_sandwich");
    const std::size_t pd0 = pd(g, g.empty_set(), opts), pdx = pd(g, x, opts);
    const std::size_t zf0 = zf(g, g.empty_set(), opts), zfx = zf(g, x, opts);
    const std::size_t domx = dom(g, x, opts);
    const Context ctx{{"X", x.to_string()}};
    return {make_report("sandwich_pd_lower", whole(pd0), whole(pdx), ctx),
            make_report("sandwich_pd_upper", whole(pdx), whole(pd0 + x.size()), ctx),
            make_report("sandwich_zf_lower", whole(zf0), whole(zfx), ctx),
            make_report("sandwich_zf_upper", whole(zfx), whole(zf0 + x.size()), ctx),
            make_report("sandwich_x_le_pd", whole(x.size()), whole(pdx), ctx),
            make_report("sandwich_pd_le_zf", whole(pdx), whole(zfx), ctx),
            make_report("pd_le_dom", whole(pdx), whole(domx), ctx)};
}

std::vector<BoundReport> bound_monotone(const Graph& g, const VertexSet& y, const VertexSet& x,
                                        const SolveOptions& opts) {
    require(!g.empty(), "bound_monotone: empty graph");
    require_ambient(g, x, "bound_monotone");
    require_ambient(g, y, "bound_monotone");
    require(y.is_subset_of(x), "bound_monotone: Y must lie inside X");
    const std::size_t extra = (x - y).size();
    const std::size_t pdy = pd(g, y, opts), pdx = pd(g, x, opts);
    const std::size_t zfy = zf(g, y, opts), zfx = zf(g, x, opts);
    const Context ctx{{"Y", y.to_string()}, {"X", x.to_string()}};
    return {make_report("monotone_pd_lower", whole(pdy), whole(pdx), ctx),
            make_report("monotone_pd_upper", whole(pdx), whole(pdy + extra), ctx),
            make_report("monotone_zf_lower", whole(zfy), whole(zfx), ctx),
            make_report("monotone_zf_upper", whole(zfx), whole(zfy + extra), ctx)};
}

AuditResult audit(const AuditInput& input, std::size_t jobs, const SolveOptions& opts) {
    const Graph& g = input.graph;
    require(!g.empty(), "audit: empty graph");
    require_ambient(g, input.x, "audit");
    const VertexSet& x = input.x;

    VertexSet part = g.empty_set();
    if (input.part) {
        require_ambient(g, *input.part, "audit");
        part = *input.part;
    } else {
        for (Vertex v = 0; v < (g.order() + 1) / 2; ++v) part.insert(v);
    }
    const VertexSet rest = part.complement();

    // Default S and B: minimum power dominating / zero forcing sets of G[part].
    VertexSet s = g.empty_set(), b = g.empty_set();
    if (!part.empty()) {
        InducedSubgraph inner = induced_subgraph(g, part);
        b = inner.lift(restricted_zf_number(inner.graph, inner.graph.empty_set(), opts).witness);
        s = input.s ? *input.s
                    : inner.lift(restricted_pd_number(inner.graph, inner.graph.empty_set(), opts).witness);
    }
    const VertexSet n1 = closed_neighborhood(g, rest) & part;
    const VertexSet n2 = closed_neighborhood(g, part) & rest;
    VertexSet y = g.empty_set();
    {
        const auto members = x.to_vector();
        for (std::size_t i = 0; i < members.size() / 2; ++i) y.insert(members[i]);
    }

    using Task = std::pair<std::string, std::function<std::vector<BoundReport>()>>;
    auto one = [](auto f) { return [f] { return std::vector<BoundReport>{f()}; }; };
    const std::vector<Task> tasks = {
        {"ore", one([&] { return bound_ore(g, opts); })},
        {"n3", one([&] { return bound_n3(g, opts); })},
        {"leaf_corollary", one([&] { return bound_leaf_corollary(g, x, opts); })},
        {"extension_half", one([&] { return bound_extension_half(g, part, s, opts); })},
        {"component_sum_pd", one([&] { return bound_component_sum_pd(g, part, s, NeighborRule::Boundary, opts); })},
        {"component_sum_pd_remark",
         one([&] { return bound_component_sum_pd(g, part, s, NeighborRule::MinimumDominating, opts); })},
        {"third_boundary", one([&] { return bound_third_boundary(g, part, s, opts); })},
        {"partition_pd", [&] { return bound_partition_pd(g, part, rest, n1, n2, opts); }},
        {"component_sum_zf", one([&] { return bound_component_sum_zf(g, part, b, opts); })},
        {"partition_zf", one([&] { return bound_partition_zf(g, part, rest, opts); })},
        {"degree_sum",
         one([&] { return bound_degree_sum(g, x, restricted_pd_number(g, x, opts).witness, opts).report; })},
        {"delta_ratio", one([&] { return bound_delta_ratio(g, x, opts); })},
        {"naive_nbhd", one([&] { return bound_naive_nbhd(g, x, opts); })},
        {"sandwich", [&] { return bound_sandwich(g, x, opts); }},
        {"monotone", [&] { return bound_monotone(g, y, x, opts); }},
    };

    std::vector<std::vector<BoundReport>> produced(tasks.size());
    std::vector<std::string> reasons(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t i) {
        try {
            produced[i] = tasks[i].second();
        } catch (const InputError& e) {
            reasons[i] = e.what();
        }
    });

    AuditResult result;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!reasons[i].empty()) {
            result.skipped.push_back({tasks[i].first, reasons[i]});
        } else {
            for (auto& r : produced[i]) result.reports.push_back(std::move(r));
        }
    }
    return result;
}

}  // namespace pdzf
