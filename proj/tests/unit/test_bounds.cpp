#include <gtest/gtest.h>

#include "pdzf/bounds.hpp"
#include "pdzf/constructions.hpp"
#include "pdzf/error.hpp"
#include "pdzf/propagation.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace pdzf;
namespace t = pdzf::testing;

namespace {

VertexSet vs(const Graph& g, std::initializer_list<Vertex> m) { return VertexSet::of(g.order(), m); }

VertexSet range_set(std::size_t n, Vertex lo, Vertex hi) {
    VertexSet s(n);
    for (Vertex v = lo; v < hi; ++v) s.insert(v);
    return s;
}

void expect_tight(const BoundReport& r, long long value) {
    EXPECT_TRUE(r.holds) << r.name;
    EXPECT_TRUE(r.tight) << r.name;
    EXPECT_EQ(r.lhs, Rational(value)) << r.name;
    EXPECT_EQ(r.rhs, Rational(value)) << r.name;
}

}  // namespace

TEST(Rational, Rendering) {
    EXPECT_EQ(to_string(Rational(7)), "7");
    EXPECT_EQ(to_string(Rational(7, 2)), "7/2");
    EXPECT_EQ(to_string(Rational(4, 6)), "2/3");
    BoundReport r = make_report("x", Rational(1), Rational(3, 2));
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.tight);
    EXPECT_FALSE(make_report("y", Rational(2), Rational(3, 2)).holds);
}

TEST(Bounds, Ore) {
    expect_tight(bound_ore(cycle(4)), 2);
    BoundReport k5 = bound_ore(complete(5));
    EXPECT_EQ(k5.lhs, Rational(1));
    EXPECT_EQ(k5.rhs, Rational(5, 2));
    EXPECT_FALSE(k5.tight);
    EXPECT_THROW(bound_ore(disjoint_union(path(2), edgeless(1))), InputError);
}

TEST(Bounds, ThirdOfOrder) {
    BoundReport c6 = bound_n3(cycle(6));
    EXPECT_EQ(c6.lhs, Rational(1));
    EXPECT_EQ(c6.rhs, Rational(2));
    expect_tight(bound_n3(path(3)), 1);
    EXPECT_THROW(bound_n3(path(2)), InputError);
    EXPECT_THROW(bound_n3(edgeless(4)), InputError);
}

TEST(Bounds, LeafCorollary) {
    Graph g = corollary_tightness(complete(4), VertexSet::of(4, {0}));
    expect_tight(bound_leaf_corollary(g, vs(g, {0})), 4);
    Graph c = cycle(7);
    BoundReport a = bound_leaf_corollary(c, c.empty_set());
    BoundReport b = bound_n3(c);
    EXPECT_EQ(a.lhs, b.lhs);
    EXPECT_EQ(a.rhs, b.rhs);
}

TEST(Bounds, ExtensionHalf) {
    Graph g = grid2_triangles(5);
    BoundReport r = bound_extension_half(g, range_set(14, 0, 10), vs(g, {grid2_id(1, 1)}));
    expect_tight(r, 3);

    Graph c = cycle(5);
    BoundReport whole = bound_extension_half(c, c.vertices(), vs(c, {0, 2}));
    EXPECT_EQ(whole.lhs, Rational(2));
    EXPECT_EQ(whole.rhs, Rational(2));

    EXPECT_THROW(bound_extension_half(c, range_set(5, 0, 3), vs(c, {4})), InputError);
    Graph p = path(6);
    EXPECT_THROW(bound_extension_half(p, range_set(6, 0, 5), p.empty_set()), InputError);
}

TEST(Bounds, ComponentSum) {
    Graph fig = fig_examples().graph;
    expect_tight(bound_component_sum_pd(fig, range_set(7, 0, 4), vs(fig, {2})), 2);
    BoundReport remark =
        bound_component_sum_pd(fig, range_set(7, 0, 4), vs(fig, {2}), NeighborRule::MinimumDominating);
    EXPECT_EQ(remark.name, "component_sum_pd_remark");
    EXPECT_TRUE(remark.holds);

    // S = V(G): every N_i is empty and the bound is the sum of plain values.
    Graph c = cycle(6);
    BoundReport r = bound_component_sum_pd(c, range_set(6, 0, 2), vs(c, {0, 1}));
    EXPECT_EQ(r.rhs, Rational(3));
    EXPECT_TRUE(r.holds);
}

TEST(Bounds, ThirdBoundary) {
    Graph g = spider_complete(4);
    expect_tight(bound_third_boundary(g, range_set(16, 0, 4), vs(g, {0})), 5);
    Graph c = cycle(6);
    EXPECT_THROW(bound_third_boundary(c, c.vertices(), vs(c, {0})), InputError);
    EXPECT_THROW(bound_third_boundary(c, range_set(6, 0, 4), vs(c, {0})), InputError);
}

TEST(Bounds, PartitionPd) {
    Graph g = double_star_join(4, 4);
    VertexSet v1 = range_set(10, 0, 5);
    auto reports = bound_partition_pd(g, v1, v1.complement(), vs(g, {0}), vs(g, {5}));
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_EQ(reports[0].name, "partition_pd_lower");
    expect_tight(reports[0], 2);
    expect_tight(reports[1], 2);

    Graph u = disjoint_union(cycle(4), path(3));
    VertexSet c1 = range_set(7, 0, 4);
    for (const BoundReport& r : bound_partition_pd(u, c1, c1.complement(), u.empty_set(), u.empty_set()))
        expect_tight(r, 2);
}

TEST(Bounds, ComponentSumZf) {
    Graph fig = fig_examples().graph;
    expect_tight(bound_component_sum_zf(fig, range_set(7, 0, 3), vs(fig, {0})), 3);
    Graph c = cycle(5);
    BoundReport whole = bound_component_sum_zf(c, c.vertices(), vs(c, {0, 1}));
    EXPECT_EQ(whole.rhs, Rational(2));
    EXPECT_THROW(bound_component_sum_zf(c, range_set(5, 0, 3), vs(c, {1})), InputError);
}

TEST(Bounds, PartitionZf) {
    Graph g = fig_zpartition().graph;
    VertexSet v1 = range_set(8, 0, 3);
    expect_tight(bound_partition_zf(g, v1, v1.complement()), 3);
    Graph u = disjoint_union(path(3), cycle(4));
    VertexSet p = range_set(7, 0, 3);
    expect_tight(bound_partition_zf(u, p, p.complement()), 3);
    EXPECT_THROW(bound_partition_zf(u, p, p), InputError);
}

TEST(Bounds, DegreeSum) {
    Graph p = path(6);
    DegreeSumReport r = bound_degree_sum(p, vs(p, {0}), vs(p, {0}));
    expect_tight(r.report, 1);
    EXPECT_TRUE(is_zero_forcing_set(p, r.zero_forcing_set));
    for (std::size_t n = 2; n <= 6; ++n) {
        Graph k = complete(n);
        DegreeSumReport kr = bound_degree_sum(k, k.empty_set(), VertexSet::of(n, {1}));
        expect_tight(kr.report, static_cast<long long>(n) - 1);
        EXPECT_EQ(kr.zero_forcing_set.size(), n - 1);
    }
    EXPECT_THROW(bound_degree_sum(p, vs(p, {0}), vs(p, {1})), InputError);
    Graph e = disjoint_union(path(2), edgeless(1));
    EXPECT_THROW(bound_degree_sum(e, e.empty_set(), e.vertices()), InputError);
}

TEST(Bounds, DegreeSumConstructionIsZeroForcing) {
    t::Rng rng(46);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        Graph g = t::random_connected(t::uniform(2, 12, rng), 0.2, rng);
        VertexSet x = t::random_subset(g.order(), 0.15, rng);
        VertexSet s = x | t::random_subset(g.order(), 0.3, rng);
        if (!is_power_dominating_set(g, s)) continue;
        ++checked;
        DegreeSumReport r = bound_degree_sum(g, x, s);
        EXPECT_TRUE(r.report.holds);
        EXPECT_TRUE(x.is_subset_of(r.zero_forcing_set));
        EXPECT_TRUE(is_zero_forcing_set(g, r.zero_forcing_set));
        EXPECT_LE(Rational(static_cast<long long>(r.zero_forcing_set.size())), r.report.rhs);
    }
    EXPECT_GE(checked, 100);
}

TEST(Bounds, DeltaRatio) {
    for (std::size_t n = 2; n <= 7; ++n) {
        Graph k = complete(n);
        expect_tight(bound_delta_ratio(k, k.empty_set()), 1);
    }
    EXPECT_THROW(bound_delta_ratio(edgeless(3), VertexSet(3)), InputError);
}

TEST(Bounds, NaiveNeighborhood) {
    Graph k3 = complete(3);
    expect_tight(bound_naive_nbhd(k3, vs(k3, {0})), 3);
    // N[center] is the whole star, so the restricted number is 4.
    Graph s = star(3);
    expect_tight(bound_naive_nbhd(s, vs(s, {0})), 4);
    Graph p = path(5);
    BoundReport r = bound_naive_nbhd(p, vs(p, {2}));
    EXPECT_EQ(r.lhs, Rational(3));
    EXPECT_EQ(r.rhs, Rational(3));
}

TEST(Bounds, SandwichAndMonotone) {
    Graph g = fig_examples().graph;
    auto sw = bound_sandwich(g, vs(g, {0, 6}));
    EXPECT_EQ(sw.size(), 7u);
    for (const auto& r : sw) EXPECT_TRUE(r.holds) << r.name;
    auto mono = bound_monotone(g, vs(g, {0}), vs(g, {0, 6}));
    EXPECT_EQ(mono.size(), 4u);
    for (const auto& r : mono) EXPECT_TRUE(r.holds) << r.name;
    EXPECT_THROW(bound_monotone(g, vs(g, {1}), vs(g, {0})), InputError);
}

TEST(Bounds, RandomSoundness) {
    t::Rng rng(5150);
    for (int i = 0; i < 120; ++i) {
        Graph g = t::random_connected(t::uniform(3, 11, rng), 0.2, rng);
        AuditInput in{g, t::random_subset(g.order(), 0.2, rng), std::nullopt, std::nullopt};
        AuditResult res = audit(in);
        for (const auto& r : res.reports) EXPECT_TRUE(r.holds) << r.name << "\n" << to_edge_list(g);
        EXPECT_TRUE(res.all_hold());
        EXPECT_GT(res.reports.size(), 10u);
    }
}

TEST(Bounds, AuditJobsDeterministic) {
    t::Rng rng(77);
    for (int i = 0; i < 10; ++i) {
        Graph g = t::random_connected(t::uniform(4, 10, rng), 0.25, rng);
        AuditInput in{g, t::random_subset(g.order(), 0.3, rng), std::nullopt, std::nullopt};
        AuditResult a = audit(in, 1);
        AuditResult b = audit(in, 4);
        ASSERT_EQ(a.reports.size(), b.reports.size());
        for (std::size_t k = 0; k < a.reports.size(); ++k) {
            EXPECT_EQ(a.reports[k].name, b.reports[k].name);
            EXPECT_EQ(a.reports[k].lhs, b.reports[k].lhs);
            EXPECT_EQ(a.reports[k].rhs, b.reports[k].rhs);
            EXPECT_EQ(a.reports[k].context, b.reports[k].context);
        }
        ASSERT_EQ(a.skipped.size(), b.skipped.size());
    }
}

TEST(Bounds, AuditSkipsFailedHypotheses) {
    Graph g = disjoint_union(path(2), edgeless(1));
    AuditResult r = audit(AuditInput{g, g.empty_set(), std::nullopt, std::nullopt});
    bool ore_skipped = false;
    for (const auto& s : r.skipped) ore_skipped |= s.name == "ore";
    EXPECT_TRUE(ore_skipped);
    EXPECT_TRUE(r.all_hold());
}
