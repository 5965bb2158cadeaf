#include <gtest/gtest.h>

#include <cstdlib>

#include "pdzf/constructions.hpp"
#include "pdzf/error.hpp"
#include "pdzf/propagation.hpp"
#include "pdzf/solver.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace pdzf;
namespace t = pdzf::testing;

namespace {

VertexSet vs(const Graph& g, std::initializer_list<Vertex> m) { return VertexSet::of(g.order(), m); }

t::OracleMode oracle_mode(Mode m) {
    switch (m) {
        case Mode::PowerDomination: return t::OracleMode::PD;
        case Mode::ZeroForcing: return t::OracleMode::ZF;
        case Mode::Domination: return t::OracleMode::DOM;
    }
    return t::OracleMode::PD;
}

void expect_valid(const Graph& g, const VertexSet& x, const SolveResult& r) {
    EXPECT_TRUE(x.is_subset_of(r.witness));
    EXPECT_EQ(r.witness.size(), r.value);
    EXPECT_TRUE(is_feasible(g, r.witness, r.mode));
}

}  // namespace

TEST(BruteForce, Examples) {
    Graph p = path(10);
    EXPECT_EQ(brute_force_min(p, vs(p, {4}), Mode::PowerDomination).value, 1u);
    EXPECT_EQ(brute_force_min(p, vs(p, {4}), Mode::ZeroForcing).value, 2u);
    Graph s = star(5);
    SolveResult r = brute_force_min(s, vs(s, {1, 2, 3}), Mode::PowerDomination);
    EXPECT_EQ(r.value, 4u);
    EXPECT_EQ(r.method, Method::Oracle);
    EXPECT_THROW(brute_force_min(path(21), VertexSet(21), Mode::ZeroForcing), GuardExceeded);
    Guards small;
    small.oracle_n = 5;
    EXPECT_THROW(brute_force_min(path(6), VertexSet(6), Mode::ZeroForcing, small), GuardExceeded);
}

TEST(ConstraintGeneration, PublishedExamples) {
    Graph fig = fig_examples().graph;
    SolveResult r = restricted_pd_number(fig, vs(fig, {2, 4}));
    EXPECT_EQ(r.value, 2u);
    EXPECT_EQ(r.witness, vs(fig, {2, 4}));
    Graph gt = grid2_triangles(5);
    EXPECT_EQ(restricted_pd_number(gt, vs(gt, {grid2_id(1, 1)})).value, 3u);

    Graph p = path(8);
    EXPECT_EQ(restricted_zf_number(p, vs(p, {0})).value, 1u);
    EXPECT_EQ(restricted_zf_number(p, vs(p, {7})).value, 1u);
    Graph zp = fig_zpartition().graph;
    EXPECT_EQ(restricted_zf_number(zp, zp.empty_set()).value, 3u);
    Graph sp = fig_spread().graph;
    EXPECT_EQ(restricted_zf_number(sp, vs(sp, {fig_spread_ids::u})).value, 3u);
    EXPECT_EQ(restricted_zf_number(sp, sp.empty_set()).value, 2u);
}

TEST(ConstraintGeneration, ZeroForcingBasics) {
    EXPECT_EQ(restricted_zf_number(complete(5), VertexSet(5)).value, 4u);
    EXPECT_EQ(restricted_zf_number(cycle(6), VertexSet(6)).value, 2u);
    EXPECT_EQ(restricted_zf_number(star(4), VertexSet(5)).value, 3u);
    EXPECT_EQ(restricted_zf_number(edgeless(3), VertexSet(3)).value, 3u);
    EXPECT_EQ(restricted_pd_number(edgeless(3), VertexSet(3)).value, 3u);
    EXPECT_EQ(restricted_dom_number(cycle(4), VertexSet(4)).value, 2u);
}

TEST(ConstraintGeneration, RejectsBadInput) {
    Graph p = path(3);
    EXPECT_THROW(restricted_pd_number(Graph(), VertexSet()), InputError);
    EXPECT_THROW(restricted_pd_number(p, VertexSet(4)), InputError);
    SolveOptions opts;
    opts.guards.cg_n = 2;
    EXPECT_THROW(restricted_pd_number(p, VertexSet(3), opts), GuardExceeded);
}

TEST(ConstraintGeneration, AllSeparatorsMatchOracle) {
    t::Rng rng(2024);
    for (int i = 0; i < 150; ++i) {
        Graph g = t::random_graph(t::uniform(1, 10, rng), 0.3, rng);
        t::MaskGraph mg(g);
        VertexSet x = t::random_subset(g.order(), 0.15, rng);
        for (Mode mode : {Mode::PowerDomination, Mode::ZeroForcing, Mode::Domination}) {
            std::size_t want = t::restricted_minimum(mg, t::to_mask(x), oracle_mode(mode)).value;
            for (Separator sep : {Separator::FailedSet, Separator::MaximalFailedSet, Separator::MinimumFort}) {
                SolveOptions opts;
                opts.separator = sep;
                SolveResult r = solve(g, x, mode, opts);
                ASSERT_EQ(r.value, want) << to_edge_list(g) << " X=" << x.to_string();
                expect_valid(g, x, r);
            }
            SolveResult b = brute_force_min(g, x, mode);
            EXPECT_EQ(b.value, want);
            expect_valid(g, x, b);
        }
    }
}

TEST(ConstraintGeneration, CutsAreViolatedForts) {
    t::Rng rng(99);
    for (int i = 0; i < 60; ++i) {
        Graph g = t::random_connected(t::uniform(3, 14, rng), 0.15, rng);
        VertexSet x = t::random_subset(g.order(), 0.1, rng);
        for (Mode mode : {Mode::PowerDomination, Mode::ZeroForcing}) {
            for (Separator sep : {Separator::FailedSet, Separator::MaximalFailedSet, Separator::MinimumFort}) {
                SolveOptions opts;
                opts.separator = sep;
                std::size_t seen = 0;
                opts.on_cut = [&](const VertexSet& s, const Fort& f) {
                    ++seen;
                    EXPECT_TRUE(is_fort(g, f.members()));
                    const VertexSet reached = mode == Mode::ZeroForcing ? closure(g, s) : power_observed(g, s);
                    EXPECT_FALSE(f.members().intersects(reached));
                    EXPECT_FALSE(cover_set(g, f, mode).intersects(s));
                };
                SolveResult r = solve(g, x, mode, opts);
                EXPECT_EQ(seen, r.cuts_added);
            }
        }
    }
}

TEST(ConstraintGeneration, LargeTreesStayFast) {
    t::Rng rng(4);
    for (int i = 0; i < 10; ++i) {
        Graph tree = t::random_tree(60, rng);
        SolveResult r = restricted_pd_number(tree, tree.empty_set());
        expect_valid(tree, tree.empty_set(), r);
    }
}

TEST(MinimumSets, MatchesOracleFamily) {
    t::Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        Graph g = t::random_graph(t::uniform(1, 8, rng), 0.35, rng);
        t::MaskGraph mg(g);
        VertexSet x = t::random_subset(g.order(), 0.2, rng);
        for (Mode mode : {Mode::PowerDomination, Mode::ZeroForcing}) {
            auto want = t::restricted_minimum(mg, t::to_mask(x), oracle_mode(mode), true).minimum_sets;
            auto got = enumerate_minimum_sets(g, x, mode);
            ASSERT_EQ(got.size(), want.size());
            for (std::size_t k = 1; k < got.size(); ++k) EXPECT_TRUE(ShortlexLess{}(got[k - 1], got[k]));
            std::sort(want.begin(), want.end());
            std::vector<t::Mask> gm;
            for (const auto& s : got) gm.push_back(t::to_mask(s));
            std::sort(gm.begin(), gm.end());
            EXPECT_EQ(gm, want);
        }
    }
}

TEST(Disconnected, Examples) {
    Graph g = disjoint_union(path(3), complete(2));
    EXPECT_EQ(pd_number_disconnected(g, g.empty_set()).value, 2u);
    Graph kk = disjoint_union(complete(2), complete(2));
    SolveResult r = pd_number_disconnected(kk, vs(kk, {0, 1}));
    EXPECT_EQ(r.value, 3u);
    expect_valid(kk, vs(kk, {0, 1}), r);
    Graph c = cycle(7);
    EXPECT_EQ(pd_number_disconnected(c, vs(c, {3})).value, restricted_pd_number(c, vs(c, {3})).value);
}

TEST(Disconnected, MatchesOracle) {
    t::Rng rng(61);
    for (int i = 0; i < 100; ++i) {
        Graph g = t::random_graph(t::uniform(1, 11, rng), 0.15, rng);
        VertexSet x = t::random_subset(g.order(), 0.2, rng);
        t::MaskGraph mg(g);
        SolveResult r = pd_number_disconnected(g, x);
        EXPECT_EQ(r.value, t::restricted_minimum(mg, t::to_mask(x), t::OracleMode::PD).value);
        expect_valid(g, x, r);
    }
}

TEST(Reduction, Examples) {
    Graph p3 = path(3);
    SolveResult r = reduction_pd_number(p3, vs(p3, {0, 2}));
    EXPECT_EQ(r.value, 2u);
    EXPECT_EQ(r.method, Method::Reduction);
    EXPECT_EQ(r.witness, vs(p3, {0, 2}));
    Graph c = cycle(6);
    EXPECT_EQ(reduction_pd_number(c, c.empty_set()).value, 1u);
}

TEST(Reduction, MatchesOracle) {
    t::Rng rng(303);
    for (int i = 0; i < 120; ++i) {
        Graph g = t::random_graph(t::uniform(1, 9, rng), 0.3, rng);
        VertexSet x = t::random_subset(g.order(), 0.3, rng);
        t::MaskGraph mg(g);
        SolveResult r = reduction_pd_number(g, x);
        EXPECT_EQ(r.value, t::restricted_minimum(mg, t::to_mask(x), t::OracleMode::PD).value);
        expect_valid(g, x, r);
    }
}

TEST(Spread, Examples) {
    Graph sp = fig_spread().graph;
    EXPECT_EQ(spread(sp, fig_spread_ids::v), 0);
    EXPECT_EQ(spread(sp, fig_spread_ids::u), 0);
    Graph p = path(6);
    EXPECT_EQ(spread(p, 0), 0);
    EXPECT_EQ(spread(star(3), 0), -1);
    EXPECT_THROW(spread(path(1), 0), InputError);
}

TEST(Spread, SingleRestriction) {
    Graph sp = fig_spread().graph;
    EXPECT_EQ(z_restricted_single(sp, fig_spread_ids::v).value, 2u);
    EXPECT_EQ(z_restricted_single(sp, fig_spread_ids::u).value, 3u);
    for (std::size_t n = 2; n <= 6; ++n)
        for (Vertex v = 0; v < n; ++v) {
            SolveResult r = z_restricted_single(complete(n), v);
            EXPECT_EQ(r.value, n - 1);
            EXPECT_TRUE(r.witness.contains(v));
        }
}

TEST(Spread, MatchesOracle) {
    t::Rng rng(808);
    for (int i = 0; i < 80; ++i) {
        Graph g = t::random_graph(t::uniform(2, 9, rng), 0.35, rng);
        t::MaskGraph mg(g);
        const std::size_t z = t::restricted_minimum(mg, 0, t::OracleMode::ZF).value;
        for (Vertex v = 0; v < g.order(); ++v) {
            t::MaskGraph minus(delete_vertex(g, v));
            const long long zm = static_cast<long long>(t::restricted_minimum(minus, 0, t::OracleMode::ZF).value);
            int s = spread(g, v);
            EXPECT_EQ(s, static_cast<long long>(z) - zm);
            SolveResult r = z_restricted_single(g, v);
            EXPECT_EQ(r.value, t::restricted_minimum(mg, t::Mask{1} << v, t::OracleMode::ZF).value);
            EXPECT_TRUE(r.witness.contains(v));
            EXPECT_TRUE(is_zero_forcing_set(g, r.witness));
        }
    }
}

TEST(KRestricted, Examples) {
    Graph c = cycle(5);
    EXPECT_EQ(k_restricted_number(c, 0, Mode::PowerDomination), 1u);
    EXPECT_EQ(k_restricted_number(c, 0, Mode::ZeroForcing), 2u);
    EXPECT_EQ(k_restricted_number(path(5), 1, Mode::PowerDomination), 1u);
    EXPECT_EQ(k_restricted_number(star(4), 2, Mode::PowerDomination), 3u);
    SolveOptions tight;
    tight.guards.exhaustive_n = 4;
    EXPECT_THROW(k_restricted_number(path(5), 1, Mode::PowerDomination, tight), GuardExceeded);
}

TEST(Guards, EnvironmentOverride) {
    ::setenv("PDZF_GUARD_N", "9", 1);
    Guards g = Guards::from_env();
    ::unsetenv("PDZF_GUARD_N");
    EXPECT_EQ(g.oracle_n, 9u);
    EXPECT_EQ(g.exhaustive_n, 9u);
    EXPECT_EQ(g.cg_n, Guards{}.cg_n);
    Guards d = Guards::from_env();
    EXPECT_EQ(d.oracle_n, Guards{}.oracle_n);
}

TEST(Mode, Parsing) {
    EXPECT_EQ(parse_mode("pd"), Mode::PowerDomination);
    EXPECT_EQ(parse_mode("zf"), Mode::ZeroForcing);
    EXPECT_EQ(parse_mode("dom"), Mode::Domination);
    EXPECT_FALSE(parse_mode("x").has_value());
    EXPECT_STREQ(to_string(Mode::ZeroForcing), "zf");
    EXPECT_STREQ(to_string(Method::ConstraintGeneration), "constraint_generation");
}
