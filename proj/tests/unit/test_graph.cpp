#include <gtest/gtest.h>

#include <sstream>

#include "pdzf/constructions.hpp"
#include "pdzf/error.hpp"
#include "pdzf/graph.hpp"
#include "support/random_graphs.hpp"

using namespace pdzf;

namespace {

VertexSet vs(const Graph& g, std::initializer_list<Vertex> m) { return VertexSet::of(g.order(), m); }

const char* kFigure = "7 6\n0 2\n1 2\n2 3\n3 4\n4 5\n4 6";

}  // namespace

TEST(VertexSet, BasicOperations) {
    VertexSet a = VertexSet::of(6, {0, 3, 5});
    VertexSet b = VertexSet::of(6, {3, 4});
    EXPECT_EQ((a | b).to_vector(), (std::vector<Vertex>{0, 3, 4, 5}));
    EXPECT_EQ((a & b).to_vector(), (std::vector<Vertex>{3}));
    EXPECT_EQ((a - b).to_vector(), (std::vector<Vertex>{0, 5}));
    EXPECT_EQ(a.complement().to_vector(), (std::vector<Vertex>{1, 2, 4}));
    EXPECT_EQ(a.to_string(), "{0,3,5}");
    EXPECT_EQ(a.first(), 0u);
    EXPECT_EQ(VertexSet(4).first(), 4u);
    EXPECT_TRUE(VertexSet::of(6, {3}).is_subset_of(a));
    EXPECT_THROW(VertexSet::of(3, {3}), InputError);
}

TEST(VertexSet, ShortlexOrder) {
    ShortlexLess less;
    EXPECT_TRUE(less(VertexSet::of(5, {4}), VertexSet::of(5, {0, 1})));
    EXPECT_TRUE(less(VertexSet::of(5, {0, 2}), VertexSet::of(5, {0, 3})));
    EXPECT_TRUE(less(VertexSet::of(5, {0, 4}), VertexSet::of(5, {1, 2})));
    EXPECT_FALSE(less(VertexSet::of(5, {1, 2}), VertexSet::of(5, {1, 2})));
}

TEST(GraphIo, ParsesPath) {
    Graph g = from_edge_list("3 2\n0 1\n1 2");
    EXPECT_EQ(g, path(3));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(GraphIo, ParsesFigureGraph) {
    Graph g = from_edge_list(kFigure);
    EXPECT_EQ(g, fig_examples().graph);
    EXPECT_EQ(g.degree(2), 3u);
    EXPECT_EQ(g.degree(4), 3u);
}

TEST(GraphIo, RejectsSelfLoopWithLine) {
    try {
        from_edge_list("2 1\n0 0");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ParseErrorKind::SelfLoop);
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(GraphIo, RejectsMalformedInputs) {
    auto kind_of = [](const char* text) {
        try {
            from_edge_list(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        ADD_FAILURE() << "no error for " << text;
        return ParseErrorKind::MalformedHeader;
    };
    EXPECT_EQ(kind_of(""), ParseErrorKind::MalformedHeader);
    EXPECT_EQ(kind_of("x 1\n"), ParseErrorKind::MalformedHeader);
    EXPECT_EQ(kind_of("3 1\n0\n"), ParseErrorKind::MalformedEdge);
    EXPECT_EQ(kind_of("3 1\n0 3\n"), ParseErrorKind::VertexOutOfRange);
    EXPECT_EQ(kind_of("3 2\n0 1\n1 0\n"), ParseErrorKind::DuplicateEdge);
    EXPECT_EQ(kind_of("3 2\n0 1\n"), ParseErrorKind::EdgeCountMismatch);
    EXPECT_EQ(kind_of("3 1\n0 1\n1 2\n"), ParseErrorKind::EdgeCountMismatch);
}

TEST(GraphIo, CommentsCountTowardLineNumbers) {
    try {
        from_edge_list("# header\n3 1\n# edge follows\n1 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
    }
    EXPECT_EQ(from_edge_list("# c\n3 2\n0 1\n# mid\n1 2\n"), path(3));
}

TEST(GraphIo, RoundTripAndDigest) {
    pdzf::testing::Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        Graph g = pdzf::testing::random_graph(pdzf::testing::uniform(1, 12, rng), 0.4, rng);
        std::string text = to_edge_list(g);
        EXPECT_EQ(from_edge_list(text), g);
        EXPECT_EQ(digest(from_edge_list(text)), digest(g));
        EXPECT_EQ(digest(g).size(), 16u);
    }
    EXPECT_NE(digest(path(4)), digest(star(3)));
    std::istringstream in(to_edge_list(cycle(5)));
    EXPECT_EQ(from_edge_list(in), cycle(5));
}

TEST(Graph, FromEdgesValidates) {
    std::vector<Edge> loop{{1, 1}};
    std::vector<Edge> dup{{0, 1}, {1, 0}};
    std::vector<Edge> range{{0, 5}};
    EXPECT_THROW(Graph::from_edges(3, loop), InputError);
    EXPECT_THROW(Graph::from_edges(3, dup), InputError);
    EXPECT_THROW(Graph::from_edges(3, range), InputError);
}

TEST(Graph, SymmetricAndSimple) {
    pdzf::testing::Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        Graph g = pdzf::testing::random_graph(10, 0.5, rng);
        std::size_t degree_sum = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            EXPECT_FALSE(g.adjacent(v, v));
            for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.adjacent(w, v));
            degree_sum += g.degree(v);
        }
        EXPECT_EQ(degree_sum, 2 * g.edge_count());
    }
}

TEST(Graph, ClosedNeighborhood) {
    Graph p3 = path(3);
    EXPECT_TRUE(closed_neighborhood(p3, vs(p3, {1})).is_full());
    Graph fig = fig_examples().graph;
    EXPECT_EQ(closed_neighborhood(fig, vs(fig, {2})), vs(fig, {0, 1, 2, 3}));
    Graph k5 = complete(5);
    EXPECT_TRUE(closed_neighborhood(k5, vs(k5, {0})).is_full());
    EXPECT_TRUE(closed_neighborhood(k5, k5.empty_set()).empty());
}

TEST(Graph, Components) {
    Graph g = disjoint_union(path(3), complete(2));
    auto comps = components(g);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0], vs(g, {0, 1, 2}));
    EXPECT_EQ(comps[1], vs(g, {3, 4}));
    EXPECT_EQ(components(cycle(6)).size(), 1u);
    auto singles = components(edgeless(3));
    ASSERT_EQ(singles.size(), 3u);
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(singles[v], VertexSet::of(3, {v}));
    EXPECT_FALSE(is_connected(g));
    EXPECT_TRUE(is_connected(cycle(4)));
}

TEST(Graph, IsTree) {
    EXPECT_TRUE(is_tree(path(5)));
    EXPECT_TRUE(is_tree(star(4)));
    EXPECT_TRUE(is_tree(path(1)));
    EXPECT_FALSE(is_tree(cycle(4)));
    EXPECT_FALSE(is_tree(edgeless(2)));
    EXPECT_FALSE(is_tree(Graph()));
    pdzf::testing::Rng rng(3);
    for (int i = 0; i < 10; ++i) EXPECT_TRUE(is_tree(pdzf::testing::random_tree(20, rng)));
}

TEST(Graph, InducedSubgraph) {
    Graph fig = fig_examples().graph;
    InducedSubgraph sub = induced_subgraph(fig, vs(fig, {0, 1, 2, 3}));
    EXPECT_EQ(sub.graph.order(), 4u);
    EXPECT_EQ(sub.graph.edge_count(), 3u);
    EXPECT_EQ(sub.graph.degree(sub.from_parent[2]), 3u);
    EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(sub.from_parent[5], InducedSubgraph::absent);
    EXPECT_EQ(sub.lift(VertexSet::of(4, {3})), vs(fig, {3}));
    EXPECT_EQ(sub.restrict(vs(fig, {3, 4, 5})), VertexSet::of(4, {3}));

    InducedSubgraph whole = induced_subgraph(fig, fig.vertices());
    EXPECT_EQ(whole.graph, fig);
    for (Vertex v = 0; v < fig.order(); ++v) EXPECT_EQ(whole.to_parent[v], v);

    EXPECT_TRUE(induced_subgraph(fig, fig.empty_set()).graph.empty());
}

TEST(Graph, InducedSubgraphRenumbers) {
    Graph c = cycle(6);
    InducedSubgraph sub = induced_subgraph(c, VertexSet::of(6, {1, 2, 4}));
    EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{1, 2, 4}));
    EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(Graph, DeleteVertex) {
    EXPECT_EQ(delete_vertex(path(3), 1), edgeless(2));
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(delete_vertex(complete(4), v), complete(3));
    EXPECT_EQ(delete_vertex(star(3), 0), edgeless(3));
    EXPECT_EQ(delete_vertex(path(4), 0), path(3));
    EXPECT_THROW(delete_vertex(path(3), 3), InputError);
}

TEST(Graph, MaxDegree) {
    EXPECT_EQ(max_degree(complete(6)), 5u);
    EXPECT_EQ(max_degree(path(5)), 2u);
    EXPECT_EQ(max_degree(fig_examples().graph), 3u);
    EXPECT_EQ(max_degree(edgeless(3)), 0u);
    EXPECT_THROW(max_degree(Graph()), InputError);
}

TEST(Graph, IsolatedVerticesAndUnion) {
    Graph g = disjoint_union(path(2), edgeless(2));
    EXPECT_EQ(isolated_vertices(g), vs(g, {2, 3}));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(Graph, RangeChecks) {
    Graph g = path(3);
    std::vector<Vertex> bad{0, 7};
    try {
        make_set(g, bad, "X");
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("7"), std::string::npos);
    }
}
