#include "graphjoin/graph.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "test_util.hpp"

using graphjoin::Graph;
using graphjoin::make_complete_bipartite;
using graphjoin::make_cycle;
using graphjoin::make_graph;
using graphjoin::make_path;
using graphjoin::make_two_loop;
using graphjoin::parse_graph;
using graphjoin::Rational;
using graphjoin::rational;
using graphjoin::tensor_product;
using graphjoin::transition_matrix;

namespace {

const char* kTriangleText =
    "graph T\n"
    "vertex a\n"
    "vertex b\n"
    "vertex c\n"
    "edge a b 1\n"
    "edge b c 1\n"
    "edge a c 1\n";

Rational ordered_sum(const Graph& g) {
    Rational total(0);
    for (const auto& [key, value] : g.weights()) total += value;
    return total;
}

}  // namespace

TEST(ParseGraph, NormalizesRawWeights) {
    const Graph t = parse_graph(kTriangleText);
    EXPECT_EQ(t.vertex_count(), 3);
    EXPECT_EQ(t.weight(0, 1), rational(1, 6));
    EXPECT_EQ(t.weight(1, 0), rational(1, 6));
    EXPECT_EQ(t.normalization(), Rational(6));
    EXPECT_EQ(ordered_sum(t), Rational(1));
    EXPECT_EQ(t.weights(), make_cycle(3).weights());
}

TEST(ParseGraph, LoopsCountOnce) {
    const Graph g = parse_graph("graph L\nvertex a\nvertex b\nedge a b 1\nloop a 2\n");
    // Raw ordered sum is 1 + 1 + 2 = 4.
    EXPECT_EQ(g.weight(0, 0), rational(1, 2));
    EXPECT_EQ(g.weight(0, 1), rational(1, 4));
    EXPECT_EQ(ordered_sum(g), Rational(1));
    EXPECT_EQ(g.degree(0), rational(3, 4));
    EXPECT_EQ(g.degree(1), rational(1, 4));
}

TEST(ParseGraph, RejectsMalformedInput) {
    using graphjoin::ErrorCode;
    gjtest::expect_error(ErrorCode::DuplicateEdge, [] {
        parse_graph("graph D\nvertex a\nvertex b\nedge a b 1\nedge b a 2\n");
    });
    gjtest::expect_error(ErrorCode::UnknownVertex,
                         [] { parse_graph("graph U\nvertex a\nedge a b 1\n"); });
    gjtest::expect_error(ErrorCode::InvalidWeight,
                         [] { parse_graph("graph W\nvertex a\nvertex b\nedge a b 0\n"); });
    gjtest::expect_error(ErrorCode::InvalidWeight,
                         [] { parse_graph("graph W\nvertex a\nvertex b\nedge a b -1/2\n"); });
    gjtest::expect_error(ErrorCode::EmptyGraph, [] { parse_graph("graph E\nvertex a\n"); });
    gjtest::expect_error(ErrorCode::ParseError, [] { parse_graph("vertex a\n"); });
    gjtest::expect_error(ErrorCode::ParseError,
                         [] { parse_graph("graph P\nvertex a\nfrobnicate a\n"); });
    gjtest::expect_error(ErrorCode::DuplicateEdge,
                         [] { parse_graph("graph D\nvertex a\nloop a 1\nloop a 1\n"); });
    gjtest::expect_error(ErrorCode::ParseError,
                         [] { parse_graph("graph D\nvertex a\nvertex a\nloop a 1\n"); });
}

TEST(ParseGraph, TextRoundTrip) {
    for (const Graph& g : {make_cycle(5), make_path(3), gjtest::lollipop_g(),
                           make_two_loop(rational(1, 3), rational(2, 3))}) {
        const Graph back = parse_graph(graphjoin::graph_to_text(g));
        EXPECT_EQ(back, g);
    }
}

TEST(ParseGraph, JsonMirrorsText) {
    const Graph t = parse_graph(kTriangleText);
    const Graph from_json = parse_graph(graphjoin::graph_to_json(t));
    EXPECT_EQ(from_json, t);
    const Graph direct = parse_graph(
        R"({"name":"T","vertices":["a","b","c"],)"
        R"("edges":[["a","b","1"],["b","c","1"],["a","c","1"]],"loops":[]})");
    EXPECT_EQ(direct, t);
}

TEST(Families, CanonicalWeights) {
    EXPECT_EQ(make_cycle(3).weight(0, 1), rational(1, 6));
    EXPECT_EQ(make_cycle(4).directed_edge_count(), 8);
    EXPECT_EQ(make_path(2).weight(0, 1), rational(1, 2));
    EXPECT_EQ(make_path(5).weight(1, 2), rational(1, 8));
    const Graph k22 = make_complete_bipartite(2, 2);
    EXPECT_EQ(k22.directed_edge_count(), 8);
    EXPECT_EQ(k22.weight(k22.index_of("a0"), k22.index_of("b1")), rational(1, 8));
    const Graph two = make_two_loop(rational(1, 3), rational(2, 3));
    EXPECT_EQ(two.weight(0, 0), rational(1, 3));
    EXPECT_EQ(two.weight(1, 1), rational(2, 3));
    EXPECT_EQ(two.weight(0, 1), Rational(0));
}

TEST(Families, SizeGuards) {
    using graphjoin::ErrorCode;
    gjtest::expect_error(ErrorCode::InvalidSize, [] { make_cycle(2); });
    gjtest::expect_error(ErrorCode::InvalidSize, [] { make_path(1); });
    gjtest::expect_error(ErrorCode::InvalidSize, [] { make_complete_bipartite(0, 2); });
    gjtest::expect_error(ErrorCode::InvalidWeight, [] { make_two_loop(Rational(0), Rational(1)); });
    // Raw masses are normalized like any other weight data.
    const Graph scaled = make_two_loop(rational(1, 2), rational(1, 3));
    EXPECT_EQ(scaled.weight(0, 0), rational(3, 5));
    EXPECT_EQ(scaled.weight(1, 1), rational(2, 5));
}

TEST(Degrees, MatchHandComputation) {
    const Graph c4 = make_cycle(4);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(c4.degree(i), rational(1, 4));

    const Graph p3 = make_path(3);
    EXPECT_EQ(p3.degree(0), rational(1, 4));
    EXPECT_EQ(p3.degree(1), rational(1, 2));
    EXPECT_EQ(p3.degree(2), rational(1, 4));

    const Graph loop = parse_graph("graph S\nvertex a\nloop a 1\n");
    EXPECT_EQ(loop.degree(0), Rational(1));
    EXPECT_EQ(graphjoin::degree(p3), p3.degrees());
}

TEST(Degrees, SumCountsLoopDegreesOnce) {
    for (const Graph& g : {gjtest::lollipop_g(), gjtest::lollipop_h(), make_cycle(6)}) {
        Rational total(0);
        for (const auto& d : g.degrees()) total += d;
        // Each loop contributes to exactly one degree, so the degree sum
        // equals the ordered-pair sum.
        EXPECT_EQ(total, Rational(1)) << g.name();
    }
}

TEST(TensorProduct, CycleTimesEdge) {
    const auto result = tensor_product(make_cycle(3), make_path(2));
    EXPECT_EQ(result.graph.vertex_count(), 6);
    EXPECT_EQ(result.graph.directed_edge_count(), 12);
    for (const auto& [key, value] : result.graph.weights()) {
        EXPECT_EQ(value, rational(1, 12));
    }
    // Coordinates map back to the factors consistently with the labels.
    const graphjoin::Graph left = make_cycle(3);
    const graphjoin::Graph right = make_path(2);
    for (int i = 0; i < result.graph.vertex_count(); ++i) {
        const auto [u, v] = result.coords[i];
        EXPECT_EQ(result.graph.label(i), "(" + left.label(u) + "," + right.label(v) + ")");
    }
}

TEST(TensorProduct, DegreesMultiply) {
    const Graph g = make_cycle(3);
    const Graph h = make_path(3);
    const auto result = tensor_product(g, h);
    for (int i = 0; i < result.graph.vertex_count(); ++i) {
        const auto [u, v] = result.coords[i];
        EXPECT_EQ(result.graph.degree(i), Rational(g.degree(u) * h.degree(v)));
    }
}

TEST(TensorProduct, LoopIsNeutral) {
    const Graph g = make_cycle(4);
    const Graph loop = parse_graph("graph S\nvertex z\nloop z 1\n");
    const auto result = tensor_product(g, loop);
    ASSERT_EQ(result.graph.vertex_count(), g.vertex_count());
    for (const auto& [key, value] : g.weights()) {
        EXPECT_EQ(result.graph.weight(key.first, key.second), value);
    }
}

TEST(TransitionMatrix, RowsAreExactConditionals) {
    const auto p = transition_matrix(make_cycle(3));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            EXPECT_EQ(p.at(i, j), i == j ? Rational(0) : rational(1, 2));
        }
    }
    const auto flip = transition_matrix(make_path(2));
    EXPECT_EQ(flip.at(0, 1), Rational(1));
    EXPECT_EQ(flip.at(1, 0), Rational(1));
    EXPECT_EQ(flip.at(0, 0), Rational(0));
    gjtest::expect_error(graphjoin::ErrorCode::NotFullySupported,
                         [] { transition_matrix(gjtest::edge_plus_isolated()); });
}

TEST(Predicates, StructureChecks) {
    const Graph c4 = make_cycle(4);
    EXPECT_TRUE(graphjoin::is_connected(c4));
    EXPECT_FALSE(graphjoin::is_forest(c4));
    EXPECT_TRUE(graphjoin::is_bipartite_structural(c4));
    EXPECT_FALSE(graphjoin::has_self_loops(c4));
    EXPECT_TRUE(graphjoin::is_uniformly_weighted(c4));

    const Graph p5 = make_path(5);
    EXPECT_TRUE(graphjoin::is_connected(p5));
    EXPECT_TRUE(graphjoin::is_forest(p5));
    EXPECT_TRUE(graphjoin::is_bipartite_structural(p5));

    EXPECT_FALSE(graphjoin::is_bipartite_structural(make_cycle(5)));
    EXPECT_FALSE(graphjoin::is_uniformly_weighted(gjtest::triangle112()));

    const Graph two = make_two_loop(rational(1, 2), rational(1, 2));
    EXPECT_FALSE(graphjoin::is_connected(two));
    EXPECT_TRUE(graphjoin::is_fully_supported(two));
    EXPECT_TRUE(graphjoin::has_self_loops(two));
    EXPECT_FALSE(graphjoin::is_forest(gjtest::lollipop_h()));
    EXPECT_FALSE(graphjoin::is_bipartite_structural(gjtest::lollipop_h()));

    EXPECT_FALSE(graphjoin::is_fully_supported(gjtest::edge_plus_isolated()));
    EXPECT_FALSE(graphjoin::is_connected(gjtest::edge_plus_isolated()));
}

TEST(Predicates, ComponentsPartitionTheVertices) {
    const auto comps = graphjoin::connected_components(gjtest::two_triangles());
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].size() + comps[1].size(), 6u);
    EXPECT_EQ(graphjoin::connected_components(make_cycle(7)).size(), 1u);
    // An isolated vertex forms its own component.
    EXPECT_EQ(graphjoin::connected_components(gjtest::edge_plus_isolated()).size(), 2u);
}

TEST(Graph, NeighborsAndCounts) {
    const Graph g = gjtest::lollipop_g();
    EXPECT_EQ(g.neighbors(0), std::vector<int>{1});
    EXPECT_EQ(g.neighbors(1), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(g.neighbors(2), (std::vector<int>{1, 2}));
    EXPECT_EQ(g.directed_edge_count(), 6);
    EXPECT_EQ(g.undirected_edge_count(), 2);
    EXPECT_EQ(make_cycle(5).undirected_edge_count(), 5);
}

TEST(Graph, EqualityIgnoresName) {
    const Graph a = make_cycle(3);
    const Graph b = parse_graph(
        "graph renamed\nvertex u0\nvertex u1\nvertex u2\n"
        "edge u0 u1 5\nedge u1 u2 5\nedge u0 u2 5\n");
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a == make_cycle(4));
}

TEST(Graph, LabelLookup) {
    const Graph g = make_complete_bipartite(2, 3);
    EXPECT_EQ(g.index_of("b2"), g.vertex_count() - 1);
    EXPECT_EQ(g.label(g.index_of("a1")), "a1");
    gjtest::expect_error(graphjoin::ErrorCode::UnknownVertex, [&] { g.index_of("zz"); });
}
