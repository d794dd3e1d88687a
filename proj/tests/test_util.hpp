#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "graphjoin/errors.hpp"
#include "graphjoin/graph.hpp"
#include "graphjoin/joining.hpp"
#include "graphjoin/rational.hpp"
#include "graphjoin/rng.hpp"

namespace gjtest {

using graphjoin::Graph;
using graphjoin::Rational;
using graphjoin::rational;

template <typename Fn>
void expect_error(graphjoin::ErrorCode code, Fn&& fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << graphjoin::error_name(code) << ", nothing was thrown";
    } catch (const graphjoin::Error& e) {
        EXPECT_EQ(static_cast<int>(e.code()), static_cast<int>(code)) << e.what();
    }
}

// Lollipop-shaped companion pair used across suites: G has a path edge, a
// second path edge, and loops on the two rightmost vertices; H is a single
// edge with a loop on one endpoint. Both are connected and fully supported
// but carry self-loops, so only the rank procedures apply to the pair.
inline Graph lollipop_g() {
    return graphjoin::make_graph("G", {"g1", "g2", "g3"},
                                 {{"g1", "g2", Rational(1)}, {"g2", "g3", Rational(1)}},
                                 {{"g2", Rational(1)}, {"g3", Rational(1)}});
}

inline Graph lollipop_h() {
    return graphjoin::make_graph("H", {"h1", "h2"}, {{"h1", "h2", Rational(1)}},
                                 {{"h2", Rational(1)}});
}

// The non-product joining supported on a 4-cycle of product states plus one
// product loop; its degree function vanishes on (g1,h2) and (g2,h1).
inline graphjoin::WeightJoining lollipop_joining() {
    using graphjoin::JoiningKey;
    const Graph g = lollipop_g();
    const Graph h = lollipop_h();
    std::vector<std::pair<JoiningKey, Rational>> raw = {
        {{{0, 0}, {1, 1}}, rational(1, 6)},  {{{1, 1}, {2, 0}}, rational(1, 12)},
        {{{2, 0}, {2, 1}}, rational(1, 12)}, {{{2, 1}, {1, 1}}, rational(1, 12)},
        {{{1, 1}, {1, 1}}, rational(1, 6)},
    };
    return graphjoin::make_joining(g, h, raw);
}

// Looped path on (r+1)/2 vertices (r odd): weight 1/r on consecutive pairs
// and on the loop at the far end. The canonical small graph with loops that
// cycles and paths both factor onto.
inline Graph looped_path(int r) {
    const int n = (r + 1) / 2;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    std::vector<std::tuple<std::string, std::string, Rational>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({labels[i], labels[i + 1], Rational(1)});
    std::vector<std::pair<std::string, Rational>> loops = {{labels[n - 1], Rational(1)}};
    return graphjoin::make_graph("K" + std::to_string(r), labels, edges, loops);
}

// Triangle with edge masses 1:1:2; its walk has spectrum {1, -1/3, -2/3}.
inline Graph triangle112() {
    return graphjoin::make_graph("T112", {"a", "b", "c"},
                                 {{"a", "b", Rational(1)},
                                  {"b", "c", Rational(1)},
                                  {"a", "c", Rational(2)}},
                                 {});
}

// Edge plus an isolated vertex: connected fails and full support fails.
inline Graph edge_plus_isolated() {
    return graphjoin::make_graph("Iso", {"a", "b", "c"}, {{"a", "b", Rational(1)}}, {});
}

// Two disjoint triangles; fully supported but disconnected.
inline Graph two_triangles() {
    return graphjoin::make_graph("TT", {"a0", "a1", "a2", "b0", "b1", "b2"},
                                 {{"a0", "a1", Rational(1)},
                                  {"a1", "a2", Rational(1)},
                                  {"a0", "a2", Rational(1)},
                                  {"b0", "b1", Rational(1)},
                                  {"b1", "b2", Rational(1)},
                                  {"b0", "b2", Rational(1)}},
                                 {});
}

// Deterministic connected random graph on n vertices: a random attachment
// tree plus extra random edges, weights in 1..5. Optional random loops.
inline Graph random_connected_graph(graphjoin::SplitMix64& rng, int n, bool allow_loops) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back("v" + std::to_string(i / 10) + std::to_string(i % 10));
    }
    std::vector<std::tuple<std::string, std::string, Rational>> edges;
    std::vector<std::pair<std::string, Rational>> loops;
    auto weight = [&rng]() { return Rational(1 + static_cast<long>(rng.next() % 5)); };
    for (int i = 1; i < n; ++i) {
        const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i));
        edges.push_back({labels[j], labels[i], weight()});
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool tree_edge = [&] {
                for (const auto& e : edges) {
                    if (std::get<0>(e) == labels[i] && std::get<1>(e) == labels[j]) return true;
                }
                return false;
            }();
            if (!tree_edge && rng.next() % 4 == 0) edges.push_back({labels[i], labels[j], weight()});
        }
        if (allow_loops && rng.next() % 4 == 0) loops.push_back({labels[i], weight()});
    }
    if (n == 1) loops.push_back({labels[0], Rational(1)});
    return graphjoin::make_graph("R", labels, edges, loops);
}

}  // namespace gjtest
