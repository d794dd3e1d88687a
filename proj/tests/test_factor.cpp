#include "graphjoin/factor.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "graphjoin/graph.hpp"
#include "graphjoin/joining.hpp"
#include "graphjoin/linalg.hpp"
#include "test_util.hpp"

using graphjoin::common_factor_search;
using graphjoin::compose_factors;
using graphjoin::ErrorCode;
using graphjoin::FactorMap;
using graphjoin::find_factor_maps;
using graphjoin::Graph;
using graphjoin::make_cycle;
using graphjoin::make_path;
using graphjoin::mutual_factor_isomorphism;
using graphjoin::quotient_graph;
using graphjoin::Rational;
using graphjoin::rational;
using graphjoin::verify_factor;
using graphjoin::verify_factor_connected;

namespace {

std::vector<int> mod_map(int source_size, int modulus) {
    std::vector<int> phi(source_size);
    for (int i = 0; i < source_size; ++i) phi[i] = i % modulus;
    return phi;
}

}  // namespace

TEST(VerifyFactor, CyclesFoldOntoDivisorCycles) {
    EXPECT_TRUE(verify_factor(make_cycle(6), make_cycle(3), mod_map(6, 3)).first);
    EXPECT_TRUE(verify_factor(make_cycle(9), make_cycle(3), mod_map(9, 3)).first);
    EXPECT_TRUE(verify_factor(make_cycle(4), make_path(2), mod_map(4, 2)).first);
    EXPECT_TRUE(verify_factor(make_cycle(6), make_path(2), mod_map(6, 2)).first);
}

TEST(VerifyFactor, ViolationsAreItemized) {
    // Rotating the mod-3 map by one breaks nothing: it is still a factor map.
    std::vector<int> rotated = {1, 2, 0, 1, 2, 0};
    EXPECT_TRUE(verify_factor(make_cycle(6), make_cycle(3), rotated).first);

    // Sending neighbors to non-neighbors fails the transition condition.
    const auto [ok, violations] =
        verify_factor(make_cycle(6), make_cycle(3), {0, 0, 1, 1, 2, 2});
    EXPECT_FALSE(ok);
    bool saw_transition = false;
    for (const auto& v : violations) {
        if (v.condition == "transition") {
            saw_transition = true;
            EXPECT_NE(v.residual, Rational(0));
        }
    }
    EXPECT_TRUE(saw_transition);

    // A non-surjective assignment is reported as such.
    const auto [ok2, violations2] =
        verify_factor(make_cycle(6), make_cycle(3), {0, 1, 0, 1, 0, 1});
    EXPECT_FALSE(ok2);
    bool saw_surjectivity = false;
    for (const auto& v : violations2) saw_surjectivity |= v.condition == "surjectivity";
    EXPECT_TRUE(saw_surjectivity);

    gjtest::expect_error(ErrorCode::ShapeError,
                         [] { verify_factor(make_cycle(6), make_cycle(3), {0, 1, 2}); });
    gjtest::expect_error(ErrorCode::UnknownVertex,
                         [] { verify_factor(make_cycle(6), make_cycle(3), {0, 1, 2, 0, 1, 7}); });
}

TEST(VerifyFactor, ConnectedVariantAgreesOnConnectedTargets) {
    const std::vector<std::pair<std::pair<Graph, Graph>, std::vector<int>>> cases = {
        {{make_cycle(6), make_cycle(3)}, mod_map(6, 3)},
        {{make_cycle(6), make_cycle(3)}, {0, 0, 1, 1, 2, 2}},
        {{make_cycle(4), make_path(2)}, mod_map(4, 2)},
        {{make_cycle(9), gjtest::looped_path(3)}, {0, 1, 1, 0, 1, 1, 0, 1, 1}},
    };
    for (const auto& [pair, phi] : cases) {
        EXPECT_EQ(verify_factor(pair.first, pair.second, phi).first,
                  verify_factor_connected(pair.first, pair.second, phi).first);
    }
    gjtest::expect_error(ErrorCode::RequiresConnected, [] {
        verify_factor_connected(gjtest::two_triangles(), gjtest::two_triangles(),
                                {0, 1, 2, 3, 4, 5});
    });
}

TEST(ProjectionFactors, JoiningsProjectOntoTheirComponents) {
    const auto product = graphjoin::product_joining(make_cycle(3), make_path(2));
    const auto [pi1, pi2] = graphjoin::projection_factors(product);
    EXPECT_TRUE(pi1.verified);
    EXPECT_TRUE(pi2.verified);
    EXPECT_EQ(pi1.target, make_cycle(3));
    EXPECT_EQ(pi2.target, make_path(2));
    EXPECT_EQ(pi1.source.vertex_count(), 6);

    const auto diag = graphjoin::diagonal_cycle_joining(3, 4);
    const auto [d1, d2] = graphjoin::projection_factors(diag);
    EXPECT_TRUE(d1.verified);
    EXPECT_TRUE(d2.verified);
    EXPECT_EQ(d1.source.vertex_count(), 12);
}

TEST(ProjectionFactors, RejectsInvalidJoinings) {
    const auto j = graphjoin::product_joining(make_cycle(3), make_path(2));
    auto entries = j.entries();
    entries.begin()->second *= 2;
    const graphjoin::WeightJoining bad(j.left(), j.right(), entries, Rational(1));
    gjtest::expect_error(ErrorCode::InvalidJoining, [&] { graphjoin::projection_factors(bad); });
}

TEST(ComposeFactors, FactorOfFactorIsAFactor) {
    const Graph c12 = make_cycle(12);
    const Graph c6 = make_cycle(6);
    const Graph c3 = make_cycle(3);
    const auto inner = verify_factor(c12, c6, mod_map(12, 6));
    ASSERT_TRUE(inner.first);
    FactorMap f2{c12, c6, mod_map(12, 6), true};
    FactorMap f1{c6, c3, mod_map(6, 3), true};
    const FactorMap composite = compose_factors(f1, f2);
    EXPECT_TRUE(composite.verified);
    EXPECT_EQ(composite.source, c12);
    EXPECT_EQ(composite.target, c3);
    EXPECT_EQ(composite.map, mod_map(12, 3));
}

TEST(ComposeFactors, MismatchedChainsAreRejected) {
    FactorMap f1{make_cycle(6), make_cycle(3), mod_map(6, 3), true};
    FactorMap f2{make_cycle(12), make_cycle(4), mod_map(12, 4), true};
    gjtest::expect_error(ErrorCode::CompositionMismatch, [&] { compose_factors(f1, f2); });
    // Claimed-but-wrong maps are re-verified.
    FactorMap bogus{make_cycle(6), make_cycle(3), {0, 0, 1, 1, 2, 2}, true};
    FactorMap f3{make_cycle(12), make_cycle(6), mod_map(12, 6), true};
    gjtest::expect_error(ErrorCode::CompositionMismatch, [&] { compose_factors(bogus, f3); });
}

TEST(FindFactorMaps, ExhaustiveSearchMatchesTheKnownCounts) {
    const auto c6_to_c3 = find_factor_maps(make_cycle(6), make_cycle(3));
    EXPECT_EQ(c6_to_c3.size(), 6u);  // three rotations times two reflections
    for (const auto& f : c6_to_c3) {
        EXPECT_TRUE(f.verified);
        EXPECT_TRUE(verify_factor(f.source, f.target, f.map).first);
    }

    const auto c9_to_k = find_factor_maps(make_cycle(9), gjtest::looped_path(3));
    EXPECT_EQ(c9_to_k.size(), 3u);
    const std::vector<int> expected = {0, 1, 1, 0, 1, 1, 0, 1, 1};
    bool found = false;
    for (const auto& f : c9_to_k) found |= f.map == expected;
    EXPECT_TRUE(found);

    const auto p4_to_k = find_factor_maps(make_path(4), gjtest::looped_path(3));
    ASSERT_EQ(p4_to_k.size(), 1u);
    EXPECT_EQ(p4_to_k.front().map, (std::vector<int>{0, 1, 1, 0}));
}

TEST(FindFactorMaps, SmallSourcesAndBudgets) {
    EXPECT_TRUE(find_factor_maps(make_path(2), make_cycle(3)).empty());
    gjtest::expect_error(ErrorCode::SearchBudgetExceeded,
                         [] { find_factor_maps(make_cycle(6), make_cycle(3), 10); });
}

TEST(QuotientGraph, ConsistentPartitionsProduceFactors) {
    const auto c3 = quotient_graph(make_cycle(6), {{0, 3}, {1, 4}, {2, 5}});
    ASSERT_TRUE(c3.has_value());
    EXPECT_EQ(c3->weights(), make_cycle(3).weights());
    EXPECT_EQ(c3->normalization(), Rational(1));

    const auto p2 = quotient_graph(make_cycle(6), {{0, 2, 4}, {1, 3, 5}});
    ASSERT_TRUE(p2.has_value());
    EXPECT_EQ(p2->weights(), make_path(2).weights());

    // Folding a cycle across a diameter leaves a looped path.
    const auto folded = quotient_graph(make_cycle(9), {{0, 3, 6}, {1, 2, 4, 5, 7, 8}});
    ASSERT_TRUE(folded.has_value());
    EXPECT_EQ(folded->weights(), gjtest::looped_path(3).weights());
}

TEST(QuotientGraph, InconsistentPartitionsReturnNothing) {
    EXPECT_FALSE(quotient_graph(make_cycle(5), {{0, 1}, {2, 3, 4}}).has_value());
    gjtest::expect_error(ErrorCode::ShapeError,
                         [] { quotient_graph(make_cycle(5), {{0, 1}, {2, 3}}); });
    gjtest::expect_error(ErrorCode::ShapeError,
                         [] { quotient_graph(make_cycle(5), {{0, 1}, {1, 2, 3, 4}}); });
}

TEST(CommonFactorSearch, SharedCycleStructureIsFound) {
    const auto common = common_factor_search(make_cycle(6), make_cycle(9), 3);
    ASSERT_FALSE(common.empty());
    bool has_triangle = false;
    for (const auto& c : common) {
        EXPECT_TRUE(c.from_g.verified);
        EXPECT_TRUE(c.from_h.verified);
        has_triangle |= c.factor.weights() == make_cycle(3).weights();
    }
    EXPECT_TRUE(has_triangle);
}

TEST(CommonFactorSearch, DisjointPairsShareNothing) {
    EXPECT_TRUE(common_factor_search(make_cycle(3), make_cycle(4), 4).empty());
    EXPECT_TRUE(common_factor_search(gjtest::lollipop_g(), gjtest::lollipop_h(), 3).empty());
    gjtest::expect_error(ErrorCode::InvalidSize,
                         [] { common_factor_search(make_cycle(3), make_cycle(4), 1); });
    gjtest::expect_error(ErrorCode::SearchBudgetExceeded,
                         [] { common_factor_search(make_cycle(6), make_cycle(9), 3, 3); });
}

TEST(MutualFactorIsomorphism, RecognizesRelabeledGraphs) {
    const Graph c4 = make_cycle(4);
    const Graph relabeled = graphjoin::make_graph("R", {"a", "b", "c", "d"},
                                                  {{"a", "b", Rational(1)},
                                                   {"b", "c", Rational(1)},
                                                   {"c", "d", Rational(1)},
                                                   {"a", "d", Rational(1)}},
                                                  {});
    const auto iso = mutual_factor_isomorphism(c4, relabeled);
    ASSERT_TRUE(iso.has_value());
    // The returned bijection is weight preserving.
    EXPECT_TRUE(graphjoin::validate_joining(graphjoin::bijective_joining(c4, relabeled, *iso)).valid);

    EXPECT_FALSE(mutual_factor_isomorphism(make_cycle(3), make_cycle(4)).has_value());
    EXPECT_FALSE(mutual_factor_isomorphism(make_path(3), gjtest::looped_path(3)).has_value());
}

TEST(FactorText, RoundTripAndErrors) {
    const Graph c6 = make_cycle(6);
    const Graph c3 = make_cycle(3);
    const FactorMap f{c6, c3, mod_map(6, 3), true};
    const auto text = graphjoin::factor_to_text(f);
    const FactorMap back = graphjoin::parse_factor(text, c6, c3);
    EXPECT_EQ(back.map, f.map);
    EXPECT_FALSE(back.verified);  // parsing never claims verification

    gjtest::expect_error(ErrorCode::ParseError, [&] {
        graphjoin::parse_factor("factor u0 -> u0\nfactor u0 -> u1\n", c6, c3);
    });
    gjtest::expect_error(ErrorCode::ParseError,
                         [&] { graphjoin::parse_factor("factor u0 -> u0\n", c6, c3); });
    gjtest::expect_error(ErrorCode::UnknownVertex,
                         [&] { graphjoin::parse_factor("factor zz -> u0\n", c6, c3); });
}

TEST(FactorSpectra, TargetPolynomialDividesSourcePolynomial) {
    const std::vector<std::pair<std::pair<Graph, Graph>, std::vector<int>>> cases = {
        {{make_cycle(6), make_cycle(3)}, mod_map(6, 3)},
        {{make_cycle(9), gjtest::looped_path(3)}, {0, 1, 1, 0, 1, 1, 0, 1, 1}},
        {{make_cycle(4), make_path(2)}, mod_map(4, 2)},
    };
    for (const auto& [pair, phi] : cases) {
        ASSERT_TRUE(verify_factor(pair.first, pair.second, phi).first);
        const auto source_poly = graphjoin::char_poly(graphjoin::transition_matrix(pair.first));
        const auto target_poly = graphjoin::char_poly(graphjoin::transition_matrix(pair.second));
        EXPECT_TRUE(graphjoin::poly_divmod(source_poly, target_poly).second.is_zero())
            << pair.first.name() << " -> " << pair.second.name();
    }
}
