#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphjoin/joining.hpp"

namespace graphjoin {

// Surjection from source vertices onto target vertices; target is the factor.
struct FactorMap {
    Graph source;
    Graph target;
    std::vector<int> map;  // source vertex index -> target vertex index
    bool verified = false;
};

std::string factor_to_text(const FactorMap& f);
// Lines "factor <source-vertex> -> <target-vertex>"; must cover every vertex.
FactorMap parse_factor(const std::string& source_text, const Graph& g, const Graph& h);

struct FactorViolation {
    std::string condition;  // "surjectivity", "degree", "transition"
    std::string detail;
    Rational residual;
};

// Exact check of surjectivity, the degree condition (i), and the transition
// condition (ii) of a factor map.
std::pair<bool, std::vector<FactorViolation>> verify_factor(const Graph& g, const Graph& h,
                                                            const std::vector<int>& phi);

// For connected targets condition (i) is implied; checks surjectivity + (ii).
std::pair<bool, std::vector<FactorViolation>> verify_factor_connected(const Graph& g,
                                                                      const Graph& h,
                                                                      const std::vector<int>& phi);

// Both coordinate projections of a validated joining, verified as factor
// maps of the induced product graph onto the components.
std::pair<FactorMap, FactorMap> projection_factors(const WeightJoining& k);

// f1: target T1 is a factor of graph M; f2: M is a factor of graph S.
// Composition yields T1 as a factor of S; requires f1.source == f2.target.
FactorMap compose_factors(const FactorMap& f1, const FactorMap& f2);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Exhaustive enumeration of surjections V(g) -> V(h); returns all verified
// factor maps. |V(h)|^|V(g)| above the budget -> SearchBudgetExceeded.
std::vector<FactorMap> find_factor_maps(const Graph& g, const Graph& h,
                                        std::uint64_t budget = kDefaultSearchBudget);

// Quotient of g by a partition of its vertices (cells of indices): weights
// summed over cell rectangles. Returns nullopt when the canonical projection
// fails the transition condition.
std::optional<Graph> quotient_graph(const Graph& g, const std::vector<std::vector<int>>& partition);

struct CommonFactor {
    Graph factor;
    FactorMap from_g;
    FactorMap from_h;
};

// Enumerates partitions of V(g) into at most max_size cells (restricted
// growth strings), keeps consistent quotients that h also factors onto, and
// returns nontrivial common factors (>= 2 positive-degree vertices).
std::vector<CommonFactor> common_factor_search(const Graph& g, const Graph& h, int max_size,
                                               std::uint64_t budget = kDefaultSearchBudget);

// A weight-preserving bijection when verified factor maps exist both ways.
std::optional<std::vector<int>> mutual_factor_isomorphism(
    const Graph& g, const Graph& h, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace graphjoin
