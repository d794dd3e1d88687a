#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphjoin/joining.hpp"

namespace graphjoin {

struct TraceEntry {
    std::string procedure;
    std::vector<std::pair<std::string, std::string>> numbers;
};

struct DisjointnessVerdict {
    bool strong = false;
    bool weak = false;
    // One verdict per supplied cost, in input order.
    std::vector<bool> cost_disjoint;
    std::vector<TraceEntry> trace;
    std::optional<WeightJoining> strong_witness;  // non-product joining
    std::optional<WeightJoining> weak_witness;    // joining with degree != p x q
};

// True iff dim Null(J) = 1. When false, also produces a witness joining
// distinct from the product via the interior shift along a null direction.
std::pair<bool, TraceEntry> strong_disjoint(const Graph& g, const Graph& h);
std::pair<bool, TraceEntry> strong_disjoint(const Graph& g, const Graph& h,
                                            std::optional<WeightJoining>* witness);

// True iff rank(J) = rank([J; J_w]).
std::pair<bool, TraceEntry> weak_disjoint_rank(const Graph& g, const Graph& h);
std::pair<bool, TraceEntry> weak_disjoint_rank(const Graph& g, const Graph& h,
                                               std::optional<WeightJoining>* witness);

// True iff gcd(char_poly(P), char_poly(Q)) = x - 1; needs full support.
std::pair<bool, TraceEntry> weak_disjoint_spectral(const Graph& g, const Graph& h);

// Default method: spectral when both graphs are fully supported, else rank.
bool weak_disjoint(const Graph& g, const Graph& h);

// True iff rank([J; J_c]) = rank(J).
std::pair<bool, TraceEntry> c_disjoint(const Graph& g, const Graph& h, const CostFunction& cost);

// Weakly disjoint AND exactly one of the graphs is a forest. Requires fully
// supported loop-free inputs (CharacterizationInapplicable otherwise).
std::pair<bool, TraceEntry> strong_via_tree_characterization(const Graph& g, const Graph& h);

// Runs every applicable procedure, cross-checks them, and aggregates the
// verdict; a disagreement raises Error(InternalInconsistency).
DisjointnessVerdict classify_pair(const Graph& g, const Graph& h,
                                  const std::vector<CostFunction>& costs = {});

// NOT strong_disjoint(g, P_2); g must be connected.
bool bipartite_via_disjointness(const Graph& g);

// strong_disjoint(g, two-loop graph with the given masses); masses positive,
// summing to 1; g fully supported.
bool connected_via_disjointness(const Graph& g, const Rational& mass1, const Rational& mass2);

// Support pattern for the persistence experiment: vertex labels plus
// undirected edges (loops as (u,u)).
struct Skeleton {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
};

Skeleton skeleton_of(const Graph& g);

enum class PersistenceMode { WEAK, STRONG };

struct PersistenceReport {
    PersistenceMode mode;
    std::uint64_t seed = 0;
    int samples = 0;
    int disjoint_count = 0;
    Rational disjoint_fraction;
    // DICHOTOMY-1: zero disjoint samples observed; DICHOTOMY-2 otherwise.
    int dichotomy = 1;
};

// Draws weight functions uniformly on each skeleton (seeded, one split
// stream per sample), classifies every pair, and reports the fraction.
PersistenceReport persistence_experiment(const Skeleton& skeleton_g, const Skeleton& skeleton_h,
                                         int samples, std::uint64_t seed, PersistenceMode mode);

}  // namespace graphjoin
