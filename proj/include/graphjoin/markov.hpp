#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphjoin/disjointness.hpp"
#include "graphjoin/joining.hpp"

namespace graphjoin {

// Reversible Markov chain: row-stochastic kernel plus stationary law
// satisfying detailed balance exactly.
struct ReversibleChain {
    std::vector<std::string> states;
    RMatrix kernel;
    std::vector<Rational> stationary;
};

// Throws Error(NotReversible) when detailed balance or stochasticity fails.
ReversibleChain make_chain(std::vector<std::string> states, RMatrix kernel,
                           std::vector<Rational> stationary);

// File form: "chain <name>", "state <label>" lines, "trans <s> <s'> <r>",
// "pi <s> <r>"; omitted kernel or stationary entries are zero.
ReversibleChain parse_chain(const std::string& source);
std::string chain_to_text(const ReversibleChain& c, const std::string& name = "chain");

ReversibleChain chain_from_graph(const Graph& g);  // NotFullySupported on zero degree
Graph graph_from_chain(const ReversibleChain& c);

// Coupled chain on the positive-degree product states of a valid joining.
ReversibleChain coupling_from_joining(const WeightJoining& k);

// Two-state deterministic flip chain (the walk on P_2).
ReversibleChain flip_chain();
// Two-state identity chain with the given stationary masses.
ReversibleChain fixed_chain(const Rational& mass1, const Rational& mass2);

struct TrajectorySample {
    std::uint64_t seed = 0;
    int steps = 0;
    std::vector<int> path;  // length steps + 1, initial state from stationary
};

// Deterministic given the seed; samples by exact cumulative comparison of
// rational masses against uniform 64-bit draws.
TrajectorySample simulate(const ReversibleChain& c, int steps, std::uint64_t seed);

struct EmpiricalReport {
    Rational stationary_tv;  // TV(empirical state frequencies, stationary)
    Rational kernel_tv;      // max over visited states of row TV distance
    bool within_tolerance = false;
};

EmpiricalReport empirical_check(const TrajectorySample& sample, const ReversibleChain& c,
                                const Rational& tolerance);

enum class MDisjointness { STRONG, WEAK };

// Delegates to the graph-level procedures through the chain <-> graph
// correspondence; returns the full verdict.
DisjointnessVerdict m_disjoint(const ReversibleChain& x, const ReversibleChain& y,
                               const std::vector<CostFunction>& costs = {});

}  // namespace graphjoin
