#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphjoin/joining.hpp"

namespace graphjoin {

enum class LPSense { MIN, MAX };

// Equality-form LP: A x = b, x >= 0, optimize c^T x.
struct LPProblem {
    RMatrix equalities;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;
    LPSense sense = LPSense::MIN;
};

enum class LPStatus { OPTIMAL, INFEASIBLE };

struct LPSolution {
    LPStatus status = LPStatus::INFEASIBLE;
    Rational value;
    std::vector<Rational> point;
    std::vector<int> basis;
};

// Exact primal simplex, two-phase, Bland's anti-cycling rule. The feasible
// region must be bounded (always true for joining polytopes).
LPSolution solve_lp(const LPProblem& problem);

// The joining polytope of (g,h) in equality form over the FULL index.
LPProblem joining_polytope_lp(const ConstraintSystem& j_system);

inline constexpr int kDefaultLpVariableBudget = 512;

// Exact minimum of sum c(u,v) r(u,v) over all joinings, with a minimizer.
std::pair<Rational, WeightJoining> ogj_value(const Graph& g, const Graph& h,
                                             const CostFunction& cost);

enum class RangeTarget { GAMMA, DEGREE };

struct CoordinateRange {
    std::string coordinate;  // key or product-vertex rendering
    Rational min;
    Rational max;
};

// Per-coordinate LP min/max over the joining polytope: every gamma variable
// (GAMMA) or every degree r(u,v) (DEGREE). The brute-force oracle.
std::vector<CoordinateRange> coordinate_ranges(const Graph& g, const Graph& h, RangeTarget target,
                                               int lp_variable_budget = kDefaultLpVariableBudget);

// True iff ogj_value equals the product cost sum c * (p x q).
bool c_disjoint_via_lp(const Graph& g, const Graph& h, const CostFunction& cost);

}  // namespace graphjoin
