#include "graphjoin/ogj.hpp"

#include <algorithm>
#include <utility>

namespace graphjoin {

namespace {

struct Tableau {
    std::vector<std::vector<Rational>> rows;  // m x (cols + 1), last entry rhs
    std::vector<Rational> objective;          // cols + 1; last = -(current value)
    std::vector<int> basis;                   // basic column per row
    int cols = 0;
};

void pivot(Tableau& t, int r, int c) {
    auto& prow = t.rows[r];
    const Rational inv = prow[c];
    for (auto& x : prow) x /= inv;
    for (int i = 0; i < static_cast<int>(t.rows.size()); ++i) {
        if (i == r || t.rows[i][c] == 0) continue;
        const Rational f = t.rows[i][c];
        for (int j = 0; j <= t.cols; ++j) t.rows[i][j] -= f * prow[j];
    }
    if (t.objective[c] != 0) {
        const Rational f = t.objective[c];
        for (int j = 0; j <= t.cols; ++j) t.objective[j] -= f * prow[j];
    }
    t.basis[r] = c;
}

// Minimizes the tableau objective with Bland's rule; false means unbounded.
bool run_simplex(Tableau& t) {
    const int m = static_cast<int>(t.rows.size());
    while (true) {
        int entering = -1;
        for (int j = 0; j < t.cols; ++j) {
            if (t.objective[j] < 0) {
                entering = j;
                break;
            }
        }
        if (entering < 0) return true;
        int leaving = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (t.rows[i][entering] <= 0) continue;
            const Rational ratio = t.rows[i][t.cols] / t.rows[i][entering];
            if (leaving < 0 || ratio < best ||
                (ratio == best && t.basis[i] < t.basis[leaving])) {
                leaving = i;
                best = ratio;
            }
        }
        if (leaving < 0) return false;
        pivot(t, leaving, entering);
    }
}

}  // namespace

LPSolution solve_lp(const LPProblem& problem) {
    const int m = problem.equalities.rows();
    const int n = problem.equalities.cols();
    if (static_cast<int>(problem.rhs.size()) != m ||
        static_cast<int>(problem.objective.size()) != n) {
        throw Error(ErrorCode::ShapeError, "lp dimensions are inconsistent");
    }

    // Phase 1: artificial basis, minimize the artificial mass.
    Tableau t;
    t.cols = n + m;
    t.objective.assign(t.cols + 1, Rational(0));
    for (int i = 0; i < m; ++i) {
        std::vector<Rational> row(t.cols + 1, Rational(0));
        const bool flip = problem.rhs[i] < 0;
        for (int j = 0; j < n; ++j) {
            row[j] = flip ? Rational(-problem.equalities.at(i, j)) : problem.equalities.at(i, j);
        }
        row[n + i] = 1;
        row[t.cols] = flip ? Rational(-problem.rhs[i]) : problem.rhs[i];
        t.objective[n + i] = 1;
        t.rows.push_back(std::move(row));
        t.basis.push_back(n + i);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= t.cols; ++j) t.objective[j] -= t.rows[i][j];
    }
    if (!run_simplex(t)) {
        throw Error(ErrorCode::InternalInconsistency, "phase 1 cannot be unbounded");
    }
    if (t.objective[t.cols] != 0) {
        return {LPStatus::INFEASIBLE, Rational(0), {}, {}};
    }

    // Drive artificial variables out of the basis; drop redundant rows.
    for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
        if (t.basis[i] < n) continue;
        int c = 0;
        while (c < n && t.rows[i][c] == 0) ++c;
        if (c < n) {
            pivot(t, i, c);
        } else {
            t.rows.erase(t.rows.begin() + i);
            t.basis.erase(t.basis.begin() + i);
        }
    }

    // Phase 2 on structural columns only.
    Tableau t2;
    t2.cols = n;
    t2.basis = t.basis;
    for (const auto& row : t.rows) {
        std::vector<Rational> shrunk(row.begin(), row.begin() + n);
        shrunk.push_back(row[t.cols]);
        t2.rows.push_back(std::move(shrunk));
    }
    const bool maximize = problem.sense == LPSense::MAX;
    t2.objective.assign(n + 1, Rational(0));
    for (int j = 0; j < n; ++j) {
        t2.objective[j] = maximize ? Rational(-problem.objective[j]) : problem.objective[j];
    }
    for (int i = 0; i < static_cast<int>(t2.rows.size()); ++i) {
        if (t2.objective[t2.basis[i]] == 0) continue;
        const Rational f = t2.objective[t2.basis[i]];
        for (int j = 0; j <= n; ++j) t2.objective[j] -= f * t2.rows[i][j];
    }
    if (!run_simplex(t2)) {
        throw Error(ErrorCode::InternalInconsistency, "unbounded lp violates the precondition");
    }

    LPSolution solution;
    solution.status = LPStatus::OPTIMAL;
    solution.point.assign(n, Rational(0));
    for (int i = 0; i < static_cast<int>(t2.rows.size()); ++i) {
        solution.point[t2.basis[i]] = t2.rows[i][n];
    }
    solution.value = -t2.objective[n];
    if (maximize) solution.value = -solution.value;
    solution.basis = t2.basis;
    return solution;
}

LPProblem joining_polytope_lp(const ConstraintSystem& j_system) {
    const int rows = j_system.matrix.rows();
    const int k = j_system.matrix.cols();
    LPProblem lp;
    lp.equalities = RMatrix(rows + 1, k);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < k; ++j) lp.equalities.at(i, j) = j_system.matrix.at(i, j);
    }
    for (int j = 0; j < k; ++j) lp.equalities.at(rows, j) = 1;
    lp.rhs.assign(rows, Rational(0));
    lp.rhs.push_back(Rational(1));
    lp.objective.assign(k, Rational(0));
    lp.sense = LPSense::MIN;
    return lp;
}

std::pair<Rational, WeightJoining> ogj_value(const Graph& g, const Graph& h,
                                             const CostFunction& cost) {
    if (cost.left_size() != g.vertex_count() || cost.right_size() != h.vertex_count()) {
        throw Error(ErrorCode::ShapeError, "cost table does not match the graphs");
    }
    const ConstraintSystem system = build_J(g, h);
    LPProblem lp = joining_polytope_lp(system);
    for (int col = 0; col < system.index.size(); ++col) {
        const ProductVertex& from = system.index.keys[col].first;
        lp.objective[col] = cost.at(from.first, from.second);
    }
    const LPSolution solution = solve_lp(lp);
    if (solution.status != LPStatus::OPTIMAL) {
        throw Error(ErrorCode::InternalInconsistency, "joining polytope cannot be empty");
    }
    return {solution.value, joining_from_vector(g, h, system.index, solution.point)};
}

namespace {

std::string gamma_coordinate(const Graph& g, const Graph& h, const JoiningKey& key) {
    return "((" + g.label(key.first.first) + "," + h.label(key.first.second) + "),(" +
           g.label(key.second.first) + "," + h.label(key.second.second) + "))";
}

std::pair<Rational, Rational> probe(const LPProblem& base, const std::vector<Rational>& objective) {
    LPProblem lp = base;
    lp.objective = objective;
    lp.sense = LPSense::MIN;
    const LPSolution lo = solve_lp(lp);
    lp.sense = LPSense::MAX;
    const LPSolution hi = solve_lp(lp);
    if (lo.status != LPStatus::OPTIMAL || hi.status != LPStatus::OPTIMAL) {
        throw Error(ErrorCode::InternalInconsistency, "joining polytope cannot be empty");
    }
    return {lo.value, hi.value};
}

}  // namespace

std::vector<CoordinateRange> coordinate_ranges(const Graph& g, const Graph& h, RangeTarget target,
                                               int lp_variable_budget) {
    const ConstraintSystem system = build_J(g, h);
    const int k = system.index.size();
    if (k > lp_variable_budget) {
        throw Error(ErrorCode::SearchBudgetExceeded,
                    std::to_string(k) + " lp variables exceed the budget of " +
                        std::to_string(lp_variable_budget));
    }
    const LPProblem base = joining_polytope_lp(system);

    std::vector<CoordinateRange> ranges;
    if (target == RangeTarget::GAMMA) {
        for (int col = 0; col < k; ++col) {
            std::vector<Rational> objective(k, Rational(0));
            objective[col] = 1;
            const auto [lo, hi] = probe(base, objective);
            ranges.push_back({gamma_coordinate(g, h, system.index.keys[col]), lo, hi});
        }
    } else {
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int v = 0; v < h.vertex_count(); ++v) {
                std::vector<Rational> objective(k, Rational(0));
                for (int col = 0; col < k; ++col) {
                    if (system.index.keys[col].first == ProductVertex{u, v}) objective[col] = 1;
                }
                const auto [lo, hi] = probe(base, objective);
                ranges.push_back({"(" + g.label(u) + "," + h.label(v) + ")", lo, hi});
            }
        }
    }
    return ranges;
}

bool c_disjoint_via_lp(const Graph& g, const Graph& h, const CostFunction& cost) {
    Rational product_cost(0);
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < h.vertex_count(); ++v) {
            product_cost += cost.at(u, v) * g.degree(u) * h.degree(v);
        }
    }
    return ogj_value(g, h, cost).first == product_cost;
}

}  // namespace graphjoin
