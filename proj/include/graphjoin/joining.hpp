#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphjoin/graph.hpp"
#include "graphjoin/linalg.hpp"

namespace graphjoin {

// Product vertex (index into left graph, index into right graph).
using ProductVertex = std::pair<int, int>;
// Ordered pair of product vertices; the key of a joining entry.
using JoiningKey = std::pair<ProductVertex, ProductVertex>;

inline JoiningKey reversed(const JoiningKey& k) { return {k.second, k.first}; }

// Weight function on U x V, candidate or verified joining of left and right.
// Entries are stored for every ordered support pair (product loops once).
class WeightJoining {
  public:
    WeightJoining(Graph left, Graph right, std::map<JoiningKey, Rational> normalized_entries,
                  Rational normalization);

    const Graph& left() const { return left_; }
    const Graph& right() const { return right_; }
    const std::map<JoiningKey, Rational>& entries() const { return entries_; }
    const Rational& entry(const JoiningKey& key) const;  // 0 when absent
    const std::map<ProductVertex, Rational>& degrees() const { return degrees_; }
    const Rational& degree(const ProductVertex& pv) const;  // 0 when absent
    const Rational& normalization() const { return normalization_; }

  private:
    Graph left_, right_;
    std::map<JoiningKey, Rational> entries_;
    std::map<ProductVertex, Rational> degrees_;
    Rational normalization_;
};

// Raw entries list each unordered pair of product vertices once; values are
// scaled so the ordered-pair sum is 1. UnknownVertex on out-of-range indices.
WeightJoining make_joining(const Graph& left, const Graph& right,
                           const std::vector<std::pair<JoiningKey, Rational>>& raw_entries);

// File form: "joining <name>" header then "jedge <u> <v> <u'> <v'> <rational>"
// lines, one per unordered pair. Labels resolve against the given graphs.
WeightJoining parse_joining(const std::string& source, const Graph& left, const Graph& right);
std::string joining_to_text(const WeightJoining& j, const std::string& name = "joining");

struct Violation {
    std::string constraint;  // e.g. "symmetry", "degree-left", "transition-right"
    std::string detail;      // vertex labels involved
    Rational residual;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

// Exact check of symmetry, normalization, degree coupling, and transition
// coupling. Every violated constraint is listed with its rational residual.
ValidationReport validate_joining(const WeightJoining& j);

// Variant that skips the degree-coupling check; for connected pairs it must
// agree with the full validator.
ValidationReport validate_joining_transition_only(const WeightJoining& j);

struct PreservationReport {
    // Violations of supp(r) <= supp(p x q) or supp(gamma) <= supp(alpha x beta).
    std::vector<std::string> violations;
    // Product vertices with r(u,v) = 0 but p(u)q(v) > 0 (informational).
    std::vector<ProductVertex> degenerate_pairs;
};

PreservationReport check_preservation(const WeightJoining& j);

WeightJoining product_joining(const Graph& g, const Graph& h);

// iso maps left vertex index -> right vertex index and must preserve weights.
WeightJoining bijective_joining(const Graph& g, const Graph& h, const std::vector<int>& iso);

// The synchronized-rotation joining of C_m and C_n, weight 1/(2mn) on moves
// (u_i,v_j) -> (u_{i+1},v_{j+1}) and (u_i,v_j) -> (u_{i-1},v_{j-1}).
WeightJoining diagonal_cycle_joining(int m, int n);

// Joining of the two-vertex loop graphs with masses (a1, 1-a1) and (b1, 1-b1),
// concentrated on the four product loops; x parameterizes the family.
WeightJoining two_loop_joining(const Rational& a1, const Rational& b1, const Rational& x);

struct AutoT {};  // tag selecting the automatic step size

// The spectral perturbation joining: lambda a shared eigenvalue of P^T and Q
// (lambda != +-1) with exact eigenvectors P^T x = lambda x, y^T Q = lambda y^T.
// With AutoT, t is half the largest value keeping every bracket positive.
WeightJoining perturbation_joining(const Graph& g, const Graph& h, const Rational& lambda,
                                   const std::vector<Rational>& x, const std::vector<Rational>& y,
                                   const Rational& t);
WeightJoining perturbation_joining(const Graph& g, const Graph& h, const Rational& lambda,
                                   const std::vector<Rational>& x, const std::vector<Rational>& y,
                                   AutoT auto_t = AutoT{});

// Extends a product-degree joining of uniformly weighted subgraphs to a
// joining of uniformly weighted connected loop-free supergraphs.
WeightJoining supergraph_extension_joining(const WeightJoining& gamma, const Graph& g_super,
                                           const Graph& h_super);

enum class IndexMode { FULL, SIMPLIFIED };

// Deterministic variable order for constraint systems: FULL enumerates every
// ordered pair ((u,v),(u',v')) with (u,u') in E(G), (v,v') in E(H);
// SIMPLIFIED keeps one representative per symmetric pair class.
struct JoiningVariableIndex {
    IndexMode mode;
    std::vector<JoiningKey> keys;       // sorted lexicographically
    std::map<JoiningKey, int> columns;  // representative -> column

    int size() const { return static_cast<int>(keys.size()); }
    // Column of the class containing key (SIMPLIFIED looks up both orders).
    int column_of(const JoiningKey& key) const;
};

JoiningVariableIndex build_full_index(const Graph& g, const Graph& h);
JoiningVariableIndex build_simplified_index(const Graph& g, const Graph& h);

struct RowTag {
    enum class Kind {
        Symmetry,
        DegreeCouplingLeft,
        DegreeCouplingRight,
        TransitionLeft,
        TransitionRight,
        DegreeProduct,
        CostRow,
    };
    Kind kind;
    int u = -1, v = -1, w = -1;  // vertex indices used by the tag, -1 unused
};

std::string to_string(const RowTag& tag, const Graph& g, const Graph& h);

struct ConstraintSystem {
    RMatrix matrix;
    JoiningVariableIndex index;
    std::vector<RowTag> row_tags;
};

// Dense nonnegative cost table on U x V.
class CostFunction {
  public:
    CostFunction(int left_size, int right_size);  // all zeros

    int left_size() const { return nu_; }
    int right_size() const { return nv_; }
    const Rational& at(int u, int v) const { return values_[u * nv_ + v]; }
    void set(int u, int v, const Rational& value);  // InvalidCost when negative

  private:
    int nu_, nv_;
    std::vector<Rational> values_;
};

// Cost file: lines "cost <u-label> <v-label> <rational>"; omitted pairs are 0.
CostFunction parse_cost(const std::string& source, const Graph& g, const Graph& h);

// Joining constraint matrix over the FULL index: symmetry rows, degree rows
// in normalization-substituted form, and both transition families. Joinings
// are exactly {gamma >= 0 : J gamma = 0, sum gamma = 1}.
ConstraintSystem build_J(const Graph& g, const Graph& h);

// Simplified matrix for connected loop-free pairs over the SIMPLIFIED index:
// per (u,v) the transition rows with one redundant row removed per side.
ConstraintSystem build_Js(const Graph& g, const Graph& h);

// One row per (u,v): r(u,v) - p(u)q(v) * (sum of gamma) = 0.
ConstraintSystem build_Jw(const Graph& g, const Graph& h);

// Single row: sum c*r - (sum c * p x q) * (sum of gamma) = 0.
ConstraintSystem build_Jc(const Graph& g, const Graph& h, const CostFunction& cost);

// Column-vector representation of a joining in the given index.
std::vector<Rational> joining_vector(const WeightJoining& j, const JoiningVariableIndex& index);

// Inverse of joining_vector: builds the joining a solution vector describes.
WeightJoining joining_from_vector(const Graph& g, const Graph& h,
                                  const JoiningVariableIndex& index,
                                  const std::vector<Rational>& values);

}  // namespace graphjoin
