#include "graphjoin/disjointness.hpp"

#include <algorithm>

#include "graphjoin/rng.hpp"

namespace graphjoin {

namespace {

std::string itos(int v) {
    return std::to_string(v);
}

std::vector<std::vector<Rational>> null_basis_from_rref(const RrefResult& r, int cols) {
    std::vector<bool> is_pivot(cols, false);
    for (int col : r.pivot_cols) is_pivot[col] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) {
            v[r.pivot_cols[p]] = -r.matrix.at(static_cast<int>(p), free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Interior shift gamma* = gamma_product + (t/2) d with d = w - (1^T w) gamma_product,
// t the feasibility bound: strictly positive, normalized, and J gamma* = 0.
std::optional<std::vector<Rational>> interior_shift(const std::vector<Rational>& product,
                                                    const std::vector<Rational>& w) {
    const int k = static_cast<int>(product.size());
    Rational w_sum(0);
    for (const auto& x : w) w_sum += x;
    std::vector<Rational> d(k);
    bool nonzero = false;
    for (int i = 0; i < k; ++i) {
        d[i] = w[i] - w_sum * product[i];
        if (d[i] != 0) nonzero = true;
    }
    if (!nonzero) return std::nullopt;
    bool bounded = false;
    Rational t;
    for (int i = 0; i < k; ++i) {
        if (d[i] >= 0) continue;
        const Rational bound = product[i] / -d[i];
        if (!bounded || bound < t) {
            bounded = true;
            t = bound;
        }
    }
    if (!bounded) return std::nullopt;  // impossible: d != 0 sums to zero
    std::vector<Rational> out(k);
    for (int i = 0; i < k; ++i) out[i] = product[i] + t / 2 * d[i];
    return out;
}

struct JData {
    ConstraintSystem system;
    RrefResult reduced;
    int rank = 0;
    std::vector<Rational> product_vec;
};

JData prepare_J(const Graph& g, const Graph& h) {
    JData data;
    data.system = build_J(g, h);
    data.reduced = rref(data.system.matrix);
    data.rank = static_cast<int>(data.reduced.pivot_cols.size());
    data.product_vec = joining_vector(product_joining(g, h), data.system.index);
    return data;
}

bool strong_from_data(const JData& data, TraceEntry* trace) {
    const int k = data.system.index.size();
    const int null_dim = k - data.rank;
    if (trace) {
        *trace = {"strong-rank",
                  {{"variables", itos(k)}, {"rank", itos(data.rank)}, {"null_dim", itos(null_dim)}}};
    }
    return null_dim == 1;
}

void make_strong_witness(const Graph& g, const Graph& h, const JData& data,
                         std::optional<WeightJoining>* witness) {
    const auto basis = null_basis_from_rref(data.reduced, data.system.index.size());
    for (const auto& w : basis) {
        const auto shifted = interior_shift(data.product_vec, w);
        if (!shifted) continue;
        *witness = joining_from_vector(g, h, data.system.index, *shifted);
        return;
    }
}

bool weak_from_data(const Graph& g, const Graph& h, const JData& data, TraceEntry* trace,
                    std::optional<WeightJoining>* witness) {
    const ConstraintSystem jw = build_Jw(g, h);
    const int stacked = rank_stacked(data.reduced, jw.matrix);
    if (trace) {
        *trace = {"weak-rank",
                  {{"rank_J", itos(data.rank)}, {"rank_J_Jw", itos(stacked)}}};
    }
    const bool weak = stacked == data.rank;
    if (!weak && witness) {
        const auto basis = null_basis_from_rref(data.reduced, data.system.index.size());
        for (const auto& w : basis) {
            bool separates = false;
            for (int row = 0; row < jw.matrix.rows() && !separates; ++row) {
                Rational dot(0);
                for (int c = 0; c < jw.matrix.cols(); ++c) dot += jw.matrix.at(row, c) * w[c];
                separates = dot != 0;
            }
            if (!separates) continue;
            const auto shifted = interior_shift(data.product_vec, w);
            if (!shifted) continue;
            *witness = joining_from_vector(g, h, data.system.index, *shifted);
            break;
        }
    }
    return weak;
}

}  // namespace

std::pair<bool, TraceEntry> strong_disjoint(const Graph& g, const Graph& h) {
    return strong_disjoint(g, h, nullptr);
}

std::pair<bool, TraceEntry> strong_disjoint(const Graph& g, const Graph& h,
                                            std::optional<WeightJoining>* witness) {
    const JData data = prepare_J(g, h);
    TraceEntry trace;
    const bool strong = strong_from_data(data, &trace);
    if (!strong && witness) make_strong_witness(g, h, data, witness);
    return {strong, trace};
}

std::pair<bool, TraceEntry> weak_disjoint_rank(const Graph& g, const Graph& h) {
    return weak_disjoint_rank(g, h, nullptr);
}

std::pair<bool, TraceEntry> weak_disjoint_rank(const Graph& g, const Graph& h,
                                               std::optional<WeightJoining>* witness) {
    const JData data = prepare_J(g, h);
    TraceEntry trace;
    const bool weak = weak_from_data(g, h, data, &trace, witness);
    return {weak, trace};
}

std::pair<bool, TraceEntry> weak_disjoint_spectral(const Graph& g, const Graph& h) {
    const RPoly char_g = char_poly(transition_matrix(g));
    const RPoly char_h = char_poly(transition_matrix(h));
    const RPoly gcd = poly_gcd(char_g, char_h);
    const bool weak = gcd.degree() == 1 && eval_poly(gcd, Rational(1)) == 0;
    TraceEntry trace{"weak-spectral",
                     {{"gcd_degree", itos(gcd.degree())}, {"gcd", to_string(gcd)}}};
    return {weak, trace};
}

bool weak_disjoint(const Graph& g, const Graph& h) {
    if (is_fully_supported(g) && is_fully_supported(h)) {
        return weak_disjoint_spectral(g, h).first;
    }
    return weak_disjoint_rank(g, h).first;
}

std::pair<bool, TraceEntry> c_disjoint(const Graph& g, const Graph& h, const CostFunction& cost) {
    const JData data = prepare_J(g, h);
    const ConstraintSystem jc = build_Jc(g, h, cost);
    const int stacked = rank_stacked(data.reduced, jc.matrix);
    TraceEntry trace{"cost-rank", {{"rank_J", itos(data.rank)}, {"rank_J_Jc", itos(stacked)}}};
    return {stacked == data.rank, trace};
}

std::pair<bool, TraceEntry> strong_via_tree_characterization(const Graph& g, const Graph& h) {
    if (!is_fully_supported(g) || !is_fully_supported(h) || has_self_loops(g) ||
        has_self_loops(h)) {
        throw Error(ErrorCode::CharacterizationInapplicable,
                    "tree characterization needs fully supported graphs without self-loops");
    }
    const bool weak = weak_disjoint(g, h);
    const bool forest_g = is_forest(g), forest_h = is_forest(h);
    const bool strong = weak && (forest_g != forest_h);
    TraceEntry trace{"strong-tree",
                     {{"weak", weak ? "1" : "0"},
                      {"forest_left", forest_g ? "1" : "0"},
                      {"forest_right", forest_h ? "1" : "0"}}};
    return {strong, trace};
}

DisjointnessVerdict classify_pair(const Graph& g, const Graph& h,
                                  const std::vector<CostFunction>& costs) {
    DisjointnessVerdict verdict;
    const JData data = prepare_J(g, h);

    TraceEntry strong_trace;
    verdict.strong = strong_from_data(data, &strong_trace);
    verdict.trace.push_back(strong_trace);
    if (!verdict.strong) make_strong_witness(g, h, data, &verdict.strong_witness);

    TraceEntry weak_trace;
    verdict.weak = weak_from_data(g, h, data, &weak_trace, &verdict.weak_witness);
    verdict.trace.push_back(weak_trace);

    if (is_fully_supported(g) && is_fully_supported(h)) {
        const auto [spectral, spectral_trace] = weak_disjoint_spectral(g, h);
        verdict.trace.push_back(spectral_trace);
        if (spectral != verdict.weak) {
            throw Error(ErrorCode::InternalInconsistency,
                        "spectral and rank weak-disjointness disagree");
        }
        if (!has_self_loops(g) && !has_self_loops(h)) {
            const auto [tree, tree_trace] = strong_via_tree_characterization(g, h);
            verdict.trace.push_back(tree_trace);
            if (tree != verdict.strong) {
                throw Error(ErrorCode::InternalInconsistency,
                            "tree characterization and rank strong-disjointness disagree");
            }
        }
    }

    if (verdict.strong && !verdict.weak) {
        throw Error(ErrorCode::InternalInconsistency, "strong verdict without weak verdict");
    }

    for (const auto& cost : costs) {
        const ConstraintSystem jc = build_Jc(g, h, cost);
        const int stacked = rank_stacked(data.reduced, jc.matrix);
        verdict.cost_disjoint.push_back(stacked == data.rank);
        verdict.trace.push_back(
            {"cost-rank", {{"rank_J", itos(data.rank)}, {"rank_J_Jc", itos(stacked)}}});
    }
    return verdict;
}

bool bipartite_via_disjointness(const Graph& g) {
    if (!is_connected(g)) {
        throw Error(ErrorCode::RequiresConnected, "bipartiteness test needs a connected graph");
    }
    return !strong_disjoint(g, make_path(2)).first;
}

bool connected_via_disjointness(const Graph& g, const Rational& mass1, const Rational& mass2) {
    if (mass1 <= 0 || mass2 <= 0 || mass1 + mass2 != 1) {
        throw Error(ErrorCode::InvalidWeight, "loop masses must be positive and sum to 1");
    }
    if (!is_fully_supported(g)) {
        throw Error(ErrorCode::NotFullySupported, "connectivity test needs full support");
    }
    return strong_disjoint(g, make_two_loop(mass1, mass2)).first;
}

Skeleton skeleton_of(const Graph& g) {
    Skeleton s;
    s.labels = g.labels();
    for (const auto& [key, value] : g.weights()) {
        if (key.first <= key.second) {
            s.edges.push_back({g.label(key.first), g.label(key.second)});
        }
    }
    return s;
}

namespace {

Graph sample_graph(const Skeleton& skeleton, const std::string& name, SplitMix64& rng) {
    std::vector<std::tuple<std::string, std::string, Rational>> edges;
    std::vector<std::pair<std::string, Rational>> loops;
    for (const auto& [u, v] : skeleton.edges) {
        const Rational w = sample_unit_rational(rng);
        if (u == v) {
            loops.push_back({u, w});
        } else {
            edges.push_back({u, v, w});
        }
    }
    return make_graph(name, skeleton.labels, edges, loops);
}

}  // namespace

PersistenceReport persistence_experiment(const Skeleton& skeleton_g, const Skeleton& skeleton_h,
                                         int samples, std::uint64_t seed, PersistenceMode mode) {
    if (skeleton_g.edges.empty() || skeleton_h.edges.empty()) {
        throw Error(ErrorCode::EmptyGraph, "skeleton has no edges");
    }
    if (samples < 1) throw Error(ErrorCode::InvalidSize, "need at least one sample");

    PersistenceReport report;
    report.mode = mode;
    report.seed = seed;
    report.samples = samples;

    SplitMix64 root(seed);
    for (int i = 0; i < samples; ++i) {
        SplitMix64 stream_g = root.split();
        SplitMix64 stream_h = root.split();
        const Graph g = sample_graph(skeleton_g, "sampleG", stream_g);
        const Graph h = sample_graph(skeleton_h, "sampleH", stream_h);
        const bool disjoint = mode == PersistenceMode::WEAK ? weak_disjoint(g, h)
                                                            : strong_disjoint(g, h).first;
        if (disjoint) ++report.disjoint_count;
    }
    report.disjoint_fraction = rational(report.disjoint_count, samples);
    report.dichotomy = report.disjoint_count == 0 ? 1 : 2;
    return report;
}

}  // namespace graphjoin
