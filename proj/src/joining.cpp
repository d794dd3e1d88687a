#include "graphjoin/joining.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace graphjoin {

namespace {

std::string pv_text(const Graph& g, const Graph& h, const ProductVertex& pv) {
    return "(" + g.label(pv.first) + "," + h.label(pv.second) + ")";
}

std::string key_text(const Graph& g, const Graph& h, const JoiningKey& key) {
    return pv_text(g, h, key.first) + "," + pv_text(g, h, key.second);
}

}  // namespace

WeightJoining::WeightJoining(Graph left, Graph right,
                             std::map<JoiningKey, Rational> normalized_entries,
                             Rational normalization)
    : left_(std::move(left)),
      right_(std::move(right)),
      entries_(std::move(normalized_entries)),
      normalization_(std::move(normalization)) {
    for (const auto& [key, value] : entries_) {
        degrees_[key.first] += value;
    }
}

const Rational& WeightJoining::entry(const JoiningKey& key) const {
    static const Rational kZero(0);
    const auto it = entries_.find(key);
    return it == entries_.end() ? kZero : it->second;
}

const Rational& WeightJoining::degree(const ProductVertex& pv) const {
    static const Rational kZero(0);
    const auto it = degrees_.find(pv);
    return it == degrees_.end() ? kZero : it->second;
}

WeightJoining make_joining(const Graph& left, const Graph& right,
                           const std::vector<std::pair<JoiningKey, Rational>>& raw_entries) {
    const int m = left.vertex_count(), n = right.vertex_count();
    const auto check = [&](const ProductVertex& pv) {
        if (pv.first < 0 || pv.first >= m || pv.second < 0 || pv.second >= n) {
            throw Error(ErrorCode::UnknownVertex,
                        "product vertex (" + std::to_string(pv.first) + "," +
                            std::to_string(pv.second) + ") out of range");
        }
    };
    std::map<JoiningKey, Rational> entries;
    Rational total(0);
    for (const auto& [key, value] : raw_entries) {
        check(key.first);
        check(key.second);
        if (value < 0) {
            throw Error(ErrorCode::InvalidWeight,
                        "negative joining entry at " + key_text(left, right, key));
        }
        if (value == 0) continue;
        if (entries.count(key) || entries.count(reversed(key))) {
            throw Error(ErrorCode::DuplicateEdge,
                        "joining entry " + key_text(left, right, key) + " listed twice");
        }
        entries[key] = value;
        total += value;
        if (key != reversed(key)) {
            entries[reversed(key)] = value;
            total += value;
        }
    }
    if (entries.empty()) throw Error(ErrorCode::EmptyGraph, "joining has no entries");
    for (auto& [key, value] : entries) value /= total;
    return WeightJoining(left, right, std::move(entries), total);
}

WeightJoining parse_joining(const std::string& source, const Graph& left, const Graph& right) {
    std::istringstream in(source);
    std::string line;
    bool saw_header = false;
    std::vector<std::pair<JoiningKey, Rational>> raw;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (tokens[0] == "joining") {
            if (tokens.size() != 2) throw Error(ErrorCode::ParseError, "bad joining header" + where);
            saw_header = true;
        } else if (tokens[0] == "jedge") {
            if (tokens.size() != 6) {
                throw Error(ErrorCode::ParseError, "jedge line needs 5 fields" + where);
            }
            const ProductVertex a{left.index_of(tokens[1]), right.index_of(tokens[2])};
            const ProductVertex b{left.index_of(tokens[3]), right.index_of(tokens[4])};
            raw.push_back({{a, b}, parse_rational(tokens[5])});
        } else {
            throw Error(ErrorCode::ParseError, "unknown directive '" + tokens[0] + "'" + where);
        }
    }
    if (!saw_header) throw Error(ErrorCode::ParseError, "missing 'joining <name>' header");
    return make_joining(left, right, raw);
}

std::string joining_to_text(const WeightJoining& j, const std::string& name) {
    std::ostringstream out;
    out << "joining " << name << "\n";
    for (const auto& [key, value] : j.entries()) {
        if (reversed(key) < key) continue;
        out << "jedge " << j.left().label(key.first.first) << " "
            << j.right().label(key.first.second) << " " << j.left().label(key.second.first) << " "
            << j.right().label(key.second.second) << " " << to_string(value) << "\n";
    }
    return out.str();
}

namespace {

ValidationReport validate_impl(const WeightJoining& j, bool check_degree) {
    const Graph& g = j.left();
    const Graph& h = j.right();
    const int m = g.vertex_count(), n = h.vertex_count();
    ValidationReport report;
    const auto flag = [&](const std::string& constraint, const std::string& detail,
                          const Rational& residual) {
        if (residual == 0) return;
        report.valid = false;
        report.violations.push_back({constraint, detail, residual});
    };

    Rational total(0);
    for (const auto& [key, value] : j.entries()) {
        if (value < 0) flag("nonnegativity", key_text(g, h, key), value);
        flag("symmetry", key_text(g, h, key), value - j.entry(reversed(key)));
        total += value;
    }
    flag("normalization", "sum over ordered pairs", total - 1);

    if (check_degree) {
        for (int u = 0; u < m; ++u) {
            Rational sum(0);
            for (int v = 0; v < n; ++v) sum += j.degree({u, v});
            flag("degree-left", g.label(u), sum - g.degree(u));
        }
        for (int v = 0; v < n; ++v) {
            Rational sum(0);
            for (int u = 0; u < m; ++u) sum += j.degree({u, v});
            flag("degree-right", h.label(v), sum - h.degree(v));
        }
    }

    // S_left[((u,v),u')] = sum over v~ of gamma((u,v),(u',v~)); same on the right.
    std::map<std::pair<ProductVertex, int>, Rational> s_left, s_right;
    for (const auto& [key, value] : j.entries()) {
        s_left[{key.first, key.second.first}] += value;
        s_right[{key.first, key.second.second}] += value;
    }
    const auto lookup = [](const std::map<std::pair<ProductVertex, int>, Rational>& s,
                           const ProductVertex& pv, int w) {
        const auto it = s.find({pv, w});
        return it == s.end() ? Rational(0) : it->second;
    };
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < n; ++v) {
            const ProductVertex pv{u, v};
            const Rational& r = j.degree(pv);
            for (int w = 0; w < m; ++w) {
                flag("transition-left", pv_text(g, h, pv) + "->" + g.label(w),
                     g.degree(u) * lookup(s_left, pv, w) - g.weight(u, w) * r);
            }
            for (int w = 0; w < n; ++w) {
                flag("transition-right", pv_text(g, h, pv) + "->" + h.label(w),
                     h.degree(v) * lookup(s_right, pv, w) - h.weight(v, w) * r);
            }
        }
    }
    return report;
}

}  // namespace

ValidationReport validate_joining(const WeightJoining& j) {
    return validate_impl(j, true);
}

ValidationReport validate_joining_transition_only(const WeightJoining& j) {
    return validate_impl(j, false);
}

PreservationReport check_preservation(const WeightJoining& j) {
    const Graph& g = j.left();
    const Graph& h = j.right();
    PreservationReport report;
    for (const auto& [key, value] : j.entries()) {
        if (value == 0) continue;
        if (g.weight(key.first.first, key.second.first) *
                h.weight(key.first.second, key.second.second) ==
            0) {
            report.violations.push_back("edge preservation fails at " + key_text(g, h, key));
        }
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < h.vertex_count(); ++v) {
            const Rational product = g.degree(u) * h.degree(v);
            const Rational& r = j.degree({u, v});
            if (r != 0 && product == 0) {
                report.violations.push_back("vertex preservation fails at " +
                                            pv_text(g, h, {u, v}));
            }
            if (r == 0 && product != 0) {
                report.degenerate_pairs.push_back({u, v});
            }
        }
    }
    return report;
}

WeightJoining product_joining(const Graph& g, const Graph& h) {
    std::map<JoiningKey, Rational> entries;
    for (const auto& [ge, gw] : g.weights()) {
        for (const auto& [he, hw] : h.weights()) {
            entries[{{ge.first, he.first}, {ge.second, he.second}}] = gw * hw;
        }
    }
    return WeightJoining(g, h, std::move(entries), Rational(1));
}

WeightJoining bijective_joining(const Graph& g, const Graph& h, const std::vector<int>& iso) {
    const int m = g.vertex_count(), n = h.vertex_count();
    if (m != n || static_cast<int>(iso.size()) != m) {
        throw Error(ErrorCode::NotIsomorphism, "vertex counts differ");
    }
    std::vector<bool> hit(n, false);
    for (int v : iso) {
        if (v < 0 || v >= n || hit[v]) throw Error(ErrorCode::NotIsomorphism, "map not bijective");
        hit[v] = true;
    }
    for (int u = 0; u < m; ++u) {
        for (int w = 0; w < m; ++w) {
            if (g.weight(u, w) != h.weight(iso[u], iso[w])) {
                throw Error(ErrorCode::NotIsomorphism,
                            "weights differ at (" + g.label(u) + "," + g.label(w) + ")");
            }
        }
    }
    std::map<JoiningKey, Rational> entries;
    for (const auto& [ge, gw] : g.weights()) {
        entries[{{ge.first, iso[ge.first]}, {ge.second, iso[ge.second]}}] = gw;
    }
    return WeightJoining(g, h, std::move(entries), Rational(1));
}

WeightJoining diagonal_cycle_joining(int m, int n) {
    if (m < 3 || n < 3) throw Error(ErrorCode::InvalidSize, "cycles need at least 3 vertices");
    const Graph g = make_cycle(m), h = make_cycle(n);
    const Rational w = rational(1, 2L * m * n);
    std::vector<std::pair<JoiningKey, Rational>> raw;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            raw.push_back({{{i, j}, {(i + 1) % m, (j + 1) % n}}, w});
        }
    }
    return make_joining(g, h, raw);
}

WeightJoining two_loop_joining(const Rational& a1, const Rational& b1, const Rational& x) {
    if (a1 <= 0 || a1 >= 1 || b1 <= 0 || b1 >= 1) {
        throw Error(ErrorCode::InvalidWeight, "loop masses must lie in (0,1)");
    }
    const Rational excess = a1 + b1 - 1;
    const Rational lower = std::max(Rational(0), excess);
    const Rational upper = std::min(a1, b1);
    if (x < lower || x > upper) {
        throw Error(ErrorCode::InfeasibleParameter,
                    "x = " + to_string(x) + " outside [" + to_string(lower) + "," +
                        to_string(upper) + "]");
    }
    const Graph g = make_two_loop(a1, 1 - a1), h = make_two_loop(b1, 1 - b1);
    std::vector<std::pair<JoiningKey, Rational>> raw;
    const auto add = [&](int i, int j, const Rational& value) {
        if (value != 0) raw.push_back({{{i, j}, {i, j}}, value});
    };
    add(0, 0, x);
    add(0, 1, a1 - x);
    add(1, 0, b1 - x);
    add(1, 1, x + (1 - b1) - a1);
    return make_joining(g, h, raw);
}

namespace {

// gamma_t = alpha beta (1 + t s) with s the bracket slope below.
Rational bracket_slope(const Graph& g, const Graph& h, const Rational& factor,
                       const std::vector<Rational>& x, const std::vector<Rational>& y,
                       const Rational& lambda, int i, int j, int k, int l) {
    const Rational& pi = g.degree(i);
    const Rational& pk = g.degree(k);
    const Rational& qj = h.degree(j);
    const Rational& ql = h.degree(l);
    return factor * (x[i] * y[j] / (pi * qj) + x[k] * y[l] / (pk * ql) -
                     lambda * x[k] * y[j] / (pk * qj) - lambda * x[i] * y[l] / (pi * ql));
}

void check_perturbation_inputs(const Graph& g, const Graph& h, const Rational& lambda,
                               const std::vector<Rational>& x, const std::vector<Rational>& y) {
    if (!is_connected(g) || !is_connected(h)) {
        throw Error(ErrorCode::RequiresConnected, "perturbation joining needs connected graphs");
    }
    if (lambda == 1 || lambda == -1) {
        throw Error(ErrorCode::UnsupportedEigenvalue, "lambda must differ from 1 and -1");
    }
    const int m = g.vertex_count(), n = h.vertex_count();
    if (static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != n) {
        throw Error(ErrorCode::ShapeError, "eigenvector length mismatch");
    }
    const bool x_zero = std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; });
    const bool y_zero = std::all_of(y.begin(), y.end(), [](const Rational& v) { return v == 0; });
    if (x_zero || y_zero) {
        throw Error(ErrorCode::DegenerateDirection, "eigenvector is the zero vector");
    }
    // P^T x = lambda x row by row: sum_k alpha(i,k) x_k / p(k) = lambda x_i.
    for (int i = 0; i < m; ++i) {
        Rational sum(0);
        for (int k : g.neighbors(i)) sum += g.weight(i, k) * x[k] / g.degree(k);
        if (sum != lambda * x[i]) {
            throw Error(ErrorCode::NotAnEigenpair,
                        "P^T x != lambda x at row " + g.label(i));
        }
    }
    for (int j = 0; j < n; ++j) {
        Rational sum(0);
        for (int l : h.neighbors(j)) sum += h.weight(j, l) * y[l] / h.degree(l);
        if (sum != lambda * y[j]) {
            throw Error(ErrorCode::NotAnEigenpair,
                        "y^T Q != lambda y^T at column " + h.label(j));
        }
    }
}

}  // namespace

WeightJoining perturbation_joining(const Graph& g, const Graph& h, const Rational& lambda,
                                   const std::vector<Rational>& x, const std::vector<Rational>& y,
                                   const Rational& t) {
    check_perturbation_inputs(g, h, lambda, x, y);
    const Rational factor = Rational(1) / (1 - lambda * lambda);
    std::map<JoiningKey, Rational> entries;
    for (const auto& [ge, gw] : g.weights()) {
        for (const auto& [he, hw] : h.weights()) {
            const Rational bracket =
                1 + t * bracket_slope(g, h, factor, x, y, lambda, ge.first, he.first, ge.second,
                                      he.second);
            if (bracket < 0) {
                throw Error(ErrorCode::InfeasibleParameter,
                            "t = " + to_string(t) + " makes an entry negative");
            }
            if (bracket == 0) continue;
            entries[{{ge.first, he.first}, {ge.second, he.second}}] = gw * hw * bracket;
        }
    }
    return WeightJoining(g, h, std::move(entries), Rational(1));
}

WeightJoining perturbation_joining(const Graph& g, const Graph& h, const Rational& lambda,
                                   const std::vector<Rational>& x, const std::vector<Rational>& y,
                                   AutoT) {
    check_perturbation_inputs(g, h, lambda, x, y);
    const int m = g.vertex_count(), n = h.vertex_count();
    const Rational factor = Rational(1) / (1 - lambda * lambda);
    bool bounded = false;
    Rational t_max(0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < m; ++k) {
                for (int l = 0; l < n; ++l) {
                    const Rational s = bracket_slope(g, h, factor, x, y, lambda, i, j, k, l);
                    if (s >= 0) continue;
                    const Rational bound = Rational(-1) / s;
                    if (!bounded || bound < t_max) {
                        bounded = true;
                        t_max = bound;
                    }
                }
            }
        }
    }
    if (!bounded || t_max <= 0) {
        throw Error(ErrorCode::DegenerateDirection, "no positive step keeps entries positive");
    }
    return perturbation_joining(g, h, lambda, x, y, t_max / 2);
}

namespace {

WeightJoining swap_joining(const WeightJoining& j) {
    std::map<JoiningKey, Rational> entries;
    for (const auto& [key, value] : j.entries()) {
        entries[{{key.first.second, key.first.first}, {key.second.second, key.second.first}}] =
            value;
    }
    return WeightJoining(j.right(), j.left(), std::move(entries), j.normalization());
}

// One-sided extension: the left graph of gamma grows to g_super.
WeightJoining extend_left(const WeightJoining& gamma, const Graph& g_super) {
    const Graph& g = gamma.left();
    const Graph& h = gamma.right();
    if (!is_uniformly_weighted(g) || !is_uniformly_weighted(g_super)) {
        throw Error(ErrorCode::RequiresUniformWeights, "extension needs uniform edge weights");
    }
    if (!is_connected(g_super) || has_self_loops(g_super) || !is_connected(g) ||
        has_self_loops(g)) {
        throw Error(ErrorCode::RequiresConnectedNoLoops,
                    "extension needs connected graphs without self-loops");
    }

    // Subgraph relation by labels: V(g) inside V(g_super) and matching edge
    // pattern on the common vertex set.
    const int m = g.vertex_count();
    std::vector<int> embed(m);
    for (int u = 0; u < m; ++u) {
        try {
            embed[u] = g_super.index_of(g.label(u));
        } catch (const Error&) {
            throw Error(ErrorCode::NotASubgraph,
                        "vertex " + g.label(u) + " missing from the supergraph");
        }
    }
    std::set<int> image(embed.begin(), embed.end());
    for (int u = 0; u < m; ++u) {
        for (int w = 0; w < m; ++w) {
            const bool in_sub = g.weight(u, w) != 0;
            const bool in_super = g_super.weight(embed[u], embed[w]) != 0;
            if (in_sub != in_super) {
                throw Error(ErrorCode::NotASubgraph,
                            "edge pattern differs at (" + g.label(u) + "," + g.label(w) + ")");
            }
        }
    }

    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (gamma.degree({u, v}) != g.degree(u) * h.degree(v)) {
                throw Error(ErrorCode::InvalidJoining,
                            "extension needs the product degree function");
            }
        }
    }

    const Rational scale = rational(g.undirected_edge_count(), g_super.undirected_edge_count());
    std::map<JoiningKey, Rational> entries;
    for (const auto& [key, value] : gamma.entries()) {
        entries[{{embed[key.first.first], key.first.second},
                 {embed[key.second.first], key.second.second}}] = value * scale;
    }
    for (const auto& [ge, gw] : g_super.weights()) {
        if (image.count(ge.first) && image.count(ge.second)) continue;
        for (const auto& [he, hw] : h.weights()) {
            entries[{{ge.first, he.first}, {ge.second, he.second}}] = gw * hw;
        }
    }
    return WeightJoining(g_super, h, std::move(entries), Rational(1));
}

}  // namespace

WeightJoining supergraph_extension_joining(const WeightJoining& gamma, const Graph& g_super,
                                           const Graph& h_super) {
    const WeightJoining left_extended = extend_left(gamma, g_super);
    return swap_joining(extend_left(swap_joining(left_extended), h_super));
}

int JoiningVariableIndex::column_of(const JoiningKey& key) const {
    auto it = columns.find(key);
    if (it == columns.end() && mode == IndexMode::SIMPLIFIED) {
        it = columns.find(reversed(key));
    }
    if (it == columns.end()) {
        throw Error(ErrorCode::UnknownVertex, "key not present in the variable index");
    }
    return it->second;
}

JoiningVariableIndex build_full_index(const Graph& g, const Graph& h) {
    JoiningVariableIndex index;
    index.mode = IndexMode::FULL;
    for (const auto& [ge, gw] : g.weights()) {
        for (const auto& [he, hw] : h.weights()) {
            index.keys.push_back({{ge.first, he.first}, {ge.second, he.second}});
        }
    }
    std::sort(index.keys.begin(), index.keys.end());
    for (int c = 0; c < static_cast<int>(index.keys.size()); ++c) {
        index.columns[index.keys[c]] = c;
    }
    return index;
}

JoiningVariableIndex build_simplified_index(const Graph& g, const Graph& h) {
    JoiningVariableIndex index;
    index.mode = IndexMode::SIMPLIFIED;
    std::set<JoiningKey> representatives;
    for (const auto& [ge, gw] : g.weights()) {
        for (const auto& [he, hw] : h.weights()) {
            const JoiningKey key{{ge.first, he.first}, {ge.second, he.second}};
            representatives.insert(std::min(key, reversed(key)));
        }
    }
    index.keys.assign(representatives.begin(), representatives.end());
    for (int c = 0; c < static_cast<int>(index.keys.size()); ++c) {
        index.columns[index.keys[c]] = c;
    }
    return index;
}

std::string to_string(const RowTag& tag, const Graph& g, const Graph& h) {
    switch (tag.kind) {
        case RowTag::Kind::Symmetry:
            return "Symmetry";
        case RowTag::Kind::DegreeCouplingLeft:
            return "DegreeCouplingLeft(" + g.label(tag.u) + ")";
        case RowTag::Kind::DegreeCouplingRight:
            return "DegreeCouplingRight(" + h.label(tag.v) + ")";
        case RowTag::Kind::TransitionLeft:
            return "TransitionLeft(" + g.label(tag.u) + "," + h.label(tag.v) + "," +
                   g.label(tag.w) + ")";
        case RowTag::Kind::TransitionRight:
            return "TransitionRight(" + g.label(tag.u) + "," + h.label(tag.v) + "," +
                   h.label(tag.w) + ")";
        case RowTag::Kind::DegreeProduct:
            return "DegreeProduct(" + g.label(tag.u) + "," + h.label(tag.v) + ")";
        case RowTag::Kind::CostRow:
            return "CostRow";
    }
    return "Unknown";
}

CostFunction::CostFunction(int left_size, int right_size)
    : nu_(left_size), nv_(right_size), values_(left_size * right_size, Rational(0)) {}

void CostFunction::set(int u, int v, const Rational& value) {
    if (value < 0) throw Error(ErrorCode::InvalidCost, "cost values must be nonnegative");
    values_[u * nv_ + v] = value;
}

CostFunction parse_cost(const std::string& source, const Graph& g, const Graph& h) {
    CostFunction cost(g.vertex_count(), h.vertex_count());
    std::istringstream in(source);
    std::string line;
    std::set<std::pair<int, int>> seen;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (tokens[0] != "cost" || tokens.size() != 4) {
            throw Error(ErrorCode::ParseError, "cost line needs 'cost <u> <v> <value>'" + where);
        }
        const int u = g.index_of(tokens[1]);
        const int v = h.index_of(tokens[2]);
        if (!seen.insert({u, v}).second) {
            throw Error(ErrorCode::ParseError, "duplicate cost entry" + where);
        }
        cost.set(u, v, parse_rational(tokens[3]));
    }
    return cost;
}

ConstraintSystem build_J(const Graph& g, const Graph& h) {
    ConstraintSystem system;
    system.index = build_full_index(g, h);
    const auto& index = system.index;
    const int m = g.vertex_count(), n = h.vertex_count();
    const int k = index.size();

    std::vector<std::vector<Rational>> rows;
    const auto emit = [&](std::vector<Rational> row, RowTag tag) {
        rows.push_back(std::move(row));
        system.row_tags.push_back(tag);
    };

    for (const auto& key : index.keys) {
        if (key < reversed(key)) {
            std::vector<Rational> row(k, Rational(0));
            row[index.columns.at(key)] = 1;
            row[index.columns.at(reversed(key))] = -1;
            emit(std::move(row), {RowTag::Kind::Symmetry});
        }
    }
    for (int u = 0; u < m; ++u) {
        std::vector<Rational> row(k, Rational(0));
        for (int c = 0; c < k; ++c) {
            row[c] = Rational(index.keys[c].first.first == u ? 1 : 0) - g.degree(u);
        }
        emit(std::move(row), {RowTag::Kind::DegreeCouplingLeft, u});
    }
    for (int v = 0; v < n; ++v) {
        std::vector<Rational> row(k, Rational(0));
        for (int c = 0; c < k; ++c) {
            row[c] = Rational(index.keys[c].first.second == v ? 1 : 0) - h.degree(v);
        }
        emit(std::move(row), {RowTag::Kind::DegreeCouplingRight, -1, v});
    }
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < n; ++v) {
            for (int w : g.neighbors(u)) {
                std::vector<Rational> row(k, Rational(0));
                for (int c = 0; c < k; ++c) {
                    const auto& key = index.keys[c];
                    if (key.first != ProductVertex{u, v}) continue;
                    row[c] = -g.weight(u, w);
                    if (key.second.first == w) row[c] += g.degree(u);
                }
                emit(std::move(row), {RowTag::Kind::TransitionLeft, u, v, w});
            }
        }
    }
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < n; ++v) {
            for (int w : h.neighbors(v)) {
                std::vector<Rational> row(k, Rational(0));
                for (int c = 0; c < k; ++c) {
                    const auto& key = index.keys[c];
                    if (key.first != ProductVertex{u, v}) continue;
                    row[c] = -h.weight(v, w);
                    if (key.second.second == w) row[c] += h.degree(v);
                }
                emit(std::move(row), {RowTag::Kind::TransitionRight, u, v, w});
            }
        }
    }

    system.matrix = RMatrix(static_cast<int>(rows.size()), k);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        for (int c = 0; c < k; ++c) system.matrix.at(i, c) = rows[i][c];
    }
    return system;
}

ConstraintSystem build_Js(const Graph& g, const Graph& h) {
    if (!is_connected(g) || !is_connected(h) || has_self_loops(g) || has_self_loops(h)) {
        throw Error(ErrorCode::RequiresConnectedNoLoops,
                    "simplified system needs connected graphs without self-loops");
    }
    ConstraintSystem system;
    system.index = build_simplified_index(g, h);
    const auto& index = system.index;
    const int m = g.vertex_count(), n = h.vertex_count();
    const int kappa = index.size();

    std::vector<std::vector<Rational>> rows;
    // Assemble each transition row over FULL keys with prefix (u,v), folding
    // coefficients into the symmetric class columns.
    const auto transition_row = [&](int u, int v, int w, bool left_side) {
        std::vector<Rational> row(kappa, Rational(0));
        for (int c : g.neighbors(u)) {
            for (int d : h.neighbors(v)) {
                const JoiningKey key{{u, v}, {c, d}};
                Rational coeff = left_side ? -g.weight(u, w) : -h.weight(v, w);
                if (left_side ? (c == w) : (d == w)) coeff += left_side ? g.degree(u) : h.degree(v);
                if (coeff != 0) row[index.column_of(key)] += coeff;
            }
        }
        return row;
    };
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < n; ++v) {
            const auto nbrs = g.neighbors(u);
            for (std::size_t a = 0; a + 1 < nbrs.size(); ++a) {
                rows.push_back(transition_row(u, v, nbrs[a], true));
                system.row_tags.push_back({RowTag::Kind::TransitionLeft, u, v, nbrs[a]});
            }
        }
    }
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < n; ++v) {
            const auto nbrs = h.neighbors(v);
            for (std::size_t a = 0; a + 1 < nbrs.size(); ++a) {
                rows.push_back(transition_row(u, v, nbrs[a], false));
                system.row_tags.push_back({RowTag::Kind::TransitionRight, u, v, nbrs[a]});
            }
        }
    }

    system.matrix = RMatrix(static_cast<int>(rows.size()), kappa);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        for (int c = 0; c < kappa; ++c) system.matrix.at(i, c) = rows[i][c];
    }
    return system;
}

ConstraintSystem build_Jw(const Graph& g, const Graph& h) {
    ConstraintSystem system;
    system.index = build_full_index(g, h);
    const auto& index = system.index;
    const int m = g.vertex_count(), n = h.vertex_count();
    const int k = index.size();
    system.matrix = RMatrix(m * n, k);
    int row = 0;
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < n; ++v) {
            const Rational product = g.degree(u) * h.degree(v);
            for (int c = 0; c < k; ++c) {
                system.matrix.at(row, c) =
                    Rational(index.keys[c].first == ProductVertex{u, v} ? 1 : 0) - product;
            }
            system.row_tags.push_back({RowTag::Kind::DegreeProduct, u, v});
            ++row;
        }
    }
    return system;
}

ConstraintSystem build_Jc(const Graph& g, const Graph& h, const CostFunction& cost) {
    if (cost.left_size() != g.vertex_count() || cost.right_size() != h.vertex_count()) {
        throw Error(ErrorCode::ShapeError, "cost dimensions do not match the graphs");
    }
    ConstraintSystem system;
    system.index = build_full_index(g, h);
    const auto& index = system.index;
    const int k = index.size();
    Rational product_cost(0);
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < h.vertex_count(); ++v) {
            product_cost += cost.at(u, v) * g.degree(u) * h.degree(v);
        }
    }
    system.matrix = RMatrix(1, k);
    for (int c = 0; c < k; ++c) {
        const auto& pv = index.keys[c].first;
        system.matrix.at(0, c) = cost.at(pv.first, pv.second) - product_cost;
    }
    system.row_tags.push_back({RowTag::Kind::CostRow});
    return system;
}

std::vector<Rational> joining_vector(const WeightJoining& j, const JoiningVariableIndex& index) {
    std::vector<Rational> values(index.size(), Rational(0));
    for (const auto& [key, value] : j.entries()) {
        if (value == 0) continue;
        auto it = index.columns.find(key);
        if (it == index.columns.end() && index.mode == IndexMode::SIMPLIFIED) {
            it = index.columns.find(reversed(key));
        }
        if (it == index.columns.end()) {
            throw Error(ErrorCode::InvalidJoining,
                        "joining entry outside the product support at " +
                            key_text(j.left(), j.right(), key));
        }
        values[it->second] = value;
    }
    return values;
}

WeightJoining joining_from_vector(const Graph& g, const Graph& h,
                                  const JoiningVariableIndex& index,
                                  const std::vector<Rational>& values) {
    if (static_cast<int>(values.size()) != index.size()) {
        throw Error(ErrorCode::ShapeError, "vector length does not match the variable index");
    }
    std::map<JoiningKey, Rational> entries;
    for (int c = 0; c < index.size(); ++c) {
        if (values[c] == 0) continue;
        entries[index.keys[c]] = values[c];
        if (index.mode == IndexMode::SIMPLIFIED) {
            entries[reversed(index.keys[c])] = values[c];
        }
    }
    return WeightJoining(g, h, std::move(entries), Rational(1));
}

}  // namespace graphjoin
