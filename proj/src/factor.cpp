#include "graphjoin/factor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace graphjoin {

std::string factor_to_text(const FactorMap& f) {
    std::ostringstream out;
    for (int u = 0; u < f.source.vertex_count(); ++u) {
        out << "factor " << f.source.label(u) << " -> " << f.target.label(f.map[u]) << "\n";
    }
    return out.str();
}

FactorMap parse_factor(const std::string& source_text, const Graph& g, const Graph& h) {
    std::istringstream in(source_text);
    std::string line;
    std::vector<int> map(g.vertex_count(), -1);
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
        if (tokens.size() != 4 || tokens[0] != "factor" || tokens[2] != "->") {
            throw Error(ErrorCode::ParseError,
                        "factor line needs 'factor <src> -> <tgt>'" + where);
        }
        const int u = g.index_of(tokens[1]);
        if (map[u] >= 0) {
            throw Error(ErrorCode::ParseError,
                        "vertex " + tokens[1] + " mapped twice" + where);
        }
        map[u] = h.index_of(tokens[3]);
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (map[u] < 0) {
            throw Error(ErrorCode::ParseError, "vertex " + g.label(u) + " has no factor line");
        }
    }
    return {g, h, std::move(map), false};
}

namespace {

void check_phi(const Graph& g, const Graph& h, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != g.vertex_count()) {
        throw Error(ErrorCode::ShapeError, "factor map length does not match the source");
    }
    for (int v : phi) {
        if (v < 0 || v >= h.vertex_count()) {
            throw Error(ErrorCode::UnknownVertex, "factor map hits a vertex outside the target");
        }
    }
}

std::vector<std::vector<int>> preimages(const Graph& h, const std::vector<int>& phi) {
    std::vector<std::vector<int>> cells(h.vertex_count());
    for (int u = 0; u < static_cast<int>(phi.size()); ++u) cells[phi[u]].push_back(u);
    return cells;
}

void check_surjective(const Graph& h, const std::vector<std::vector<int>>& cells,
                      std::vector<FactorViolation>& violations) {
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (cells[v].empty()) {
            violations.push_back({"surjectivity", "vertex " + h.label(v) + " not covered",
                                  Rational(0)});
        }
    }
}

void check_transition(const Graph& g, const Graph& h, const std::vector<int>& phi,
                      const std::vector<std::vector<int>>& cells,
                      std::vector<FactorViolation>& violations) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        const int v = phi[u];
        for (int w = 0; w < h.vertex_count(); ++w) {
            Rational cell_weight(0);
            for (int u2 : cells[w]) cell_weight += g.weight(u, u2);
            const Rational residual = h.degree(v) * cell_weight - g.degree(u) * h.weight(v, w);
            if (residual != 0) {
                violations.push_back({"transition",
                                      g.label(u) + "; " + h.label(v) + "->" + h.label(w),
                                      residual});
            }
        }
    }
}

}  // namespace

std::pair<bool, std::vector<FactorViolation>> verify_factor(const Graph& g, const Graph& h,
                                                            const std::vector<int>& phi) {
    check_phi(g, h, phi);
    std::vector<FactorViolation> violations;
    const auto cells = preimages(h, phi);
    check_surjective(h, cells, violations);
    for (int v = 0; v < h.vertex_count(); ++v) {
        Rational mass(0);
        for (int u : cells[v]) mass += g.degree(u);
        const Rational residual = mass - h.degree(v);
        if (residual != 0) {
            violations.push_back({"degree", h.label(v), residual});
        }
    }
    check_transition(g, h, phi, cells, violations);
    return {violations.empty(), std::move(violations)};
}

std::pair<bool, std::vector<FactorViolation>> verify_factor_connected(const Graph& g,
                                                                      const Graph& h,
                                                                      const std::vector<int>& phi) {
    if (!is_connected(h)) {
        throw Error(ErrorCode::RequiresConnected, "shortcut check needs a connected target");
    }
    check_phi(g, h, phi);
    std::vector<FactorViolation> violations;
    const auto cells = preimages(h, phi);
    check_surjective(h, cells, violations);
    check_transition(g, h, phi, cells, violations);
    return {violations.empty(), std::move(violations)};
}

std::pair<FactorMap, FactorMap> projection_factors(const WeightJoining& k) {
    const auto report = validate_joining(k);
    if (!report.valid) {
        throw Error(ErrorCode::InvalidJoining, "projections need a valid joining");
    }
    const Graph& g = k.left();
    const Graph& h = k.right();
    const int nu = g.vertex_count(), nv = h.vertex_count();

    std::vector<std::string> labels;
    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < nv; ++j) labels.push_back("(" + g.label(i) + "," + h.label(j) + ")");
    }
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::string, int> position;
    for (int c = 0; c < static_cast<int>(sorted.size()); ++c) position[sorted[c]] = c;
    const auto pos = [&](const ProductVertex& pv) {
        return position.at(labels[pv.first * nv + pv.second]);
    };

    std::map<std::pair<int, int>, Rational> weights;
    for (const auto& [key, value] : k.entries()) {
        weights[{pos(key.first), pos(key.second)}] = value;
    }
    const Graph induced("joined", sorted, std::move(weights), Rational(1));

    std::vector<int> pi1(nu * nv), pi2(nu * nv);
    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < nv; ++j) {
            pi1[pos({i, j})] = i;
            pi2[pos({i, j})] = j;
        }
    }
    const auto [ok1, v1] = verify_factor(induced, g, pi1);
    const auto [ok2, v2] = verify_factor(induced, h, pi2);
    if (!ok1 || !ok2) {
        throw Error(ErrorCode::InternalInconsistency,
                    "projections of a valid joining failed to verify");
    }
    return {FactorMap{induced, g, std::move(pi1), true},
            FactorMap{induced, h, std::move(pi2), true}};
}

FactorMap compose_factors(const FactorMap& f1, const FactorMap& f2) {
    if (!(f1.source == f2.target)) {
        throw Error(ErrorCode::CompositionMismatch,
                    "intermediate graphs of the factor chain differ");
    }
    if (!verify_factor(f1.source, f1.target, f1.map).first ||
        !verify_factor(f2.source, f2.target, f2.map).first) {
        throw Error(ErrorCode::CompositionMismatch, "inputs are not verified factor maps");
    }
    std::vector<int> composite(f2.source.vertex_count());
    for (int s = 0; s < f2.source.vertex_count(); ++s) composite[s] = f1.map[f2.map[s]];
    if (!verify_factor(f2.source, f1.target, composite).first) {
        throw Error(ErrorCode::InternalInconsistency, "composite factor map failed to verify");
    }
    return {f2.source, f1.target, std::move(composite), true};
}

std::vector<FactorMap> find_factor_maps(const Graph& g, const Graph& h, std::uint64_t budget) {
    const int ns = g.vertex_count(), nt = h.vertex_count();
    std::vector<FactorMap> found;
    if (ns < nt) return found;

    std::uint64_t candidates = 1;
    for (int i = 0; i < ns; ++i) {
        if (candidates > budget / static_cast<std::uint64_t>(nt)) {
            throw Error(ErrorCode::SearchBudgetExceeded,
                        "factor search space exceeds the budget");
        }
        candidates *= static_cast<std::uint64_t>(nt);
    }

    std::vector<int> phi(ns, 0);
    while (true) {
        std::vector<bool> hit(nt, false);
        for (int v : phi) hit[v] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
            if (verify_factor(g, h, phi).first) {
                found.push_back({g, h, phi, true});
            }
        }
        int pos = ns - 1;
        while (pos >= 0 && phi[pos] == nt - 1) phi[pos--] = 0;
        if (pos < 0) break;
        ++phi[pos];
    }
    return found;
}

namespace {

std::vector<std::string> cell_labels(int count) {
    std::size_t width = std::to_string(count - 1).size();
    std::vector<std::string> labels;
    for (int i = 0; i < count; ++i) {
        std::string digits = std::to_string(i);
        labels.push_back("c" + std::string(width - digits.size(), '0') + digits);
    }
    return labels;
}

}  // namespace

std::optional<Graph> quotient_graph(const Graph& g,
                                    const std::vector<std::vector<int>>& partition) {
    const int n = g.vertex_count();
    std::vector<int> cell_of(n, -1);
    for (int c = 0; c < static_cast<int>(partition.size()); ++c) {
        for (int u : partition[c]) {
            if (u < 0 || u >= n || cell_of[u] >= 0) {
                throw Error(ErrorCode::ShapeError, "partition does not partition the vertex set");
            }
            cell_of[u] = c;
        }
    }
    if (std::any_of(cell_of.begin(), cell_of.end(), [](int c) { return c < 0; })) {
        throw Error(ErrorCode::ShapeError, "partition does not cover the vertex set");
    }

    const int cells = static_cast<int>(partition.size());
    std::map<std::pair<int, int>, Rational> weights;
    for (const auto& [key, value] : g.weights()) {
        weights[{cell_of[key.first], cell_of[key.second]}] += value;
    }
    Graph quotient("quotient", cell_labels(cells), std::move(weights), Rational(1));
    if (!verify_factor(g, quotient, cell_of).first) return std::nullopt;
    return quotient;
}

std::vector<CommonFactor> common_factor_search(const Graph& g, const Graph& h, int max_size,
                                               std::uint64_t budget) {
    if (max_size < 2) throw Error(ErrorCode::InvalidSize, "max_size must be at least 2");
    const int n = g.vertex_count();
    std::vector<CommonFactor> results;

    // Restricted growth strings enumerate set partitions of V(g); cap the
    // cell count at max_size.
    std::vector<int> rgs(n, 0);
    std::uint64_t seen = 0;
    while (true) {
        const int cells = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (++seen > budget) {
            throw Error(ErrorCode::SearchBudgetExceeded, "partition enumeration exceeds budget");
        }
        if (cells >= 2 && cells <= max_size) {
            std::vector<std::vector<int>> partition(cells);
            for (int u = 0; u < n; ++u) partition[rgs[u]].push_back(u);
            const auto quotient = quotient_graph(g, partition);
            if (quotient) {
                int positive = 0;
                for (const auto& d : quotient->degrees()) {
                    if (d > 0) ++positive;
                }
                if (positive >= 2) {
                    const auto from_h = find_factor_maps(h, *quotient, budget);
                    if (!from_h.empty()) {
                        std::vector<int> cell_of(n);
                        for (int u = 0; u < n; ++u) cell_of[u] = rgs[u];
                        results.push_back({*quotient,
                                           FactorMap{g, *quotient, std::move(cell_of), true},
                                           from_h.front()});
                    }
                }
            }
        }
        // Next restricted growth string.
        int pos = n - 1;
        while (pos > 0) {
            const int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + pos);
            if (rgs[pos] <= prefix_max && rgs[pos] + 1 <= max_size - 1) break;
            rgs[pos--] = 0;
        }
        if (pos == 0) break;
        ++rgs[pos];
    }
    return results;
}

std::optional<std::vector<int>> mutual_factor_isomorphism(const Graph& g, const Graph& h,
                                                          std::uint64_t budget) {
    if (g.vertex_count() != h.vertex_count()) return std::nullopt;
    const auto forward = find_factor_maps(g, h, budget);
    if (forward.empty()) return std::nullopt;
    const auto backward = find_factor_maps(h, g, budget);
    if (backward.empty()) return std::nullopt;
    return forward.front().map;
}

}  // namespace graphjoin
