#include "graphjoin/markov.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "graphjoin/rng.hpp"

namespace graphjoin {

ReversibleChain make_chain(std::vector<std::string> states, RMatrix kernel,
                           std::vector<Rational> stationary) {
    const int n = static_cast<int>(states.size());
    if (n == 0) throw Error(ErrorCode::ShapeError, "a chain needs at least one state");
    if (kernel.rows() != n || kernel.cols() != n || static_cast<int>(stationary.size()) != n) {
        throw Error(ErrorCode::ShapeError, "kernel and stationary must match the state count");
    }
    {
        std::vector<std::string> sorted = states;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error(ErrorCode::ShapeError, "duplicate state label");
        }
    }
    Rational mass(0);
    for (int i = 0; i < n; ++i) {
        if (stationary[i] <= 0) {
            throw Error(ErrorCode::NotReversible,
                        "stationary mass of " + states[i] + " is not positive");
        }
        mass += stationary[i];
        Rational row(0);
        for (int j = 0; j < n; ++j) {
            if (kernel.at(i, j) < 0) {
                throw Error(ErrorCode::NotReversible, "negative kernel entry at " + states[i]);
            }
            row += kernel.at(i, j);
        }
        if (row != 1) {
            throw Error(ErrorCode::NotReversible, "kernel row of " + states[i] + " sums to " +
                                                      to_string(row));
        }
    }
    if (mass != 1) {
        throw Error(ErrorCode::NotReversible, "stationary law sums to " + to_string(mass));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (stationary[i] * kernel.at(i, j) != stationary[j] * kernel.at(j, i)) {
                throw Error(ErrorCode::NotReversible, "detailed balance fails between " +
                                                          states[i] + " and " + states[j]);
            }
        }
    }
    return {std::move(states), std::move(kernel), std::move(stationary)};
}

ReversibleChain parse_chain(const std::string& source) {
    std::istringstream in(source);
    std::string line;
    bool header = false;
    std::vector<std::string> states;
    std::map<std::string, int> position;
    std::map<std::pair<int, int>, Rational> transitions;
    std::map<int, Rational> masses;
    int lineno = 0;

    const auto lookup = [&](const std::string& label, const std::string& where) {
        const auto it = position.find(label);
        if (it == position.end()) {
            throw Error(ErrorCode::UnknownVertex, "unknown state " + label + where);
        }
        return it->second;
    };

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
        if (tokens[0] == "chain") {
            header = true;
        } else if (tokens[0] == "state") {
            if (tokens.size() < 2) {
                throw Error(ErrorCode::ParseError, "state line needs a label" + where);
            }
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (position.count(tokens[i])) {
                    throw Error(ErrorCode::ParseError, "duplicate state " + tokens[i] + where);
                }
                position[tokens[i]] = static_cast<int>(states.size());
                states.push_back(tokens[i]);
            }
        } else if (tokens[0] == "trans") {
            if (tokens.size() != 4) {
                throw Error(ErrorCode::ParseError,
                            "trans line needs 'trans <s> <s'> <rational>'" + where);
            }
            const int s = lookup(tokens[1], where);
            const int s2 = lookup(tokens[2], where);
            if (transitions.count({s, s2})) {
                throw Error(ErrorCode::DuplicateEdge,
                            "transition " + tokens[1] + " -> " + tokens[2] + " listed twice" +
                                where);
            }
            transitions[{s, s2}] = parse_rational(tokens[3]);
        } else if (tokens[0] == "pi") {
            if (tokens.size() != 3) {
                throw Error(ErrorCode::ParseError, "pi line needs 'pi <s> <rational>'" + where);
            }
            const int s = lookup(tokens[1], where);
            if (masses.count(s)) {
                throw Error(ErrorCode::ParseError,
                            "stationary mass of " + tokens[1] + " listed twice" + where);
            }
            masses[s] = parse_rational(tokens[2]);
        } else {
            throw Error(ErrorCode::ParseError, "unknown directive " + tokens[0] + where);
        }
    }
    if (!header) throw Error(ErrorCode::ParseError, "missing 'chain' header");
    const int n = static_cast<int>(states.size());
    RMatrix kernel(n, n);
    for (const auto& [key, value] : transitions) kernel.at(key.first, key.second) = value;
    std::vector<Rational> stationary(n, Rational(0));
    for (const auto& [s, value] : masses) stationary[s] = value;
    return make_chain(std::move(states), std::move(kernel), std::move(stationary));
}

std::string chain_to_text(const ReversibleChain& c, const std::string& name) {
    std::ostringstream out;
    out << "chain " << name << "\n";
    for (const auto& s : c.states) out << "state " << s << "\n";
    const int n = static_cast<int>(c.states.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (c.kernel.at(i, j) != 0) {
                out << "trans " << c.states[i] << " " << c.states[j] << " "
                    << to_string(c.kernel.at(i, j)) << "\n";
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        out << "pi " << c.states[i] << " " << to_string(c.stationary[i]) << "\n";
    }
    return out.str();
}

ReversibleChain chain_from_graph(const Graph& g) {
    return make_chain(g.labels(), transition_matrix(g), g.degrees());
}

Graph graph_from_chain(const ReversibleChain& c) {
    // Re-validate so aggregate-built chains cannot smuggle in a bad kernel.
    const ReversibleChain checked = make_chain(c.states, c.kernel, c.stationary);

    const int n = static_cast<int>(checked.states.size());
    std::vector<std::string> sorted = checked.states;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) {
        pos[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(),
                                                   checked.states[i]) -
                                  sorted.begin());
    }
    std::map<std::pair<int, int>, Rational> weights;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational value = checked.stationary[i] * checked.kernel.at(i, j);
            if (value != 0) weights[{pos[i], pos[j]}] = value;
        }
    }
    return Graph("chain", std::move(sorted), std::move(weights), Rational(1));
}

ReversibleChain coupling_from_joining(const WeightJoining& k) {
    if (!validate_joining(k).valid) {
        throw Error(ErrorCode::InvalidJoining, "coupling needs a valid joining");
    }
    std::vector<ProductVertex> active;
    for (const auto& [pv, r] : k.degrees()) {
        if (r != 0) active.push_back(pv);
    }
    std::map<ProductVertex, int> pos;
    std::vector<std::string> states;
    for (int i = 0; i < static_cast<int>(active.size()); ++i) {
        pos[active[i]] = i;
        states.push_back("(" + k.left().label(active[i].first) + "," +
                         k.right().label(active[i].second) + ")");
    }
    const int n = static_cast<int>(active.size());
    RMatrix kernel(n, n);
    std::vector<Rational> stationary;
    for (int i = 0; i < n; ++i) stationary.push_back(k.degree(active[i]));
    for (const auto& [key, value] : k.entries()) {
        kernel.at(pos.at(key.first), pos.at(key.second)) = value / k.degree(key.first);
    }
    return make_chain(std::move(states), std::move(kernel), std::move(stationary));
}

ReversibleChain flip_chain() { return chain_from_graph(make_path(2)); }

ReversibleChain fixed_chain(const Rational& mass1, const Rational& mass2) {
    return chain_from_graph(make_two_loop(mass1, mass2));
}

TrajectorySample simulate(const ReversibleChain& c, int steps, std::uint64_t seed) {
    if (steps < 1) throw Error(ErrorCode::InvalidSize, "need at least one step");
    SplitMix64 rng(seed);
    const int n = static_cast<int>(c.states.size());
    std::vector<std::vector<Rational>> rows(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i].push_back(c.kernel.at(i, j));
    }
    TrajectorySample sample;
    sample.seed = seed;
    sample.steps = steps;
    int state = sample_categorical(c.stationary, rng);
    sample.path.push_back(state);
    for (int t = 0; t < steps; ++t) {
        state = sample_categorical(rows[state], rng);
        sample.path.push_back(state);
    }
    return sample;
}

EmpiricalReport empirical_check(const TrajectorySample& sample, const ReversibleChain& c,
                                const Rational& tolerance) {
    const int n = static_cast<int>(c.states.size());
    for (int s : sample.path) {
        if (s < 0 || s >= n) {
            throw Error(ErrorCode::UnknownVertex, "path visits a state outside the chain");
        }
    }
    const int visits = static_cast<int>(sample.path.size());
    std::vector<long> count(n, 0);
    for (int s : sample.path) ++count[s];

    EmpiricalReport report;
    report.stationary_tv = 0;
    for (int i = 0; i < n; ++i) {
        report.stationary_tv += abs(rational(count[i], visits) - c.stationary[i]);
    }
    report.stationary_tv /= 2;

    std::vector<long> sources(n, 0);
    std::vector<std::vector<long>> moves(n, std::vector<long>(n, 0));
    for (int t = 0; t + 1 < visits; ++t) {
        ++sources[sample.path[t]];
        ++moves[sample.path[t]][sample.path[t + 1]];
    }
    report.kernel_tv = 0;
    for (int i = 0; i < n; ++i) {
        if (sources[i] == 0) continue;
        Rational row_tv(0);
        for (int j = 0; j < n; ++j) {
            row_tv += abs(rational(moves[i][j], sources[i]) - c.kernel.at(i, j));
        }
        row_tv /= 2;
        report.kernel_tv = std::max(report.kernel_tv, row_tv);
    }
    report.within_tolerance = report.stationary_tv <= tolerance && report.kernel_tv <= tolerance;
    return report;
}

DisjointnessVerdict m_disjoint(const ReversibleChain& x, const ReversibleChain& y,
                               const std::vector<CostFunction>& costs) {
    return classify_pair(graph_from_chain(x), graph_from_chain(y), costs);
}

}  // namespace graphjoin
