#include "graphjoin/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace graphjoin {

Graph::Graph(std::string name, std::vector<std::string> labels,
             std::map<std::pair<int, int>, Rational> normalized_weights, Rational normalization)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      weights_(std::move(normalized_weights)),
      degrees_(labels_.size(), Rational(0)),
      normalization_(std::move(normalization)) {
    for (const auto& [key, value] : weights_) {
        degrees_[key.first] += value;
    }
}

int Graph::index_of(const std::string& label) const {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        throw Error(ErrorCode::UnknownVertex, "no vertex '" + label + "' in graph " + name_);
    }
    return static_cast<int>(it - labels_.begin());
}

const Rational& Graph::weight(int i, int j) const {
    static const Rational kZero(0);
    const auto it = weights_.find({i, j});
    return it == weights_.end() ? kZero : it->second;
}

int Graph::undirected_edge_count() const {
    int count = 0;
    for (const auto& [key, value] : weights_) {
        if (key.first < key.second) ++count;
    }
    return count;
}

std::vector<int> Graph::neighbors(int i) const {
    std::vector<int> out;
    for (auto it = weights_.lower_bound({i, 0}); it != weights_.end() && it->first.first == i;
         ++it) {
        out.push_back(it->first.second);
    }
    return out;
}

Graph make_graph(const std::string& name, const std::vector<std::string>& labels,
                 const std::vector<std::tuple<std::string, std::string, Rational>>& edges,
                 const std::vector<std::pair<std::string, Rational>>& loops) {
    std::vector<std::string> sorted_labels = labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    if (std::adjacent_find(sorted_labels.begin(), sorted_labels.end()) != sorted_labels.end()) {
        throw Error(ErrorCode::ParseError, "duplicate vertex label in graph " + name);
    }
    if (sorted_labels.empty()) throw Error(ErrorCode::EmptyGraph, "graph " + name + " has no vertices");
    if (edges.empty() && loops.empty()) {
        throw Error(ErrorCode::EmptyGraph, "graph " + name + " has no edges");
    }

    const auto index_of = [&](const std::string& label) {
        const auto it = std::lower_bound(sorted_labels.begin(), sorted_labels.end(), label);
        if (it == sorted_labels.end() || *it != label) {
            throw Error(ErrorCode::UnknownVertex, "no vertex '" + label + "' in graph " + name);
        }
        return static_cast<int>(it - sorted_labels.begin());
    };

    std::map<std::pair<int, int>, Rational> raw;
    Rational total(0);
    for (const auto& [u, v, value] : edges) {
        const int i = index_of(u), j = index_of(v);
        if (i == j) {
            throw Error(ErrorCode::ParseError,
                        "edge endpoints coincide ('" + u + "'); use a loop line");
        }
        if (value <= 0) {
            throw Error(ErrorCode::InvalidWeight, "edge " + u + " " + v + " has non-positive weight");
        }
        if (raw.count({i, j})) {
            throw Error(ErrorCode::DuplicateEdge, "edge " + u + " " + v + " listed twice");
        }
        raw[{i, j}] = value;
        raw[{j, i}] = value;
        total += value * 2;
    }
    for (const auto& [u, value] : loops) {
        const int i = index_of(u);
        if (value <= 0) {
            throw Error(ErrorCode::InvalidWeight, "loop " + u + " has non-positive weight");
        }
        if (raw.count({i, i})) {
            throw Error(ErrorCode::DuplicateEdge, "loop " + u + " listed twice");
        }
        raw[{i, i}] = value;
        total += value;
    }

    for (auto& [key, value] : raw) value /= total;
    return Graph(name, std::move(sorted_labels), std::move(raw), total);
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

Graph parse_graph_text(const std::string& source) {
    std::istringstream in(source);
    std::string line;
    std::string name;
    bool saw_header = false;
    std::vector<std::string> labels;
    std::vector<std::tuple<std::string, std::string, Rational>> edges;
    std::vector<std::pair<std::string, Rational>> loops;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (tokens[0] == "graph") {
            if (tokens.size() != 2) throw Error(ErrorCode::ParseError, "bad graph header" + where);
            name = tokens[1];
            saw_header = true;
        } else if (tokens[0] == "vertex") {
            if (tokens.size() < 2) throw Error(ErrorCode::ParseError, "vertex line needs labels" + where);
            labels.insert(labels.end(), tokens.begin() + 1, tokens.end());
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 4) throw Error(ErrorCode::ParseError, "edge line needs 3 fields" + where);
            edges.emplace_back(tokens[1], tokens[2], parse_rational(tokens[3]));
        } else if (tokens[0] == "loop") {
            if (tokens.size() != 3) throw Error(ErrorCode::ParseError, "loop line needs 2 fields" + where);
            loops.emplace_back(tokens[1], parse_rational(tokens[2]));
        } else {
            throw Error(ErrorCode::ParseError, "unknown directive '" + tokens[0] + "'" + where);
        }
    }
    if (!saw_header) throw Error(ErrorCode::ParseError, "missing 'graph <name>' header");
    return make_graph(name, labels, edges, loops);
}

Rational json_rational(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    throw Error(ErrorCode::ParseError, "weight must be a rational string or integer");
}

Graph parse_graph_json(const std::string& source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "graph JSON must be an object");
    const std::string name = j.value("name", std::string("graph"));
    std::vector<std::string> labels;
    for (const auto& v : j.value("vertices", nlohmann::json::array())) {
        labels.push_back(v.get<std::string>());
    }
    std::vector<std::tuple<std::string, std::string, Rational>> edges;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 3) {
            throw Error(ErrorCode::ParseError, "edge entries must be [u, v, weight]");
        }
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(), json_rational(e[2]));
    }
    std::vector<std::pair<std::string, Rational>> loops;
    for (const auto& l : j.value("loops", nlohmann::json::array())) {
        if (!l.is_array() || l.size() != 2) {
            throw Error(ErrorCode::ParseError, "loop entries must be [u, weight]");
        }
        loops.emplace_back(l[0].get<std::string>(), json_rational(l[1]));
    }
    return make_graph(name, labels, edges, loops);
}

}  // namespace

Graph parse_graph(const std::string& source) {
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{') return parse_graph_json(source);
    return parse_graph_text(source);
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.name() << "\n";
    out << "vertex";
    for (const auto& label : g.labels()) out << " " << label;
    out << "\n";
    for (const auto& [key, value] : g.weights()) {
        if (key.first < key.second) {
            out << "edge " << g.label(key.first) << " " << g.label(key.second) << " "
                << to_string(value) << "\n";
        } else if (key.first == key.second) {
            out << "loop " << g.label(key.first) << " " << to_string(value) << "\n";
        }
    }
    return out.str();
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["name"] = g.name();
    j["vertices"] = g.labels();
    auto edges = nlohmann::json::array();
    auto loops = nlohmann::json::array();
    for (const auto& [key, value] : g.weights()) {
        if (key.first < key.second) {
            edges.push_back({g.label(key.first), g.label(key.second), to_string(value)});
        } else if (key.first == key.second) {
            loops.push_back({g.label(key.first), to_string(value)});
        }
    }
    j["edges"] = edges;
    j["loops"] = loops;
    return j.dump(2);
}

namespace {

std::vector<std::string> padded_labels(const std::string& prefix, int count) {
    std::size_t width = std::to_string(count - 1).size();
    std::vector<std::string> labels;
    for (int i = 0; i < count; ++i) {
        std::string digits = std::to_string(i);
        labels.push_back(prefix + std::string(width - digits.size(), '0') + digits);
    }
    return labels;
}

}  // namespace

Graph make_cycle(int k) {
    if (k < 3) throw Error(ErrorCode::InvalidSize, "cycle needs at least 3 vertices");
    const auto labels = padded_labels("u", k);
    std::vector<std::tuple<std::string, std::string, Rational>> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(labels[i], labels[(i + 1) % k], Rational(1));
    }
    return make_graph("C" + std::to_string(k), labels, edges, {});
}

Graph make_path(int k) {
    if (k < 2) throw Error(ErrorCode::InvalidSize, "path needs at least 2 vertices");
    const auto labels = padded_labels("u", k);
    std::vector<std::tuple<std::string, std::string, Rational>> edges;
    for (int i = 0; i + 1 < k; ++i) {
        edges.emplace_back(labels[i], labels[i + 1], Rational(1));
    }
    return make_graph("P" + std::to_string(k), labels, edges, {});
}

Graph make_complete_bipartite(int k, int l) {
    if (k < 1 || l < 1) throw Error(ErrorCode::InvalidSize, "bipartite parts need >= 1 vertex");
    const auto left = padded_labels("a", k);
    const auto right = padded_labels("b", l);
    std::vector<std::string> labels = left;
    labels.insert(labels.end(), right.begin(), right.end());
    std::vector<std::tuple<std::string, std::string, Rational>> edges;
    for (const auto& a : left) {
        for (const auto& b : right) edges.emplace_back(a, b, Rational(1));
    }
    return make_graph("K" + std::to_string(k) + "_" + std::to_string(l), labels, edges, {});
}

Graph make_two_loop(const Rational& m1, const Rational& m2) {
    if (m1 <= 0 || m2 <= 0) throw Error(ErrorCode::InvalidWeight, "loop masses must be positive");
    return make_graph("L2", {"s0", "s1"}, {}, {{"s0", m1}, {"s1", m2}});
}

DegreeFunction degree(const Graph& g) {
    return g.degrees();
}

RMatrix transition_matrix(const Graph& g) {
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i) {
        if (g.degree(i) == 0) {
            throw Error(ErrorCode::NotFullySupported,
                        "vertex " + g.label(i) + " has zero degree");
        }
    }
    RMatrix p(n, n);
    for (const auto& [key, value] : g.weights()) {
        p.at(key.first, key.second) = value / g.degree(key.first);
    }
    return p;
}

ProductGraphResult tensor_product(const Graph& g, const Graph& h) {
    const int nu = g.vertex_count(), nv = h.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(nu * nv);
    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < nv; ++j) {
            labels.push_back("(" + g.label(i) + "," + h.label(j) + ")");
        }
    }
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::string, int> position;
    for (int k = 0; k < static_cast<int>(sorted.size()); ++k) position[sorted[k]] = k;

    std::vector<std::pair<int, int>> coords(nu * nv);
    const auto pos = [&](int i, int j) { return position.at(labels[i * nv + j]); };
    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < nv; ++j) coords[pos(i, j)] = {i, j};
    }

    std::map<std::pair<int, int>, Rational> weights;
    for (const auto& [ge, gw] : g.weights()) {
        for (const auto& [he, hw] : h.weights()) {
            weights[{pos(ge.first, he.first), pos(ge.second, he.second)}] = gw * hw;
        }
    }
    Graph product(g.name() + "x" + h.name(), std::move(sorted), std::move(weights), Rational(1));
    return {std::move(product), std::move(coords)};
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> component(n, -1);
    std::vector<std::vector<int>> components;
    for (int start = 0; start < n; ++start) {
        if (component[start] >= 0) continue;
        const int id = static_cast<int>(components.size());
        components.push_back({});
        std::deque<int> queue{start};
        component[start] = id;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            components[id].push_back(u);
            for (int v : g.neighbors(u)) {
                if (component[v] < 0) {
                    component[v] = id;
                    queue.push_back(v);
                }
            }
        }
        std::sort(components[id].begin(), components[id].end());
    }
    return components;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

bool is_fully_supported(const Graph& g) {
    for (const auto& d : g.degrees()) {
        if (d == 0) return false;
    }
    return true;
}

bool is_forest(const Graph& g) {
    if (has_self_loops(g)) return false;
    // A forest has exactly n - (#components) undirected edges.
    const int n = g.vertex_count();
    const int components = static_cast<int>(connected_components(g).size());
    return g.undirected_edge_count() == n - components;
}

bool is_bipartite_structural(const Graph& g) {
    if (has_self_loops(g)) return false;
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool has_self_loops(const Graph& g) {
    for (const auto& [key, value] : g.weights()) {
        if (key.first == key.second) return true;
    }
    return false;
}

bool is_uniformly_weighted(const Graph& g) {
    const auto& w = g.weights();
    if (w.empty()) return true;
    const Rational& first = w.begin()->second;
    for (const auto& [key, value] : w) {
        if (value != first) return false;
    }
    return true;
}

}  // namespace graphjoin
