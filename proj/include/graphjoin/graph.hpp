#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "graphjoin/errors.hpp"
#include "graphjoin/linalg.hpp"
#include "graphjoin/rational.hpp"

namespace graphjoin {

using DegreeFunction = std::vector<Rational>;

// Weighted undirected graph as a normalized symmetric weight function.
// Vertices are kept in canonical order (lexicographic by label); all indices
// refer to that order. The weight map stores every ordered support pair,
// self-loops once as (i,i). The ordered-pair sum (loops counted once) is 1.
class Graph {
  public:
    Graph(std::string name, std::vector<std::string> labels,
          std::map<std::pair<int, int>, Rational> normalized_weights, Rational normalization);

    const std::string& name() const { return name_; }
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    int index_of(const std::string& label) const;  // UnknownVertex if absent

    const std::map<std::pair<int, int>, Rational>& weights() const { return weights_; }
    const Rational& weight(int i, int j) const;  // 0 when (i,j) unsupported
    const DegreeFunction& degrees() const { return degrees_; }
    const Rational& degree(int i) const { return degrees_[i]; }

    // Raw-to-normalized scale factor recorded at construction.
    const Rational& normalization() const { return normalization_; }

    // Directed edge count |E|: off-diagonal pairs both ways, loops once.
    int directed_edge_count() const { return static_cast<int>(weights_.size()); }
    // Undirected edge count excluding self-loops (the M of kappa = 2MN).
    int undirected_edge_count() const;
    std::vector<int> neighbors(int i) const;  // sorted, includes i when looped

    bool operator==(const Graph& other) const {
        return labels_ == other.labels_ && weights_ == other.weights_;
    }

  private:
    std::string name_;
    std::vector<std::string> labels_;
    std::map<std::pair<int, int>, Rational> weights_;
    DegreeFunction degrees_;
    Rational normalization_;
};

// Builds a graph from raw (unnormalized) data: labels in any order, each
// undirected edge listed once with u != v, loops listed separately. Values
// must be positive; the whole weight function is scaled to sum to 1.
Graph make_graph(const std::string& name, const std::vector<std::string>& labels,
                 const std::vector<std::tuple<std::string, std::string, Rational>>& edges,
                 const std::vector<std::pair<std::string, Rational>>& loops);

// Text or JSON form (sniffed by leading '{'); see README for the format.
Graph parse_graph(const std::string& source);
std::string graph_to_text(const Graph& g);
std::string graph_to_json(const Graph& g);

Graph make_cycle(int k);                            // k >= 3, weights 1/(2k)
Graph make_path(int k);                             // k >= 2, weights 1/(2(k-1))
Graph make_complete_bipartite(int k, int l);        // k,l >= 1, weights 1/(2kl)
Graph make_two_loop(const Rational& m1, const Rational& m2);

DegreeFunction degree(const Graph& g);

// Row-stochastic P with P(i,j) = alpha(i,j)/p(i); NotFullySupported if some
// vertex has zero degree.
RMatrix transition_matrix(const Graph& g);

// Product graph on U x V with composite labels "(u,v)". product_coords maps
// the product graph's canonical vertex order back to (left index, right index).
struct ProductGraphResult {
    Graph graph;
    std::vector<std::pair<int, int>> coords;
};
ProductGraphResult tensor_product(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_fully_supported(const Graph& g);
bool is_forest(const Graph& g);  // a self-loop counts as a cycle
bool is_bipartite_structural(const Graph& g);
bool has_self_loops(const Graph& g);
bool is_uniformly_weighted(const Graph& g);

}  // namespace graphjoin
