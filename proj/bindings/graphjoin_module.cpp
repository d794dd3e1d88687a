#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphjoin/disjointness.hpp"
#include "graphjoin/factor.hpp"
#include "graphjoin/markov.hpp"
#include "graphjoin/ogj.hpp"

namespace py = pybind11;

namespace {

using namespace graphjoin;

CostFunction cost_from_rows(const Graph& g, const Graph& h,
                            const std::vector<std::tuple<std::string, std::string, std::string>>& rows) {
    CostFunction cost(g.vertex_count(), h.vertex_count());
    for (const auto& [u, v, value] : rows) {
        cost.set(g.index_of(u), h.index_of(v), parse_rational(value));
    }
    return cost;
}

py::dict verdict_dict(const DisjointnessVerdict& verdict) {
    py::dict out;
    out["strong"] = verdict.strong;
    out["weak"] = verdict.weak;
    py::list costs;
    for (bool c : verdict.cost_disjoint) costs.append(c);
    out["cost_disjoint"] = costs;
    py::list trace;
    for (const auto& entry : verdict.trace) {
        py::dict numbers;
        for (const auto& [key, value] : entry.numbers) numbers[py::str(key)] = value;
        py::dict item;
        item["procedure"] = entry.procedure;
        item["numbers"] = numbers;
        trace.append(item);
    }
    out["trace"] = trace;
    out["strong_witness"] = verdict.strong_witness
                                ? py::object(py::str(joining_to_text(*verdict.strong_witness)))
                                : py::object(py::none());
    out["weak_witness"] = verdict.weak_witness
                              ? py::object(py::str(joining_to_text(*verdict.weak_witness)))
                              : py::object(py::none());
    return out;
}

}  // namespace

PYBIND11_MODULE(_graphjoin, m) {
    m.doc() = "Exact disjointness, joinings, and factors of weighted graphs";

    py::register_exception<Error>(m, "GraphJoinError");

    py::class_<Graph>(m, "Graph")
        .def("name", &Graph::name)
        .def("vertex_count", &Graph::vertex_count)
        .def("labels", &Graph::labels)
        .def("degree", [](const Graph& g, const std::string& label) {
            return to_string(g.degree(g.index_of(label)));
        })
        .def("to_text", [](const Graph& g) { return graph_to_text(g); })
        .def("to_json", [](const Graph& g) { return graph_to_json(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + g.name() + " (" + std::to_string(g.vertex_count()) + " vertices)>";
        });

    m.def("parse_graph", &parse_graph, py::arg("source"));
    m.def("cycle", &make_cycle, py::arg("k"));
    m.def("path", &make_path, py::arg("k"));
    m.def("complete_bipartite", &make_complete_bipartite, py::arg("k"), py::arg("l"));
    m.def("two_loop", [](const std::string& m1, const std::string& m2) {
        return make_two_loop(parse_rational(m1), parse_rational(m2));
    });

    m.def("strong_disjoint",
          [](const Graph& g, const Graph& h) { return strong_disjoint(g, h).first; });
    m.def("weak_disjoint", [](const Graph& g, const Graph& h) { return weak_disjoint(g, h); });
    m.def("classify",
          [](const Graph& g, const Graph& h,
             const std::vector<std::tuple<std::string, std::string, std::string>>& cost_rows) {
              std::vector<CostFunction> costs;
              if (!cost_rows.empty()) costs.push_back(cost_from_rows(g, h, cost_rows));
              return verdict_dict(classify_pair(g, h, costs));
          },
          py::arg("g"), py::arg("h"),
          py::arg("cost") = std::vector<std::tuple<std::string, std::string, std::string>>{});

    m.def("product_joining_text", [](const Graph& g, const Graph& h) {
        return joining_to_text(product_joining(g, h), "product");
    });
    m.def("validate_joining_text", [](const Graph& g, const Graph& h, const std::string& text) {
        const auto report = validate_joining(parse_joining(text, g, h));
        py::dict out;
        out["valid"] = report.valid;
        py::list violations;
        for (const auto& v : report.violations) {
            py::dict item;
            item["constraint"] = v.constraint;
            item["detail"] = v.detail;
            item["residual"] = to_string(v.residual);
            violations.append(item);
        }
        out["violations"] = violations;
        return out;
    });

    m.def("ogj",
          [](const Graph& g, const Graph& h,
             const std::vector<std::tuple<std::string, std::string, std::string>>& cost_rows) {
              const auto [value, minimizer] = ogj_value(g, h, cost_from_rows(g, h, cost_rows));
              return py::make_tuple(to_string(value), joining_to_text(minimizer, "ogj_minimizer"));
          });

    m.def("find_factor_maps", [](const Graph& g, const Graph& h) {
        std::vector<std::vector<int>> maps;
        for (const auto& f : find_factor_maps(g, h)) maps.push_back(f.map);
        return maps;
    });
    m.def("verify_factor", [](const Graph& g, const Graph& h, const std::vector<int>& phi) {
        return verify_factor(g, h, phi).first;
    });

    m.def("transition_char_poly",
          [](const Graph& g) { return to_string(char_poly(transition_matrix(g))); });

    m.def("simulate",
          [](const Graph& g, int steps, std::uint64_t seed, const std::string& tolerance) {
              const ReversibleChain chain = chain_from_graph(g);
              const TrajectorySample sample = simulate(chain, steps, seed);
              const EmpiricalReport report =
                  empirical_check(sample, chain, parse_rational(tolerance));
              py::list path;
              for (int s : sample.path) path.append(chain.states[s]);
              py::dict out;
              out["seed"] = sample.seed;
              out["steps"] = sample.steps;
              out["path"] = path;
              out["stationary_tv"] = to_string(report.stationary_tv);
              out["kernel_tv"] = to_string(report.kernel_tv);
              out["within_tolerance"] = report.within_tolerance;
              return out;
          },
          py::arg("g"), py::arg("steps"), py::arg("seed") = 0, py::arg("tolerance") = "1/50");
}
