#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphjoin/disjointness.hpp"
#include "graphjoin/factor.hpp"
#include "graphjoin/graph.hpp"
#include "graphjoin/joining.hpp"
#include "graphjoin/markov.hpp"
#include "graphjoin/ogj.hpp"

namespace gj = graphjoin;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "graphjoin/1";

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    if (!out) throw IoError("cannot write " + path);
}

std::string scalar_text(const Json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_null()) return "none";
    return value.dump();
}

void render_text(const Json& value, std::ostream& out, int indent) {
    const std::string pad(indent, ' ');
    if (value.is_object()) {
        for (const auto& [key, item] : value.items()) {
            if (item.is_object() || item.is_array()) {
                if (item.empty()) {
                    out << pad << key << ": none\n";
                } else {
                    out << pad << key << ":\n";
                    render_text(item, out, indent + 2);
                }
            } else {
                out << pad << key << ": " << scalar_text(item) << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const auto& item : value) {
            if (item.is_object() || item.is_array()) {
                out << pad << "-\n";
                render_text(item, out, indent + 2);
            } else {
                out << pad << "- " << scalar_text(item) << "\n";
            }
        }
    } else {
        out << pad << scalar_text(value) << "\n";
    }
}

void emit(const Json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        render_text(report, std::cout, 0);
    }
}

Json trace_json(const std::vector<gj::TraceEntry>& trace) {
    Json out = Json::array();
    for (const auto& entry : trace) {
        Json numbers = Json::object();
        for (const auto& [key, value] : entry.numbers) numbers[key] = value;
        out.push_back({{"procedure", entry.procedure}, {"numbers", numbers}});
    }
    return out;
}

Json graph_summary(const gj::Graph& g) {
    return {{"name", g.name()},
            {"vertices", g.vertex_count()},
            {"edges", g.undirected_edge_count()},
            {"fully_supported", gj::is_fully_supported(g)}};
}

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        return std::stoull(raw);
    } catch (const std::exception&) {
        throw IoError(std::string(name) + " must be a positive integer");
    }
}

std::vector<gj::Rational> parse_rational_list(const std::string& text) {
    std::vector<gj::Rational> values;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) values.push_back(gj::parse_rational(item));
    return values;
}

struct CheckOptions {
    std::string g_path, h_path;
    std::string mode = "all";
    std::vector<std::string> cost_paths;
    std::string format = "text";
    std::string outdir = ".";
};

void shared_eigenvalues(const gj::Graph& g, const gj::Graph& h, Json& report) {
    if (!gj::is_fully_supported(g) || !gj::is_fully_supported(h)) return;
    const gj::RPoly gcd =
        gj::poly_gcd(gj::char_poly(gj::transition_matrix(g)), gj::char_poly(gj::transition_matrix(h)));
    Json values = Json::array();
    for (const auto& [root, multiplicity] : gj::rational_roots(gcd)) {
        values.push_back(gj::to_string(root));
        (void)multiplicity;
    }
    report["shared_rational_eigenvalues"] = values;
}

Json cost_entry(const gj::Graph& g, const gj::Graph& h, const gj::CostFunction& cost,
                const std::string& file, bool rank_disjoint) {
    Json entry = {{"file", file}, {"disjoint", rank_disjoint}};
    const std::uint64_t budget = env_budget(
        "GRAPHJOIN_LP_BUDGET", static_cast<std::uint64_t>(gj::kDefaultLpVariableBudget));
    const int variables = gj::build_full_index(g, h).size();
    if (static_cast<std::uint64_t>(variables) > budget) return entry;

    gj::Rational product_value(0);
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < h.vertex_count(); ++v) {
            product_value += cost.at(u, v) * g.degree(u) * h.degree(v);
        }
    }
    const gj::Rational value = gj::ogj_value(g, h, cost).first;
    if ((value == product_value) != rank_disjoint) {
        throw gj::Error(gj::ErrorCode::InternalInconsistency,
                        "lp and rank cost verdicts disagree");
    }
    entry["value"] = gj::to_string(value);
    return entry;
}

std::string write_witness(const std::optional<gj::WeightJoining>& witness, const std::string& name,
                          const std::string& outdir) {
    if (!witness) return {};
    const std::string path = (std::filesystem::path(outdir) / (name + ".joining")).string();
    write_file(path, gj::joining_to_text(*witness, name));
    return path;
}

void cmd_check(const CheckOptions& opt) {
    const gj::Graph g = gj::parse_graph(read_file(opt.g_path));
    const gj::Graph h = gj::parse_graph(read_file(opt.h_path));
    std::vector<gj::CostFunction> costs;
    for (const auto& path : opt.cost_paths) {
        costs.push_back(gj::parse_cost(read_file(path), g, h));
    }

    Json report;
    report["schema"] = kSchema;
    report["command"] = "check";
    report["mode"] = opt.mode;
    report["left"] = graph_summary(g);
    report["right"] = graph_summary(h);

    Json witnesses = Json::object();
    if (opt.mode == "all") {
        const gj::DisjointnessVerdict verdict = gj::classify_pair(g, h, costs);
        report["strong"] = verdict.strong;
        report["weak"] = verdict.weak;
        Json cost_out = Json::array();
        for (std::size_t i = 0; i < costs.size(); ++i) {
            cost_out.push_back(
                cost_entry(g, h, costs[i], opt.cost_paths[i], verdict.cost_disjoint[i]));
        }
        report["costs"] = cost_out;
        shared_eigenvalues(g, h, report);
        report["trace"] = trace_json(verdict.trace);
        if (const auto path = write_witness(verdict.strong_witness, "strong_witness", opt.outdir);
            !path.empty()) {
            witnesses["strong"] = path;
        }
        if (const auto path = write_witness(verdict.weak_witness, "weak_witness", opt.outdir);
            !path.empty()) {
            witnesses["weak"] = path;
        }
    } else {
        std::vector<gj::TraceEntry> trace;
        std::optional<gj::WeightJoining> witness;
        if (opt.mode == "strong") {
            const auto [strong, entry] = gj::strong_disjoint(g, h, &witness);
            report["strong"] = strong;
            trace.push_back(entry);
            if (const auto path = write_witness(witness, "strong_witness", opt.outdir);
                !path.empty()) {
                witnesses["strong"] = path;
            }
        } else {
            const auto [weak, entry] = gj::weak_disjoint_rank(g, h, &witness);
            report["weak"] = weak;
            trace.push_back(entry);
            if (gj::is_fully_supported(g) && gj::is_fully_supported(h)) {
                const auto [spectral_weak, spectral_entry] = gj::weak_disjoint_spectral(g, h);
                if (spectral_weak != weak) {
                    throw gj::Error(gj::ErrorCode::InternalInconsistency,
                                    "rank and spectral weak verdicts disagree");
                }
                trace.push_back(spectral_entry);
                shared_eigenvalues(g, h, report);
            }
            if (const auto path = write_witness(witness, "weak_witness", opt.outdir);
                !path.empty()) {
                witnesses["weak"] = path;
            }
        }
        Json cost_out = Json::array();
        for (std::size_t i = 0; i < costs.size(); ++i) {
            const auto [disjoint, entry] = gj::c_disjoint(g, h, costs[i]);
            cost_out.push_back(cost_entry(g, h, costs[i], opt.cost_paths[i], disjoint));
            trace.push_back(entry);
        }
        report["costs"] = cost_out;
        report["trace"] = trace_json(trace);
    }
    report["witness_files"] = witnesses;
    emit(report, opt.format);
}

struct JoinOptions {
    std::string g_path, h_path;
    std::string construct;
    std::string map_path;
    std::string lambda_text;
    std::string x_text, y_text;
    std::string t_text;
    std::string out_path;
    std::string format = "text";
    std::string outdir = ".";
};

gj::WeightJoining build_diagonal(const gj::Graph& g, const gj::Graph& h) {
    const int m = g.vertex_count(), n = h.vertex_count();
    if (m < 3 || n < 3) {
        throw gj::Error(gj::ErrorCode::InvalidSize, "diagonal construction needs cycles");
    }
    if (!(g.weights() == gj::make_cycle(m).weights()) ||
        !(h.weights() == gj::make_cycle(n).weights())) {
        throw gj::Error(gj::ErrorCode::ShapeError,
                        "diagonal construction needs uniform cycles in canonical vertex order");
    }
    std::vector<std::pair<gj::JoiningKey, gj::Rational>> raw;
    const gj::Rational mass = gj::rational(1, 2L * m * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            raw.push_back({{{i, j}, {(i + 1) % m, (j + 1) % n}}, mass});
        }
    }
    return gj::make_joining(g, h, raw);
}

void cmd_join(const JoinOptions& opt) {
    const gj::Graph g = gj::parse_graph(read_file(opt.g_path));
    const gj::Graph h = gj::parse_graph(read_file(opt.h_path));

    std::optional<gj::WeightJoining> joining;
    if (opt.construct == "product") {
        joining = gj::product_joining(g, h);
    } else if (opt.construct == "diagonal") {
        joining = build_diagonal(g, h);
    } else if (opt.construct == "bijective") {
        std::vector<int> iso;
        if (!opt.map_path.empty()) {
            iso = gj::parse_factor(read_file(opt.map_path), g, h).map;
        } else {
            for (int i = 0; i < g.vertex_count(); ++i) iso.push_back(i);
        }
        joining = gj::bijective_joining(g, h, iso);
    } else if (opt.construct == "perturb") {
        if (opt.lambda_text.empty() || opt.x_text.empty() || opt.y_text.empty()) {
            throw IoError("perturb needs --lambda, --x, and --y");
        }
        const gj::Rational lambda = gj::parse_rational(opt.lambda_text);
        const auto x = parse_rational_list(opt.x_text);
        const auto y = parse_rational_list(opt.y_text);
        if (opt.t_text.empty() || opt.t_text == "auto") {
            joining = gj::perturbation_joining(g, h, lambda, x, y, gj::AutoT{});
        } else {
            joining = gj::perturbation_joining(g, h, lambda, x, y,
                                               gj::parse_rational(opt.t_text));
        }
    } else {
        throw IoError("unknown construction " + opt.construct);
    }

    const auto validation = gj::validate_joining(*joining);
    const std::string out_path =
        opt.out_path.empty()
            ? (std::filesystem::path(opt.outdir) / (opt.construct + ".joining")).string()
            : opt.out_path;
    write_file(out_path, gj::joining_to_text(*joining, opt.construct));

    Json report;
    report["schema"] = kSchema;
    report["command"] = "join";
    report["construct"] = opt.construct;
    report["left"] = graph_summary(g);
    report["right"] = graph_summary(h);
    report["entries"] = static_cast<int>(joining->entries().size());
    report["valid"] = validation.valid;
    report["joining_file"] = out_path;
    emit(report, opt.format);
}

struct FactorOptions {
    std::string g_path, h_path;
    std::string map_path;
    int search_size = 0;
    std::optional<std::uint64_t> budget_flag;
    std::string format = "text";
    std::string outdir = ".";
};

Json violations_json(const std::vector<gj::FactorViolation>& violations) {
    Json out = Json::array();
    for (const auto& v : violations) {
        out.push_back({{"condition", v.condition},
                       {"detail", v.detail},
                       {"residual", gj::to_string(v.residual)}});
    }
    return out;
}

void cmd_factor(const FactorOptions& opt) {
    const gj::Graph g = gj::parse_graph(read_file(opt.g_path));
    const gj::Graph h = gj::parse_graph(read_file(opt.h_path));
    const std::uint64_t budget = opt.budget_flag.value_or(
        env_budget("GRAPHJOIN_SEARCH_BUDGET", gj::kDefaultSearchBudget));

    Json report;
    report["schema"] = kSchema;
    report["command"] = "factor";
    report["source"] = graph_summary(g);
    report["target"] = graph_summary(h);

    if (!opt.map_path.empty()) {
        const gj::FactorMap f = gj::parse_factor(read_file(opt.map_path), g, h);
        const auto [ok, violations] = gj::verify_factor(g, h, f.map);
        report["map_file"] = opt.map_path;
        report["verified"] = ok;
        report["violations"] = violations_json(violations);
    } else if (opt.search_size > 0) {
        const auto common = gj::common_factor_search(g, h, opt.search_size, budget);
        report["max_size"] = opt.search_size;
        report["common_factors"] = static_cast<int>(common.size());
        Json items = Json::array();
        for (std::size_t i = 0; i < common.size(); ++i) {
            const std::string stem =
                (std::filesystem::path(opt.outdir) / ("common_factor_" + std::to_string(i)))
                    .string();
            write_file(stem + ".graph", gj::graph_to_text(common[i].factor));
            write_file(stem + "_from_source.factor", gj::factor_to_text(common[i].from_g));
            write_file(stem + "_from_target.factor", gj::factor_to_text(common[i].from_h));
            items.push_back({{"graph_file", stem + ".graph"},
                             {"vertices", common[i].factor.vertex_count()}});
        }
        report["factors"] = items;
    } else {
        const auto maps = gj::find_factor_maps(g, h, budget);
        report["maps_found"] = static_cast<int>(maps.size());
        Json items = Json::array();
        for (std::size_t i = 0; i < maps.size(); ++i) {
            const std::string path =
                (std::filesystem::path(opt.outdir) / ("factor_" + std::to_string(i) + ".factor"))
                    .string();
            write_file(path, gj::factor_to_text(maps[i]));
            Json assignment = Json::array();
            for (int u = 0; u < g.vertex_count(); ++u) {
                assignment.push_back(g.label(u) + "->" + h.label(maps[i].map[u]));
            }
            items.push_back({{"file", path}, {"map", assignment}});
        }
        report["maps"] = items;
    }
    emit(report, opt.format);
}

struct OgjOptions {
    std::string g_path, h_path, cost_path;
    std::string out_path;
    std::optional<std::uint64_t> budget_flag;
    std::string format = "text";
    std::string outdir = ".";
};

void cmd_ogj(const OgjOptions& opt) {
    const gj::Graph g = gj::parse_graph(read_file(opt.g_path));
    const gj::Graph h = gj::parse_graph(read_file(opt.h_path));
    const gj::CostFunction cost = gj::parse_cost(read_file(opt.cost_path), g, h);

    const std::uint64_t budget = opt.budget_flag.value_or(env_budget(
        "GRAPHJOIN_LP_BUDGET", static_cast<std::uint64_t>(gj::kDefaultLpVariableBudget)));
    const int variables = gj::build_full_index(g, h).size();
    if (static_cast<std::uint64_t>(variables) > budget) {
        throw gj::Error(gj::ErrorCode::SearchBudgetExceeded,
                        std::to_string(variables) + " lp variables exceed the budget of " +
                            std::to_string(budget));
    }

    const auto [value, minimizer] = gj::ogj_value(g, h, cost);
    gj::Rational product_value(0);
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < h.vertex_count(); ++v) {
            product_value += cost.at(u, v) * g.degree(u) * h.degree(v);
        }
    }
    const std::string out_path =
        opt.out_path.empty()
            ? (std::filesystem::path(opt.outdir) / "ogj_minimizer.joining").string()
            : opt.out_path;
    write_file(out_path, gj::joining_to_text(minimizer, "ogj_minimizer"));

    Json report;
    report["schema"] = kSchema;
    report["command"] = "ogj";
    report["left"] = graph_summary(g);
    report["right"] = graph_summary(h);
    report["cost_file"] = opt.cost_path;
    report["value"] = gj::to_string(value);
    report["product_value"] = gj::to_string(product_value);
    report["cost_disjoint"] = value == product_value;
    report["minimizer_file"] = out_path;
    emit(report, opt.format);
}

struct PersistOptions {
    std::string g_path, h_path;
    int samples = 100;
    std::uint64_t seed = 0;
    std::string mode = "weak";
    std::string format = "text";
};

void cmd_persist(const PersistOptions& opt) {
    const gj::Skeleton sk_g = gj::skeleton_of(gj::parse_graph(read_file(opt.g_path)));
    const gj::Skeleton sk_h = gj::skeleton_of(gj::parse_graph(read_file(opt.h_path)));
    const gj::PersistenceMode mode =
        opt.mode == "strong" ? gj::PersistenceMode::STRONG : gj::PersistenceMode::WEAK;
    const gj::PersistenceReport result =
        gj::persistence_experiment(sk_g, sk_h, opt.samples, opt.seed, mode);

    Json report;
    report["schema"] = kSchema;
    report["command"] = "persist";
    report["mode"] = opt.mode;
    report["samples"] = result.samples;
    report["seed"] = result.seed;
    report["disjoint_count"] = result.disjoint_count;
    report["disjoint_fraction"] = gj::to_string(result.disjoint_fraction);
    report["dichotomy"] = result.dichotomy;
    emit(report, opt.format);
}

struct SimulateOptions {
    std::string path;
    int steps = 1000;
    std::uint64_t seed = 0;
    std::string tolerance = "1/50";
    std::string out_path;
    std::string format = "text";
    std::string outdir = ".";
};

void cmd_simulate(const SimulateOptions& opt) {
    const std::string source = read_file(opt.path);
    std::istringstream sniff(source);
    std::string first;
    sniff >> first;
    gj::ReversibleChain chain = (first == "chain")
                                    ? gj::parse_chain(source)
                                    : gj::chain_from_graph(gj::parse_graph(source));

    const gj::TrajectorySample sample = gj::simulate(chain, opt.steps, opt.seed);
    const gj::EmpiricalReport check =
        gj::empirical_check(sample, chain, gj::parse_rational(opt.tolerance));

    const std::string out_path =
        opt.out_path.empty() ? (std::filesystem::path(opt.outdir) / "trajectory.txt").string()
                             : opt.out_path;
    std::ostringstream trajectory;
    for (int s : sample.path) trajectory << chain.states[s] << "\n";
    write_file(out_path, trajectory.str());

    Json report;
    report["schema"] = kSchema;
    report["command"] = "simulate";
    report["input"] = opt.path;
    report["states"] = static_cast<int>(chain.states.size());
    report["steps"] = sample.steps;
    report["seed"] = sample.seed;
    report["trajectory_file"] = out_path;
    report["stationary_tv"] = gj::to_string(check.stationary_tv);
    report["kernel_tv"] = gj::to_string(check.kernel_tv);
    report["tolerance"] = opt.tolerance;
    report["within_tolerance"] = check.within_tolerance;
    emit(report, opt.format);
}

void add_common(CLI::App* sub, std::string* format, std::string* outdir) {
    sub->add_option("--format", *format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (outdir != nullptr) {
        sub->add_option("--outdir", *outdir, "Directory for emitted files");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact disjointness, joinings, factors, and couplings of weighted graphs"};
    app.require_subcommand(1);

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Decide strong/weak/cost disjointness");
    check_cmd->add_option("left", check.g_path, "Left graph file")->required();
    check_cmd->add_option("right", check.h_path, "Right graph file")->required();
    check_cmd->add_option("--mode", check.mode, "strong, weak, or all")
        ->check(CLI::IsMember({"strong", "weak", "all"}));
    check_cmd->add_option("--cost", check.cost_paths, "Cost function file (repeatable)");
    add_common(check_cmd, &check.format, &check.outdir);
    check_cmd->callback([&] { cmd_check(check); });

    JoinOptions join;
    auto* join_cmd = app.add_subcommand("join", "Construct a joining");
    join_cmd->add_option("left", join.g_path, "Left graph file")->required();
    join_cmd->add_option("right", join.h_path, "Right graph file")->required();
    join_cmd->add_option("--construct", join.construct, "product, diagonal, bijective, or perturb")
        ->required()
        ->check(CLI::IsMember({"product", "diagonal", "bijective", "perturb"}));
    join_cmd->add_option("--map", join.map_path, "Factor-format bijection for --construct bijective");
    join_cmd->add_option("--lambda", join.lambda_text, "Shared eigenvalue for perturb");
    join_cmd->add_option("--x", join.x_text, "Left eigenvector, comma-separated rationals");
    join_cmd->add_option("--y", join.y_text, "Right eigenvector, comma-separated rationals");
    join_cmd->add_option("--t", join.t_text, "Perturbation step (rational or 'auto')");
    join_cmd->add_option("--out", join.out_path, "Joining output file");
    add_common(join_cmd, &join.format, &join.outdir);
    join_cmd->callback([&] { cmd_join(join); });

    FactorOptions factor;
    auto* factor_cmd = app.add_subcommand("factor", "Verify or search factor maps");
    factor_cmd->add_option("source", factor.g_path, "Source graph file")->required();
    factor_cmd->add_option("target", factor.h_path, "Target graph file")->required();
    factor_cmd->add_option("--map", factor.map_path, "Factor map file to verify");
    factor_cmd->add_option("--search", factor.search_size,
                           "Search common factors up to this size");
    factor_cmd->add_option("--search-budget", factor.budget_flag, "Enumeration budget");
    add_common(factor_cmd, &factor.format, &factor.outdir);
    factor_cmd->callback([&] { cmd_factor(factor); });

    OgjOptions ogj;
    auto* ogj_cmd = app.add_subcommand("ogj", "Optimal graph joining value and minimizer");
    ogj_cmd->add_option("left", ogj.g_path, "Left graph file")->required();
    ogj_cmd->add_option("right", ogj.h_path, "Right graph file")->required();
    ogj_cmd->add_option("cost", ogj.cost_path, "Cost function file")->required();
    ogj_cmd->add_option("--out", ogj.out_path, "Minimizer output file");
    ogj_cmd->add_option("--lp-budget", ogj.budget_flag, "Variable budget for the LP");
    add_common(ogj_cmd, &ogj.format, &ogj.outdir);
    ogj_cmd->callback([&] { cmd_ogj(ogj); });

    PersistOptions persist;
    auto* persist_cmd =
        app.add_subcommand("persist", "Random-weight disjointness persistence experiment");
    persist_cmd->add_option("left", persist.g_path, "Left skeleton (graph file)")->required();
    persist_cmd->add_option("right", persist.h_path, "Right skeleton (graph file)")->required();
    persist_cmd->add_option("--samples", persist.samples, "Number of weight samples");
    persist_cmd->add_option("--seed", persist.seed, "Root seed");
    persist_cmd->add_option("--mode", persist.mode, "weak or strong")
        ->check(CLI::IsMember({"weak", "strong"}));
    add_common(persist_cmd, &persist.format, nullptr);
    persist_cmd->callback([&] { cmd_persist(persist); });

    SimulateOptions simulate;
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Sample a stationary trajectory and check it");
    simulate_cmd->add_option("input", simulate.path, "Chain file or graph file")->required();
    simulate_cmd->add_option("--steps", simulate.steps, "Number of steps");
    simulate_cmd->add_option("--seed", simulate.seed, "Seed");
    simulate_cmd->add_option("--tolerance", simulate.tolerance, "TV tolerance (rational)");
    simulate_cmd->add_option("--out", simulate.out_path, "Trajectory output file");
    add_common(simulate_cmd, &simulate.format, &simulate.outdir);
    simulate_cmd->callback([&] { cmd_simulate(simulate); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const gj::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 10 + static_cast<int>(e.code());
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 9;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 99;
    }
    return 0;
}
