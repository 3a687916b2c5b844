// edgerigid: command-line front end.
//
// Exit codes: 0 success (for `decide`: edge-rigid), 1 `decide` found the
// graph not edge-rigid, 2 invalid input or flags.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "edgerigid/eigensum.hpp"
#include "edgerigid/errors.hpp"
#include "edgerigid/graph.hpp"
#include "edgerigid/json_io.hpp"
#include "edgerigid/rigidity.hpp"
#include "edgerigid/spectral.hpp"

namespace {

using namespace edgerigid;

constexpr int kExitUsage = 2;

struct CliConfig {
  std::string input;
  std::string input_format;  // empty: by extension
  std::string format = "text";
  std::string output;
  double tol = std::numeric_limits<double>::quiet_NaN();  // per-command default
  int iters = 5000;
  std::uint64_t seed = 0;
  int max_power = -1;
  int k = 0;
  int j = 0;
  int index = 0;
  int restarts = 0;
  std::string objective = "upper";
  std::string weights;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const CliConfig& cfg) {
  GraphFormat fmt = GraphFormat::EdgeList;
  if (cfg.input_format == "graph6") {
    fmt = GraphFormat::Graph6;
  } else if (cfg.input_format.empty() || cfg.input_format == "edge-list") {
    if (cfg.input_format.empty() && cfg.input.size() >= 3 &&
        cfg.input.compare(cfg.input.size() - 3, 3, ".g6") == 0)
      fmt = GraphFormat::Graph6;
  } else {
    throw Error("--input-format must be 'edge-list' or 'graph6'");
  }
  return parse_graph(read_file(cfg.input), fmt);
}

WeightVector load_weights(const CliConfig& cfg, const Graph& g) {
  if (cfg.weights.empty()) return WeightVector::unit(g.size());
  return parse_weights(read_file(cfg.weights), g);
}

double tol_or(const CliConfig& cfg, double fallback) {
  return std::isnan(cfg.tol) ? fallback : cfg.tol;
}

OptimizeOptions optimizer_options(const CliConfig& cfg) {
  OptimizeOptions o;
  o.iters = cfg.iters;
  o.tol = tol_or(cfg, 1e-5);
  o.seed = cfg.seed;
  o.restarts = cfg.restarts;
  return o;
}

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw Error("cannot write '" + cfg.output + "'");
  out << text;
}

std::string edge_str(const Graph& g, int e) {
  return "(" + std::to_string(g.edge(e).a) + "," + std::to_string(g.edge(e).b) + ")";
}

// Flat "key: value" rendering of a JSON object for --format text.
void render_text(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_text(value, prefix.empty() ? key : prefix + "." + key, out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit_json(const CliConfig& cfg, const Json& j) {
  if (cfg.format == "json") {
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    render_text(j, "", out);
    emit(cfg, out.str());
  }
}

ReportOptions report_options(const CliConfig& cfg) {
  ReportOptions o;
  o.tol = tol_or(cfg, 1e-8);
  o.seed = cfg.seed;
  o.max_power = cfg.max_power;
  return o;
}

int cmd_analyze(const CliConfig& cfg) {
  const Graph g = load_graph(cfg);
  emit_json(cfg, analysis_json(g, report_options(cfg)));
  return 0;
}

int cmd_decide(const CliConfig& cfg) {
  const Graph g = load_graph(cfg);
  const ExactRigidity r = decide_edge_rigid_exact(g, cfg.max_power);
  if (r.rigid) {
    std::cout << "edge-rigid\n";
    return 0;
  }
  const WalkWitness& w = *r.witness;
  std::cout << "not edge-rigid: power " << w.power << ", edge " << edge_str(g, w.first_edge)
            << " has " << w.first_value.get_str() << ", edge " << edge_str(g, w.second_edge)
            << " has " << w.second_value.get_str() << '\n';
  return 1;
}

int cmd_optimize(const CliConfig& cfg) {
  const Graph g = load_graph(cfg);
  emit_json(cfg, to_json(optimize(g, cfg.k, parse_objective(cfg.objective), optimizer_options(cfg))));
  return 0;
}

int cmd_profile(const CliConfig& cfg) {
  const Graph g = load_graph(cfg);
  Json out = to_json(k_rigidity_profile(g, optimizer_options(cfg)));
  out["seed"] = cfg.seed;
  emit_json(cfg, out);
  return 0;
}

int cmd_certify(const CliConfig& cfg) {
  const Graph g = load_graph(cfg);
  emit_json(cfg, to_json(certificate(g, cfg.j, tol_or(cfg, 1e-8))));
  return 0;
}

int cmd_gauge(const CliConfig& cfg) {
  const Graph g = load_graph(cfg);
  emit_json(cfg, to_json(gauge_product(g, cfg.k, optimizer_options(cfg))));
  return 0;
}

int cmd_embed(const CliConfig& cfg) {
  const Graph g = load_graph(cfg);
  const Spectrum s = spectrum(laplacian(g));
  emit(cfg, embedding_csv(embedding(g, s, cfg.index)));
  return 0;
}

int cmd_tau(const CliConfig& cfg) {
  const Graph g = load_graph(cfg);
  const WeightVector w = load_weights(cfg, g);
  Json out{{"tau", weighted_tree_count(g, w)}};
  if (cfg.weights.empty()) out["exact"] = tree_count_exact(g).get_str();
  emit_json(cfg, out);
  return 0;
}

int cmd_kf(const CliConfig& cfg) {
  const Graph g = load_graph(cfg);
  const double kf = kirchhoff_index(g, load_weights(cfg, g));
  emit_json(cfg, Json{{"kirchhoff_index", std::isfinite(kf) ? Json(kf) : Json("inf")}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Edge-rigidity and Laplacian eigenvalue-sum analysis of graphs"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Graph file (edge list, or graph6 with .g6)")->required();
    sub->add_option("--input-format", cfg.input_format, "edge-list | graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output,-o", cfg.output, "Write results here instead of stdout");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--tol", cfg.tol, "Tolerance (checks 1e-8, optimizer verdicts 1e-5)")
        ->check(CLI::PositiveNumber);
  };
  auto add_optimizer = [&](CLI::App* sub) {
    sub->add_option("--iters", cfg.iters, "Iteration budget")->check(CLI::PositiveNumber);
    sub->add_option("--restarts", cfg.restarts, "Extra runs from random simplex points")
        ->check(CLI::NonNegativeNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "Full rigidity report as JSON or text");
  add_common(analyze);
  analyze->add_option("--max-power", cfg.max_power, "Highest exact walk power (default n-1)");

  auto* decide = app.add_subcommand("decide", "Exit 0 if edge-rigid, 1 if not");
  add_common(decide);
  decide->add_option("--max-power", cfg.max_power, "Highest exact walk power (default n-1)");

  auto* opt = app.add_subcommand("optimize", "Optimize a Ky Fan eigenvalue sum over the simplex");
  add_common(opt);
  add_optimizer(opt);
  opt->add_option("--k", cfg.k, "Number of eigenvalues")->required();
  opt->add_option("--objective", cfg.objective, "upper | lower")
      ->check(CLI::IsMember({"upper", "lower"}));

  auto* profile = app.add_subcommand("profile", "Upper/lower verdicts for every k");
  add_common(profile);
  add_optimizer(profile);

  auto* certify = app.add_subcommand("certify", "Primal-dual certificate at level j");
  add_common(certify);
  certify->add_option("--j", cfg.j, "Level")->required();

  auto* gauge = app.add_subcommand("gauge", "Gauge product S_k(1) * dual gauge");
  add_common(gauge);
  add_optimizer(gauge);
  gauge->add_option("--k", cfg.k, "Number of eigenvalues")->required();

  auto* embed = app.add_subcommand("embed", "Spectral embedding as CSV");
  add_common(embed);
  embed->add_option("--i", cfg.index, "Eigenspace index, 2..r")->required();

  auto* tau = app.add_subcommand("tau", "Weighted spanning-tree count");
  add_common(tau);
  tau->add_option("--weights", cfg.weights, "Weights file, one per edge");

  auto* kf = app.add_subcommand("kf", "Kirchhoff index");
  add_common(kf);
  kf->add_option("--weights", cfg.weights, "Weights file, one per edge");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (decide->parsed()) return cmd_decide(cfg);
    if (opt->parsed()) return cmd_optimize(cfg);
    if (profile->parsed()) return cmd_profile(cfg);
    if (certify->parsed()) return cmd_certify(cfg);
    if (gauge->parsed()) return cmd_gauge(cfg);
    if (embed->parsed()) return cmd_embed(cfg);
    if (tau->parsed()) return cmd_tau(cfg);
    if (kf->parsed()) return cmd_kf(cfg);
  } catch (const std::exception& e) {
    std::cerr << "edgerigid: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
