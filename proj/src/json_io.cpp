#include "edgerigid/json_io.hpp"

#include <cmath>

namespace edgerigid {

namespace {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json edge_json(const Graph& g, int e) { return Json::array({g.edge(e).a, g.edge(e).b}); }

Json bigints(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

Json doubles(std::span<const double> values) {
  Json out = Json::array();
  for (double v : values) out.push_back(number(v));
  return out;
}

Json doubles(const Eigen::VectorXd& values) {
  return doubles(std::span<const double>(values.data(), static_cast<std::size_t>(values.size())));
}

Json degree_json(const DegreeClass& d) {
  Json out;
  out["kind"] = to_string(d.kind);
  if (d.kind == DegreeClass::Kind::Regular) {
    out["degree"] = d.degree;
  } else if (d.kind == DegreeClass::Kind::BiregularBipartite) {
    out["degrees"] = Json::array({d.degree_side0, d.degree_side1});
    Json parts = Json::array({Json::array(), Json::array()});
    for (std::size_t v = 0; v < d.side.size(); ++v) parts[static_cast<std::size_t>(d.side[v])].push_back(v);
    out["parts"] = parts;
  }
  out["edge_degree_sum_constant"] = d.edge_degree_sum_constant;
  return out;
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (int e = 0; e < g.size(); ++e) edges.push_back(edge_json(g, e));
  return Json{{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

Json to_json(const RigidityReport& r, const Graph& g) {
  Json out;
  out["edge_rigid"] = r.edge_rigid;
  out["verdicts"] = Json{{"walk_criterion", to_string(r.walk_criterion)},
                         {"cospectrality", to_string(r.cospectrality)},
                         {"signed_line_graph", to_string(r.signed_line_graph)},
                         {"walk_regularity_class", to_string(r.walk_regularity_class)},
                         {"float_embedding", to_string(r.float_embedding)}};
  out["walk_constants"] = bigints(r.walk_constants);
  if (r.witness) {
    out["witness"] = Json{{"power", r.witness->power},
                          {"edges", Json::array({edge_json(g, r.witness->first_edge),
                                                 edge_json(g, r.witness->second_edge)})},
                          {"values", Json::array({r.witness->first_value.get_str(),
                                                  r.witness->second_value.get_str()})}};
  } else {
    out["witness"] = nullptr;
  }
  Json classes = Json::array();
  for (const auto& cls : r.cospectrality_classes) {
    Json members = Json::array();
    for (int e : cls) members.push_back(edge_json(g, e));
    classes.push_back(members);
  }
  out["cospectrality_classes"] = classes;
  out["degree_class"] = degree_json(r.degree_class);
  out["walk_class"] = to_string(r.walk.walk_class);
  out["walk"] = Json{{"walk_regular", r.walk.walk_regular},
                     {"edge_walks_constant", r.walk.edge_walks_constant},
                     {"walk_biregular", r.walk.walk_biregular ? Json(*r.walk.walk_biregular)
                                                              : Json(nullptr)}};
  if (r.isometry) {
    Json spaces = Json::array();
    for (const auto& iso : r.isometry->eigenspaces) {
      spaces.push_back(Json{{"index", iso.index},
                            {"eigenvalue", number(iso.eigenvalue)},
                            {"multiplicity", iso.multiplicity},
                            {"gamma", number(iso.gamma)},
                            {"spread", number(iso.spread)},
                            {"constant", iso.constant},
                            {"anomalous", iso.anomalous}});
    }
    out["isometry"] = spaces;
  } else {
    out["isometry"] = nullptr;
  }
  out["orientations_checked"] = r.orientations_checked;
  out["seed"] = r.seed;
  return out;
}

Json to_json(const Spectrum& s) {
  return Json{{"eigenvalues", doubles(s.eigenvalues)},
              {"multiplicities", s.multiplicities},
              {"group_tol", s.group_tol}};
}

Json to_json(const OptimizeResult& r) {
  return Json{{"k", r.k},
              {"objective", to_string(r.objective)},
              {"verdict", to_string(r.verdict)},
              {"value_at_unit", number(r.value_at_unit)},
              {"best_primal", number(r.best_primal)},
              {"dual_bound", number(r.dual_bound)},
              {"gap", number(r.gap)},
              {"iterations", r.iterations},
              {"seed", r.seed},
              {"best_w", doubles(r.best_w.values())}};
}

Json to_json(const KCertificate& c) {
  return Json{{"level", c.level},
              {"k", c.k},
              {"x", number(c.x)},
              {"y", number(c.y)},
              {"residuals",
               Json{{"slack", number(c.slack_residual)},
                    {"range", number(c.range_residual)},
                    {"weight", number(c.weight_residual)},
                    {"dual_infeasibility", number(c.dual_infeasibility)},
                    {"primal_infeasibility", number(c.primal_infeasibility)}}},
              {"bound", number(c.bound)},
              {"top_sum_at_unit", number(c.top_sum_at_unit)},
              {"certified", c.certified}};
}

Json to_json(const GaugeProduct& p) {
  return Json{{"k", p.k},
              {"top_sum_at_unit", number(p.top_sum_at_unit)},
              {"dual_gauge", number(p.dual_gauge)},
              {"product", number(p.product)},
              {"product_lo", number(p.product_lo)},
              {"product_hi", number(p.product_hi)},
              {"run", to_json(p.run)}};
}

Json to_json(const Profile& p) {
  Json entries = Json::array();
  for (const auto& e : p.entries)
    entries.push_back(Json{{"k", e.upper.k}, {"upper", to_json(e.upper)}, {"lower", to_json(e.lower)}});
  return Json{{"entries", entries},
              {"trace_identity_residual", number(p.trace_identity_residual)},
              {"trace_samples", p.trace_samples}};
}

Json analysis_json(const Graph& g, const ReportOptions& options) {
  const RigidityReport report = full_report(g, options);
  const Spectrum s = spectrum(laplacian(g), options.group_tol);
  const WeightVector unit = WeightVector::unit(g.size());
  Json out;
  out["graph"] = to_json(g);
  out["rigidity"] = to_json(report, g);
  out["spectrum"] = to_json(s);
  out["kirchhoff_index"] = number(kirchhoff_index(g, unit));
  out["tree_count"] = tree_count_exact(g).get_str();
  out["tree_count_float"] = number(weighted_tree_count(g, unit));
  out["effective_resistances"] = doubles(effective_resistances(g, unit));
  out["seed"] = options.seed;
  return out;
}

}  // namespace edgerigid
