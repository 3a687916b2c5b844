#include "edgerigid/rigidity.hpp"

#include <algorithm>
#include <map>

#include "edgerigid/errors.hpp"

namespace edgerigid {

namespace {

int default_power(const Graph& g, int max_power) {
  return max_power < 0 ? g.order() - 1 : max_power;
}

template <class Values>
bool all_equal(const Values& values) {
  return std::all_of(values.begin(), values.end(),
                     [&](const auto& v) { return v == values.front(); });
}

Verdict verdict_of(bool b) { return b ? Verdict::True : Verdict::False; }

}  // namespace

ExactRigidity decide_edge_rigid_exact(const Graph& g, int max_power) {
  ExactRigidity out;
  out.rigid = true;
  mat_pow_stream(laplacian_exact(g), default_power(g, max_power),
                 [&](int l, const ExactMatrix& power) {
                   const auto values = adjoint_apply(g, power);
                   for (std::size_t e = 1; e < values.size(); ++e) {
                     if (values[e] != values[0]) {
                       out.rigid = false;
                       out.witness = WalkWitness{l, 0, static_cast<int>(e), values[0], values[e]};
                       out.walk_constants.clear();
                       return false;
                     }
                   }
                   out.walk_constants.push_back(values[0]);
                   return true;
                 });
  return out;
}

std::vector<std::vector<int>> cospectrality_classes(const Graph& g) {
  // char_poly(L - L_e) = char_poly(L) + z_e^T adj(xI - L) z_e, so grouping by
  // the adjugate form is grouping by the deletion polynomial.
  const auto forms = adjugate_quadratic_forms(g);
  std::map<IntPolynomial, std::size_t> index;
  std::vector<std::vector<int>> classes;
  for (int e = 0; e < g.size(); ++e) {
    auto [it, inserted] = index.try_emplace(forms[e], classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(e);
  }
  return classes;
}

std::string to_string(WalkClass c) {
  switch (c) {
    case WalkClass::OneWalkRegular:
      return "1-walk-regular";
    case WalkClass::WalkRegularOnly:
      return "walk-regular-only";
    case WalkClass::OneWalkBiregular:
      return "1-walk-biregular";
    case WalkClass::WalkBiregularOnly:
      return "walk-biregular-only";
    case WalkClass::Neither:
      return "neither";
  }
  return "neither";
}

WalkClassResult walk_class(const Graph& g, int max_power) {
  const auto sides = bipartition(g);
  WalkClassResult out;
  out.walk_regular = true;
  out.edge_walks_constant = true;
  bool biregular = sides.has_value();
  const int n = g.order();
  mat_pow_stream(adjacency_exact(g), default_power(g, max_power),
                 [&](int, const ExactMatrix& power) {
                   for (int v = 1; v < n; ++v)
                     out.walk_regular = out.walk_regular && power(v, v) == power(0, 0);
                   for (int e = 1; e < g.size(); ++e) {
                     const auto [a, b] = g.edge(e);
                     out.edge_walks_constant =
                         out.edge_walks_constant && power(a, b) == power(g.edge(0).a, g.edge(0).b);
                   }
                   if (biregular) {
                     const BigInt* ref[2] = {nullptr, nullptr};
                     for (int v = 0; v < n && biregular; ++v) {
                       const BigInt*& r = ref[(*sides)[v]];
                       if (r == nullptr) r = &power(v, v);
                       biregular = (*r == power(v, v));
                     }
                   }
                   return true;
                 });
  if (sides) out.walk_biregular = biregular;
  if (out.walk_regular && out.edge_walks_constant)
    out.walk_class = WalkClass::OneWalkRegular;
  else if (biregular && out.edge_walks_constant)
    out.walk_class = WalkClass::OneWalkBiregular;
  else if (out.walk_regular)
    out.walk_class = WalkClass::WalkRegularOnly;
  else if (biregular)
    out.walk_class = WalkClass::WalkBiregularOnly;
  else
    out.walk_class = WalkClass::Neither;
  return out;
}

bool signed_line_graph_walk_regular(const Graph& g, const Orientation& o, int max_power) {
  ExactMatrix gram = signed_line_graph(g, o);
  for (std::size_t e = 0; e < gram.order(); ++e) gram(e, e) += 2;
  const int bound = max_power < 0 ? std::min(g.size(), g.order()) : max_power;
  bool regular = true;
  mat_pow_stream(gram, bound, [&](int, const ExactMatrix& power) {
    for (std::size_t e = 1; e < power.order(); ++e) {
      if (power(e, e) != power(0, 0)) {
        regular = false;
        return false;
      }
    }
    return true;
  });
  return regular;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    case Verdict::Skipped:
      return "skipped";
  }
  return "skipped";
}

RigidityReport full_report(const Graph& g, const ReportOptions& options) {
  RigidityReport r;
  r.seed = options.seed;

  const ExactRigidity exact = decide_edge_rigid_exact(g, options.max_power);
  r.edge_rigid = exact.rigid;
  r.walk_criterion = verdict_of(exact.rigid);
  r.walk_constants = exact.walk_constants;
  r.witness = exact.witness;

  r.cospectrality_classes = cospectrality_classes(g);
  r.cospectrality = verdict_of(r.cospectrality_classes.size() == 1);

  if (options.run_signed_line_graph) {
    const bool canonical = signed_line_graph_walk_regular(g, Orientation::canonical(g.size()));
    r.orientations_checked = 1;
    for (int i = 0; i < options.random_orientations; ++i) {
      const auto o = Orientation::random(g.size(), options.seed + static_cast<std::uint64_t>(i));
      if (signed_line_graph_walk_regular(g, o) != canonical)
        throw InternalInconsistency("signed line graph walk-regularity depends on orientation");
      ++r.orientations_checked;
    }
    r.signed_line_graph = verdict_of(canonical);
  }

  r.degree_class = degree_classification(g);
  r.walk = walk_class(g, options.max_power);
  r.walk_regularity_class = verdict_of(r.walk.walk_class == WalkClass::OneWalkRegular ||
                                       r.walk.walk_class == WalkClass::OneWalkBiregular);

  if (options.run_float_check) {
    const Spectrum s = spectrum(laplacian(g), options.group_tol);
    r.isometry = edge_isometry_check(g, s, options.tol);
    r.float_embedding = verdict_of(r.isometry->all_constant);
  }

  for (auto [name, v] : {std::pair{"cospectrality", r.cospectrality},
                         std::pair{"signed line graph", r.signed_line_graph},
                         std::pair{"walk-regularity class", r.walk_regularity_class},
                         std::pair{"float embedding", r.float_embedding}}) {
    if (v != Verdict::Skipped && v != r.walk_criterion)
      throw InternalInconsistency(std::string(name) + " verdict disagrees with the walk criterion");
  }
  if (r.edge_rigid && (r.degree_class.kind == DegreeClass::Kind::Irregular ||
                       !r.degree_class.edge_degree_sum_constant))
    throw InternalInconsistency("edge-rigid graph with non-constant endpoint degree sums");
  return r;
}

}  // namespace edgerigid
