#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgerigid/exact.hpp"
#include "edgerigid/graph.hpp"
#include "edgerigid/spectral.hpp"

namespace edgerigid {

/// Two edges whose values of L*(L^power) differ.
struct WalkWitness {
  int power = 0;
  int first_edge = 0;
  int second_edge = 0;
  BigInt first_value;
  BigInt second_value;
};

struct ExactRigidity {
  bool rigid = false;
  std::vector<BigInt> walk_constants;  // C_0..C_maxpower when rigid
  std::optional<WalkWitness> witness;  // smallest failing power otherwise
};

/// Exact Laplacian walk criterion: L*(L^l) constant for l = 0..max_power.
/// A negative max_power means n - 1, which is always sufficient.
ExactRigidity decide_edge_rigid_exact(const Graph& g, int max_power = -1);

/// Edges grouped by the exact characteristic polynomial of L - L_e. Classes
/// are ordered by their smallest edge index.
std::vector<std::vector<int>> cospectrality_classes(const Graph& g);

enum class WalkClass {
  OneWalkRegular,
  WalkRegularOnly,
  OneWalkBiregular,
  WalkBiregularOnly,
  Neither,
};

std::string to_string(WalkClass c);

struct WalkClassResult {
  WalkClass walk_class = WalkClass::Neither;
  bool walk_regular = false;
  bool edge_walks_constant = false;            // (A^l)_ab constant over edges
  std::optional<bool> walk_biregular;          // nullopt when g is not bipartite
};

/// Closed-walk counts from exact powers A^0..A^max_power (default n - 1).
WalkClassResult walk_class(const Graph& g, int max_power = -1);

/// diag((2I + A_sigma)^p) constant for p = 1..max_power. The default bound
/// is min(m, n): B^T B shares its nonzero eigenvalues with L, so its minimal
/// polynomial has degree at most n.
bool signed_line_graph_walk_regular(const Graph& g, const Orientation& o, int max_power = -1);

enum class Verdict { True, False, Skipped };

std::string to_string(Verdict v);

struct ReportOptions {
  double tol = 1e-8;        // float embedding check
  double group_tol = kDefaultGroupTol;
  int random_orientations = 2;  // in addition to the canonical one
  std::uint64_t seed = 0;
  int max_power = -1;       // exact walk tests; negative means n - 1
  bool run_float_check = true;
  bool run_signed_line_graph = true;
};

struct RigidityReport {
  bool edge_rigid = false;
  Verdict walk_criterion = Verdict::Skipped;
  Verdict cospectrality = Verdict::Skipped;
  Verdict signed_line_graph = Verdict::Skipped;
  Verdict walk_regularity_class = Verdict::Skipped;
  Verdict float_embedding = Verdict::Skipped;
  std::vector<BigInt> walk_constants;
  std::optional<WalkWitness> witness;
  std::vector<std::vector<int>> cospectrality_classes;
  DegreeClass degree_class;
  WalkClassResult walk;
  std::optional<EdgeIsometryReport> isometry;
  std::uint64_t seed = 0;
  int orientations_checked = 0;
};

/// Runs every decider and cross-checks them. Any disagreement between
/// non-skipped verdicts throws InternalInconsistency.
RigidityReport full_report(const Graph& g, const ReportOptions& options = {});

}  // namespace edgerigid
