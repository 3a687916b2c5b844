#pragma once

// Stable JSON views of the library's result types. Big integers are
// written as decimal strings; non-finite doubles as null.

#include <json.hpp>

#include "edgerigid/eigensum.hpp"
#include "edgerigid/graph.hpp"
#include "edgerigid/rigidity.hpp"
#include "edgerigid/spectral.hpp"

namespace edgerigid {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
Json to_json(const RigidityReport& r, const Graph& g);
Json to_json(const Spectrum& s);
Json to_json(const OptimizeResult& r);
Json to_json(const KCertificate& c);
Json to_json(const GaugeProduct& p);
Json to_json(const Profile& p);

/// Everything `analyze` reports: rigidity verdicts, spectrum summary,
/// walk constants, Kirchhoff index, tree count and edge resistances.
Json analysis_json(const Graph& g, const ReportOptions& options);

}  // namespace edgerigid
