#pragma once

#include <json.hpp>

#include "packlab/decomposer.hpp"
#include "packlab/graph.hpp"
#include "packlab/recognizer.hpp"
#include "packlab/reduction.hpp"

namespace packlab {

/// Version stamped into every CLI report; bump on breaking change.
inline constexpr int kSchemaVersion = 1;

nlohmann::json edges_to_json(std::span<const Edge> edges);
std::vector<Edge> edges_from_json(const nlohmann::json& j);

/// {"k", "vertex_count", "units": [{"vertex_count", "edges", "root", "boundary"}],
///  "identification": [[unit, local, global], ...]}
nlohmann::json decomposition_to_json(const KUnitDecomposition& d);
KUnitDecomposition decomposition_from_json(const nlohmann::json& j);

/// Sidecar {"k1", "k2", "n", "m", "labels": {name: id}, "expected_packing"}.
nlohmann::json reduction_sidecar(const ReductionArtifact& r);
/// Reassembles an artifact from its graph, sidecar and source formula.
/// InputError when the three disagree (n, m, label range).
ReductionArtifact load_reduction(Graph graph, const nlohmann::json& sidecar, const CnfFormula& f);

nlohmann::json recognition_to_json(const RecognitionReport& r);

}  // namespace packlab
