#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "surplab/certificates.hpp"
#include "surplab/extraction.hpp"
#include "surplab/graph.hpp"
#include "surplab/maxcut.hpp"
#include "surplab/spectral.hpp"
#include "surplab/stability.hpp"

namespace surplab {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char *kToolVersion = "0.1.0";

/// Serialises with floats at 17 significant digits; non-finite values become
/// null. Keys keep insertion order.
std::string dump_json(const Json &j, int indent = 2);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
/// Digest of the canonical edge-list text of g, as 16 hex digits.
std::string graph_digest(const Graph &g);

Json to_json(const VertexSet &s);
Json to_json(const Cut &c);
Json to_json(const MaxCutResult &r);
Json to_json(const PipelineParams &p);
Json spectrum_summary(const SpectralDecomposition &dec);
Json to_json(const PowerSums &p);
Json to_json(const WeylReport &w);
Json to_json(const PrincipalVectorReport &r);
Json to_json(const PsdVerdict &v);
Json to_json(const SurplusCertificate &c);
Json to_json(const DensityStepResult &r);
Json to_json(const ExtractionTrace &t);
Json to_json(const BalancedResult &b);
Json to_json(const MasterChainReport &r);
Json to_json(const CliqueCover &c);
Json to_json(const StabilityReport &r);

} // namespace surplab
