#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sparsetrig/model.hpp"
#include "sparsetrig/solver.hpp"

namespace sparsetrig {

using Json = nlohmann::json;

/// {"q", "d", "coeffs": [{"k": [...], "re", "im"}]}
Json poly_to_json(const SparseTrigPoly& poly);
/// Throws std::invalid_argument on missing or malformed fields.
SparseTrigPoly poly_from_json(const Json& doc);

/// {"d", "points": [[...]], "seed"}
Json samples_to_json(const SamplingSet& samples);
/// Accepts either a samples document or a combined document that also
/// carries the polynomial fields.
SamplingSet samples_from_json(const Json& doc);

/// Combined instance document with all fields of both.
Json instance_to_json(const SparseTrigPoly& poly, const SamplingSet& samples);

Json solution_to_json(const BPSolution& solution, const FrequencyGrid& grid);
Json certificate_to_json(const CertificateReport& report);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace sparsetrig
