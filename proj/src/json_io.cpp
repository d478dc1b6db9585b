#include "sparsetrig/json_io.hpp"

#include <fstream>
#include <cmath>
#include <stdexcept>

namespace sparsetrig {

namespace {

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw std::invalid_argument(std::string("missing JSON field '") + name + "'");
  }
  return doc.at(name);
}

template <class T>
T get_as(const Json& doc, const char* name) {
  try {
    return field(doc, name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON field '") + name + "': " + e.what());
  }
}

// JSON has no infinity; non-finite reals are written as null.
Json real(double v) {
  if (!std::isfinite(v)) {
    return nullptr;
  }
  return v;
}

Json complex_list(const Eigen::VectorXcd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(Json::array({v(i).real(), v(i).imag()}));
  return out;
}

}  // namespace

Json poly_to_json(const SparseTrigPoly& poly) {
  Json coeffs = Json::array();
  for (const auto& [k, c] : poly.coefficients()) {
    coeffs.push_back({{"k", k.k}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"q", poly.grid().order()}, {"d", poly.grid().dim()}, {"coeffs", coeffs}};
}

SparseTrigPoly poly_from_json(const Json& doc) {
  const FrequencyGrid grid(get_as<int>(doc, "q"), get_as<int>(doc, "d"));
  SparseTrigPoly poly(grid);
  const Json& coeffs = field(doc, "coeffs");
  if (!coeffs.is_array()) throw std::invalid_argument("'coeffs' must be an array");
  for (const auto& entry : coeffs) {
    FrequencyIndex k(get_as<std::vector<int>>(entry, "k"));
    if (!grid.contains(k)) throw std::invalid_argument("coefficient index outside the grid");
    if (poly.coefficients().contains(k)) throw std::invalid_argument("duplicate coefficient index");
    poly.set(k, Complex(get_as<double>(entry, "re"), get_as<double>(entry, "im")));
  }
  return poly;
}

Json samples_to_json(const SamplingSet& samples) {
  return {{"d", samples.dim()}, {"points", samples.points()}, {"seed", samples.seed()}};
}

SamplingSet samples_from_json(const Json& doc) {
  auto points = get_as<std::vector<std::vector<double>>>(doc, "points");
  const std::uint64_t seed = doc.contains("seed") ? get_as<std::uint64_t>(doc, "seed") : 0;
  int dim = 0;
  if (doc.contains("d")) {
    dim = get_as<int>(doc, "d");
  } else if (!points.empty()) {
    dim = static_cast<int>(points.front().size());
  }
  return SamplingSet(dim, std::move(points), seed);
}

Json instance_to_json(const SparseTrigPoly& poly, const SamplingSet& samples) {
  Json doc = poly_to_json(poly);
  doc["points"] = samples.points();
  doc["seed"] = samples.seed();
  return doc;
}

Json solution_to_json(const BPSolution& solution, const FrequencyGrid& grid) {
  Json coeffs = Json::array();
  for (Eigen::Index pos = 0; pos < solution.coeffs.size(); ++pos) {
    const Complex c = solution.coeffs(pos);
    if (c == Complex(0.0, 0.0)) continue;
    coeffs.push_back({{"k", grid.at(pos).k}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"coeffs", coeffs},
          {"objective", real(solution.objective)},
          {"constraint_residual", real(solution.constraint_residual)},
          {"iterations", solution.iterations},
          {"converged", solution.converged}};
}

Json certificate_to_json(const CertificateReport& report) {
  return {{"P", complex_list(report.P)},
          {"sup_off_support", real(report.sup_off_support)},
          {"on_support_error", real(report.on_support_error)},
          {"gram_condition", real(report.gram_condition)},
          {"gram_condition_ok", report.gram_condition_ok},
          {"certified", report.certified}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace sparsetrig
