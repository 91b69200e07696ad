#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvf/catalog.hpp"
#include "cvf/deformation.hpp"
#include "cvf/randers.hpp"
#include "cvf/report.hpp"

namespace cvf {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolkitVersion = "0.1.0";

// Scenario file schema (JSON). Object specs are optional; a check that
// needs a missing spec is a configuration error naming the field.
struct MetricSpec {
  std::string kind = "euclidean";  // euclidean | projective | conformal
  double mu = 0.0;
};

struct OneFormSpec {
  std::string kind = "zero";  // zero | constant | pair_rho | prop52_beta
  Vec coeffs;                 // constant
  double lambda = 0.0, mu = 0.0;
  Vec e;
};

struct VectorFieldSpec {
  std::string family;  // catalog family id
  ModelParams params;
};

struct PhiSpec {
  std::string kind = "randers";  // randers | randers_type | quadratic | sqrt_quad | power_series
  double k = 1.0, eps = 0.0, kappa = 0.0;
  Vec coeffs;
};

struct TripleSpec {
  std::string kind = "navigation";  // navigation | randers_projective | closed_form | ode
  double k1 = 0.0, k2 = 0.0, k3 = 0.0;
  std::array<double, 3> init{1.0, 0.0, 1.0};
  double t_max = 0.81;
};

struct ModelSpec {  // "prop52"
  double lambda = 0.0;
  double mu = 1.0;
  Vec e;
};

struct CheckSpec {
  std::string name;
  std::optional<double> tolerance;
};

struct SamplingSpec {
  int count = 100;
  std::uint64_t seed = 1;
  double radius = 0.4;
};

struct Scenario {
  std::string name;
  int dimension = 3;
  double tolerance = 1e-9;
  SamplingSpec sampling;
  std::vector<CheckSpec> checks;

  std::optional<MetricSpec> metric;
  std::optional<OneFormSpec> oneform;
  std::optional<VectorFieldSpec> vector_field;
  std::optional<PhiSpec> phi;
  std::optional<TripleSpec> triple;
  std::optional<ModelSpec> model;

  nlohmann::json raw;  // echoed into reports
};

Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);

struct RunReport {
  nlohmann::json scenario_echo;
  std::vector<CheckReport> checks;
  bool overall_pass = false;
  double wall_ms = 0.0;
  std::string version = kToolkitVersion;

  nlohmann::json to_json() const;
  static RunReport from_json(const nlohmann::json& j);
};

struct RunOptions {
  std::optional<double> tolerance;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> check_filter;
};

RunReport run_scenario(const Scenario& s, const RunOptions& opt = {});

// Identifier table printed by `cvf catalog`; byte-stable across runs.
std::string catalog_table();

}  // namespace cvf
