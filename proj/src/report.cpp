#include "cvf/report.hpp"

#include <algorithm>
#include <numeric>

namespace cvf {

void CheckReport::finalize() {
  samples = static_cast<int>(residuals.size());
  max_residual = residuals.empty()
                     ? 0.0
                     : *std::max_element(residuals.begin(), residuals.end());
  mean_residual =
      residuals.empty()
          ? 0.0
          : std::accumulate(residuals.begin(), residuals.end(), 0.0) / samples;
  pass = max_residual < tolerance;
}

nlohmann::json CheckReport::to_json() const {
  return nlohmann::json{{"name", name},
                        {"samples", samples},
                        {"seed", seed},
                        {"tolerance", tolerance},
                        {"residuals", residuals},
                        {"max_residual", max_residual},
                        {"mean_residual", mean_residual},
                        {"pass", pass},
                        {"truncated", truncated},
                        {"note", note}};
}

CheckReport CheckReport::from_json(const nlohmann::json& j) {
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  r.samples = j.at("samples").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.tolerance = j.at("tolerance").get<double>();
  r.residuals = j.at("residuals").get<Vec>();
  r.max_residual = j.at("max_residual").get<double>();
  r.mean_residual = j.at("mean_residual").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.truncated = j.at("truncated").get<bool>();
  r.note = j.at("note").get<std::string>();
  return r;
}

}  // namespace cvf
