#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cvf/linalg.hpp"

namespace cvf {

// Result of one residual check over a sample set.  pass is derived:
// max_residual < tolerance.
struct CheckReport {
  std::string name;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  Vec residuals;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  bool pass = false;
  bool truncated = false;  // flow left the chart before the last grid point
  std::string note;

  void finalize();

  nlohmann::json to_json() const;
  static CheckReport from_json(const nlohmann::json& j);
  bool operator==(const CheckReport&) const = default;
};

}  // namespace cvf
