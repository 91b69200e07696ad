#pragma once

#include <stdexcept>
#include <string>

namespace cvf {

// Constructor-time constraint violation; names the constraint and how
// far the input is from satisfying it.
struct ValidationError : std::runtime_error {
  std::string constraint;
  double residual;
  ValidationError(const std::string& constraint_, double residual_)
      : std::runtime_error("constraint violated: " + constraint_ +
                           " (residual " + std::to_string(residual_) + ")"),
        constraint(constraint_),
        residual(residual_) {}
};

// Scenario-file problem; carries the offending field path for the CLI.
struct ConfigError : std::runtime_error {
  std::string field_path;
  ConfigError(const std::string& field_path_, const std::string& what_)
      : std::runtime_error(field_path_ + ": " + what_), field_path(field_path_) {}
};

// s = beta/alpha left the declared range of phi.
struct RegularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ODE/flow integration could not continue (u -> 0, blowup, domain exit).
struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cvf
