#pragma once

#include <cstdint>
#include <random>

#include "cvf/fields.hpp"
#include "cvf/linalg.hpp"

namespace cvf {

// Deterministic sampler: every draw reduces to raw mt19937_64 output so
// that identical seeds give identical streams on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform();                        // [0, 1)
  double uniform(double lo, double hi);
  double gaussian();

  // Uniform in the ball of dom.radius, rejecting points outside the
  // chart guard 1 + mu|x|^2 >= 0.25.
  Vec point_in_ball(const Domain& dom);
  // As above, additionally rejecting metric condition numbers > 1e6.
  Vec metric_point(const MetricField& a);
  Vec unit_sphere(int n);
  Vec vector_in_ball(int n, double radius);
  Mat skew_matrix(int n, double scale);

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cvf
