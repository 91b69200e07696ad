#include "cvf/sampling.hpp"

#include <cmath>

namespace cvf {

double Sampler::uniform() {
  return std::ldexp(static_cast<double>(rng_() >> 11), -53);
}

double Sampler::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Sampler::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Vec Sampler::point_in_ball(const Domain& dom) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Vec x(dom.dim);
    double r2 = 0.0;
    for (int i = 0; i < dom.dim; ++i) {
      x[i] = uniform(-dom.radius, dom.radius);
      r2 += x[i] * x[i];
    }
    if (r2 > dom.radius * dom.radius) continue;
    Vec shifted(dom.dim);
    for (int i = 0; i < dom.dim; ++i) shifted[i] = dom.center[i] + x[i];
    if (dom.contains(shifted)) return shifted;
  }
  throw EvalError("sampler: chart guard rejected 10000 consecutive points");
}

Vec Sampler::metric_point(const MetricField& a) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vec x = point_in_ball(a.domain);
    const SymMatrix m = metric_value(a, x);
    if (m.is_spd() && spd_cond_estimate(m) <= 1e6) return x;
  }
  throw EvalError("sampler: no well-conditioned point found in 100 attempts");
}

Vec Sampler::unit_sphere(int n) {
  while (true) {
    Vec y(n);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] = gaussian();
      r2 += y[i] * y[i];
    }
    if (r2 < 1e-12) continue;
    const double r = std::sqrt(r2);
    for (int i = 0; i < n; ++i) y[i] /= r;
    return y;
  }
}

Vec Sampler::vector_in_ball(int n, double radius) {
  while (true) {
    Vec v(n);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      v[i] = uniform(-radius, radius);
      r2 += v[i] * v[i];
    }
    if (r2 <= radius * radius) return v;
  }
}

Mat Sampler::skew_matrix(int n, double scale) {
  Mat q(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = uniform(-scale, scale);
      q.at(i, j) = v;
      q.at(j, i) = -v;
    }
  return q;
}

}  // namespace cvf
