#include "cvf/params.hpp"

#include <cmath>

namespace cvf {

Vec sized_vec(const Vec& v, int n, const std::string& name) {
  if (v.empty()) return Vec(n, 0.0);
  if (static_cast<int>(v.size()) != n)
    throw ValidationError(name + " has dimension " + std::to_string(v.size()) +
                              ", model dimension is " + std::to_string(n),
                          std::abs(static_cast<double>(v.size()) - n));
  return v;
}

Mat sized_mat(const Mat& m, int n, const std::string& name) {
  if (m.n == 0) return Mat(n, 0.0);
  if (m.n != n)
    throw ValidationError(name + " has dimension " + std::to_string(m.n) +
                              ", model dimension is " + std::to_string(n),
                          std::abs(static_cast<double>(m.n) - n));
  return m;
}

void validate_skew(const Mat& q) {
  double r = 0.0;
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) r = std::max(r, std::abs(q.at(i, j) + q.at(j, i)));
  if (r >= kValidationTol) throw ValidationError("Q skew-symmetric", r);
}

void validate_qe_zero(const Mat& q, const Vec& e) {
  double r = 0.0;
  for (int i = 0; i < q.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < q.n; ++j) s += q.at(i, j) * e[j];
    r = std::max(r, std::abs(s));
  }
  if (r >= kValidationTol) throw ValidationError("Qe=0", r);
}

void validate_killing_pair(const Mat& q, const Vec& gamma, const Vec& e,
                           double lambda) {
  const double ge = std::abs(dot(gamma, e));
  if (ge >= kValidationTol) throw ValidationError("<gamma,e>=0", ge);
  double r = 0.0;
  for (int i = 0; i < q.n; ++i) {
    double s = 2.0 * lambda * gamma[i];
    for (int j = 0; j < q.n; ++j) s += q.at(i, j) * e[j];
    r = std::max(r, std::abs(s));
  }
  if (r >= kValidationTol) throw ValidationError("Qe=-2*lambda*gamma", r);
}

void validate_k_triple(double k1, double k2, double k3) {
  const double r = std::abs(k2 - k1 * k3);
  if (r < kValidationTol) throw ValidationError("k2 != k1*k3", r);
}

}  // namespace cvf
