#include "cvf/jet.hpp"

#include <cmath>

namespace cvf {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw EvalError(what);
}

}  // namespace

Jet3::Jet3(int dim, int order, double value) : n_(dim), order_(order), v_(value) {
  require(dim >= 1 && dim <= kMaxDim, "Jet3: dimension out of range [1,8]");
  require(order >= 0 && order <= 3, "Jet3: order out of range [0,3]");
  if (order_ >= 1) g_.assign(n_, 0.0);
  if (order_ >= 2) h_.assign(n_ * n_, 0.0);
  if (order_ >= 3) t_.assign(n_ * n_ * n_, 0.0);
}

Jet3 Jet3::variable(int dim, int order, double value, int index) {
  Jet3 j(dim, order, value);
  require(index >= 0 && index < dim, "Jet3::variable: index out of range");
  if (order >= 1) j.g_[index] = 1.0;
  return j;
}

void Jet3::set_third(int i, int j, int k, double v) {
  const int n = n_;
  t_[(i * n + j) * n + k] = v;
  t_[(i * n + k) * n + j] = v;
  t_[(j * n + i) * n + k] = v;
  t_[(j * n + k) * n + i] = v;
  t_[(k * n + i) * n + j] = v;
  t_[(k * n + j) * n + i] = v;
}

void Jet3::check_same(const Jet3& rhs) const {
  require(n_ == rhs.n_, "Jet3: dimension mismatch");
}

Jet3 Jet3::operator-() const {
  Jet3 r(*this);
  r.v_ = -r.v_;
  for (double& x : r.g_) x = -x;
  for (double& x : r.h_) x = -x;
  for (double& x : r.t_) x = -x;
  return r;
}

Jet3& Jet3::operator+=(const Jet3& rhs) {
  check_same(rhs);
  if (rhs.order_ < order_) {
    order_ = rhs.order_;
    if (order_ < 3) t_.clear();
    if (order_ < 2) h_.clear();
    if (order_ < 1) g_.clear();
  }
  v_ += rhs.v_;
  for (size_t i = 0; i < g_.size(); ++i) g_[i] += rhs.g_[i];
  for (size_t i = 0; i < h_.size(); ++i) h_[i] += rhs.h_[i];
  for (size_t i = 0; i < t_.size(); ++i) t_[i] += rhs.t_[i];
  return *this;
}

Jet3& Jet3::operator-=(const Jet3& rhs) {
  *this += -rhs;
  return *this;
}

Jet3& Jet3::operator*=(double rhs) {
  v_ *= rhs;
  for (double& x : g_) x *= rhs;
  for (double& x : h_) x *= rhs;
  for (double& x : t_) x *= rhs;
  return *this;
}

Jet3 operator*(const Jet3& a, const Jet3& b) {
  a.check_same(b);
  const int n = a.n_;
  const int order = std::min(a.order_, b.order_);
  Jet3 r(n, order, a.v_ * b.v_);
  if (order >= 1) {
    for (int i = 0; i < n; ++i) r.g_[i] = a.g_[i] * b.v_ + a.v_ * b.g_[i];
  }
  if (order >= 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double v = a.hess(i, j) * b.v_ + a.g_[i] * b.g_[j] + a.g_[j] * b.g_[i] +
                         a.v_ * b.hess(i, j);
        r.set_hess(i, j, v);
      }
  }
  if (order >= 3) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k) {
          const double v = a.third(i, j, k) * b.v_ + a.v_ * b.third(i, j, k) +
                           a.hess(i, j) * b.g_[k] + a.hess(i, k) * b.g_[j] +
                           a.hess(j, k) * b.g_[i] + a.g_[i] * b.hess(j, k) +
                           a.g_[j] * b.hess(i, k) + a.g_[k] * b.hess(i, j);
          r.set_third(i, j, k, v);
        }
  }
  return r;
}

Jet3 compose(const Jet3& g, double c0, double c1, double c2, double c3) {
  const int n = g.n_;
  Jet3 r(n, g.order_, c0);
  if (g.order_ >= 1) {
    for (int i = 0; i < n; ++i) r.g_[i] = c1 * g.g_[i];
  }
  if (g.order_ >= 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        r.set_hess(i, j, c2 * g.g_[i] * g.g_[j] + c1 * g.hess(i, j));
  }
  if (g.order_ >= 3) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k) {
          const double v = c3 * g.g_[i] * g.g_[j] * g.g_[k] +
                           c2 * (g.hess(i, j) * g.g_[k] + g.hess(i, k) * g.g_[j] +
                                 g.hess(j, k) * g.g_[i]) +
                           c1 * g.third(i, j, k);
          r.set_third(i, j, k, v);
        }
  }
  return r;
}

Jet3 operator/(const Jet3& a, const Jet3& b) {
  if (b.v_ == 0.0)
    throw EvalError("jet division by zero denominator");
  const double w = b.v_;
  return a * compose(b, 1.0 / w, -1.0 / (w * w), 2.0 / (w * w * w), -6.0 / (w * w * w * w));
}

Jet3 operator/(Jet3 a, double b) {
  if (b == 0.0) throw EvalError("jet division by zero denominator");
  a *= 1.0 / b;
  return a;
}

Jet3 operator/(double a, const Jet3& b) {
  if (b.v_ == 0.0)
    throw EvalError("jet division by zero denominator");
  const double w = b.v_;
  return a * compose(b, 1.0 / w, -1.0 / (w * w), 2.0 / (w * w * w), -6.0 / (w * w * w * w));
}

Jet3 derivative(const Jet3& f, int i) {
  if (f.order_ < 1) throw EvalError("jet derivative: order-0 jet has no derivatives");
  const int n = f.n_;
  Jet3 r(n, f.order_ - 1, f.g_[i]);
  if (r.order_ >= 1)
    for (int j = 0; j < n; ++j) r.g_[j] = f.hess(i, j);
  if (r.order_ >= 2)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) r.set_hess(j, k, f.third(i, j, k));
  return r;
}

Jet3 sqrt(const Jet3& f) {
  const double v = f.value();
  if (!(v > 0.0))
    throw EvalError("sqrt: nonpositive radicand (" + std::to_string(v) + ")");
  const double s = std::sqrt(v);
  return compose(f, s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v));
}

Jet3 exp(const Jet3& f) {
  const double e = std::exp(f.value());
  return compose(f, e, e, e, e);
}

Jet3 log(const Jet3& f) {
  const double v = f.value();
  if (!(v > 0.0))
    throw EvalError("log: nonpositive argument (" + std::to_string(v) + ")");
  return compose(f, std::log(v), 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

std::vector<Jet3> seed_point(std::span<const double> x, int order) {
  std::vector<Jet3> r;
  r.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    r.push_back(Jet3::variable(static_cast<int>(x.size()), order, x[i], static_cast<int>(i)));
  return r;
}

std::vector<Jet3> seed_constants(std::span<const double> x, int dim, int order) {
  std::vector<Jet3> r;
  r.reserve(x.size());
  for (double v : x) r.push_back(Jet3::constant(dim, order, v));
  return r;
}

Jet3 dot(std::span<const Jet3> a, std::span<const Jet3> b) {
  if (a.empty() || a.size() != b.size())
    throw EvalError("jet dot: size mismatch or empty operands");
  Jet3 r = a[0] * b[0];
  for (size_t i = 1; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Jet3 norm_sq(std::span<const Jet3> a) { return dot(a, a); }

}  // namespace cvf
