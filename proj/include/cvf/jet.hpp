#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvf {

// Thrown when an evaluation leaves the domain of an elementary operation
// (sqrt of a negative, log of a nonpositive value, division by zero).
// The message names the offending operation and its argument.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated Taylor value: a scalar together with its partial derivatives
// up to `order` (at most 3) in `dim` variables.  The Hessian block is
// stored dense and mirrored on write, so hess(i,j) == hess(j,i) bitwise;
// the third-order block is likewise totally symmetric.  Arithmetic
// propagates derivatives exactly (Leibniz / Faa di Bruno to order 3).
class Jet3 {
 public:
  static constexpr int kMaxDim = 8;

  Jet3() : n_(0), order_(0), v_(0.0) {}
  Jet3(int dim, int order, double value);

  static Jet3 constant(int dim, int order, double value) { return Jet3(dim, order, value); }
  // The coordinate function x^index: value `value`, unit gradient slot.
  static Jet3 variable(int dim, int order, double value, int index);

  int dim() const { return n_; }
  int order() const { return order_; }
  double value() const { return v_; }

  double grad(int i) const { return g_[i]; }
  double hess(int i, int j) const { return h_[i * n_ + j]; }
  double third(int i, int j, int k) const { return t_[(i * n_ + j) * n_ + k]; }

  void set_value(double v) { v_ = v; }
  void set_grad(int i, double v) { g_[i] = v; }
  void set_hess(int i, int j, double v) { h_[i * n_ + j] = v; h_[j * n_ + i] = v; }
  void set_third(int i, int j, int k, double v);

  Jet3 operator-() const;
  Jet3& operator+=(const Jet3& rhs);
  Jet3& operator-=(const Jet3& rhs);
  Jet3& operator+=(double rhs) { v_ += rhs; return *this; }
  Jet3& operator-=(double rhs) { v_ -= rhs; return *this; }
  Jet3& operator*=(double rhs);

  friend Jet3 operator+(Jet3 a, const Jet3& b) { a += b; return a; }
  friend Jet3 operator-(Jet3 a, const Jet3& b) { a -= b; return a; }
  friend Jet3 operator+(Jet3 a, double b) { a += b; return a; }
  friend Jet3 operator+(double a, Jet3 b) { b += a; return b; }
  friend Jet3 operator-(Jet3 a, double b) { a -= b; return a; }
  friend Jet3 operator-(double a, const Jet3& b) { return -b + a; }
  friend Jet3 operator*(const Jet3& a, const Jet3& b);
  friend Jet3 operator*(Jet3 a, double b) { a *= b; return a; }
  friend Jet3 operator*(double a, Jet3 b) { b *= a; return b; }
  friend Jet3 operator/(const Jet3& a, const Jet3& b);
  friend Jet3 operator/(Jet3 a, double b);
  friend Jet3 operator/(double a, const Jet3& b);

  // u = f(g) for an outer scalar function with derivatives c0..c3 at g.value().
  friend Jet3 compose(const Jet3& g, double c0, double c1, double c2, double c3);

  // Partial derivative with respect to variable i, as a jet of one lower order.
  friend Jet3 derivative(const Jet3& f, int i);

 private:
  void check_same(const Jet3& rhs) const;

  int n_;
  int order_;
  double v_;
  std::vector<double> g_;  // n
  std::vector<double> h_;  // n*n, symmetric
  std::vector<double> t_;  // n*n*n, totally symmetric
};

Jet3 compose(const Jet3& g, double c0, double c1, double c2, double c3);
Jet3 derivative(const Jet3& f, int i);

Jet3 sqrt(const Jet3& f);
Jet3 exp(const Jet3& f);
Jet3 log(const Jet3& f);

// Seeds for evaluating a field at x: one coordinate variable per component.
std::vector<Jet3> seed_point(std::span<const double> x, int order);
// Same point treated as constants (for the slot not being differentiated).
std::vector<Jet3> seed_constants(std::span<const double> x, int dim, int order);

Jet3 dot(std::span<const Jet3> a, std::span<const Jet3> b);
Jet3 norm_sq(std::span<const Jet3> a);

}  // namespace cvf
