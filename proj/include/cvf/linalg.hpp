#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cvf/jet.hpp"

namespace cvf {

using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm_sq(std::span<const double> a);
double norm(std::span<const double> a);

// Dense square grid, rank 2/3/4; element type double or Jet3.
template <class T>
struct Grid2 {
  int n = 0;
  std::vector<T> v;
  Grid2() = default;
  Grid2(int dim, const T& fill) : n(dim), v(static_cast<size_t>(dim) * dim, fill) {}
  T& at(int i, int j) { return v[static_cast<size_t>(i) * n + j]; }
  const T& at(int i, int j) const { return v[static_cast<size_t>(i) * n + j]; }
};

template <class T>
struct Grid3 {
  int n = 0;
  std::vector<T> v;
  Grid3() = default;
  Grid3(int dim, const T& fill) : n(dim), v(static_cast<size_t>(dim) * dim * dim, fill) {}
  T& at(int i, int j, int k) { return v[(static_cast<size_t>(i) * n + j) * n + k]; }
  const T& at(int i, int j, int k) const { return v[(static_cast<size_t>(i) * n + j) * n + k]; }
};

template <class T>
struct Grid4 {
  int n = 0;
  std::vector<T> v;
  Grid4() = default;
  Grid4(int dim, const T& fill) : n(dim), v(static_cast<size_t>(dim) * dim * dim * dim, fill) {}
  T& at(int i, int j, int k, int l) {
    return v[((static_cast<size_t>(i) * n + j) * n + k) * n + l];
  }
  const T& at(int i, int j, int k, int l) const {
    return v[((static_cast<size_t>(i) * n + j) * n + k) * n + l];
  }
};

using Mat = Grid2<double>;
using T3 = Grid3<double>;
using T4 = Grid4<double>;
using JetMat = Grid2<Jet3>;
using JetT3 = Grid3<Jet3>;

double max_abs(const Mat& m);
double max_abs(const T3& t);
double max_abs(const T4& t);

// Thrown when a matrix handed to an SPD routine is not positive definite.
struct NotSpdError : std::runtime_error {
  double smallest_pivot;
  NotSpdError(const std::string& msg, double pivot)
      : std::runtime_error(msg), smallest_pivot(pivot) {}
};

// Symmetric matrix; writes mirror so the storage stays bitwise symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim) : m_(dim, 0.0) {}
  static SymMatrix identity(int dim);

  int dim() const { return m_.n; }
  double at(int i, int j) const { return m_.at(i, j); }
  void set(int i, int j, double v) { m_.at(i, j) = v; m_.at(j, i) = v; }

  const Mat& raw() const { return m_; }

  Vec mul(std::span<const double> x) const;
  double quad(std::span<const double> x) const;           // x^T M x
  double bilin(std::span<const double> x, std::span<const double> y) const;

  // Cholesky factor pivots (squared diagonal of L); throws NotSpdError.
  Vec cholesky_pivots() const;
  bool is_spd() const;
  double max_abs() const { return cvf::max_abs(m_); }

 private:
  Mat m_;
};

// Inverse of a positive definite matrix via Cholesky.  Result satisfies
// ||M * inv(M) - I||_inf < 1e-12 relative for well conditioned input.
SymMatrix spd_inverse(const SymMatrix& m);

// Condition number estimate ||M||_inf * ||M^-1||_inf.
double spd_cond_estimate(const SymMatrix& m);

// Gauss-Jordan inverse of a matrix of jets (pivoting on jet values).
JetMat invert_jet_matrix(const JetMat& a);

}  // namespace cvf
