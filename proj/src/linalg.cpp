#include "cvf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cvf {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_sq(std::span<const double> a) { return dot(a, a); }
double norm(std::span<const double> a) { return std::sqrt(norm_sq(a)); }

double max_abs(const Mat& m) {
  double r = 0.0;
  for (double x : m.v) r = std::max(r, std::abs(x));
  return r;
}

double max_abs(const T3& t) {
  double r = 0.0;
  for (double x : t.v) r = std::max(r, std::abs(x));
  return r;
}

double max_abs(const T4& t) {
  double r = 0.0;
  for (double x : t.v) r = std::max(r, std::abs(x));
  return r;
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

Vec SymMatrix::mul(std::span<const double> x) const {
  const int n = dim();
  Vec r(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += at(i, j) * x[j];
  return r;
}

double SymMatrix::quad(std::span<const double> x) const { return bilin(x, x); }

double SymMatrix::bilin(std::span<const double> x, std::span<const double> y) const {
  const int n = dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += x[i] * at(i, j) * y[j];
  return s;
}

namespace {

// Lower Cholesky factor; throws NotSpdError with the failing pivot.
Mat cholesky(const SymMatrix& m) {
  const int n = m.dim();
  Mat l(n, 0.0);
  double smallest = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    double d = m.at(j, j);
    for (int k = 0; k < j; ++k) d -= l.at(j, k) * l.at(j, k);
    smallest = std::min(smallest, d);
    if (!(d > 0.0))
      throw NotSpdError("matrix is not positive definite (smallest pivot " +
                            std::to_string(d) + ")",
                        d);
    const double lj = std::sqrt(d);
    l.at(j, j) = lj;
    for (int i = j + 1; i < n; ++i) {
      double s = m.at(i, j);
      for (int k = 0; k < j; ++k) s -= l.at(i, k) * l.at(j, k);
      l.at(i, j) = s / lj;
    }
  }
  return l;
}

}  // namespace

Vec SymMatrix::cholesky_pivots() const {
  const Mat l = cholesky(*this);
  Vec p(dim());
  for (int i = 0; i < dim(); ++i) p[i] = l.at(i, i) * l.at(i, i);
  return p;
}

bool SymMatrix::is_spd() const {
  try {
    cholesky(*this);
    return true;
  } catch (const NotSpdError&) {
    return false;
  }
}

SymMatrix spd_inverse(const SymMatrix& m) {
  const int n = m.dim();
  const Mat l = cholesky(m);
  // Solve L L^T X = I column by column.
  SymMatrix inv(n);
  Vec y(n), x(n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) {
      double s = (i == c) ? 1.0 : 0.0;
      for (int k = 0; k < i; ++k) s -= l.at(i, k) * y[k];
      y[i] = s / l.at(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = y[i];
      for (int k = i + 1; k < n; ++k) s -= l.at(k, i) * x[k];
      x[i] = s / l.at(i, i);
    }
    for (int i = 0; i < n; ++i) inv.set(i, c, x[i]);
  }
  return inv;
}

double spd_cond_estimate(const SymMatrix& m) {
  const SymMatrix inv = spd_inverse(m);
  auto inf_norm = [](const SymMatrix& a) {
    double best = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
      double row = 0.0;
      for (int j = 0; j < a.dim(); ++j) row += std::abs(a.at(i, j));
      best = std::max(best, row);
    }
    return best;
  };
  return inf_norm(m) * inf_norm(inv);
}

JetMat invert_jet_matrix(const JetMat& a) {
  const int n = a.n;
  if (n == 0) throw std::invalid_argument("invert_jet_matrix: empty matrix");
  const int dim = a.at(0, 0).dim();
  const int order = a.at(0, 0).order();
  JetMat work = a;
  JetMat inv(n, Jet3::constant(dim, order, 0.0));
  for (int i = 0; i < n; ++i) inv.at(i, i) = Jet3::constant(dim, order, 1.0);

  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(work.at(r, col).value()) > std::abs(work.at(piv, col).value())) piv = r;
    if (work.at(piv, col).value() == 0.0)
      throw EvalError("invert_jet_matrix: singular matrix");
    if (piv != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(work.at(piv, c), work.at(col, c));
        std::swap(inv.at(piv, c), inv.at(col, c));
      }
    }
    const Jet3 p = work.at(col, col);
    for (int c = 0; c < n; ++c) {
      work.at(col, c) = work.at(col, c) / p;
      inv.at(col, c) = inv.at(col, c) / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Jet3 f = work.at(r, col);
      if (f.value() == 0.0) {
        if (order == 0) continue;
        bool zero = true;
        for (int i = 0; i < dim && zero; ++i) zero = (f.grad(i) == 0.0);
        if (zero && order < 2) continue;
      }
      for (int c = 0; c < n; ++c) {
        work.at(r, c) -= f * work.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

}  // namespace cvf
