#ifndef HYPVOL_SMALLMAT_HPP
#define HYPVOL_SMALLMAT_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "hypvol/errors.hpp"

namespace hypvol {

// Dense row-major matrix sized for this project (nothing bigger than 5x5
// squares or tall vertex matrices with 5 rows).
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

inline Mat matmul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) fail(ErrorCode::dimension_mismatch, "matmul: shape mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      double v = x.at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

inline Mat transpose(const Mat& m) {
  Mat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

inline std::vector<double> matvec(const Mat& m, const std::vector<double>& v) {
  if (m.cols != static_cast<int>(v.size())) fail(ErrorCode::dimension_mismatch, "matvec: shape mismatch");
  std::vector<double> r(m.rows, 0.0);
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

// Determinant by LU with partial pivoting.
inline double det(Mat m) {
  if (m.rows != m.cols) fail(ErrorCode::dimension_mismatch, "det: not square");
  int n = m.rows;
  double d = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::fabs(m.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::fabs(m.at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      d = -d;
    }
    d *= m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      double f = m.at(i, k) / m.at(k, k);
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return d;
}

// Solve m x = b in place, partial pivoting. Returns false when singular to
// working precision.
inline bool solve(Mat m, std::vector<double> b, std::vector<double>& x) {
  int n = m.rows;
  if (m.cols != n || static_cast<int>(b.size()) != n)
    fail(ErrorCode::dimension_mismatch, "solve: shape mismatch");
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::fabs(m.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::fabs(m.at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best < 1e-300) return false;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (int i = k + 1; i < n; ++i) {
      double f = m.at(i, k) / m.at(k, k);
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
      b[i] -= f * b[k];
    }
  }
  x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= m.at(i, j) * x[j];
    x[i] = s / m.at(i, i);
  }
  return true;
}

// Generalized cross product: given k rows spanning (at most) a k-plane in
// R^{k+1}, returns the cofactor vector orthogonal (Euclidean) to every row.
// Zero vector signals rank deficiency.
inline std::vector<double> cross_complement(const Mat& rows) {
  int k = rows.rows;
  if (rows.cols != k + 1) fail(ErrorCode::dimension_mismatch, "cross_complement: need k x (k+1)");
  std::vector<double> z(k + 1, 0.0);
  Mat minor(k, k);
  for (int drop = 0; drop <= k; ++drop) {
    for (int i = 0; i < k; ++i) {
      int jj = 0;
      for (int j = 0; j <= k; ++j) {
        if (j == drop) continue;
        minor.at(i, jj++) = rows.at(i, j);
      }
    }
    double sign = (drop % 2 == 0) ? 1.0 : -1.0;
    z[drop] = sign * det(minor);
  }
  return z;
}

// Eigenvalues of a small symmetric matrix (cyclic Jacobi).
inline std::vector<double> symmetric_eigenvalues(Mat s) {
  int n = s.rows;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += s.at(p, q) * s.at(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = s.at(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        double theta = (s.at(q, q) - s.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;
        for (int i = 0; i < n; ++i) {
          double sip = s.at(i, p), siq = s.at(i, q);
          s.at(i, p) = c * sip - sn * siq;
          s.at(i, q) = sn * sip + c * siq;
        }
        for (int i = 0; i < n; ++i) {
          double spi = s.at(p, i), sqi = s.at(q, i);
          s.at(p, i) = c * spi - sn * sqi;
          s.at(q, i) = sn * spi + c * sqi;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = s.at(i, i);
  return eig;
}

// sigma_min / sigma_max of a matrix whose columns are the given vectors.
inline double singular_ratio(const Mat& columns) {
  Mat g(columns.cols, columns.cols);
  for (int i = 0; i < columns.cols; ++i)
    for (int j = i; j < columns.cols; ++j) {
      double s = 0.0;
      for (int r = 0; r < columns.rows; ++r) s += columns.at(r, i) * columns.at(r, j);
      g.at(i, j) = s;
      g.at(j, i) = s;
    }
  std::vector<double> eig = symmetric_eigenvalues(g);
  double lo = eig[0], hi = eig[0];
  for (double e : eig) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  if (hi <= 0.0) return 0.0;
  lo = std::max(lo, 0.0);
  return std::sqrt(lo / hi);
}

}  // namespace hypvol

#endif
