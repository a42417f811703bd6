#include "hypvol/minkowski.hpp"

#include <algorithm>
#include <cmath>

namespace hypvol {

MinkowskiVector::MinkowskiVector(std::vector<double> coords) : c(std::move(coords)) {
  int m = static_cast<int>(c.size()) - 1;
  if (m < 2 || m > 4)
    fail(ErrorCode::dimension_mismatch, "MinkowskiVector: ambient dimension must be 2, 3 or 4");
}

double lorentz_dot(const MinkowskiVector& u, const MinkowskiVector& v) {
  if (u.c.size() != v.c.size()) fail(ErrorCode::dimension_mismatch, "lorentz_dot: dimension mismatch");
  double s = -u.c[0] * v.c[0];
  for (size_t i = 1; i < u.c.size(); ++i) s += u.c[i] * v.c[i];
  return s;
}

MinkowskiVector operator+(const MinkowskiVector& u, const MinkowskiVector& v) {
  if (u.c.size() != v.c.size()) fail(ErrorCode::dimension_mismatch, "vector add: dimension mismatch");
  MinkowskiVector r = u;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += v.c[i];
  return r;
}

MinkowskiVector operator-(const MinkowskiVector& u, const MinkowskiVector& v) {
  if (u.c.size() != v.c.size()) fail(ErrorCode::dimension_mismatch, "vector sub: dimension mismatch");
  MinkowskiVector r = u;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= v.c[i];
  return r;
}

MinkowskiVector operator*(double f, const MinkowskiVector& v) {
  MinkowskiVector r = v;
  for (double& x : r.c) x *= f;
  return r;
}

namespace {

double euclid_norm2(const MinkowskiVector& v) {
  double s = 0.0;
  for (double x : v.c) s += x * x;
  return s;
}

}  // namespace

HPoint::HPoint(MinkowskiVector v) : v_(std::move(v)) {
  double q = lorentz_dot(v_, v_);
  if (std::fabs(q + 1.0) > kTolConstruct)
    fail(ErrorCode::invalid_point, "HPoint: <v,v> != -1");
  if (v_.c[0] <= 0.0) fail(ErrorCode::invalid_point, "HPoint: not on the future sheet");
}

HPoint HPoint::from_timelike(const MinkowskiVector& v) {
  double q = lorentz_dot(v, v);
  if (q >= 0.0 || v.c[0] <= 0.0)
    fail(ErrorCode::invalid_point, "from_timelike: vector is not future timelike");
  return HPoint((1.0 / std::sqrt(-q)) * v);
}

IdealPoint::IdealPoint(MinkowskiVector v) : v_(std::move(v)) {
  double q = lorentz_dot(v_, v_);
  if (std::fabs(q) > kTolConstruct * std::max(1.0, euclid_norm2(v_)))
    fail(ErrorCode::invalid_point, "IdealPoint: representative not on the light cone");
  if (v_.c[0] <= 0.0) fail(ErrorCode::invalid_point, "IdealPoint: not a future ray");
  double inv = 1.0 / v_.c[0];
  for (double& x : v_.c) x *= inv;
  v_.c[0] = 1.0;
}

Isometry::Isometry(Mat matrix) : m_(std::move(matrix)) {
  if (m_.rows != m_.cols || m_.rows < 3 || m_.rows > 5)
    fail(ErrorCode::invalid_isometry, "Isometry: bad matrix shape");
  int n = m_.rows;
  // M^T J M = J entrywise; the tolerance follows the entry scale, since the
  // float residual of a genuine large translation grows like scale^2.
  double scale = 0.0;
  for (double x : m_.a) scale = std::max(scale, std::fabs(x));
  double tol = kTolIsometry * std::max(1.0, scale * scale);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = -m_.at(0, i) * m_.at(0, j);
      for (int r = 1; r < n; ++r) s += m_.at(r, i) * m_.at(r, j);
      double want = (i != j) ? 0.0 : (i == 0 ? -1.0 : 1.0);
      if (std::fabs(s - want) > tol)
        fail(ErrorCode::invalid_isometry, "Isometry: does not preserve the Lorentzian form");
    }
  if (m_.at(0, 0) <= 0.0)
    fail(ErrorCode::invalid_isometry, "Isometry: does not preserve the future sheet");
}

Isometry Isometry::identity(int m) { return Isometry(Mat::identity(m + 1)); }

Isometry Isometry::rotation(int m, int axis_a, int axis_b, double angle) {
  if (axis_a < 1 || axis_b < 1 || axis_a > m || axis_b > m || axis_a == axis_b)
    fail(ErrorCode::bad_input, "rotation: bad axes");
  Mat r = Mat::identity(m + 1);
  double c = std::cos(angle), s = std::sin(angle);
  r.at(axis_a, axis_a) = c;
  r.at(axis_b, axis_b) = c;
  r.at(axis_a, axis_b) = -s;
  r.at(axis_b, axis_a) = s;
  return Isometry(std::move(r));
}

Isometry Isometry::boost(int m, int axis, double t) {
  if (axis < 1 || axis > m) fail(ErrorCode::bad_input, "boost: bad axis");
  Mat r = Mat::identity(m + 1);
  double ch = std::cosh(t), sh = std::sinh(t);
  r.at(0, 0) = ch;
  r.at(axis, axis) = ch;
  r.at(0, axis) = sh;
  r.at(axis, 0) = sh;
  return Isometry(std::move(r));
}

Isometry Isometry::reflection(int m, int axis) {
  if (axis < 1 || axis > m) fail(ErrorCode::bad_input, "reflection: bad axis");
  Mat r = Mat::identity(m + 1);
  r.at(axis, axis) = -1.0;
  return Isometry(std::move(r));
}

double Isometry::determinant() const { return det(m_); }

Isometry Isometry::compose(const Isometry& rhs) const { return Isometry(matmul(m_, rhs.m_)); }

Isometry Isometry::inverse() const {
  int n = m_.rows;
  Mat inv(n, n);
  // J M^T J with J = diag(-1, 1, ..., 1)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double sign = ((i == 0) != (j == 0)) ? -1.0 : 1.0;
      inv.at(i, j) = sign * m_.at(j, i);
    }
  return Isometry(std::move(inv));
}

MinkowskiVector Isometry::apply_raw(const MinkowskiVector& v) const {
  if (v.dim() != dim()) fail(ErrorCode::dimension_mismatch, "apply: dimension mismatch");
  return MinkowskiVector(matvec(m_, v.c));
}

HPoint Isometry::apply(const HPoint& p) const { return HPoint::from_timelike(apply_raw(p.rep())); }

IdealPoint Isometry::apply(const IdealPoint& p) const { return IdealPoint(apply_raw(p.rep())); }

Point Isometry::apply(const Point& p) const {
  if (is_ideal(p)) return apply(std::get<IdealPoint>(p));
  return apply(std::get<HPoint>(p));
}

TangentVector::TangentVector(HPoint b, MinkowskiVector vec) : base(std::move(b)), v(std::move(vec)) {
  if (base.dim() != v.dim()) fail(ErrorCode::dimension_mismatch, "TangentVector: dimension mismatch");
  if (std::fabs(lorentz_dot(base.rep(), v)) > kTolConstruct)
    fail(ErrorCode::bad_input, "TangentVector: not orthogonal to base point");
}

double distance(const HPoint& p, const HPoint& q) {
  double c = -lorentz_dot(p.rep(), q.rep());
  return std::acosh(std::max(1.0, c));
}

TangentVector log_direction(const HPoint& x, const Point& y) {
  const MinkowskiVector& w = rep(y);
  double s = lorentz_dot(w, x.rep());
  // tangential component of the representative at x
  MinkowskiVector d = w + s * x.rep();
  double n2 = lorentz_dot(d, d);
  if (n2 < 1e-24)
    fail(ErrorCode::degenerate_direction, "log_direction: target coincides with base point");
  return TangentVector(x, (1.0 / std::sqrt(n2)) * d);
}

TangentVector apply(const Isometry& g, const TangentVector& t) {
  return TangentVector(g.apply(t.base), g.apply_raw(t.v));
}

std::vector<TangentVector> tangent_basis(const HPoint& x) {
  int m = x.dim();
  std::vector<MinkowskiVector> basis;
  for (int seed = 0; seed <= m && static_cast<int>(basis.size()) < m; ++seed) {
    MinkowskiVector e(std::vector<double>(m + 1, 0.0));
    e.c[seed] = 1.0;
    // project to x^perp, then Gram-Schmidt against what we have
    MinkowskiVector u = e + lorentz_dot(e, x.rep()) * x.rep();
    for (const MinkowskiVector& b : basis) u = u - lorentz_dot(u, b) * b;
    double n2 = lorentz_dot(u, u);
    if (n2 < 1e-20) continue;
    basis.push_back((1.0 / std::sqrt(n2)) * u);
  }
  if (static_cast<int>(basis.size()) != m)
    fail(ErrorCode::invalid_point, "tangent_basis: projection degenerated");
  // fix the orientation: det[x | e1 ... em] > 0
  Mat cols(m + 1, m + 1);
  for (int r = 0; r <= m; ++r) {
    cols.at(r, 0) = x.rep()[r];
    for (int j = 0; j < m; ++j) cols.at(r, j + 1) = basis[j][r];
  }
  if (det(cols) < 0.0) basis[m - 1] = -1.0 * basis[m - 1];
  std::vector<TangentVector> out;
  out.reserve(m);
  for (auto& b : basis) out.emplace_back(x, std::move(b));
  return out;
}

TangentVector random_unit_tangent(const HPoint& x, RngStream& rng) {
  int m = x.dim();
  std::vector<TangentVector> basis = tangent_basis(x);
  double coeff[4];
  rng.sphere_direction(m, coeff);
  MinkowskiVector v(std::vector<double>(m + 1, 0.0));
  for (int j = 0; j < m; ++j)
    for (int r = 0; r <= m; ++r) v.c[r] += coeff[j] * basis[j].v[r];
  return TangentVector(x, std::move(v));
}

HPoint exp_map(const HPoint& x, const TangentVector& u, double t) {
  MinkowskiVector p = std::cosh(t) * x.rep() + std::sinh(t) * u.v;
  return HPoint::from_timelike(p);
}

HPoint geodesic_point(const HPoint& p, const HPoint& q, double t) {
  double d = distance(p, q);
  if (d < 1e-15) return p;
  double sd = std::sinh(d);
  MinkowskiVector v = (std::sinh((1.0 - t) * d) / sd) * p.rep() + (std::sinh(t * d) / sd) * q.rep();
  return HPoint::from_timelike(v);
}

}  // namespace hypvol
