#ifndef HYPVOL_MINKOWSKI_HPP
#define HYPVOL_MINKOWSKI_HPP

#include <variant>
#include <vector>

#include "hypvol/errors.hpp"
#include "hypvol/rng.hpp"
#include "hypvol/smallmat.hpp"

namespace hypvol {

// Hyperboloid model of H^m inside R^{m,1}. Signature convention throughout:
// <u,v> = -u0 v0 + sum_{i>=1} ui vi, time coordinate first. The future sheet
// {<v,v> = -1, v0 > 0} is H^m; future light rays normalized to v0 = 1 are the
// ideal boundary.

constexpr double kTolConstruct = 1e-10;  // point/tangent invariants
constexpr double kTolIsometry = 1e-9;    // isometry invariants
constexpr double kTolDerived = 1e-8;     // composed identities

struct MinkowskiVector {
  std::vector<double> c;  // length m+1, m in {2,3,4}

  MinkowskiVector() = default;
  explicit MinkowskiVector(std::vector<double> coords);

  int dim() const { return static_cast<int>(c.size()) - 1; }
  double operator[](int i) const { return c[i]; }
  double& operator[](int i) { return c[i]; }
};

double lorentz_dot(const MinkowskiVector& u, const MinkowskiVector& v);

MinkowskiVector operator+(const MinkowskiVector& u, const MinkowskiVector& v);
MinkowskiVector operator-(const MinkowskiVector& u, const MinkowskiVector& v);
MinkowskiVector operator*(double f, const MinkowskiVector& v);

// Point on the future sheet.
class HPoint {
 public:
  explicit HPoint(MinkowskiVector v);
  // Rescales a future timelike vector onto the sheet.
  static HPoint from_timelike(const MinkowskiVector& v);

  const MinkowskiVector& rep() const { return v_; }
  int dim() const { return v_.dim(); }

 private:
  MinkowskiVector v_;
};

// Point of the ideal boundary; canonical representative has v0 = 1.
class IdealPoint {
 public:
  explicit IdealPoint(MinkowskiVector v);

  const MinkowskiVector& rep() const { return v_; }
  int dim() const { return v_.dim(); }

 private:
  MinkowskiVector v_;
};

using Point = std::variant<HPoint, IdealPoint>;

inline bool is_ideal(const Point& p) { return std::holds_alternative<IdealPoint>(p); }
inline const MinkowskiVector& rep(const Point& p) {
  return std::holds_alternative<HPoint>(p) ? std::get<HPoint>(p).rep() : std::get<IdealPoint>(p).rep();
}
inline int point_dim(const Point& p) { return rep(p).dim(); }

// Element of O(m,1) preserving the future sheet (M00 > 0).
class Isometry {
 public:
  explicit Isometry(Mat matrix);

  static Isometry identity(int m);
  // Rotation by `angle` in the spatial plane (axis_a, axis_b), axes 1-based
  // among the spatial coordinates.
  static Isometry rotation(int m, int axis_a, int axis_b, double angle);
  // Hyperbolic translation of length t along spatial axis (1-based).
  static Isometry boost(int m, int axis, double t);
  // Reflection negating one spatial axis (orientation-reversing).
  static Isometry reflection(int m, int axis);

  const Mat& matrix() const { return m_; }
  int dim() const { return m_.rows - 1; }
  double determinant() const;

  Isometry compose(const Isometry& rhs) const;  // this * rhs
  Isometry inverse() const;                     // J M^T J

  MinkowskiVector apply_raw(const MinkowskiVector& v) const;
  HPoint apply(const HPoint& p) const;
  IdealPoint apply(const IdealPoint& p) const;
  Point apply(const Point& p) const;

 private:
  Mat m_;
};

struct TangentVector {
  HPoint base;
  MinkowskiVector v;

  TangentVector(HPoint b, MinkowskiVector vec);
};

double distance(const HPoint& p, const HPoint& q);

// Unit tangent at x pointing along the geodesic toward y (limit direction for
// ideal y).
TangentVector log_direction(const HPoint& x, const Point& y);

TangentVector apply(const Isometry& g, const TangentVector& t);

// Orthonormal basis of x^perp, oriented so det[x | e1 ... em] > 0.
std::vector<TangentVector> tangent_basis(const HPoint& x);

TangentVector random_unit_tangent(const HPoint& x, RngStream& rng);

// exp_x(t u) for a unit tangent u.
HPoint exp_map(const HPoint& x, const TangentVector& u, double t);

// Point at parameter t in [0,1] on the geodesic from p to q.
HPoint geodesic_point(const HPoint& p, const HPoint& q, double t);

}  // namespace hypvol

#endif
