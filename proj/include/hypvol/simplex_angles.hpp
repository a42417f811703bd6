#ifndef HYPVOL_SIMPLEX_ANGLES_HPP
#define HYPVOL_SIMPLEX_ANGLES_HPP

#include <cstdint>
#include <vector>

#include "hypvol/estimate.hpp"
#include "hypvol/minkowski.hpp"

namespace hypvol {

// Geodesic k-simplex in H^m, vertices finite or ideal. Non-degenerate iff the
// k+1 representative vectors are linearly independent (singular-value ratio
// above kDegeneracyRatio).
struct GeodesicSimplex {
  int ambient_dim = 0;
  std::vector<Point> vertices;

  GeodesicSimplex() = default;
  GeodesicSimplex(int m, std::vector<Point> verts);

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

constexpr double kDegeneracyRatio = 1e-8;

// Ratio sigma_min/sigma_max of the vertex representative matrix.
double degeneracy_ratio(const GeodesicSimplex& t);
bool is_degenerate(const GeodesicSimplex& t);

// Face of a simplex as a sorted vertex-index subset.
struct Face {
  std::vector<int> indices;

  Face() = default;
  explicit Face(std::vector<int> idx);

  int dim() const { return static_cast<int>(indices.size()) - 1; }
  std::uint32_t mask() const;
};

// All 2^{k+1}-1 nonempty faces, ordered by dimension then index set.
std::vector<Face> face_lattice(const GeodesicSimplex& t);

struct McConfig {
  long samples = 200000;
  std::uint64_t seed = 0;
  bool force_mc = false;  // test hook: skip exact shortcuts
  int threads = 1;
};

// Normalized sum of the face's vertex representatives. Throws no_basepoint
// for a purely ideal 0-face.
HPoint interior_basepoint(const GeodesicSimplex& t, const Face& face);

// Outward data for the tangent cone of t at an interior point of `face`: one
// Lorentz-unit normal per facet containing the face, oriented so the cone is
// {v : <n,v> <= 0 for all n}.
std::vector<MinkowskiVector> tangent_cone_normals(const GeodesicSimplex& t, const Face& face);

// Interior angle fraction W(t, face). Exact for ideal 0-faces (0), the top
// face (1), facets (1/2) and all m=2 faces; Monte Carlo otherwise.
AngleEstimate interior_angle(const GeodesicSimplex& t, const Face& face, const McConfig& cfg);

// Same, with an explicit interior basepoint of the face (the fraction is
// independent of this choice; exposed for property tests).
AngleEstimate interior_angle_at(const GeodesicSimplex& t, const Face& face, const HPoint& x,
                                const McConfig& cfg);

// W(t) = sum over faces of (-1)^dim W(t, face); in [-1,1], zero for odd m.
Estimate generalized_angle_sum(const GeodesicSimplex& t, const McConfig& cfg);

// Volume of the round d-sphere.
double sphere_volume(int d);

// Vol(t) from the angle sum, even ambient dimension only.
Estimate volume_hopf(const GeodesicSimplex& t, const McConfig& cfg);

// Independent Monte Carlo volume through the Klein chart; compact simplices
// only (refuses ideal vertices).
Estimate volume_mc(const GeodesicSimplex& t, const McConfig& cfg);

// Exact 2-d oracle: pi minus the vertex angle sum.
double area_defect(const GeodesicSimplex& t);

}  // namespace hypvol

#endif
