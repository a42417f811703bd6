#ifndef HYPVOL_FIXTURES_HPP
#define HYPVOL_FIXTURES_HPP

#include <cstdint>
#include <map>
#include <memory>

#include "hypvol/cusp_lab.hpp"

namespace hypvol::fixtures {

struct GeometricFixture {
  std::shared_ptr<const Complex> complex;
  EquivariantMap map;
};

// Closed genus-2 surface: the regular right-angled octagon (opposite sides
// identified by hyperbolic translations) triangulated from its center.
GeometricFixture genus2();

struct PuncturedTorusFixture {
  std::shared_ptr<const Complex> complex;
  EquivariantMap ideal_map;    // holonomy of the square punctured torus, ideal cusp image
  EquivariantMap control_map;  // elliptic-commutator representation, finite cusp image
};
PuncturedTorusFixture punctured_torus();

// Flat 3-torus as a Kuhn-triangulated block with wrap pairings through the
// translation generators t1, t2, t3 (48 tetrahedra for the default 2x2x2).
Complex kuhn_torus_3d(int nx = 2, int ny = 2, int nz = 2);

struct Cone4dFixture {
  std::shared_ptr<const Complex> complex;  // single-end cone over the 3-torus
  Representation rep;
  std::vector<ToricTarget> targets;
  EquivariantMap f0;
  double delta = 0.0;
};
// Synthetic 4-d cusp: cone over the 48-tetrahedron 3-torus with an
// H^2-valued degenerate base map.
Cone4dFixture cone4d();

struct CoverPairFixture {
  std::shared_ptr<const Complex> base_complex, cover_complex;
  EquivariantMap base_map, cover_map;
  CoveringData covering;
};
// Degree-2 cover of a quotient-circle cusp in H^2; censuses are exact and
// generically non-integral (elliptic peripheral rotation).
CoverPairFixture cover_pair_2d();
// Degree-2 cover of the 3-torus cusp in H^4 (doubled x-axis block).
CoverPairFixture cover_pair_4d();

// Sphere complex whose equator images wind `turns` times around the north
// image: census and link degree at the north class equal `turns`.
GeometricFixture winding_star(int turns = 2);

// Two-cusp surface: circle cross-sections coned at both ends of an annulus.
GeometricFixture two_end_surface();

// Non-degenerate random compact top simplex.
GeodesicSimplex random_simplex(int m, std::uint64_t seed, double radius = 1.2);

// Symmetric-square homomorphism SL(2,R) -> SO(2,1) in the conventions of the
// hyperboloid model here.
Isometry sl2_to_so21(double a, double b, double c, double d);

// Propagates per-class images through the transport words into a full map.
EquivariantMap assemble_map(std::shared_ptr<const Complex> k, const Representation& rep,
                            const std::map<int, Point>& class_rep_images);

// Future timelike unit fixed vector of an elliptic isometry.
HPoint timelike_fixed_point(const Isometry& g);

}  // namespace hypvol::fixtures

#endif
