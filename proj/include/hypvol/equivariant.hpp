#ifndef HYPVOL_EQUIVARIANT_HPP
#define HYPVOL_EQUIVARIANT_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hypvol/complex.hpp"
#include "hypvol/simplex_angles.hpp"

namespace hypvol {

// Holonomy-style representation as generator matrices. Generators must be
// orientation-preserving (the sign bookkeeping of the census depends on it);
// group relations are not verified here, only star-closure consistency where
// the development needs it.
class Representation {
 public:
  Representation(int m, std::vector<Isometry> generators);

  int dim() const { return m_; }
  int num_generators() const { return static_cast<int>(generators_.size()); }
  const Isometry& generator(int i) const { return generators_.at(i); }

  // Ordered product over signed 1-based generator indices.
  Isometry evaluate(const std::vector<int>& word) const;

 private:
  int m_;
  std::vector<Isometry> generators_;
};

struct VertexImages {
  std::map<int, Point> at;
};

// Piecewise-affine equivariant map: where each vertex lift goes. Non-cusp
// vertices carry finite images; cusp vertices may carry ideal ones.
struct EquivariantMap {
  Representation rep;
  VertexImages images;
  std::shared_ptr<const Complex> source;

  const Point& image_of(int vertex_id) const;
  void check_kinds() const;  // finite images on non-cusp vertices
};

struct DevelopedCell {
  GeodesicSimplex image;           // image of the incidence's lift, tuple order
  int incidence = -1;              // index into star.incidences
  int source_orientation = 1;
  std::vector<int> tau_positions;  // reference order, as in the Star
};

struct DevelopedStar {
  Star star;
  std::vector<Point> tau_images;  // images of the reference face vertices
  std::vector<DevelopedCell> cells;
};

constexpr double kTolEquivariance = 1e-6;

// Sup-norm gap between canonical representatives (1e30 across kinds).
double image_gap(const Point& a, const Point& b);

// Develops all lifts around a face class into one sheet and verifies image
// consistency across every gluing (including the closing words).
DevelopedStar develop_star(const EquivariantMap& f, int face_class, int root_instance = 0);

// Orientation sign of an image simplex against the source orientation:
// sign(det of image representatives) * source sign; 0 iff degenerate.
int epsilon_sign(const GeodesicSimplex& image, int source_orientation);

struct NondegeneracyReport {
  bool all_ok = true;
  std::vector<int> degenerate;  // top simplex indices
  std::vector<double> ratios;   // singular ratios, one per top simplex
};

NondegeneracyReport nondegeneracy_check(const EquivariantMap& f);

// Replaces the image of each selected vertex class with a random point of the
// metric ball around it (uniform radius times uniform direction) and
// re-propagates the class members through their transport words. Ideal images
// are never perturbed. An empty selection means every class without cusp
// vertices.
EquivariantMap perturb(const EquivariantMap& f, double radius, std::uint64_t seed,
                       const std::vector<int>& class_reps = {});

// Post-composition g . f (generators conjugated by g).
EquivariantMap transform_map(const EquivariantMap& f, const Isometry& g);

struct MapCheckReport {
  NondegeneracyReport nondeg;
  std::vector<std::string> issues;

  bool ok() const { return nondeg.all_ok && issues.empty(); }
};

// Nondegeneracy + image consistency along vertex transports + optional
// peripheral fixed-point checks (end index, word).
MapCheckReport map_check(const EquivariantMap& f,
                         const std::vector<std::pair<int, std::vector<int>>>& peripheral = {});

}  // namespace hypvol

#endif
