#ifndef HYPVOL_CENSUS_HPP
#define HYPVOL_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hypvol/equivariant.hpp"

namespace hypvol {

struct CensusConfig {
  long samples = 200000;
  std::uint64_t seed = 0;
  int threads = 1;
  bool force_mc = false;
  // Sum over the found incidences even when the star has boundary (needed for
  // faces of a cone end's cross-section; the alternating-sum identity still
  // telescopes over such complexes).
  bool allow_open_star = false;
  // Degenerate image cells contribute zero instead of failing (limit
  // experiments around a degenerate base map).
  bool allow_degenerate_cells = false;
  bool attach_degrees = true;
  std::uint64_t degree_seed = 1;
};

struct CensusEntry {
  int face_class = -1;
  int dim = -1;
  double value = 0.0;
  double stderr_ = 0.0;
  bool exact = false;
  bool certified = false;  // the 3-sigma interval pins a unique integer
  std::optional<long> degree;
  std::string status;  // empty on success; error text when the entry failed

  bool ok() const { return status.empty() || status == "uncertified"; }
  long rounded() const;  // round half away from zero
};

// W(K, tau; f): orientation-signed sum of image interior angles over the
// developed star of the face class.
CensusEntry census(const EquivariantMap& f, int face_class, const CensusConfig& cfg);

// Degree of the induced map from the boundary of the star to the unit tangent
// sphere at the image basepoint: signed count of the spherical simplices
// containing a generic sampled direction.
long link_degree(const EquivariantMap& f, int face_class, std::uint64_t direction_seed);

// Census over every face class (cusp classes included); per-entry failures
// are recorded in `status` rather than thrown. Degrees are attached at
// non-cusp classes with verified sphere links.
std::vector<CensusEntry> census_all(const EquivariantMap& f, const CensusConfig& cfg);

}  // namespace hypvol

#endif
