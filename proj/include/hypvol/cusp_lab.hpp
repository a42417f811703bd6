#ifndef HYPVOL_CUSP_LAB_HPP
#define HYPVOL_CUSP_LAB_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypvol/census.hpp"
#include "hypvol/volume_report.hpp"

namespace hypvol {

// Totally geodesic H^2 inside H^m: linear span of (base, t1, t2) with an
// orthonormal tangent pair at the base point.
struct PlaneH2 {
  HPoint base;
  MinkowskiVector t1, t2;
};

// Target data for one end: the cusp image eta, and for finite eta the
// stabilized plane it lives on.
struct ToricTarget {
  int end = 0;
  Point eta;
  std::optional<PlaneH2> plane;  // absent iff eta is ideal
};

void validate_toric_target(const ToricTarget& target);
bool point_in_plane(const PlaneH2& plane, const MinkowskiVector& v, double tol = 1e-9);

// Ids of the non-cusp vertices meeting the given end's cone simplices.
std::vector<int> end_section_ids(const Complex& k, int end);

// Assembles the degenerate base map: cusp classes go to eta, end-section
// classes go to the proposed points validated against the end's plane,
// remaining classes are free; all propagated equivariantly through transport
// words. Rejects per-simplex injectivity failures.
EquivariantMap build_f0(std::shared_ptr<const Complex> k, const Representation& rep,
                        const std::vector<ToricTarget>& targets, const VertexImages& proposed);

// Computed stand-in for the stability constant: a quarter of
// d0 = (min pairwise finite image distance within a simplex)/4.
double delta_threshold(const EquivariantMap& f0);

struct CuspExperiment {
  std::shared_ptr<const Complex> complex;
  EquivariantMap f0;
  std::vector<ToricTarget> targets;
  double delta = 0.0;
  std::uint64_t seed = 0;
};

struct LimitPoint {
  int k = 0;
  double radius = 0.0;
  int retries = 0;
  std::vector<CensusEntry> cusp_entries;
  Estimate total;  // alternating census sum, when requested
  bool has_total = false;
};

struct LimitSeries {
  std::vector<LimitPoint> points;
  double fitted_c = 0.0;  // envelope constant: |value| <= C radius + 3 stderr
};

// For each k in the schedule, perturbs the end-section images of f0 inside
// radius delta/k (resampling on degeneracy) and records the cusp censuses.
LimitSeries cusp_limit_experiment(const CuspExperiment& e, const std::vector<int>& schedule,
                                  const CensusConfig& cfg, bool with_totals = false);

// Simplicial covering data: every cover top simplex mapped onto a base top
// simplex through a vertex map.
struct SimplexCoverEntry {
  int cover_simplex = -1;
  int base_simplex = -1;
  std::map<int, int> vmap;  // cover id -> base id
};

struct CoveringData {
  int degree = 1;
  std::vector<SimplexCoverEntry> tops;
};

struct CoveringReport {
  bool covering_valid = false;
  std::vector<std::string> issues;
  struct EndPair {
    int end = -1;
    CensusEntry base, cover;
    bool holds = false;
  };
  std::vector<EndPair> pairs;
  bool relation_holds = false;
  // normalized volumes of both sides (even ambient dimension only)
  bool has_volumes = false;
  double normalized_base = 0.0, normalized_cover = 0.0;
  // documentation of the denominator bound; divisibility is not computed
  std::string denominator_note;
};

// Verifies deg(N' -> N) * W(K, c; F) = W(K', c'; F') per end after checking
// the covering combinatorially (d preimages, star-local bijectivity,
// orientation compatibility).
CoveringReport covering_relation_check(const EquivariantMap& base, const EquivariantMap& cover,
                                       const CoveringData& data, const CensusConfig& cfg);

}  // namespace hypvol

#endif
