#ifndef HYPVOL_VOLUME_REPORT_HPP
#define HYPVOL_VOLUME_REPORT_HPP

#include <string>
#include <vector>

#include "hypvol/census.hpp"

namespace hypvol {

// Vol(rho) as the orientation-signed sum of image simplex volumes (angle-sum
// route per simplex). Even ambient dimension only.
Estimate rep_volume_simplices(const EquivariantMap& f, const CensusConfig& cfg);

// Vol(rho) from the angle census:
//   Vol = (-1)^n (Vol(S^2n)/2) sum_tau (-1)^dim W(K, tau; f).
Estimate rep_volume_census(const EquivariantMap& f, const CensusConfig& cfg);

struct IntegralityReport {
  double normalized = 0.0;  // 2 Vol(rho) / Vol(S^m)
  double stderr_ = 0.0;
  long nearest_int = 0;
  double residual = 0.0;
  std::string verdict;  // integral | integral over given denominator |
                        // non-integral | uncertified
  std::string note;     // control labelling for m = 2
  int denominator_hint = 1;
  Estimate volume;
};

// Normalized-volume verdict with 3-sigma certification and automatic budget
// escalation (x4 samples, at most twice) when uncertified.
IntegralityReport integrality_report(const EquivariantMap& f, const CensusConfig& cfg,
                                     int denominator_hint = 1);

struct GaussBonnetReport {
  bool entries_ok = false;          // non-cusp entries 1, cusp entries 0
  std::vector<int> bad_entries;     // face classes violating the above
  std::vector<CensusEntry> entries;
  Estimate volume;                  // census route
  long chi = 0;
  double volume_from_chi = 0.0;     // (-1)^n (Vol(S^m)/2) chi, closed complexes
  bool chi_formula_applicable = false;
  bool chi_formula_matches = false;
};

// Runs the census under the supplied geometric (identity) map and verifies
// the Gauss-Bonnet bookkeeping.
GaussBonnetReport gauss_bonnet_check(const EquivariantMap& geometric, const CensusConfig& cfg);

}  // namespace hypvol

#endif
