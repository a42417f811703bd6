#include "hypvol/volume_report.hpp"

#include <cmath>

#include "hypvol/rng.hpp"

namespace hypvol {

namespace {

int half_dim_sign(int m) { return ((m / 2) % 2 == 0) ? 1 : -1; }

}  // namespace

Estimate rep_volume_simplices(const EquivariantMap& f, const CensusConfig& cfg) {
  const Complex& k = *f.source;
  int m = f.rep.dim();
  if (m % 2 != 0) fail(ErrorCode::odd_dimension, "rep_volume_simplices: even dimension required");

  Estimate total = Estimate::exactly(0.0);
  for (int s = 0; s < static_cast<int>(k.top().size()); ++s) {
    std::vector<Point> verts;
    bool compact = true;
    for (int id : k.top()[s].verts) {
      verts.push_back(f.image_of(id));
      compact = compact && !is_ideal(verts.back());
    }
    GeodesicSimplex image(m, std::move(verts));
    int eps = epsilon_sign(image, k.top()[s].orient);
    if (eps == 0)
      fail(ErrorCode::degenerate_simplex,
           "rep_volume_simplices: degenerate image of top simplex " + std::to_string(s));
    McConfig mc;
    mc.samples = cfg.samples;
    mc.threads = cfg.threads;
    mc.force_mc = cfg.force_mc;
    mc.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(s), 0x766f6cULL);
    Estimate hopf = volume_hopf(image, mc);
    if (compact) {
      // guard the angle-sum route with the independent sampling oracle
      Estimate oracle = volume_mc(image, mc);
      if (std::fabs(hopf.value - oracle.value) >
          5.0 * std::hypot(hopf.stderr_, oracle.stderr_) + 1e-9)
        fail(ErrorCode::validation_failed,
             "rep_volume_simplices: angle-sum volume of simplex " + std::to_string(s) +
                 " disagrees with the sampling oracle");
    }
    total = total + scale(hopf, static_cast<double>(eps));
  }
  return total;
}

Estimate rep_volume_census(const EquivariantMap& f, const CensusConfig& cfg) {
  int m = f.rep.dim();
  if (m % 2 != 0) fail(ErrorCode::odd_dimension, "rep_volume_census: even dimension required");

  Estimate alternating = Estimate::exactly(0.0);
  for (const CensusEntry& e : census_all(f, cfg)) {
    if (!e.ok()) fail(ErrorCode::validation_failed, "rep_volume_census: " + e.status);
    double sign = (e.dim % 2 == 0) ? 1.0 : -1.0;
    alternating = alternating + scale(Estimate{e.value, e.stderr_, 0, e.exact}, sign);
  }
  return scale(alternating, half_dim_sign(m) * sphere_volume(m) / 2.0);
}

IntegralityReport integrality_report(const EquivariantMap& f, const CensusConfig& cfg,
                                     int denominator_hint) {
  int m = f.rep.dim();
  if (m % 2 != 0) fail(ErrorCode::odd_dimension, "integrality_report: even dimension required");
  if (denominator_hint < 1) fail(ErrorCode::bad_input, "integrality_report: bad denominator");

  IntegralityReport rep;
  rep.denominator_hint = denominator_hint;
  if (m == 2) rep.note = "control case (integrality expected only for n >= 2)";

  // zero-volume convention: a map with every image simplex degenerate has
  // volume zero and is trivially integral
  NondegeneracyReport nd = nondegeneracy_check(f);
  if (!nd.all_ok && nd.degenerate.size() == f.source->top().size()) {
    rep.normalized = 0.0;
    rep.nearest_int = 0;
    rep.residual = 0.0;
    rep.verdict = "integral";
    rep.volume = Estimate::exactly(0.0);
    return rep;
  }

  CensusConfig run = cfg;
  for (int attempt = 0;; ++attempt) {
    Estimate vol = rep_volume_census(f, run);
    rep.volume = vol;
    double norm = 2.0 * vol.value / sphere_volume(m);
    double se = 2.0 * vol.stderr_ / sphere_volume(m);
    rep.normalized = norm;
    rep.stderr_ = se;

    double scaled = norm * denominator_hint;
    double scaled_se = se * denominator_hint;
    rep.nearest_int = static_cast<long>(std::llround(norm));
    rep.residual = norm - static_cast<double>(rep.nearest_int);

    bool certified = vol.exact || (std::fabs(scaled - std::llround(scaled)) + 3.0 * scaled_se < 0.5);
    if (!certified && attempt < 2) {
      run.samples *= 4;  // escalate and retry
      continue;
    }
    if (!certified) {
      rep.verdict = "uncertified";
    } else if (std::fabs(rep.residual) <= 3.0 * se + 1e-9) {
      rep.verdict = "integral";
    } else if (denominator_hint > 1 &&
               std::fabs(scaled - std::llround(scaled)) <= 3.0 * scaled_se + 1e-9) {
      rep.verdict = "integral over given denominator";
    } else {
      rep.verdict = "non-integral";
    }
    return rep;
  }
}

GaussBonnetReport gauss_bonnet_check(const EquivariantMap& geometric, const CensusConfig& cfg) {
  const Complex& k = *geometric.source;
  int m = geometric.rep.dim();
  if (m % 2 != 0) fail(ErrorCode::odd_dimension, "gauss_bonnet_check: even dimension required");

  GaussBonnetReport rep;
  rep.entries = census_all(geometric, cfg);
  rep.entries_ok = true;
  bool any_cusp = false;
  for (const CensusEntry& e : rep.entries) {
    const FaceClass& fc = k.face_class(e.face_class);
    if (fc.cusp_point) any_cusp = true;
    double want = fc.cusp_point ? 0.0 : 1.0;
    bool ok = e.ok() && std::fabs(e.value - want) <= 3.0 * e.stderr_ + 1e-9;
    if (!ok) {
      rep.entries_ok = false;
      rep.bad_entries.push_back(e.face_class);
    }
  }
  rep.volume = rep_volume_census(geometric, cfg);
  rep.chi = euler_characteristic(k);
  rep.chi_formula_applicable = !any_cusp && validate(k).closed();
  rep.volume_from_chi = half_dim_sign(m) * sphere_volume(m) / 2.0 * static_cast<double>(rep.chi);
  if (rep.chi_formula_applicable)
    rep.chi_formula_matches = std::fabs(rep.volume.value - rep.volume_from_chi) <=
                              3.0 * rep.volume.stderr_ + 1e-9;
  return rep;
}

}  // namespace hypvol
