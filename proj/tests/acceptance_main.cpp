// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypvol/census.hpp"
#include "hypvol/cusp_lab.hpp"
#include "hypvol/fixtures.hpp"
#include "hypvol/json_io.hpp"
#include "hypvol/volume_report.hpp"

using namespace hypvol;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, double seconds,
            const std::string& detail = "") {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what << " ("
            << static_cast<int>(seconds * 10) / 10.0 << " s)";
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!pass) ++failures;
}

template <typename F>
void run(int criterion, const std::string& what, F&& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(criterion, what, pass, secs, detail);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::string workdir = "acceptance_tmp";
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc) cli = argv[++i];
    if (a == "--workdir" && i + 1 < argc) workdir = argv[++i];
  }

  // 1. Hopf identity, m = 2, exact: volume_hopf == area_defect to 1e-9
  run(1, "Hopf identity in H^2 (exact, 100 triangles)", [&](std::string& detail) {
    McConfig cfg{1000, 101, false, 1};
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      GeodesicSimplex t = fixtures::random_simplex(2, 1000 + trial);
      Estimate v = volume_hopf(t, cfg);
      worst = std::max(worst, std::fabs(v.value - area_defect(t)));
    }
    detail = "max |hopf - defect| = " + format_double(worst);
    return worst < 1e-9;
  });

  // 2. Hopf identity, m = 4, Monte Carlo against the sampling oracle
  run(2, "Hopf identity in H^4 (25 simplices, 3 sigma, >=24 pass)", [&](std::string& detail) {
    int ok = 0;
    for (int trial = 0; trial < 25; ++trial) {
      GeodesicSimplex t = fixtures::random_simplex(4, 2000 + trial, 0.9);
      McConfig cfg{200000, derive_seed(22, trial), false, 1};
      Estimate hopf = volume_hopf(t, cfg);
      Estimate mc = volume_mc(t, cfg);
      if (std::fabs(hopf.value - mc.value) <= 3.0 * std::hypot(hopf.stderr_, mc.stderr_)) ++ok;
    }
    detail = std::to_string(ok) + "/25 within 3 sigma";
    return ok >= 24;
  });

  // 3. Gram-Euler vanishing in odd dimension
  run(3, "generalized angle sum vanishes in H^3 (50 simplices, >=48 pass)",
      [&](std::string& detail) {
        int ok = 0;
        for (int trial = 0; trial < 50; ++trial) {
          GeodesicSimplex t = fixtures::random_simplex(3, 3000 + trial);
          McConfig cfg{200000, derive_seed(33, trial), false, 1};
          Estimate w = generalized_angle_sum(t, cfg);
          if (std::fabs(w.value) <= 3.0 * w.stderr_) ++ok;
        }
        detail = std::to_string(ok) + "/50 within 3 sigma";
        return ok >= 48;
      });

  // 4. Gauss-Bonnet on the closed genus-2 fixture
  run(4, "Gauss-Bonnet on genus 2 (censuses 1, volume 4 pi, normalized 2)",
      [&](std::string& detail) {
        auto fx = fixtures::genus2();
        CensusConfig cfg;
        cfg.seed = 44;
        GaussBonnetReport rep = gauss_bonnet_check(fx.map, cfg);
        bool censuses_exactly_one = rep.entries_ok;
        for (const CensusEntry& e : rep.entries)
          censuses_exactly_one =
              censuses_exactly_one && e.exact && std::fabs(e.value - 1.0) < 1e-9;
        double vol_gap = std::fabs(rep.volume.value - 4.0 * M_PI);
        IntegralityReport ir = integrality_report(fx.map, cfg);
        double norm_gap = std::fabs(ir.normalized - 2.0);
        detail = "|vol - 4pi| = " + format_double(vol_gap) +
                 ", |normalized - 2| = " + format_double(norm_gap);
        return censuses_exactly_one && rep.chi == -2 && vol_gap < 1e-9 && norm_gap < 1e-9 &&
               ir.verdict == "integral";
      });

  // 5. census = link degree under perturbation, winding-2 star, reflection
  run(5, "census equals link degree (20 perturbations + winding star + reflection)",
      [&](std::string& detail) {
        auto fx = fixtures::genus2();
        CensusConfig cfg;
        cfg.seed = 55;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
          EquivariantMap moved = perturb(fx.map, 0.05, seed);
          for (const CensusEntry& e : census_all(moved, cfg)) {
            if (!e.ok() || !e.exact) return false;
            if (std::fabs(e.value - std::round(e.value)) > 1e-9) return false;
            if (e.degree && e.rounded() != *e.degree) return false;
          }
        }
        auto star = fixtures::winding_star(2);
        int north = star.complex->face_class_of({0});
        CensusEntry w = census(star.map, north, cfg);
        long wdeg = link_degree(star.map, north, 5);
        if (!(std::fabs(w.value - 2.0) < 1e-9 && wdeg == 2)) {
          detail = "winding star";
          return false;
        }
        EquivariantMap reflected = transform_map(fx.map, Isometry::reflection(2, 1));
        for (const CensusEntry& e : census_all(reflected, cfg)) {
          if (std::fabs(e.value + 1.0) > 1e-9) return false;
          if (e.degree && *e.degree != -1) return false;
        }
        detail = "all integral and matched";
        return true;
      });

  // 6. cusped 2-d control: exact 2 pi volume, zero cusp census, and one
  //    certified non-integral normalized volume
  run(6, "punctured torus: 2 pi volume, zero cusp census, non-integral control",
      [&](std::string& detail) {
        auto pt = fixtures::punctured_torus();
        CensusConfig cfg;
        cfg.seed = 66;
        Estimate vol = rep_volume_census(pt.ideal_map, cfg);
        int cusp = pt.complex->face_class_of({0});
        CensusEntry c = census(pt.ideal_map, cusp, cfg);
        IntegralityReport control = integrality_report(pt.control_map, cfg);
        double residual_distance = std::fabs(control.residual);
        detail = "volume gap " + format_double(std::fabs(vol.value - 2.0 * M_PI)) +
                 ", control residual " + format_double(control.residual);
        return std::fabs(vol.value - 2.0 * M_PI) < 1e-9 && c.exact && c.value == 0.0 &&
               control.verdict == "non-integral" && residual_distance > 1e-3;
      });

  // 7. toric-cusp limit on the synthetic 4-d cone end
  run(7, "toric cusp limit (|census| < 0.02 at k=16, k-invariant total)",
      [&](std::string& detail) {
        auto fx = fixtures::cone4d();
        CuspExperiment exp{fx.complex, fx.f0, fx.targets, fx.delta, 777};
        CensusConfig cfg;
        cfg.samples = 200000;
        cfg.seed = 77;
        cfg.allow_open_star = true;
        cfg.attach_degrees = false;
        LimitSeries series = cusp_limit_experiment(exp, {1, 2, 4, 8, 16}, cfg, true);
        const LimitPoint& last = series.points.back();
        double end_value = std::fabs(last.cusp_entries[0].value);
        bool small_and_certified = end_value + 3.0 * last.cusp_entries[0].stderr_ < 0.02;
        bool invariant = true;
        for (size_t i = 0; i < series.points.size(); ++i)
          for (size_t j = i + 1; j < series.points.size(); ++j) {
            const Estimate& a = series.points[i].total;
            const Estimate& b = series.points[j].total;
            if (std::fabs(a.value - b.value) > 3.0 * std::hypot(a.stderr_, b.stderr_) + 1e-9)
              invariant = false;
          }
        detail = "|census(16)| = " + format_double(end_value) +
                 ", fitted C = " + format_double(series.fitted_c);
        return small_and_certified && invariant;
      });

  // 8. covering relation on the bundled 2-fold pairs plus the identity case
  run(8, "covering relation (2-fold pairs and the identity covering)", [&](std::string& detail) {
    CensusConfig cfg;
    cfg.seed = 88;
    cfg.allow_open_star = true;
    auto p2 = fixtures::cover_pair_2d();
    CoveringReport r2 = covering_relation_check(p2.base_map, p2.cover_map, p2.covering, cfg);
    if (!(r2.covering_valid && r2.relation_holds)) {
      detail = "2-d pair";
      return false;
    }
    double gap2 = std::fabs(2.0 * r2.pairs[0].base.value - r2.pairs[0].cover.value);
    CoveringData identity;
    identity.degree = 1;
    for (int s = 0; s < static_cast<int>(p2.base_complex->top().size()); ++s) {
      SimplexCoverEntry e;
      e.cover_simplex = s;
      e.base_simplex = s;
      for (int id : p2.base_complex->top()[s].verts) e.vmap[id] = id;
      identity.tops.push_back(e);
    }
    CoveringReport rid = covering_relation_check(p2.base_map, p2.base_map, identity, cfg);
    if (!(rid.covering_valid && rid.relation_holds &&
          rid.pairs[0].base.value == rid.pairs[0].cover.value)) {
      detail = "identity covering";
      return false;
    }
    CensusConfig cfg4;
    cfg4.samples = 50000;
    cfg4.seed = 89;
    cfg4.allow_open_star = true;
    auto p4 = fixtures::cover_pair_4d();
    CoveringReport r4 = covering_relation_check(p4.base_map, p4.cover_map, p4.covering, cfg4);
    detail = "2-d gap " + format_double(gap2);
    return r4.covering_valid && r4.relation_holds;
  });

  // 9. two-route volume identity on every fixture and its perturbations
  run(9, "two-route volume identity on every fixture (10 perturbations each)",
      [&](std::string& detail) {
        struct Case {
          EquivariantMap map;
          long samples;
          double radius;
        };
        std::vector<Case> cases;
        auto g2 = fixtures::genus2();
        cases.push_back({g2.map, 1000, 0.05});
        auto pt = fixtures::punctured_torus();
        cases.push_back({pt.ideal_map, 1000, 0.05});
        cases.push_back({pt.control_map, 1000, 0.05});
        auto c2 = fixtures::cover_pair_2d();
        cases.push_back({c2.base_map, 1000, 0.05});
        cases.push_back({c2.cover_map, 1000, 0.05});
        auto c4 = fixtures::cover_pair_4d();
        cases.push_back({c4.base_map, 100000, 0.08});
        int checked = 0;
        for (size_t ci = 0; ci < cases.size(); ++ci) {
          for (std::uint64_t seed = 0; seed <= 10; ++seed) {
            EquivariantMap f =
                seed == 0 ? cases[ci].map : perturb(cases[ci].map, cases[ci].radius, seed);
            CensusConfig cfg;
            cfg.samples = cases[ci].samples;
            cfg.seed = derive_seed(99, ci, seed);
            cfg.allow_open_star = true;
            cfg.attach_degrees = false;
            Estimate a = rep_volume_simplices(f, cfg);
            Estimate b = rep_volume_census(f, cfg);
            if (!agrees_3sigma(a, b)) {
              detail = "case " + std::to_string(ci) + " seed " + std::to_string(seed) +
                       ": " + format_double(a.value) + " vs " + format_double(b.value);
              return false;
            }
            ++checked;
          }
        }
        detail = std::to_string(checked) + " map evaluations agreed";
        return true;
      });

  // 10. determinism of the command line at fixed seeds
  run(10, "CLI determinism (byte-identical CSV under one seed)", [&](std::string& detail) {
    if (cli.empty()) {
      detail = "no --cli path given";
      return false;
    }
    std::string w = workdir;
    std::string mkdir = "mkdir -p " + w;
    if (std::system(mkdir.c_str()) != 0) return false;
    std::string emit = cli + " fixtures emit genus2 --out " + w + " > /dev/null";
    if (std::system(emit.c_str()) != 0) return false;
    std::string base = cli + " census --complex " + w + "/genus2.complex.json --map " + w +
                       "/genus2.map.json --seed 42 --csv ";
    if (std::system((base + w + "/census_a.csv > /dev/null").c_str()) != 0) return false;
    if (std::system((base + w + "/census_b.csv > /dev/null").c_str()) != 0) return false;
    bool same_census = slurp(w + "/census_a.csv") == slurp(w + "/census_b.csv");

    std::string emit4 = cli + " fixtures emit random-simplex --dim 4 --seed 9 --out " + w + " > /dev/null";
    if (std::system(emit4.c_str()) != 0) return false;
    std::string gram = cli + " simplex gram-euler --in " + w +
                       "/random_simplex.json --samples 20000 --seed 12 > ";
    if (std::system((gram + w + "/gram_a.csv").c_str()) != 0) return false;
    if (std::system((gram + w + "/gram_b.csv").c_str()) != 0) return false;
    bool same_gram = slurp(w + "/gram_a.csv") == slurp(w + "/gram_b.csv");
    bool nonempty = !slurp(w + "/census_a.csv").empty() && !slurp(w + "/gram_a.csv").empty();
    detail = same_census && same_gram ? "census and gram-euler runs identical" : "byte mismatch";
    return same_census && same_gram && nonempty;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
