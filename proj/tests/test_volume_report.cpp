#include <cmath>

#include "doctest.h"
#include "hypvol/fixtures.hpp"
#include "hypvol/volume_report.hpp"

using namespace hypvol;

TEST_CASE("genus-2 volume both ways is 4 pi, normalized 2") {
  auto fx = fixtures::genus2();
  CensusConfig cfg;
  cfg.seed = 1;
  Estimate by_simplices = rep_volume_simplices(fx.map, cfg);
  Estimate by_census = rep_volume_census(fx.map, cfg);
  CHECK(by_simplices.exact);
  CHECK(by_census.exact);
  CHECK(by_simplices.value == doctest::Approx(4.0 * M_PI).epsilon(1e-10));
  CHECK(by_census.value == doctest::Approx(4.0 * M_PI).epsilon(1e-10));

  IntegralityReport rep = integrality_report(fx.map, cfg);
  CHECK(rep.verdict == "integral");
  CHECK(rep.nearest_int == 2);  // = -chi
  CHECK(std::fabs(rep.residual) < 1e-10);
  CHECK(rep.note.find("control") != std::string::npos);  // n = 1 labelling
}

TEST_CASE("gauss-bonnet bookkeeping on the closed surface") {
  auto fx = fixtures::genus2();
  CensusConfig cfg;
  cfg.seed = 2;
  GaussBonnetReport rep = gauss_bonnet_check(fx.map, cfg);
  CHECK(rep.entries_ok);
  CHECK(rep.chi == -2);
  CHECK(rep.chi_formula_applicable);
  CHECK(rep.chi_formula_matches);
  CHECK(rep.volume.value == doctest::Approx(4.0 * M_PI).epsilon(1e-10));
  CHECK(rep.volume_from_chi == doctest::Approx(4.0 * M_PI).epsilon(1e-12));
}

TEST_CASE("cusped torus: volume 2 pi via the census identity") {
  auto pt = fixtures::punctured_torus();
  CensusConfig cfg;
  cfg.seed = 3;
  Estimate vol = rep_volume_census(pt.ideal_map, cfg);
  CHECK(vol.exact);
  CHECK(vol.value == doctest::Approx(2.0 * M_PI).epsilon(1e-10));

  GaussBonnetReport rep = gauss_bonnet_check(pt.ideal_map, cfg);
  CHECK(rep.entries_ok);                  // cusp entry 0, others 1
  CHECK(!rep.chi_formula_applicable);     // cusped: census identity instead
  CHECK(rep.volume.value == doctest::Approx(2.0 * M_PI).epsilon(1e-10));

  // the simplexwise route handles the ideal triangles exactly as well
  Estimate by_simplices = rep_volume_simplices(pt.ideal_map, cfg);
  CHECK(by_simplices.value == doctest::Approx(2.0 * M_PI).epsilon(1e-10));
}

TEST_CASE("finite-cusp control map has a certified non-integral volume") {
  auto pt = fixtures::punctured_torus();
  CensusConfig cfg;
  cfg.seed = 4;
  IntegralityReport rep = integrality_report(pt.control_map, cfg);
  CHECK(rep.verdict == "non-integral");
  CHECK(std::fabs(rep.residual) > 1e-3);
  CHECK(rep.volume.exact);
}

TEST_CASE("reflection negates the normalized volume") {
  auto fx = fixtures::genus2();
  CensusConfig cfg;
  cfg.seed = 5;
  IntegralityReport plain = integrality_report(fx.map, cfg);
  EquivariantMap reflected = transform_map(fx.map, Isometry::reflection(2, 2));
  IntegralityReport flipped = integrality_report(reflected, cfg);
  CHECK(flipped.normalized == doctest::Approx(-plain.normalized).epsilon(1e-10));
}

TEST_CASE("volume is invariant under seeded perturbations of the closed fixture") {
  auto fx = fixtures::genus2();
  CensusConfig cfg;
  cfg.seed = 6;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    EquivariantMap moved = perturb(fx.map, 0.05, seed);
    IntegralityReport rep = integrality_report(moved, cfg);
    CHECK(rep.verdict == "integral");
    CHECK(rep.nearest_int == 2);
  }
}

TEST_CASE("two-route agreement on perturbed maps") {
  auto fx = fixtures::genus2();
  CensusConfig cfg;
  cfg.seed = 7;
  for (std::uint64_t seed : {11ull, 12ull}) {
    EquivariantMap moved = perturb(fx.map, 0.05, seed);
    Estimate a = rep_volume_simplices(moved, cfg);
    Estimate b = rep_volume_census(moved, cfg);
    CHECK(agrees_3sigma(a, b));
  }
}

TEST_CASE("zero-volume convention: fully degenerate maps are integral zero") {
  auto fx = fixtures::genus2();
  // squash everything onto a geodesic line through the origin
  EquivariantMap flat{Representation(2, {Isometry::boost(2, 1, 0.31), Isometry::boost(2, 1, -0.47),
                                         Isometry::boost(2, 1, 0.11), Isometry::boost(2, 1, 0.73)}),
                      {},
                      fx.complex};
  std::vector<double> c = {1.0, 0.0, 0.0};
  HPoint o{MinkowskiVector(c)};
  for (const VertexRecord& vr : fx.complex->vertices()) {
    const VertexTransport& tr = fx.complex->vertex_transport(vr.id);
    flat.images.at.insert_or_assign(
        vr.id, Point(flat.rep.evaluate(tr.word).apply(Isometry::boost(2, 1, 0.1 * tr.rep_id).apply(o))));
  }
  CensusConfig cfg;
  cfg.seed = 8;
  CHECK_THROWS_AS(rep_volume_simplices(flat, cfg), Error);
  IntegralityReport rep = integrality_report(flat, cfg);
  CHECK(rep.verdict == "integral");
  CHECK(rep.normalized == 0.0);
}

TEST_CASE("odd ambient dimension is rejected") {
  std::vector<TopSimplex> tops;
  for (int drop = 0; drop <= 4; ++drop) {
    TopSimplex t;
    for (int v = 0; v <= 4; ++v)
      if (v != drop) t.verts.push_back(v);
    t.orient = (drop % 2 == 0) ? 1 : -1;
    tops.push_back(t);
  }
  std::vector<VertexRecord> verts;
  for (int i = 0; i < 5; ++i) verts.push_back({i, VertexKind::interior, -1});
  auto complex = std::make_shared<const Complex>(3, 0, verts, tops, std::vector<FacePairing>{});
  EquivariantMap f{Representation(3, {}), {}, complex};
  RngStream rng(9);
  std::vector<double> c0(4, 0.0);
  c0[0] = 1.0;
  HPoint o{MinkowskiVector(c0)};
  for (int i = 0; i < 5; ++i)
    f.images.at.emplace(i, Point(exp_map(o, random_unit_tangent(o, rng), 0.6 + 0.1 * i)));
  CensusConfig cfg;
  CHECK_THROWS_AS(rep_volume_simplices(f, cfg), Error);
  CHECK_THROWS_AS(rep_volume_census(f, cfg), Error);
  CHECK_THROWS_AS(integrality_report(f, cfg), Error);
}
