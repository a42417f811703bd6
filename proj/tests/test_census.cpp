#include <cmath>

#include "doctest.h"
#include "hypvol/census.hpp"
#include "hypvol/fixtures.hpp"

using namespace hypvol;

namespace {

// Independent 2-d winding oracle: total signed turning of the direction loop
// around the base image, divided by 2 pi.
double winding_oracle(const EquivariantMap& f, int face_class) {
  DevelopedStar dev = develop_star(f, face_class);
  const HPoint& x = std::get<HPoint>(dev.tau_images[0]);
  std::vector<TangentVector> basis = tangent_basis(x);
  auto angle_of = [&](const Point& p) {
    TangentVector d = log_direction(x, p);
    return std::atan2(lorentz_dot(d.v, basis[1].v), lorentz_dot(d.v, basis[0].v));
  };
  // each cell turns from its first non-apex vertex to the second
  double total = 0.0;
  for (const DevelopedCell& cell : dev.cells) {
    std::vector<double> angs;
    for (int p = 0; p < 3; ++p)
      if (p != cell.tau_positions[0]) angs.push_back(angle_of(cell.image.vertices[p]));
    double turn = angs[1] - angs[0];
    while (turn > M_PI) turn -= 2.0 * M_PI;
    while (turn < -M_PI) turn += 2.0 * M_PI;
    int eps = epsilon_sign(cell.image, cell.source_orientation);
    // oriented cells traverse their corner positively
    total += (eps >= 0 ? 1.0 : -1.0) * std::fabs(turn);
  }
  return total / (2.0 * M_PI);
}

}  // namespace

TEST_CASE("genus-2 identity censuses are exactly one with degree one") {
  auto fx = fixtures::genus2();
  CensusConfig cfg;
  cfg.samples = 1000;
  cfg.seed = 11;
  auto entries = census_all(fx.map, cfg);
  CHECK(entries.size() == static_cast<size_t>(fx.complex->num_face_classes()));
  for (const CensusEntry& e : entries) {
    CHECK(e.ok());
    CHECK(e.exact);
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(e.certified);
    if (e.dim < 2) {
      REQUIRE(e.degree.has_value());
      CHECK(*e.degree == 1);
    }
  }
}

TEST_CASE("punctured torus: ideal cusp census is exactly zero") {
  auto pt = fixtures::punctured_torus();
  CensusConfig cfg;
  cfg.seed = 3;
  int cusp = pt.complex->face_class_of({0});
  CensusEntry c = census(pt.ideal_map, cusp, cfg);
  CHECK(c.exact);
  CHECK(c.value == 0.0);

  for (int ci = 0; ci < pt.complex->num_face_classes(); ++ci) {
    if (ci == cusp) continue;
    CensusEntry e = census(pt.ideal_map, ci, cfg);
    CHECK(e.exact);
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-11));
  }
}

TEST_CASE("control map: non-cusp censuses integral, cusp census off the integers") {
  auto pt = fixtures::punctured_torus();
  CensusConfig cfg;
  cfg.seed = 5;
  int cusp = pt.complex->face_class_of({0});
  for (int ci = 0; ci < pt.complex->num_face_classes(); ++ci) {
    CensusEntry e = census(pt.control_map, ci, cfg);
    CHECK(e.exact);
    if (ci == cusp) {
      CHECK(std::fabs(e.value - std::round(e.value)) > 1e-3);
    } else {
      CHECK(std::fabs(e.value - std::round(e.value)) < 1e-10);
      // the turning-number oracle reads vertex classes only
      if (pt.complex->face_class(ci).dim == 0)
        CHECK(e.value == doctest::Approx(winding_oracle(pt.control_map, ci)).epsilon(1e-9));
    }
  }
}

TEST_CASE("winding star: census two, degree two, oracle agrees") {
  auto fx = fixtures::winding_star(2);
  int north = fx.complex->face_class_of({0});
  CensusConfig cfg;
  cfg.seed = 17;
  CensusEntry e = census(fx.map, north, cfg);
  CHECK(e.exact);
  CHECK(e.value == doctest::Approx(2.0).epsilon(1e-11));
  CHECK(link_degree(fx.map, north, 9) == 2);
  CHECK(winding_oracle(fx.map, north) == doctest::Approx(2.0).epsilon(1e-9));

  // reflection negates both
  EquivariantMap reflected = transform_map(fx.map, Isometry::reflection(2, 2));
  CensusEntry r = census(reflected, north, cfg);
  CHECK(r.value == doctest::Approx(-2.0).epsilon(1e-11));
  CHECK(link_degree(reflected, north, 9) == -2);
}

TEST_CASE("reflection negates every genus-2 entry and gives degree -1") {
  auto fx = fixtures::genus2();
  EquivariantMap reflected = transform_map(fx.map, Isometry::reflection(2, 1));
  CensusConfig cfg;
  cfg.seed = 23;
  auto entries = census_all(reflected, cfg);
  for (const CensusEntry& e : entries) {
    CHECK(e.value == doctest::Approx(-1.0).epsilon(1e-10));
    if (e.degree) CHECK(*e.degree == -1);
  }
}

TEST_CASE("perturbed genus-2 maps keep census equal to degree") {
  auto fx = fixtures::genus2();
  CensusConfig cfg;
  cfg.seed = 31;
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    EquivariantMap moved = perturb(fx.map, 0.05, seed);
    auto entries = census_all(moved, cfg);
    for (const CensusEntry& e : entries) {
      CHECK(e.ok());
      CHECK(e.exact);
      CHECK(std::fabs(e.value - std::round(e.value)) < 1e-9);
      if (e.degree) CHECK(static_cast<double>(*e.degree) == doctest::Approx(e.value).epsilon(1e-9));
    }
  }
}

TEST_CASE("census equals degree around an edge of a 3-sphere complex in H^3") {
  // boundary of the 4-simplex carried into H^3 by a generic vertex placement
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
  REQUIRE(validate(*complex).closed());

  // generic placement of the five vertices in H^3; edge stars develop there
  EquivariantMap f{Representation(3, {}), {}, complex};
  RngStream rng(77);
  std::vector<double> c0(4, 0.0);
  c0[0] = 1.0;
  HPoint o{MinkowskiVector(c0)};
  for (int i = 0; i < 5; ++i) {
    TangentVector u = random_unit_tangent(o, rng);
    f.images.at.emplace(i, Point(exp_map(o, u, rng.uniform_range(0.5, 1.1))));
  }
  // reject unlucky degenerate draws
  REQUIRE(nondegeneracy_check(f).all_ok);

  CensusConfig cfg;
  cfg.samples = 200000;
  cfg.seed = 41;
  int edge = complex->face_class_of({0, 1});
  CensusEntry e = census(f, edge, cfg);
  long deg = link_degree(f, edge, 5);
  CHECK(e.ok());
  CHECK(std::fabs(e.value - static_cast<double>(deg)) <= 3.0 * e.stderr_ + 1e-6);
  CHECK(e.certified);
  CHECK(e.rounded() == deg);
}

TEST_CASE("collapsed maps are rejected by the census") {
  // trivial representation with every image equal: all cells degenerate
  auto fx = fixtures::genus2();
  EquivariantMap collapsed{Representation(2, {Isometry::identity(2), Isometry::identity(2),
                                              Isometry::identity(2), Isometry::identity(2)}),
                           {},
                           fx.complex};
  HPoint o{MinkowskiVector({1.0, 0.0, 0.0})};
  for (const VertexRecord& vr : fx.complex->vertices())
    collapsed.images.at.emplace(vr.id, Point(o));
  NondegeneracyReport nd = nondegeneracy_check(collapsed);
  CHECK(!nd.all_ok);
  CHECK(nd.degenerate.size() == fx.complex->top().size());
  CensusConfig cfg;
  cfg.seed = 1;
  CHECK_THROWS_AS(census(collapsed, fx.complex->face_class_of({0}), cfg), Error);
}

TEST_CASE("open stars refuse a plain census but sum with the flag") {
  auto pair = fixtures::cover_pair_2d();
  const Complex& k = *pair.base_complex;
  // a cross-section vertex class has an open star
  int section = k.face_class_of({0});
  CHECK_THROWS_AS(census(pair.base_map, section, CensusConfig{}), Error);
  CensusConfig open;
  open.allow_open_star = true;
  open.seed = 2;
  CensusEntry e = census(pair.base_map, section, open);
  CHECK(e.exact);
}

TEST_CASE("2-d quotient cusp census equals the rotation fraction") {
  auto pair = fixtures::cover_pair_2d();
  int cusp_base = -1;
  for (int ci = 0; ci < pair.base_complex->num_face_classes(); ++ci)
    if (pair.base_complex->face_class(ci).cusp_point) cusp_base = ci;
  REQUIRE(cusp_base >= 0);
  CensusConfig cfg;
  cfg.seed = 7;
  CensusEntry e = census(pair.base_map, cusp_base, cfg);
  CHECK(e.exact);
  CHECK(e.value == doctest::Approx(0.8 / (2.0 * M_PI)).epsilon(1e-11));
}
