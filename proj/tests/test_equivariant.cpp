#include <cmath>

#include "doctest.h"
#include "hypvol/census.hpp"
#include "hypvol/fixtures.hpp"

using namespace hypvol;

TEST_CASE("word evaluation") {
  auto fx = fixtures::genus2();
  const Representation& rep = fx.map.rep;

  Isometry id = rep.evaluate({});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(id.matrix().at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));

  Isometry cancel = rep.evaluate({1, 2, -2, -1});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(cancel.matrix().at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));

  // associativity: same product evaluated as one word
  Isometry left = rep.evaluate({1, 2}).compose(rep.evaluate({3}));
  Isometry right = rep.evaluate({1}).compose(rep.evaluate({2, 3}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(left.matrix().at(i, j) == doctest::Approx(right.matrix().at(i, j)).epsilon(1e-9));

  CHECK_THROWS_AS(rep.evaluate({5}), Error);
}

TEST_CASE("genus-2 holonomy satisfies the octagon relation") {
  auto fx = fixtures::genus2();
  int glued = fx.complex->face_class_of({1});
  Star star = star_incidences(*fx.complex, glued);
  auto cycles = closing_cycle_words(star);
  REQUIRE(!cycles.empty());
  // the cycle around the glued vertex is the surface-group relator; partial
  // products pass through large translations, so expect ~1e-6 float drift
  Isometry rel = fx.map.rep.evaluate(cycles[0]);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst, std::fabs(rel.matrix().at(i, j) - (i == j ? 1.0 : 0.0)));
  CHECK(worst < 1e-5);
  CHECK(cycles[0].size() == 8);
}

TEST_CASE("develop_star on the genus-2 vertex classes") {
  auto fx = fixtures::genus2();
  const Complex& k = *fx.complex;

  int center = k.face_class_of({0});
  DevelopedStar dc = develop_star(fx.map, center);
  CHECK(dc.cells.size() == 8);

  int glued = k.face_class_of({1});
  DevelopedStar dg = develop_star(fx.map, glued);
  CHECK(dg.cells.size() == 16);

  // identity map: every cell is positively oriented and isometric to its source
  for (const DevelopedCell& cell : dg.cells) {
    CHECK(epsilon_sign(cell.image, cell.source_orientation) == 1);
    const TopSimplex& src = k.top()[dg.star.incidences[cell.incidence].simplex];
    for (size_t a = 0; a < src.verts.size(); ++a)
      for (size_t b = a + 1; b < src.verts.size(); ++b) {
        double want = distance(std::get<HPoint>(fx.map.image_of(src.verts[a])),
                               std::get<HPoint>(fx.map.image_of(src.verts[b])));
        double got = distance(std::get<HPoint>(cell.image.vertices[a]),
                              std::get<HPoint>(cell.image.vertices[b]));
        CHECK(got == doctest::Approx(want).epsilon(1e-9));
      }
  }
}

TEST_CASE("develop_star rejects images that break the gluing") {
  auto fx = fixtures::genus2();
  EquivariantMap broken = fx.map;
  // move one lift of the glued class without moving its partners
  HPoint old = std::get<HPoint>(broken.image_of(3));
  broken.images.at.insert_or_assign(3, Point(Isometry::boost(2, 1, 0.2).apply(old)));
  int glued = fx.complex->face_class_of({1});
  CHECK_THROWS_AS(develop_star(broken, glued), Error);
}

TEST_CASE("epsilon sign flips and degenerates") {
  auto fx = fixtures::winding_star(2);
  const Complex& k = *fx.complex;
  std::vector<Point> verts;
  for (int id : k.top()[0].verts) verts.push_back(fx.map.image_of(id));
  GeodesicSimplex image(2, verts);
  int e = epsilon_sign(image, 1);
  CHECK(e == 1);
  std::swap(verts[0], verts[1]);
  CHECK(epsilon_sign(GeodesicSimplex(2, verts), 1) == -e);

  HPoint p{MinkowskiVector({1.0, 0.0, 0.0})};  // on the boost axis: orbit is a geodesic
  GeodesicSimplex collinear(
      2, {Point(p), Point(Isometry::boost(2, 1, 0.4).apply(p)),
          Point(Isometry::boost(2, 1, 0.8).apply(p))});
  CHECK(epsilon_sign(collinear, 1) == 0);
}

TEST_CASE("nondegeneracy check flags planar images") {
  auto fx = fixtures::cone4d();
  NondegeneracyReport rep = nondegeneracy_check(fx.f0);
  CHECK(!rep.all_ok);
  CHECK(rep.degenerate.size() == fx.complex->top().size());  // every cone simplex collapses

  // a random perturbation restores nondegeneracy with high probability
  EquivariantMap moved = perturb(fx.f0, 1e-3, 99);
  CHECK(nondegeneracy_check(moved).all_ok);
}

TEST_CASE("perturb stays inside the ball and reproduces") {
  auto fx = fixtures::genus2();
  double radius = 0.05;
  EquivariantMap a = perturb(fx.map, radius, 4242);
  EquivariantMap b = perturb(fx.map, radius, 4242);
  EquivariantMap c = perturb(fx.map, radius, 4243);
  bool differs = false;
  for (const VertexRecord& vr : fx.complex->vertices()) {
    const HPoint& orig = std::get<HPoint>(fx.map.image_of(vr.id));
    const HPoint& moved = std::get<HPoint>(a.image_of(vr.id));
    CHECK(distance(orig, moved) < radius + 1e-9);
    CHECK(image_gap(a.image_of(vr.id), b.image_of(vr.id)) == 0.0);
    if (image_gap(a.image_of(vr.id), c.image_of(vr.id)) > 1e-12) differs = true;
  }
  CHECK(differs);
  CHECK(map_check(a).ok());  // transport consistency preserved

  // ideal images never move
  auto pt = fixtures::punctured_torus();
  EquivariantMap nudged = perturb(pt.ideal_map, 0.3, 7, pt.complex->vertex_class_reps());
  for (const VertexRecord& vr : pt.complex->vertices())
    CHECK(image_gap(nudged.image_of(vr.id), pt.ideal_map.image_of(vr.id)) == 0.0);
}

TEST_CASE("developed star transported by an isometry has identical angle data") {
  auto fx = fixtures::genus2();
  Isometry g = Isometry::rotation(2, 1, 2, 0.77).compose(Isometry::boost(2, 2, 0.5));
  EquivariantMap gf = transform_map(fx.map, g);
  CHECK(map_check(gf).ok());
  int glued = fx.complex->face_class_of({1});
  DevelopedStar a = develop_star(fx.map, glued);
  DevelopedStar b = develop_star(gf, glued);
  McConfig cfg{1000, 3, false, 1};
  for (size_t i = 0; i < a.cells.size(); ++i) {
    AngleEstimate wa = interior_angle(a.cells[i].image, Face(a.cells[i].tau_positions), cfg);
    AngleEstimate wb = interior_angle(b.cells[i].image, Face(b.cells[i].tau_positions), cfg);
    CHECK(wa.value == doctest::Approx(wb.value).epsilon(1e-9));
    CHECK(epsilon_sign(a.cells[i].image, a.cells[i].source_orientation) ==
          epsilon_sign(b.cells[i].image, b.cells[i].source_orientation));
  }
}

TEST_CASE("re-rooted development yields the same sign-angle multiset") {
  auto fx = fixtures::genus2();
  int glued = fx.complex->face_class_of({1});
  McConfig cfg{1000, 5, false, 1};
  auto signature = [&](int root) {
    DevelopedStar dev = develop_star(fx.map, glued, root);
    std::vector<std::pair<int, double>> sig;
    for (const DevelopedCell& cell : dev.cells)
      sig.push_back({epsilon_sign(cell.image, cell.source_orientation),
                     interior_angle(cell.image, Face(cell.tau_positions), cfg).value});
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  auto s0 = signature(0);
  auto s5 = signature(5);
  REQUIRE(s0.size() == s5.size());
  for (size_t i = 0; i < s0.size(); ++i) {
    CHECK(s0[i].first == s5[i].first);
    CHECK(s0[i].second == doctest::Approx(s5[i].second).epsilon(1e-8));
  }
}

TEST_CASE("map_check flags broken transports and honors peripheral words") {
  auto pt = fixtures::punctured_torus();
  CHECK(map_check(pt.control_map).ok());

  // the cusp cycle word fixes the control eta
  int cusp = pt.complex->face_class_of({0});
  Star star = star_incidences(*pt.complex, cusp);
  auto cycles = closing_cycle_words(star);
  REQUIRE(!cycles.empty());
  CHECK(map_check(pt.control_map, {{0, cycles[0]}}).ok());

  EquivariantMap broken = pt.control_map;
  broken.images.at.insert_or_assign(
      2, Point(Isometry::boost(2, 1, 0.3).apply(std::get<HPoint>(broken.image_of(2)))));
  CHECK(!map_check(broken).ok());
}
