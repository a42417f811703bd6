#include "doctest.h"
#include "hypvol/json_io.hpp"

using namespace hypvol;

namespace {

// serialize -> parse -> serialize must be byte-stable
void check_complex_roundtrip(const Complex& k) {
  ojson j1 = complex_to_json(k);
  Complex k2 = complex_from_json(j1);
  ojson j2 = complex_to_json(k2);
  CHECK(j1.dump() == j2.dump());
  CHECK(euler_characteristic(k) == euler_characteristic(k2));
  CHECK(k.num_face_classes() == k2.num_face_classes());
}

void check_map_roundtrip(const EquivariantMap& f) {
  ojson j1 = map_to_json(f);
  MapFile back = map_from_json(j1, f.source);
  ojson j2 = map_to_json(back.map);
  CHECK(j1.dump() == j2.dump());
}

}  // namespace

TEST_CASE("fixtures round-trip through their JSON formats") {
  auto g2 = fixtures::genus2();
  check_complex_roundtrip(*g2.complex);
  check_map_roundtrip(g2.map);

  auto pt = fixtures::punctured_torus();
  check_complex_roundtrip(*pt.complex);
  check_map_roundtrip(pt.ideal_map);
  check_map_roundtrip(pt.control_map);

  auto c2 = fixtures::cover_pair_2d();
  check_complex_roundtrip(*c2.base_complex);
  check_complex_roundtrip(*c2.cover_complex);
  ojson cov1 = covering_to_json(c2.covering);
  CoveringData cov = covering_from_json(cov1);
  CHECK(covering_to_json(cov).dump() == cov1.dump());

  auto ws = fixtures::winding_star(2);
  check_complex_roundtrip(*ws.complex);
}

TEST_CASE("points and simplices round-trip") {
  GeodesicSimplex t = fixtures::random_simplex(4, 123);
  ojson j1 = simplex_to_json(t);
  GeodesicSimplex t2 = simplex_from_json(j1);
  CHECK(simplex_to_json(t2).dump() == j1.dump());

  IdealPoint xi(MinkowskiVector({2.0, 2.0, 0.0}));
  ojson p = point_to_json(Point(xi));
  CHECK(p.at("kind") == "ideal");
  Point back = point_from_json(p);
  CHECK(is_ideal(back));
  CHECK(rep(back)[0] == 1.0);  // canonical representative survives

  CHECK_THROWS_AS(point_from_json(ojson{{"kind", "bogus"}, {"coords", {1, 0, 0}}}), Error);
}

TEST_CASE("cusp experiment files round-trip") {
  auto fx = fixtures::cone4d();
  CuspExperiment e{fx.complex, fx.f0, fx.targets, fx.delta, 99};
  ojson j1 = experiment_to_json(e);
  CuspExperiment e2 = experiment_from_json(j1);
  CHECK(experiment_to_json(e2).dump() == j1.dump());
  CHECK(e2.delta == e.delta);
  CHECK(e2.targets.size() == 1);
}
