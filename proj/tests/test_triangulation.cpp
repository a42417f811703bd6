#include <set>

#include "doctest.h"
#include "hypvol/complex.hpp"

using namespace hypvol;

namespace {

std::vector<VertexRecord> interior_vertices(std::initializer_list<int> ids) {
  std::vector<VertexRecord> v;
  for (int id : ids) v.push_back({id, VertexKind::interior, -1});
  return v;
}

// Boundary of the tetrahedron: 4 triangles glued by shared ids.
Complex tetrahedron_boundary() {
  std::vector<TopSimplex> tops = {
      {{1, 2, 3}, 1}, {{0, 3, 2}, 1}, {{0, 1, 3}, 1}, {{0, 2, 1}, 1}};
  return Complex(2, 0, interior_vertices({0, 1, 2, 3}), tops, {});
}

// Boundary of the 4-simplex: 5 tetrahedra, closed 3-pseudomanifold.
Complex simplex4_boundary() {
  std::vector<TopSimplex> tops;
  for (int drop = 0; drop <= 4; ++drop) {
    TopSimplex t;
    for (int v = 0; v <= 4; ++v)
      if (v != drop) t.verts.push_back(v);
    t.orient = (drop % 2 == 0) ? 1 : -1;
    tops.push_back(t);
  }
  return Complex(3, 0, interior_vertices({0, 1, 2, 3, 4}), tops, {});
}

// Plain triangulated circle with n edges.
Complex circle(int n) {
  std::vector<VertexRecord> verts;
  std::vector<TopSimplex> tops;
  for (int i = 0; i < n; ++i) {
    verts.push_back({i, VertexKind::interior, -1});
    tops.push_back({{i, (i + 1) % n}, 1});
  }
  return Complex(1, 0, verts, tops, {});
}

// Circle as one edge with its endpoints glued through generator 1.
Complex circle_with_word() {
  std::vector<TopSimplex> tops = {{{0, 1}, 1}};
  FacePairing p;
  p.a = {0, 0};  // facet {1}
  p.b = {0, 1};  // facet {0}
  p.map = {0};   // pos(1) = g . pos(0)
  p.word = {1};
  return Complex(1, 0, interior_vertices({0, 1}), tops, {p});
}

// Once-punctured torus as two triangles on an ideal square, sides glued by
// the two generators. All four vertices form the single cusp class.
Complex punctured_torus_complex() {
  std::vector<VertexRecord> verts;
  for (int i = 0; i < 4; ++i) verts.push_back({i, VertexKind::cusp, 0});
  // ids: 0 = v(-1), 1 = v(0), 2 = v(1), 3 = v(inf)
  std::vector<TopSimplex> tops = {{{0, 1, 2}, 1}, {{0, 2, 3}, 1}};
  FacePairing pa;  // side (v-1, vinf) of T2 <- side (v0, v1) of T1 via word -1
  pa.a = {1, 1};   // facet {0, 3}
  pa.b = {0, 0};   // facet {1, 2}
  pa.map = {1, 2}; // pos(0) = A^-1 pos(1), pos(3) = A^-1 pos(2)
  pa.word = {-1};
  FacePairing pb;  // side (v1, vinf) of T2 <- side (v-1, v0) of T1 via word -2
  pb.a = {1, 0};   // facet {2, 3}
  pb.b = {0, 2};   // facet {0, 1}
  pb.map = {1, 0}; // pos(2) = B^-1 pos(0), pos(3) = B^-1 pos(... )
  pb.word = {-2};
  return Complex(2, 1, verts, tops, {pa, pb});
}

}  // namespace

TEST_CASE("tetrahedron boundary validates and has chi 2") {
  Complex k = tetrahedron_boundary();
  ValidationReport rep = validate(k);
  CHECK(rep.closed());
  CHECK(euler_characteristic(k) == 2);
  // 4 vertices + 6 edges + 4 faces
  CHECK(k.num_face_classes() == 14);
}

TEST_CASE("open facet is reported") {
  std::vector<TopSimplex> tops = {{{0, 1, 2}, 1}};
  Complex k(2, 0, interior_vertices({0, 1, 2}), tops, {});
  ValidationReport rep = validate(k);
  CHECK(rep.ok_with_boundary());
  CHECK(!rep.closed());
  CHECK(rep.boundary.size() == 3);
}

TEST_CASE("over-shared facet is a violation") {
  std::vector<TopSimplex> tops = {{{0, 1, 2}, 1}, {{0, 1, 3}, 1}, {{0, 1, 4}, 1}};
  Complex k(2, 0, interior_vertices({0, 1, 2, 3, 4}), tops, {});
  ValidationReport rep = validate(k);
  CHECK(!rep.ok_with_boundary());
}

TEST_CASE("incoherent orientation is a violation") {
  std::vector<TopSimplex> tops = {{{1, 2, 3}, 1}, {{0, 3, 2}, 1}, {{0, 1, 3}, 1}, {{0, 2, 1}, -1}};
  Complex k(2, 0, interior_vertices({0, 1, 2, 3}), tops, {});
  CHECK(!validate(k).ok_with_boundary());
}

TEST_CASE("circle complexes") {
  Complex c3 = circle(3);
  CHECK(validate(c3).closed());
  CHECK(euler_characteristic(c3) == 0);

  Complex cw = circle_with_word();
  CHECK(validate(cw).closed());
  CHECK(euler_characteristic(cw) == 0);
  // both endpoints in one class
  CHECK(cw.face_class_of({0}) == cw.face_class_of({1}));
  CHECK(cw.vertex_transport(1).rep_id == 0);
  CHECK(cw.vertex_transport(1).word == std::vector<int>{1});
}

TEST_CASE("punctured torus combinatorics") {
  Complex k = punctured_torus_complex();
  CHECK(validate(k).closed());
  CHECK(euler_characteristic(k) == 0);  // end compactification of the torus

  // one vertex class (the cusp), three edge classes, two triangles
  int by_dim[3] = {0, 0, 0};
  for (int i = 0; i < k.num_face_classes(); ++i) by_dim[k.face_class(i).dim]++;
  CHECK(by_dim[0] == 1);
  CHECK(by_dim[1] == 3);
  CHECK(by_dim[2] == 2);
  int c = k.face_class_of({0});
  CHECK(k.face_class(c).cusp_point);
  CHECK(k.face_instances(c).size() == 6);  // six corners

  Star star = star_incidences(k, c);
  CHECK(star.closed);
  CHECK(star.incidences.size() == 6);

  // edges have two-sided stars; triangles have singleton stars
  for (int i = 0; i < k.num_face_classes(); ++i) {
    const FaceClass& fc = k.face_class(i);
    Star s = star_incidences(k, i);
    if (fc.dim == 1) CHECK(s.incidences.size() == 2);
    if (fc.dim == 2) CHECK(s.incidences.size() == 1);
  }

  // link of the cusp class is a circle
  LinkComplex link = link_sphere(k, c);
  CHECK(link.closed);
  CHECK(link.sphere_verified);
  CHECK(link.chi == 0);
}

TEST_CASE("boundary-of-simplex links in the 4-simplex boundary") {
  Complex k = simplex4_boundary();
  CHECK(validate(k).closed());
  CHECK(euler_characteristic(k) == 0);

  int vclass = k.face_class_of({0});
  LinkComplex vlink = link_sphere(k, vclass);
  CHECK(vlink.closed);
  CHECK(vlink.chi == 2);          // S^2
  CHECK(vlink.sphere_verified);   // boundary-of-simplex pattern

  int eclass = k.face_class_of({0, 1});
  LinkComplex elink = link_sphere(k, eclass);
  CHECK(elink.closed);
  CHECK(elink.chi == 0);  // circle
  CHECK(elink.sphere_verified);

  int fclass = k.face_class_of({0, 1, 2});
  LinkComplex flink = link_sphere(k, fclass);
  CHECK(flink.sphere_verified);  // S^0
}

TEST_CASE("cone complexes") {
  Complex cone3 = build_cone_complex(circle(3), 0);
  CHECK(cone3.dim() == 2);
  CHECK(euler_characteristic(cone3) == 1);
  ValidationReport rep = validate(cone3);
  CHECK(rep.ok_with_boundary());
  CHECK(rep.boundary.size() == 3);  // the cross-section edges

  int cusp = cone3.face_class_of({3});
  CHECK(cone3.face_class(cusp).cusp_point);
  Star star = star_incidences(cone3, cusp);
  CHECK(star.closed);
  CHECK(star.incidences.size() == 3);  // one per cross-section edge
  LinkComplex link = link_sphere(cone3, cusp);
  CHECK(link.sphere_verified);  // the cross-section circle

  // quotient-circle cone: single triangle, cusp star is one incidence
  Complex conew = build_cone_complex(circle_with_word(), 0);
  CHECK(euler_characteristic(conew) == 1);
  int cw_cusp = conew.face_class_of({2});
  CHECK(conew.face_class(cw_cusp).cusp_point);
  Star sw = star_incidences(conew, cw_cusp);
  CHECK(sw.closed);
  CHECK(sw.incidences.size() == 1);

  // a cross-section vertex has an open star (boundary face)
  int nclass = conew.face_class_of({0});
  Star sn = star_incidences(conew, nclass);
  CHECK(!sn.closed);
  CHECK(sn.incidences.size() == 2);  // both corners at the quotient vertex
}

TEST_CASE("re-rooting the star traversal keeps the incidence multiset") {
  Complex k = punctured_torus_complex();
  int c = k.face_class_of({0});
  Star s0 = star_incidences(k, c, 0);
  Star s1 = star_incidences(k, c, 3);
  CHECK(s0.incidences.size() == s1.incidences.size());
  std::multiset<std::pair<int, int>> a, b;
  for (const Incidence& inc : s0.incidences) a.insert({inc.simplex, inc.positions[0]});
  for (const Incidence& inc : s1.incidences) b.insert({inc.simplex, inc.positions[0]});
  CHECK(a == b);
}
