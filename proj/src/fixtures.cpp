#include <array>
#include "hypvol/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hypvol/rng.hpp"

namespace hypvol::fixtures {

namespace {

HPoint origin(int m) {
  std::vector<double> c(m + 1, 0.0);
  c[0] = 1.0;
  return HPoint(MinkowskiVector(c));
}

// Point at hyperbolic distance r from the origin in the spatial direction
// given by angles on the listed axes (1-based), e.g. {{1, cos}, {2, sin}}.
HPoint polar_point(int m, double r, const std::vector<std::pair<int, double>>& dir) {
  std::vector<double> c(m + 1, 0.0);
  c[0] = std::cosh(r);
  for (const auto& [axis, comp] : dir) c[axis] = std::sinh(r) * comp;
  return HPoint(MinkowskiVector(std::move(c)));
}

void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::validation_failed, "fixture construction: " + what);
}

double gap(const MinkowskiVector& a, const MinkowskiVector& b) {
  double s = 0.0;
  for (int i = 0; i <= a.dim(); ++i) s = std::max(s, std::fabs(a[i] - b[i]));
  return s;
}

void require_valid(const Complex& k, bool allow_boundary, const std::string& name) {
  ValidationReport rep = validate(k);
  if (allow_boundary ? !rep.ok_with_boundary() : !rep.closed()) {
    std::string what = name + " failed validation";
    for (const std::string& v : rep.violations) what += "; " + v;
    if (!allow_boundary && !rep.boundary.empty()) what += "; has boundary";
    fail(ErrorCode::validation_failed, what);
  }
}

}  // namespace

Isometry sl2_to_so21(double a, double b, double c, double d) {
  // action S -> A S A^T on symmetric matrices S = [[t+x, y], [y, t-x]]
  auto conj = [&](double s00, double s01, double s11, double out[3]) {
    double r00 = a * (a * s00 + b * s01) + b * (a * s01 + b * s11);
    double r01 = c * (a * s00 + b * s01) + d * (a * s01 + b * s11);
    double r11 = c * (c * s00 + d * s01) + d * (c * s01 + d * s11);
    out[0] = 0.5 * (r00 + r11);
    out[1] = 0.5 * (r00 - r11);
    out[2] = r01;
  };
  Mat m(3, 3);
  double col[3];
  conj(1.0, 0.0, 1.0, col);  // e_t
  for (int r = 0; r < 3; ++r) m.at(r, 0) = col[r];
  conj(1.0, 0.0, -1.0, col);  // e_x
  for (int r = 0; r < 3; ++r) m.at(r, 1) = col[r];
  conj(0.0, 1.0, 0.0, col);  // e_y
  for (int r = 0; r < 3; ++r) m.at(r, 2) = col[r];
  return Isometry(std::move(m));
}

HPoint timelike_fixed_point(const Isometry& g) {
  if (g.dim() != 2) fail(ErrorCode::bad_input, "timelike_fixed_point: implemented for H^2");
  Mat a = g.matrix();
  for (int i = 0; i < 3; ++i) a.at(i, i) -= 1.0;
  // null vector of the rank-2 matrix: best cross product of two rows
  std::vector<double> best(3, 0.0);
  double best_norm = -1.0;
  for (int r0 = 0; r0 < 3; ++r0)
    for (int r1 = r0 + 1; r1 < 3; ++r1) {
      double z[3] = {a.at(r0, 1) * a.at(r1, 2) - a.at(r0, 2) * a.at(r1, 1),
                     a.at(r0, 2) * a.at(r1, 0) - a.at(r0, 0) * a.at(r1, 2),
                     a.at(r0, 0) * a.at(r1, 1) - a.at(r0, 1) * a.at(r1, 0)};
      double n = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
      if (n > best_norm) {
        best_norm = n;
        best = {z[0], z[1], z[2]};
      }
    }
  MinkowskiVector v(best);
  if (lorentz_dot(v, v) >= 0.0)
    fail(ErrorCode::bad_input, "timelike_fixed_point: isometry is not elliptic");
  if (v[0] < 0.0) v = -1.0 * v;
  return HPoint::from_timelike(v);
}

EquivariantMap assemble_map(std::shared_ptr<const Complex> k, const Representation& rep,
                            const std::map<int, Point>& class_rep_images) {
  EquivariantMap f{rep, {}, k};
  for (const VertexRecord& vr : k->vertices()) {
    const VertexTransport& tr = k->vertex_transport(vr.id);
    auto it = class_rep_images.find(tr.rep_id);
    if (it == class_rep_images.end())
      fail(ErrorCode::bad_input,
           "assemble_map: no image for class representative " + std::to_string(tr.rep_id));
    f.images.at.insert_or_assign(vr.id, rep.evaluate(tr.word).apply(it->second));
  }
  return f;
}

GeometricFixture genus2() {
  const double big_r = std::acosh(3.0 + 2.0 * std::sqrt(2.0));       // circumradius
  const double step = 2.0 * std::acosh(1.0 + std::sqrt(2.0));        // translation length
  auto vid = [](int j) { return ((j - 1) % 8 + 8) % 8 + 1; };        // vertex ids 1..8
  auto theta = [](int j) { return (j - 1) * M_PI / 4.0; };

  std::vector<VertexRecord> verts;
  verts.push_back({0, VertexKind::interior, -1});
  for (int i = 1; i <= 8; ++i) verts.push_back({i, VertexKind::interior, -1});

  std::map<int, Point> pos;
  pos.emplace(0, Point(origin(2)));
  for (int i = 1; i <= 8; ++i)
    pos.emplace(i, Point(polar_point(2, big_r, {{1, std::cos(theta(i))}, {2, std::sin(theta(i))}})));

  std::vector<TopSimplex> tops;
  for (int i = 1; i <= 8; ++i) tops.push_back({{0, i, vid(i + 1)}, 1});

  std::vector<Isometry> gens;
  for (int k = 1; k <= 4; ++k) {
    double phi = theta(k) + M_PI / 8.0;
    Isometry rot = Isometry::rotation(2, 1, 2, phi);
    gens.push_back(rot.compose(Isometry::boost(2, 1, step)).compose(rot.inverse()));
  }

  std::vector<FacePairing> pairings;
  for (int k = 1; k <= 4; ++k) {
    FacePairing p;
    p.a = {k - 1, 0};      // triangle T_k, side (v_k, v_{k+1})
    p.b = {k + 3, 0};      // triangle T_{k+4}, side (v_{k+4}, v_{k+5})
    p.map = {vid(k + 5), vid(k + 4)};  // pos(v_k) = g_k pos(v_{k+5})
    p.word = {k};
    pairings.push_back(std::move(p));
  }

  // the side pairings must send the opposite side onto this one exactly
  for (int k = 1; k <= 4; ++k) {
    require(gap(gens[k - 1].apply_raw(rep(pos.at(vid(k + 5)))), rep(pos.at(vid(k)))) < 1e-10,
            "genus2 side pairing endpoint mismatch");
    require(gap(gens[k - 1].apply_raw(rep(pos.at(vid(k + 4)))), rep(pos.at(vid(k + 1)))) < 1e-10,
            "genus2 side pairing endpoint mismatch");
  }

  auto complex = std::make_shared<const Complex>(2, 0, verts, tops, pairings);
  require_valid(*complex, false, "genus2 complex");

  EquivariantMap map{Representation(2, gens), {}, complex};
  for (const auto& [id, p] : pos) map.images.at.emplace(id, p);
  require(map_check(map).ok(), "genus2 geometric map inconsistent");
  return {complex, std::move(map)};
}

PuncturedTorusFixture punctured_torus() {
  auto ideal_at = [](double r) {
    double d = r * r + 1.0;
    return IdealPoint(MinkowskiVector({1.0, (r * r - 1.0) / d, 2.0 * r / d}));
  };
  IdealPoint xi_m1 = ideal_at(-1.0);
  IdealPoint xi_0 = ideal_at(0.0);
  IdealPoint xi_1 = ideal_at(1.0);
  IdealPoint xi_inf(MinkowskiVector({1.0, 1.0, 0.0}));

  std::vector<VertexRecord> verts;
  for (int i = 0; i < 4; ++i) verts.push_back({i, VertexKind::cusp, 0});
  std::vector<TopSimplex> tops = {{{0, 1, 2}, -1}, {{0, 2, 3}, -1}};

  FacePairing pa;  // A maps side (inf, -1) to (1, 0): pos(v_a) = rho(A)^-1 pos(map[v_a])
  pa.a = {1, 1};
  pa.b = {0, 0};
  pa.map = {1, 2};
  pa.word = {-1};
  FacePairing pb;  // B maps side (inf, 1) to (-1, 0)
  pb.a = {1, 0};
  pb.b = {0, 2};
  pb.map = {1, 0};
  pb.word = {-2};

  auto complex = std::make_shared<const Complex>(2, 1, verts, tops,
                                                 std::vector<FacePairing>{pa, pb});
  require_valid(*complex, false, "punctured torus complex");

  Isometry rho_a = sl2_to_so21(1, 1, 1, 2);
  Isometry rho_b = sl2_to_so21(1, -1, -1, 2);
  require(gap(rho_a.apply(xi_m1).rep(), xi_0.rep()) < 1e-12, "A(-1) != 0");
  require(gap(rho_a.apply(xi_inf).rep(), xi_1.rep()) < 1e-12, "A(inf) != 1");
  require(gap(rho_b.apply(xi_1).rep(), xi_0.rep()) < 1e-12, "B(1) != 0");
  require(gap(rho_b.apply(xi_inf).rep(), xi_m1.rep()) < 1e-12, "B(inf) != -1");

  PuncturedTorusFixture out{complex,
                            EquivariantMap{Representation(2, {rho_a, rho_b}), {}, complex},
                            EquivariantMap{Representation(2, {rho_a, rho_b}), {}, complex}};
  out.ideal_map.images.at.emplace(0, Point(xi_m1));
  out.ideal_map.images.at.emplace(1, Point(xi_0));
  out.ideal_map.images.at.emplace(2, Point(xi_1));
  out.ideal_map.images.at.emplace(3, Point(xi_inf));
  require(map_check(out.ideal_map).ok(), "punctured torus ideal map inconsistent");

  // control representation with an elliptic peripheral element, so the cusp
  // class can carry a finite image (a cone-surface style representation; two
  // hyperbolics whose commutator rotates). The axis angle is searched: in
  // SO(2,1) an elliptic has trace 1 + 2 cos(theta) < 3.
  int cusp_class = complex->face_class_of({0});
  Star star = star_incidences(*complex, cusp_class);
  auto cycles = closing_cycle_words(star);
  require(!cycles.empty(), "punctured torus cusp cycle not found");

  bool found = false;
  for (double phi = 0.3; phi < 1.55 && !found; phi += 0.1) {
    Isometry ga = Isometry::boost(2, 1, 1.2);
    Isometry r = Isometry::rotation(2, 1, 2, phi);
    Isometry gb = r.compose(Isometry::boost(2, 1, 1.2)).compose(r.inverse());
    Representation control(2, {ga, gb});
    Isometry cycle = control.evaluate(cycles[0]);
    double trace = cycle.matrix().at(0, 0) + cycle.matrix().at(1, 1) + cycle.matrix().at(2, 2);
    if (trace >= 3.0 - 1e-6) continue;  // not elliptic
    HPoint eta = timelike_fixed_point(cycle);
    EquivariantMap candidate = assemble_map(complex, control, {{0, Point(eta)}});
    if (!map_check(candidate).ok() || !nondegeneracy_check(candidate).all_ok) continue;
    // the census at the cusp should sit visibly off the integers
    double theta = std::acos(std::clamp((trace - 1.0) / 2.0, -1.0, 1.0));
    if (std::fabs(theta / (2.0 * M_PI) - std::round(theta / (2.0 * M_PI))) < 1e-2) continue;
    out.control_map = std::move(candidate);
    found = true;
  }
  require(found, "punctured torus control representation search failed");
  return out;
}

Complex kuhn_torus_3d(int nx, int ny, int nz) {
  require(nx >= 1 && ny >= 1 && nz >= 1, "kuhn torus needs positive extents");
  auto vid = [&](int x, int y, int z) { return (x * (ny + 1) + y) * (nz + 1) + z; };
  std::vector<VertexRecord> verts;
  for (int x = 0; x <= nx; ++x)
    for (int y = 0; y <= ny; ++y)
      for (int z = 0; z <= nz; ++z) verts.push_back({vid(x, y, z), VertexKind::interior, -1});

  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const int signs[6] = {1, -1, -1, 1, 1, -1};

  std::vector<TopSimplex> tops;
  for (int cx = 0; cx < nx; ++cx)
    for (int cy = 0; cy < ny; ++cy)
      for (int cz = 0; cz < nz; ++cz)
        for (int p = 0; p < 6; ++p) {
          int c[3] = {cx, cy, cz};
          TopSimplex t;
          t.verts.push_back(vid(c[0], c[1], c[2]));
          for (int step = 0; step < 3; ++step) {
            c[perms[p][step]] += 1;
            t.verts.push_back(vid(c[0], c[1], c[2]));
          }
          t.orient = signs[p];
          tops.push_back(std::move(t));
        }

  // wrap pairings: +axis facets onto -axis facets through the translations
  auto coords_of = [&](int id) {
    int z = id % (nz + 1);
    int y = (id / (nz + 1)) % (ny + 1);
    int x = id / ((nz + 1) * (ny + 1));
    return std::array<int, 3>{x, y, z};
  };
  int extent[3] = {nx, ny, nz};
  std::vector<FacePairing> pairings;
  std::map<std::vector<int>, FacetSlot> minus_slots[3];
  std::vector<std::pair<FacetSlot, int>> plus_slots;  // slot, axis

  for (int s = 0; s < static_cast<int>(tops.size()); ++s)
    for (int q = 0; q < 4; ++q) {
      std::vector<int> ids;
      for (int p = 0; p < 4; ++p)
        if (p != q) ids.push_back(tops[s].verts[p]);
      for (int axis = 0; axis < 3; ++axis) {
        bool all_hi = true, all_lo = true;
        for (int id : ids) {
          auto c = coords_of(id);
          all_hi = all_hi && (c[axis] == extent[axis]);
          all_lo = all_lo && (c[axis] == 0);
        }
        if (all_hi) plus_slots.push_back({{s, q}, axis});
        if (all_lo) {
          std::vector<int> key = ids;
          std::sort(key.begin(), key.end());
          minus_slots[axis][key] = {s, q};
        }
      }
    }

  for (const auto& [slot, axis] : plus_slots) {
    std::vector<int> ids, translated;
    for (int p = 0; p < 4; ++p)
      if (p != slot.opposite) ids.push_back(tops[slot.simplex].verts[p]);
    for (int id : ids) {
      auto c = coords_of(id);
      c[axis] -= extent[axis];
      translated.push_back(vid(c[0], c[1], c[2]));
    }
    std::vector<int> key = translated;
    std::sort(key.begin(), key.end());
    auto it = minus_slots[axis].find(key);
    require(it != minus_slots[axis].end(), "kuhn torus wrap facet has no partner");
    FacePairing p;
    p.a = slot;
    p.b = it->second;
    p.map = translated;  // pos(hi) = rho(t_axis) pos(lo)
    p.word = {axis + 1};
    pairings.push_back(std::move(p));
  }

  Complex k(3, 0, std::move(verts), std::move(tops), std::move(pairings));
  require_valid(k, false, "kuhn torus");
  return k;
}

namespace {

// Rotations of H^4 about the origin in the (e1,e2) plane: they fix the
// target plane spanned by (e3,e4) pointwise, so the cusp image may sit
// anywhere on it.
Representation cone4d_rep() {
  return Representation(4, {Isometry::rotation(4, 1, 2, 0.7), Isometry::rotation(4, 1, 2, 1.1),
                            Isometry::rotation(4, 1, 2, -0.3)});
}

std::map<int, Point> cone4d_plane_images(const Complex& cone) {
  // class representatives are the 2x2x2 parity corners, spread over a disk
  // of the target plane OFFSET from the cusp image: the cusp must stay
  // outside every planar hull, otherwise the flattening cones keep O(1)
  // apex angles and the cusp census does not vanish
  std::map<int, Point> images;
  Isometry offset = Isometry::boost(4, 3, 0.45);
  int idx = 0;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) {
        int id = (x * 3 + y) * 3 + z;
        double angle = idx * (2.0 * M_PI / 8.0) + 0.31;
        double radius = 0.26 + 0.08 * (idx % 3);
        HPoint p = polar_point(4, radius, {{3, std::cos(angle)}, {4, std::sin(angle)}});
        images.emplace(id, Point(offset.apply(p)));
        ++idx;
      }
  (void)cone;
  return images;
}

}  // namespace

Cone4dFixture cone4d() {
  Complex cross = kuhn_torus_3d(2, 2, 2);
  auto cone = std::make_shared<const Complex>(build_cone_complex(cross, 0));
  require_valid(*cone, true, "cone4d complex");

  Cone4dFixture out{cone, cone4d_rep(), {}, EquivariantMap{cone4d_rep(), {}, cone}, 0.0};

  HPoint eta = origin(4);
  PlaneH2 plane{eta, MinkowskiVector({0, 0, 0, 1, 0}), MinkowskiVector({0, 0, 0, 0, 1})};
  out.targets = {ToricTarget{0, Point(eta), plane}};

  VertexImages proposed;
  for (const auto& [id, p] : cone4d_plane_images(*cone)) proposed.at.emplace(id, p);
  out.f0 = build_f0(cone, out.rep, out.targets, proposed);
  out.delta = delta_threshold(out.f0);
  require(out.delta > 0.0, "cone4d delta threshold vanished");
  return out;
}

CoverPairFixture cover_pair_2d() {
  // base cross-section: circle as one edge glued to itself through g
  std::vector<VertexRecord> bverts = {{0, VertexKind::interior, -1}, {1, VertexKind::interior, -1}};
  std::vector<TopSimplex> btops = {{{0, 1}, 1}};
  FacePairing bp;
  bp.a = {0, 0};
  bp.b = {0, 1};
  bp.map = {0};
  bp.word = {1};
  Complex bcross(1, 0, bverts, btops, {bp});
  auto base = std::make_shared<const Complex>(build_cone_complex(bcross, 0));
  require_valid(*base, true, "2d cover base");

  double theta = 0.8;
  Representation brep(2, {Isometry::rotation(2, 1, 2, theta)});
  HPoint eta = origin(2);
  HPoint y0 = polar_point(2, 0.9, {{1, 1.0}, {2, 0.0}});
  EquivariantMap fbase =
      assemble_map(base, brep, {{0, Point(y0)}, {2, Point(eta)}});
  require(map_check(fbase).ok(), "2d cover base map inconsistent");

  // cover cross-section: two edges, wrap glued through g^2
  std::vector<VertexRecord> cverts = {{0, VertexKind::interior, -1},
                                      {1, VertexKind::interior, -1},
                                      {2, VertexKind::interior, -1}};
  std::vector<TopSimplex> ctops = {{{0, 1}, 1}, {{1, 2}, 1}};
  FacePairing cp;
  cp.a = {1, 0};  // facet {2}
  cp.b = {0, 1};  // facet {0}
  cp.map = {0};   // pos(2) = g' pos(0)
  cp.word = {1};
  Complex ccross(1, 0, cverts, ctops, {cp});
  auto cover = std::make_shared<const Complex>(build_cone_complex(ccross, 0));
  require_valid(*cover, true, "2d cover total space");

  Representation crep(2, {Isometry::rotation(2, 1, 2, 2.0 * theta)});
  EquivariantMap fcover = assemble_map(
      cover, crep,
      {{0, Point(y0)},
       {1, Point(Isometry::rotation(2, 1, 2, theta).apply(y0))},
       {3, Point(eta)}});
  require(map_check(fcover).ok(), "2d cover lift map inconsistent");

  CoveringData data;
  data.degree = 2;
  data.tops.push_back({0, 0, {{3, 2}, {0, 0}, {1, 1}}});
  data.tops.push_back({1, 0, {{3, 2}, {1, 0}, {2, 1}}});
  return {base, cover, std::move(fbase), std::move(fcover), std::move(data)};
}

namespace {

std::map<int, Point> spread_images_4d(const std::vector<int>& reps, std::uint64_t seed) {
  std::map<int, Point> images;
  RngStream rng(seed);
  HPoint o = origin(4);
  for (int id : reps) {
    TangentVector dir = random_unit_tangent(o, rng);
    images.emplace(id, Point(exp_map(o, dir, rng.uniform_range(0.55, 1.15))));
  }
  return images;
}

}  // namespace

CoverPairFixture cover_pair_4d() {
  Complex bcross = kuhn_torus_3d(2, 2, 2);
  auto base = std::make_shared<const Complex>(build_cone_complex(bcross, 0));
  Complex ccross = kuhn_torus_3d(4, 2, 2);
  auto cover = std::make_shared<const Complex>(build_cone_complex(ccross, 0));

  Representation brep = cone4d_rep();
  Isometry t1 = brep.generator(0);
  Representation crep(4, {t1.compose(t1), brep.generator(1), brep.generator(2)});

  // base map: cusp at the common fixed point, sections spread through H^4
  HPoint eta = origin(4);
  std::vector<int> breps;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) breps.push_back((x * 3 + y) * 3 + z);
  std::map<int, Point> bimages = spread_images_4d(breps, 0x42415345ULL);
  int base_cusp_id = 27;  // one past the 3x3x3 grid
  bimages.emplace(base_cusp_id, Point(eta));
  EquivariantMap fbase = assemble_map(base, brep, bimages);
  require(map_check(fbase).ok(), "4d cover base map inconsistent");
  require(nondegeneracy_check(fbase).all_ok, "4d cover base map degenerate");

  // lift: cover class (x,y,z), x in 0..3 -> t1^(x div 2) . base class image
  auto cvid = [](int x, int y, int z) { return (x * 3 + y) * 3 + z; };
  auto bvid = [](int x, int y, int z) { return (x * 3 + y) * 3 + z; };
  std::map<int, Point> cimages;
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) {
        Point img = bimages.at(bvid(x % 2, y, z));
        if (x >= 2) img = t1.apply(img);
        cimages.emplace(cvid(x, y, z), img);
      }
  int cover_cusp_id = 5 * 3 * 3;  // one past the 5x3x3 grid
  cimages.emplace(cover_cusp_id, Point(eta));
  EquivariantMap fcover = assemble_map(cover, crep, cimages);
  require(map_check(fcover).ok(), "4d cover lift map inconsistent");

  // covering data: tet-by-tet, cube (cx,..) -> cube (cx mod 2, ..)
  CoveringData data;
  data.degree = 2;
  require(cover->top().size() == 2 * base->top().size(), "4d cover top count");
  for (int s = 0; s < static_cast<int>(cover->top().size()); ++s) {
    SimplexCoverEntry entry;
    entry.cover_simplex = s;
    const TopSimplex& ct = cover->top()[s];
    entry.vmap[cover_cusp_id] = base_cusp_id;
    // translate by the tet's cube: cubes with cx >= 2 shift down by 2
    int min_x = 99;
    for (int id : ct.verts) {
      if (id == cover_cusp_id) continue;
      min_x = std::min(min_x, id / 9);
    }
    int shift = (min_x >= 2) ? 2 : 0;
    for (int id : ct.verts) {
      if (id == cover_cusp_id) continue;
      int z = id % 3, y = (id / 3) % 3, x = id / 9;
      entry.vmap[id] = bvid(x - shift, y, z);
    }
    if (std::find(ct.verts.begin(), ct.verts.end(), cover_cusp_id) == ct.verts.end())
      entry.vmap.erase(cover_cusp_id);
    // base simplex: the one whose vertex set matches
    std::vector<int> want;
    for (int id : ct.verts) want.push_back(entry.vmap.at(id));
    std::sort(want.begin(), want.end());
    entry.base_simplex = -1;
    for (int bs = 0; bs < static_cast<int>(base->top().size()); ++bs) {
      std::vector<int> have = base->top()[bs].verts;
      std::sort(have.begin(), have.end());
      if (have == want) {
        entry.base_simplex = bs;
        break;
      }
    }
    require(entry.base_simplex >= 0, "4d covering: no matching base simplex");
    data.tops.push_back(std::move(entry));
  }
  return {base, cover, std::move(fbase), std::move(fcover), std::move(data)};
}

GeometricFixture winding_star(int turns) {
  require(turns != 0, "winding_star: turns must be nonzero");
  // two poles and an 8-cycle equator; every vertex id is its own class
  std::vector<VertexRecord> verts;
  for (int i = 0; i < 10; ++i) verts.push_back({i, VertexKind::interior, -1});
  auto eq = [](int i) { return 2 + ((i % 8 + 8) % 8); };
  std::vector<TopSimplex> tops;
  for (int i = 0; i < 8; ++i) tops.push_back({{0, eq(i), eq(i + 1)}, 1});
  for (int i = 0; i < 8; ++i) tops.push_back({{1, eq(i + 1), eq(i)}, 1});
  auto complex = std::make_shared<const Complex>(2, 0, verts, tops, std::vector<FacePairing>{});
  require_valid(*complex, false, "winding star complex");

  EquivariantMap map{Representation(2, {}), {}, complex};
  map.images.at.emplace(0, Point(origin(2)));
  map.images.at.emplace(1, Point(polar_point(2, 2.2, {{1, std::cos(0.57)}, {2, std::sin(0.57)}})));
  for (int i = 0; i < 8; ++i) {
    double angle = turns * (2.0 * M_PI * i / 8.0) + 0.371;
    map.images.at.emplace(eq(i), Point(polar_point(2, 0.8, {{1, std::cos(angle)}, {2, std::sin(angle)}})));
  }
  require(nondegeneracy_check(map).all_ok, "winding star map degenerate");
  return {complex, std::move(map)};
}

GeometricFixture two_end_surface() {
  // inner circle 0,1,2; outer circle 3,4,5; cusps 6 (end 0) and 7 (end 1)
  std::vector<VertexRecord> verts;
  for (int i = 0; i < 6; ++i) verts.push_back({i, VertexKind::interior, -1});
  verts.push_back({6, VertexKind::cusp, 0});
  verts.push_back({7, VertexKind::cusp, 1});

  auto in = [](int i) { return (i % 3 + 3) % 3; };
  auto outv = [&](int i) { return 3 + in(i); };
  std::vector<TopSimplex> tops;
  for (int i = 0; i < 3; ++i) tops.push_back({{6, in(i), in(i + 1)}, 1});
  for (int i = 0; i < 3; ++i) tops.push_back({{in(i), outv(i), in(i + 1)}, 1});
  for (int i = 0; i < 3; ++i) tops.push_back({{outv(i), outv(i + 1), in(i + 1)}, 1});
  for (int i = 0; i < 3; ++i) tops.push_back({{7, outv(i + 1), outv(i)}, 1});
  auto complex = std::make_shared<const Complex>(2, 2, verts, tops, std::vector<FacePairing>{});
  require_valid(*complex, false, "two end surface complex");

  EquivariantMap map{Representation(2, {}), {}, complex};
  map.images.at.emplace(6, Point(origin(2)));
  for (int i = 0; i < 3; ++i) {
    double a = 2.0 * M_PI * i / 3.0 + 0.21;
    map.images.at.emplace(i, Point(polar_point(2, 0.8, {{1, std::cos(a)}, {2, std::sin(a)}})));
    map.images.at.emplace(3 + i,
                          Point(polar_point(2, 1.6, {{1, std::cos(a + 0.35)}, {2, std::sin(a + 0.35)}})));
  }
  // the end-1 apex image sits inside the outer loop, so its census is the
  // (negative) winding of that loop
  map.images.at.emplace(7, Point(polar_point(2, 0.1, {{1, std::cos(0.9)}, {2, std::sin(0.9)}})));
  require(nondegeneracy_check(map).all_ok, "two end surface map degenerate");
  return {complex, std::move(map)};
}

GeodesicSimplex random_simplex(int m, std::uint64_t seed, double radius) {
  RngStream rng(seed);
  HPoint o = origin(m);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Point> verts;
    for (int i = 0; i <= m; ++i) {
      TangentVector u = random_unit_tangent(o, rng);
      verts.emplace_back(exp_map(o, u, rng.uniform_range(0.2, radius)));
    }
    GeodesicSimplex t(m, std::move(verts));
    if (degeneracy_ratio(t) > 1e-3) return t;
  }
  fail(ErrorCode::retry_exhausted, "random_simplex: no well-conditioned sample");
}

}  // namespace hypvol::fixtures
