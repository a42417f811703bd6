#include "hypvol/equivariant.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hypvol/rng.hpp"

namespace hypvol {

double image_gap(const Point& a, const Point& b) {
  if (is_ideal(a) != is_ideal(b)) return 1e30;
  double s = 0.0;
  const MinkowskiVector& va = rep(a);
  const MinkowskiVector& vb = rep(b);
  for (int i = 0; i <= va.dim(); ++i) s = std::max(s, std::fabs(va[i] - vb[i]));
  return s;
}

Representation::Representation(int m, std::vector<Isometry> generators)
    : m_(m), generators_(std::move(generators)) {
  if (m_ < 2 || m_ > 4) fail(ErrorCode::bad_input, "Representation: dimension out of range");
  for (const Isometry& g : generators_) {
    if (g.dim() != m_) fail(ErrorCode::dimension_mismatch, "Representation: generator dimension");
    if (g.determinant() < 0.0)
      fail(ErrorCode::bad_input, "Representation: orientation-reversing generator");
  }
}

Isometry Representation::evaluate(const std::vector<int>& word) const {
  Isometry acc = Isometry::identity(m_);
  for (int g : word) {
    int idx = std::abs(g) - 1;
    if (g == 0 || idx >= num_generators())
      fail(ErrorCode::bad_input, "evaluate: generator index out of range");
    acc = acc.compose(g > 0 ? generators_[idx] : generators_[idx].inverse());
  }
  return acc;
}

const Point& EquivariantMap::image_of(int vertex_id) const {
  auto it = images.at.find(vertex_id);
  if (it == images.at.end())
    fail(ErrorCode::bad_input, "EquivariantMap: no image for vertex " + std::to_string(vertex_id));
  return it->second;
}

void EquivariantMap::check_kinds() const {
  for (const VertexRecord& vr : source->vertices()) {
    auto it = images.at.find(vr.id);
    if (it == images.at.end())
      fail(ErrorCode::bad_input, "EquivariantMap: missing image for vertex " + std::to_string(vr.id));
    if (vr.kind != VertexKind::cusp && is_ideal(it->second))
      fail(ErrorCode::bad_input,
           "EquivariantMap: non-cusp vertex " + std::to_string(vr.id) + " has an ideal image");
  }
}

DevelopedStar develop_star(const EquivariantMap& f, int face_class, int root_instance) {
  const Complex& k = *f.source;
  DevelopedStar out;
  out.star = star_incidences(k, face_class, root_instance);

  int m = f.rep.dim();
  for (const Incidence& inc : out.star.incidences) {
    Isometry g = f.rep.evaluate(inc.word);
    const TopSimplex& s = k.top()[inc.simplex];
    std::vector<Point> verts;
    verts.reserve(s.verts.size());
    for (int id : s.verts) verts.push_back(g.apply(f.image_of(id)));
    out.cells.push_back({GeodesicSimplex(m, std::move(verts)), -1, s.orient, inc.positions});
    out.cells.back().incidence = static_cast<int>(out.cells.size()) - 1;
  }
  for (int j : out.star.incidences[0].positions)
    out.tau_images.push_back(out.cells[0].image.vertices[j]);

  // lazy equivariance, part 1: every gluing transports images correctly,
  // im[x] = rho(crossing word) im[y]
  for (const StarCrossing& c : out.star.crossings) {
    Isometry g = f.rep.evaluate(c.word);
    for (const auto& [x, y] : c.id_pairs) {
      double gap = image_gap(f.image_of(x), g.apply(f.image_of(y)));
      if (gap > kTolEquivariance) {
        std::ostringstream os;
        os << "develop_star: images disagree across a gluing at face class " << face_class
           << " (vertices " << x << "/" << y << ", gap " << gap << ")";
        fail(ErrorCode::equivariance_violation, os.str());
      }
    }
  }
  // part 2: all lifts share the face's image vertices (for cusp classes this
  // is exactly the requirement that the closing words fix the cusp image)
  for (const DevelopedCell& cell : out.cells)
    for (size_t j = 0; j < out.tau_images.size(); ++j) {
      double gap = image_gap(cell.image.vertices[cell.tau_positions[j]], out.tau_images[j]);
      if (gap > kTolEquivariance) {
        std::ostringstream os;
        os << "develop_star: lifts around face class " << face_class
           << " do not share the face image (gap " << gap << ")";
        fail(ErrorCode::equivariance_violation, os.str());
      }
    }
  return out;
}

int epsilon_sign(const GeodesicSimplex& image, int source_orientation) {
  if (image.dim() != image.ambient_dim)
    fail(ErrorCode::bad_input, "epsilon_sign: need a top simplex");
  if (is_degenerate(image)) return 0;
  int n = image.ambient_dim + 1;
  Mat cols(n, n);
  for (int j = 0; j < n; ++j) {
    const MinkowskiVector& v = rep(image.vertices[j]);
    for (int r = 0; r < n; ++r) cols.at(r, j) = v[r];
  }
  double d = det(cols);
  return (d > 0.0 ? 1 : -1) * source_orientation;
}

NondegeneracyReport nondegeneracy_check(const EquivariantMap& f) {
  NondegeneracyReport rep;
  const Complex& k = *f.source;
  int m = f.rep.dim();
  for (int s = 0; s < static_cast<int>(k.top().size()); ++s) {
    std::vector<Point> verts;
    for (int id : k.top()[s].verts) verts.push_back(f.image_of(id));
    GeodesicSimplex image(m, std::move(verts));
    double ratio = degeneracy_ratio(image);
    rep.ratios.push_back(ratio);
    if (ratio <= kDegeneracyRatio) {
      rep.all_ok = false;
      rep.degenerate.push_back(s);
    }
  }
  return rep;
}

EquivariantMap perturb(const EquivariantMap& f, double radius, std::uint64_t seed,
                       const std::vector<int>& class_reps) {
  if (radius <= 0.0) fail(ErrorCode::bad_input, "perturb: radius must be positive");
  const Complex& k = *f.source;

  std::set<int> selected(class_reps.begin(), class_reps.end());
  if (class_reps.empty()) {
    // default: every vertex class without cusp members
    std::set<int> cusp_reps;
    for (const VertexRecord& vr : k.vertices())
      if (vr.kind == VertexKind::cusp) cusp_reps.insert(k.vertex_transport(vr.id).rep_id);
    for (int r : k.vertex_class_reps())
      if (!cusp_reps.count(r)) selected.insert(r);
  }

  EquivariantMap out = f;
  for (int repid : selected) {
    const Point& old_image = f.image_of(repid);
    if (is_ideal(old_image)) continue;  // ideal images are never perturbed
    RngStream rng(derive_seed(seed, static_cast<std::uint64_t>(repid), 0x70657274ULL));
    const HPoint& x = std::get<HPoint>(old_image);
    TangentVector dir = random_unit_tangent(x, rng);
    double r = radius * rng.uniform();
    Point moved = Point(exp_map(x, dir, r));
    // re-propagate the whole class through its transport words
    for (const VertexRecord& vr : k.vertices()) {
      const VertexTransport& tr = k.vertex_transport(vr.id);
      if (tr.rep_id != repid) continue;
      out.images.at.insert_or_assign(vr.id, f.rep.evaluate(tr.word).apply(moved));
    }
  }
  return out;
}

EquivariantMap transform_map(const EquivariantMap& f, const Isometry& g) {
  std::vector<Isometry> gens;
  Isometry ginv = g.inverse();
  for (int i = 0; i < f.rep.num_generators(); ++i)
    gens.push_back(g.compose(f.rep.generator(i)).compose(ginv));
  EquivariantMap out{Representation(f.rep.dim(), std::move(gens)), {}, f.source};
  for (const auto& [id, p] : f.images.at) out.images.at.emplace(id, g.apply(p));
  return out;
}

MapCheckReport map_check(const EquivariantMap& f,
                         const std::vector<std::pair<int, std::vector<int>>>& peripheral) {
  MapCheckReport report;
  f.check_kinds();
  report.nondeg = nondegeneracy_check(f);

  const Complex& k = *f.source;
  for (const VertexRecord& vr : k.vertices()) {
    const VertexTransport& tr = k.vertex_transport(vr.id);
    Point expect = f.rep.evaluate(tr.word).apply(f.image_of(tr.rep_id));
    double gap = image_gap(expect, f.image_of(vr.id));
    if (gap > kTolEquivariance) {
      std::ostringstream os;
      os << "image of vertex " << vr.id << " is off its transport from " << tr.rep_id << " by "
         << gap;
      report.issues.push_back(os.str());
    }
  }

  for (const auto& [end, word] : peripheral) {
    Isometry g = f.rep.evaluate(word);
    for (const VertexRecord& vr : k.vertices()) {
      if (vr.kind != VertexKind::cusp || vr.end != end) continue;
      if (k.vertex_transport(vr.id).rep_id != vr.id) continue;  // the word is about the base lift
      const Point& eta = f.image_of(vr.id);
      double gap = image_gap(g.apply(eta), eta);
      if (gap > 1e-8) {
        std::ostringstream os;
        os << "peripheral word of end " << end << " moves the cusp image of vertex " << vr.id
           << " by " << gap;
        report.issues.push_back(os.str());
      }
    }
  }
  return report;
}

}  // namespace hypvol
