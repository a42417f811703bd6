#include "hypvol/cusp_lab.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hypvol/rng.hpp"

namespace hypvol {

void validate_toric_target(const ToricTarget& target) {
  bool ideal = is_ideal(target.eta);
  if (ideal && target.plane)
    fail(ErrorCode::bad_input, "ToricTarget: ideal eta does not come with a plane");
  if (!ideal) {
    if (!target.plane)
      fail(ErrorCode::bad_input, "ToricTarget: finite eta requires the stabilized plane");
    const PlaneH2& p = *target.plane;
    if (std::fabs(lorentz_dot(p.t1, p.t1) - 1.0) > 1e-9 ||
        std::fabs(lorentz_dot(p.t2, p.t2) - 1.0) > 1e-9 ||
        std::fabs(lorentz_dot(p.t1, p.t2)) > 1e-9 ||
        std::fabs(lorentz_dot(p.t1, p.base.rep())) > 1e-9 ||
        std::fabs(lorentz_dot(p.t2, p.base.rep())) > 1e-9)
      fail(ErrorCode::bad_input, "ToricTarget: tangent pair is not orthonormal at the base point");
    if (!point_in_plane(p, rep(target.eta)))
      fail(ErrorCode::bad_input, "ToricTarget: eta is off the plane");
  }
}

bool point_in_plane(const PlaneH2& plane, const MinkowskiVector& v, double tol) {
  // span(base, t1, t2) with Lorentz-orthonormal members
  MinkowskiVector proj = lorentz_dot(v, plane.t1) * plane.t1;
  proj = proj + lorentz_dot(v, plane.t2) * plane.t2;
  proj = proj + (-lorentz_dot(v, plane.base.rep())) * plane.base.rep();
  double worst = 0.0, scale = 0.0;
  for (int i = 0; i <= v.dim(); ++i) {
    worst = std::max(worst, std::fabs(v[i] - proj[i]));
    scale = std::max(scale, std::fabs(v[i]));
  }
  return worst <= tol * std::max(1.0, scale);
}

std::vector<int> end_section_ids(const Complex& k, int end) {
  std::set<int> out;
  for (const TopSimplex& s : k.top()) {
    bool touches = false;
    for (int id : s.verts) {
      const VertexRecord& vr = k.vertex(id);
      if (vr.kind == VertexKind::cusp && vr.end == end) touches = true;
    }
    if (!touches) continue;
    for (int id : s.verts)
      if (k.vertex(id).kind != VertexKind::cusp) out.insert(id);
  }
  return std::vector<int>(out.begin(), out.end());
}

EquivariantMap build_f0(std::shared_ptr<const Complex> k, const Representation& rep,
                        const std::vector<ToricTarget>& targets, const VertexImages& proposed) {
  for (const ToricTarget& t : targets) validate_toric_target(t);
  std::map<int, const ToricTarget*> by_end;
  for (const ToricTarget& t : targets) by_end[t.end] = &t;

  // end-section membership per class representative
  std::map<int, int> section_end;  // rep id -> end
  for (int e = 0; e < k->ends(); ++e)
    for (int id : end_section_ids(*k, e)) section_end[k->vertex_transport(id).rep_id] = e;

  EquivariantMap f{rep, {}, k};
  for (const VertexRecord& vr : k->vertices()) {
    const VertexTransport& tr = k->vertex_transport(vr.id);
    Point image = [&]() -> Point {
      const VertexRecord& rrec = k->vertex(tr.rep_id);
      if (rrec.kind == VertexKind::cusp) {
        auto it = by_end.find(rrec.end);
        if (it == by_end.end())
          fail(ErrorCode::bad_input, "build_f0: no toric target for end " + std::to_string(rrec.end));
        return it->second->eta;
      }
      auto it = proposed.at.find(tr.rep_id);
      if (it == proposed.at.end())
        fail(ErrorCode::bad_input,
             "build_f0: no proposed image for class representative " + std::to_string(tr.rep_id));
      auto se = section_end.find(tr.rep_id);
      if (se != section_end.end()) {
        const ToricTarget* target = by_end.at(se->second);
        if (target->plane && !point_in_plane(*target->plane, hypvol::rep(it->second)))
          fail(ErrorCode::bad_input, "build_f0: end-section image of class " +
                                         std::to_string(tr.rep_id) + " is off the end's plane");
      }
      return it->second;
    }();
    f.images.at.insert_or_assign(vr.id, rep.evaluate(tr.word).apply(image));
  }
  f.check_kinds();

  // per-simplex injectivity of the vertex images
  for (int s = 0; s < static_cast<int>(k->top().size()); ++s) {
    const auto& verts = k->top()[s].verts;
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j)
        if (image_gap(f.image_of(verts[i]), f.image_of(verts[j])) < 1e-9)
          fail(ErrorCode::bad_input, "build_f0: images of simplex " + std::to_string(s) +
                                         " are not pairwise distinct");
  }
  return f;
}

double delta_threshold(const EquivariantMap& f0) {
  const Complex& k = *f0.source;
  double min_pair = -1.0;
  for (const TopSimplex& s : k.top()) {
    for (size_t i = 0; i < s.verts.size(); ++i)
      for (size_t j = i + 1; j < s.verts.size(); ++j) {
        const Point& a = f0.image_of(s.verts[i]);
        const Point& b = f0.image_of(s.verts[j]);
        if (is_ideal(a) || is_ideal(b)) continue;  // infinite separation
        if (image_gap(a, b) < 1e-12) return 0.0;   // injectivity failure
        double d = distance(std::get<HPoint>(a), std::get<HPoint>(b));
        if (min_pair < 0.0 || d < min_pair) min_pair = d;
      }
  }
  if (min_pair < 0.0) return 0.0;
  return min_pair / 16.0;  // d0 = min/4, delta = d0/4
}

LimitSeries cusp_limit_experiment(const CuspExperiment& e, const std::vector<int>& schedule,
                                  const CensusConfig& cfg, bool with_totals) {
  const Complex& k = *e.complex;
  if (e.delta <= 0.0) fail(ErrorCode::bad_input, "cusp_limit_experiment: delta must be positive");

  std::set<int> section;
  for (int end = 0; end < k.ends(); ++end)
    for (int id : end_section_ids(k, end)) section.insert(k.vertex_transport(id).rep_id);
  std::vector<int> section_reps(section.begin(), section.end());

  std::vector<int> cusp_classes;
  for (int ci = 0; ci < k.num_face_classes(); ++ci)
    if (k.face_class(ci).cusp_point) cusp_classes.push_back(ci);

  LimitSeries series;
  for (int kk : schedule) {
    if (kk < 1) fail(ErrorCode::bad_input, "cusp_limit_experiment: schedule entries must be >= 1");
    LimitPoint point;
    point.k = kk;
    point.radius = e.delta / kk;

    EquivariantMap fk = e.f0;
    const int max_retries = 16;
    int attempt = 0;
    for (; attempt < max_retries; ++attempt) {
      std::uint64_t seed = derive_seed(e.seed, static_cast<std::uint64_t>(kk),
                                       static_cast<std::uint64_t>(attempt));
      fk = perturb(e.f0, point.radius, seed, section_reps);
      if (nondegeneracy_check(fk).all_ok) break;
    }
    if (attempt == max_retries)
      fail(ErrorCode::retry_exhausted,
           "cusp_limit_experiment: could not find a non-degenerate perturbation");
    point.retries = attempt;

    CensusConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(kk), 0x6c696d6974ULL);
    sub.attach_degrees = false;
    for (int ci : cusp_classes) point.cusp_entries.push_back(census(fk, ci, sub));

    if (with_totals) {
      Estimate alternating = Estimate::exactly(0.0);
      for (const CensusEntry& entry : census_all(fk, sub)) {
        if (!entry.ok())
          fail(ErrorCode::validation_failed, "cusp_limit_experiment: " + entry.status);
        alternating =
            alternating + scale(Estimate{entry.value, entry.stderr_, 0, entry.exact},
                                (entry.dim % 2 == 0) ? 1.0 : -1.0);
      }
      point.total = alternating;
      point.has_total = true;
    }
    series.points.push_back(std::move(point));
  }

  for (const LimitPoint& p : series.points)
    for (const CensusEntry& entry : p.cusp_entries) {
      double c = (std::fabs(entry.value) - 3.0 * entry.stderr_) / p.radius;
      series.fitted_c = std::max(series.fitted_c, c);
    }
  return series;
}

CoveringReport covering_relation_check(const EquivariantMap& base, const EquivariantMap& cover,
                                       const CoveringData& data, const CensusConfig& cfg) {
  const Complex& kb = *base.source;
  const Complex& kc = *cover.source;
  CoveringReport report;

  if (data.degree < 1) {
    report.issues.push_back("degree must be >= 1");
    return report;
  }

  // structural: every cover top mapped exactly once, d preimages per base top
  std::vector<const SimplexCoverEntry*> by_cover(kc.top().size(), nullptr);
  std::vector<int> preimages(kb.top().size(), 0);
  for (const SimplexCoverEntry& entry : data.tops) {
    if (entry.cover_simplex < 0 || entry.cover_simplex >= static_cast<int>(kc.top().size()) ||
        entry.base_simplex < 0 || entry.base_simplex >= static_cast<int>(kb.top().size())) {
      report.issues.push_back("covering entry out of range");
      continue;
    }
    if (by_cover[entry.cover_simplex]) {
      report.issues.push_back("cover simplex mapped twice");
      continue;
    }
    by_cover[entry.cover_simplex] = &entry;
    preimages[entry.base_simplex]++;
  }
  for (size_t s = 0; s < by_cover.size(); ++s)
    if (!by_cover[s])
      report.issues.push_back("cover simplex " + std::to_string(s) + " not mapped");
  for (size_t s = 0; s < preimages.size(); ++s)
    if (preimages[s] != data.degree)
      report.issues.push_back("base simplex " + std::to_string(s) + " has " +
                              std::to_string(preimages[s]) + " preimages, expected " +
                              std::to_string(data.degree));

  int n = kb.dim() + 1;
  auto base_position = [&](const SimplexCoverEntry& entry, int cover_pos) -> int {
    auto it = entry.vmap.find(kc.top()[entry.cover_simplex].verts[cover_pos]);
    if (it == entry.vmap.end()) return -1;
    const auto& bverts = kb.top()[entry.base_simplex].verts;
    for (int p = 0; p < n; ++p)
      if (bverts[p] == it->second) return p;
    return -1;
  };

  if (report.issues.empty() && kb.dim() == kc.dim()) {
    for (const SimplexCoverEntry& entry : data.tops) {
      // simplex map well defined, orientation compatible
      std::vector<int> perm;
      bool ok = true;
      for (int p = 0; p < n; ++p) {
        int bp = base_position(entry, p);
        if (bp < 0) ok = false;
        perm.push_back(bp);
      }
      std::set<int> uniq(perm.begin(), perm.end());
      if (!ok || static_cast<int>(uniq.size()) != n) {
        report.issues.push_back("vertex map of cover simplex " +
                                std::to_string(entry.cover_simplex) + " is not simplicial");
        continue;
      }
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) ++inv;
      int sign = (inv % 2 == 0) ? 1 : -1;
      if (sign * kc.top()[entry.cover_simplex].orient != kb.top()[entry.base_simplex].orient)
        report.issues.push_back("covering reverses orientation at cover simplex " +
                                std::to_string(entry.cover_simplex));
      // kinds and ends preserved
      for (const auto& [cid, bid] : entry.vmap) {
        const VertexRecord& cv = kc.vertex(cid);
        const VertexRecord& bv = kb.vertex(bid);
        if (cv.kind != bv.kind || (cv.kind == VertexKind::cusp && cv.end != bv.end))
          report.issues.push_back("vertex kinds differ across the covering at cover vertex " +
                                  std::to_string(cid));
      }
    }

    // local bijectivity: facet adjacencies commute with the covering
    for (int s = 0; s < static_cast<int>(kc.top().size()); ++s) {
      for (int q = 0; q < n; ++q) {
        FacetSlot other;
        std::vector<std::pair<int, int>> idp;
        std::vector<int> word;
        const SimplexCoverEntry& es = *by_cover[s];
        int qb = base_position(es, q);
        bool cover_matched = kc.facet_partner({s, q}, other, idp, word);
        FacetSlot bother;
        std::vector<std::pair<int, int>> bidp;
        std::vector<int> bword;
        bool base_matched = kb.facet_partner({es.base_simplex, qb}, bother, bidp, bword);
        if (cover_matched != base_matched) {
          report.issues.push_back("boundary/interior mismatch across the covering at cover facet (" +
                                  std::to_string(s) + "," + std::to_string(q) + ")");
          continue;
        }
        if (!cover_matched) continue;
        const SimplexCoverEntry& et = *by_cover[other.simplex];
        if (et.base_simplex != bother.simplex ||
            base_position(et, other.opposite) != bother.opposite)
          report.issues.push_back("facet gluings do not commute with the covering at cover facet (" +
                                  std::to_string(s) + "," + std::to_string(q) + ")");
      }
    }
  }

  report.covering_valid = report.issues.empty();
  if (!report.covering_valid) return report;

  if (kb.dim() % 2 == 0) {
    CensusConfig vcfg = cfg;
    vcfg.attach_degrees = false;
    double half_sphere = sphere_volume(kb.dim()) / 2.0;
    report.normalized_base = rep_volume_census(base, vcfg).value / half_sphere;
    report.normalized_cover = rep_volume_census(cover, vcfg).value / half_sphere;
    report.has_volumes = true;
    report.denominator_note =
        "cusp censuses of the base lie in (1/" + std::to_string(data.degree) +
        ") * (cover census values); the covering degree divides the Bieberbach number of the "
        "cross-section dimension";
  }

  // the relation itself, per end
  report.relation_holds = true;
  for (int e = 0; e < std::max(kb.ends(), kc.ends()); ++e) {
    int cb = -1, cc = -1;
    for (int ci = 0; ci < kb.num_face_classes(); ++ci)
      if (kb.face_class(ci).cusp_point && kb.face_class(ci).end == e) cb = ci;
    for (int ci = 0; ci < kc.num_face_classes(); ++ci)
      if (kc.face_class(ci).cusp_point && kc.face_class(ci).end == e) cc = ci;
    if (cb < 0 || cc < 0) continue;
    CoveringReport::EndPair pair;
    pair.end = e;
    CensusConfig sub = cfg;
    sub.attach_degrees = false;
    pair.base = census(base, cb, sub);
    pair.cover = census(cover, cc, sub);
    double lhs = data.degree * pair.base.value;
    double se = std::hypot(data.degree * pair.base.stderr_, pair.cover.stderr_);
    pair.holds = std::fabs(lhs - pair.cover.value) <= 3.0 * se + 1e-9;
    report.relation_holds = report.relation_holds && pair.holds;
    report.pairs.push_back(std::move(pair));
  }
  return report;
}

}  // namespace hypvol
