#include "hypvol/census.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypvol/rng.hpp"

namespace hypvol {

long CensusEntry::rounded() const {
  return static_cast<long>(value >= 0.0 ? std::floor(value + 0.5) : std::ceil(value - 0.5));
}

namespace {

std::uint32_t positions_mask(const std::vector<int>& positions) {
  std::uint32_t m = 0;
  for (int p : positions) m |= (1u << p);
  return m;
}

bool interval_certifies(double value, double se) {
  double z = std::round(value);
  return std::fabs(value - z) + 3.0 * se < 0.5;
}

}  // namespace

CensusEntry census(const EquivariantMap& f, int face_class, const CensusConfig& cfg) {
  const Complex& k = *f.source;
  const FaceClass& fc = k.face_class(face_class);

  CensusEntry entry;
  entry.face_class = face_class;
  entry.dim = fc.dim;

  DevelopedStar dev = develop_star(f, face_class);
  if (!dev.star.closed && !cfg.allow_open_star)
    fail(ErrorCode::validation_failed,
         "census: star of face class " + std::to_string(face_class) +
             " has boundary (open complex); not a closed-star census");

  Estimate total = Estimate::exactly(0.0);
  int degenerate_cells = 0;
  for (const DevelopedCell& cell : dev.cells) {
    int eps = epsilon_sign(cell.image, cell.source_orientation);
    if (eps == 0) {
      // ideal apexes still contribute an exact zero angle
      if (cell.tau_positions.size() == 1 && is_ideal(cell.image.vertices[cell.tau_positions[0]]))
        continue;
      if (cfg.allow_degenerate_cells) {
        ++degenerate_cells;
        continue;
      }
      fail(ErrorCode::degenerate_simplex,
           "census: degenerate image simplex in the star of face class " +
               std::to_string(face_class));
    }
    McConfig mc;
    mc.samples = cfg.samples;
    mc.threads = cfg.threads;
    mc.force_mc = cfg.force_mc;
    const Incidence& inc = dev.star.incidences[cell.incidence];
    mc.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(inc.simplex),
                          positions_mask(cell.tau_positions));
    AngleEstimate a = interior_angle(cell.image, Face(cell.tau_positions), mc);
    total = total + scale(a, static_cast<double>(eps));
  }

  entry.value = total.value;
  entry.stderr_ = total.stderr_;
  entry.exact = total.exact;
  entry.certified = total.exact || interval_certifies(total.value, total.stderr_);
  if (!entry.certified) entry.status = "uncertified";
  if (degenerate_cells > 0)
    entry.status = "degenerate cells skipped: " + std::to_string(degenerate_cells);
  return entry;
}

long link_degree(const EquivariantMap& f, int face_class, std::uint64_t direction_seed) {
  const Complex& k = *f.source;
  int m = f.rep.dim();

  LinkComplex link = link_sphere(k, face_class);
  if (!link.closed)
    fail(ErrorCode::validation_failed, "link_degree: the star has boundary, no closed link");
  if (!link.sphere_verified)
    fail(ErrorCode::validation_failed,
         "link_degree: link of face class " + std::to_string(face_class) +
             " is not a verified sphere");

  DevelopedStar dev = develop_star(f, face_class);

  // image basepoint: interior point of the image face
  MinkowskiVector sum(std::vector<double>(m + 1, 0.0));
  for (const Point& p : dev.tau_images) sum = sum + rep(p);
  double q = lorentz_dot(sum, sum);
  if (q >= 0.0)
    fail(ErrorCode::no_basepoint, "link_degree: image face has no interior basepoint");
  HPoint x = HPoint::from_timelike(sum);

  std::vector<TangentVector> basis = tangent_basis(x);
  int t = static_cast<int>(dev.tau_images.size()) - 1;

  // spherical pieces: one per (incidence, face vertex); piece (i, j) is the
  // facet of the lift opposite the j-th face vertex
  struct Piece {
    Mat dirs;  // m x m, columns = direction coordinates in the tangent basis
    int sign;
  };
  std::vector<Piece> pieces;
  for (const DevelopedCell& cell : dev.cells) {
    for (int j = 0; j <= t; ++j) {
      int skip = cell.tau_positions[j];
      Piece piece;
      piece.dirs = Mat(m, m);
      int col = 0;
      for (int p = 0; p <= m; ++p) {
        if (p == skip) continue;
        TangentVector d = log_direction(x, cell.image.vertices[p]);
        for (int r = 0; r < m; ++r) piece.dirs.at(r, col) = lorentz_dot(d.v, basis[r].v);
        ++col;
      }
      piece.sign = cell.source_orientation * ((skip % 2 == 0) ? 1 : -1);
      pieces.push_back(std::move(piece));
    }
  }

  const int max_retries = 64;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    RngStream rng(derive_seed(direction_seed, 0x64697265ULL, static_cast<std::uint64_t>(attempt)));
    double u[4];
    rng.sphere_direction(m, u);
    std::vector<double> b(u, u + m);

    long deg = 0;
    bool boundary_grazed = false;
    for (const Piece& piece : pieces) {
      double d = det(piece.dirs);
      if (std::fabs(d) < 1e-12)
        fail(ErrorCode::degenerate_simplex, "link_degree: spherically degenerate link simplex");
      std::vector<double> c;
      if (!solve(piece.dirs, b, c))
        fail(ErrorCode::degenerate_simplex, "link_degree: spherically degenerate link simplex");
      bool inside = true;
      for (double ci : c) {
        if (std::fabs(ci) < 1e-9) {
          boundary_grazed = true;
          break;
        }
        if (ci < 0.0) {
          inside = false;
          break;
        }
      }
      if (boundary_grazed) break;
      if (inside) deg += piece.sign * (d > 0.0 ? 1 : -1);
    }
    if (!boundary_grazed) return deg;
  }
  fail(ErrorCode::retry_exhausted, "link_degree: direction sampling kept grazing piece boundaries");
}

std::vector<CensusEntry> census_all(const EquivariantMap& f, const CensusConfig& cfg) {
  const Complex& k = *f.source;
  std::vector<CensusEntry> entries;
  for (int ci = 0; ci < k.num_face_classes(); ++ci) {
    const FaceClass& fc = k.face_class(ci);
    CensusEntry entry;
    try {
      entry = census(f, ci, cfg);
      if (cfg.attach_degrees && !fc.cusp_point) {
        try {
          LinkComplex link = link_sphere(k, ci);
          if (link.closed && link.sphere_verified) {
            entry.degree = link_degree(f, ci, cfg.degree_seed);
            if (std::fabs(entry.value - static_cast<double>(*entry.degree)) >
                3.0 * entry.stderr_ + 1e-6)
              entry.status = "census does not match the link degree";
          }
        } catch (const Error&) {
          // no degree attachment for faces outside the verified-sphere regime
        }
      }
    } catch (const Error& e) {
      entry.face_class = ci;
      entry.dim = fc.dim;
      entry.status = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace hypvol
