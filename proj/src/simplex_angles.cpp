#include "hypvol/simplex_angles.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

#include "hypvol/rng.hpp"

namespace hypvol {

GeodesicSimplex::GeodesicSimplex(int m, std::vector<Point> verts)
    : ambient_dim(m), vertices(std::move(verts)) {
  if (vertices.empty() || dim() > m || m < 2 || m > 4)
    fail(ErrorCode::bad_input, "GeodesicSimplex: need 1 <= k <= m, m in {2,3,4}");
  for (const Point& p : vertices)
    if (point_dim(p) != m) fail(ErrorCode::dimension_mismatch, "GeodesicSimplex: vertex dimension");
}

namespace {

Mat vertex_columns(const GeodesicSimplex& t, const std::vector<int>* subset = nullptr) {
  int n = subset ? static_cast<int>(subset->size()) : static_cast<int>(t.vertices.size());
  Mat cols(t.ambient_dim + 1, n);
  for (int j = 0; j < n; ++j) {
    const MinkowskiVector& v = rep(t.vertices[subset ? (*subset)[j] : j]);
    for (int r = 0; r <= t.ambient_dim; ++r) cols.at(r, j) = v[r];
  }
  return cols;
}

}  // namespace

double degeneracy_ratio(const GeodesicSimplex& t) { return singular_ratio(vertex_columns(t)); }

bool is_degenerate(const GeodesicSimplex& t) { return degeneracy_ratio(t) <= kDegeneracyRatio; }

Face::Face(std::vector<int> idx) : indices(std::move(idx)) {
  if (indices.empty()) fail(ErrorCode::bad_input, "Face: empty index set");
  std::sort(indices.begin(), indices.end());
  for (size_t i = 1; i < indices.size(); ++i)
    if (indices[i] == indices[i - 1]) fail(ErrorCode::bad_input, "Face: repeated index");
  if (indices.front() < 0) fail(ErrorCode::bad_input, "Face: negative index");
}

std::uint32_t Face::mask() const {
  std::uint32_t m = 0;
  for (int i : indices) m |= (1u << i);
  return m;
}

std::vector<Face> face_lattice(const GeodesicSimplex& t) {
  int n = t.dim() + 1;
  std::vector<Face> faces;
  faces.reserve((1u << n) - 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    faces.emplace_back(std::move(idx));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.indices < b.indices;
  });
  return faces;
}

HPoint interior_basepoint(const GeodesicSimplex& t, const Face& face) {
  if (face.indices.back() > t.dim()) fail(ErrorCode::bad_input, "interior_basepoint: index range");
  if (face.indices.size() == 1 && is_ideal(t.vertices[face.indices[0]]))
    fail(ErrorCode::no_basepoint, "interior_basepoint: purely ideal 0-face");
  MinkowskiVector sum(std::vector<double>(t.ambient_dim + 1, 0.0));
  for (int i : face.indices) sum = sum + rep(t.vertices[i]);
  return HPoint::from_timelike(sum);
}

std::vector<MinkowskiVector> tangent_cone_normals(const GeodesicSimplex& t, const Face& face) {
  int m = t.ambient_dim;
  if (t.dim() != m) fail(ErrorCode::bad_input, "tangent_cone_normals: need a top simplex");
  std::uint32_t fmask = face.mask();
  std::vector<MinkowskiVector> normals;
  for (int q = 0; q <= m; ++q) {
    if (fmask & (1u << q)) continue;  // facet must contain the face
    Mat rows(m, m + 1);
    int ri = 0;
    for (int i = 0; i <= m; ++i) {
      if (i == q) continue;
      const MinkowskiVector& v = rep(t.vertices[i]);
      for (int c = 0; c <= m; ++c) rows.at(ri, c) = v[c];
      ++ri;
    }
    std::vector<double> z = cross_complement(rows);
    MinkowskiVector n(std::move(z));
    n.c[0] = -n.c[0];  // J z is Lorentz-orthogonal to the facet span
    double q2 = lorentz_dot(n, n);
    double scale2 = 0.0;
    for (double x : n.c) scale2 += x * x;
    if (q2 <= 1e-16 * std::max(1.0, scale2))
      fail(ErrorCode::degenerate_simplex, "tangent_cone_normals: degenerate facet");
    n = (1.0 / std::sqrt(q2)) * n;
    double side = lorentz_dot(n, rep(t.vertices[q]));
    if (std::fabs(side) < 1e-12)
      fail(ErrorCode::degenerate_simplex, "tangent_cone_normals: apex on facet hyperplane");
    if (side > 0.0) n = -1.0 * n;
    normals.push_back(std::move(n));
  }
  return normals;
}

namespace {

// Monte Carlo cone-membership fraction. Deterministic regardless of thread
// count: the budget is cut into fixed chunks with derived sub-seeds.
AngleEstimate mc_cone_fraction(const HPoint& x, const std::vector<MinkowskiVector>& normals,
                               const McConfig& cfg) {
  int m = x.dim();
  std::vector<TangentVector> basis = tangent_basis(x);
  // projections <n_F, e_j>
  int nf = static_cast<int>(normals.size());
  std::vector<double> proj(static_cast<size_t>(nf) * m);
  for (int f = 0; f < nf; ++f)
    for (int j = 0; j < m; ++j) proj[static_cast<size_t>(f) * m + j] = lorentz_dot(normals[f], basis[j].v);

  const long chunk = 65536;
  long nchunks = (cfg.samples + chunk - 1) / chunk;
  auto run_chunk = [&](long ci) -> long {
    long n = std::min(chunk, cfg.samples - ci * chunk);
    RngStream rng(derive_seed(cfg.seed, 0x636f6e65ULL, static_cast<std::uint64_t>(ci)));
    double dir[4];
    long hits = 0;
    for (long s = 0; s < n; ++s) {
      rng.sphere_direction(m, dir);
      bool inside = true;
      const double* row = proj.data();
      for (int f = 0; f < nf; ++f, row += m) {
        double d = 0.0;
        for (int j = 0; j < m; ++j) d += row[j] * dir[j];
        if (d > 0.0) {
          inside = false;
          break;
        }
      }
      if (inside) ++hits;
    }
    return hits;
  };

  long hits = 0;
  if (cfg.threads > 1 && nchunks > 1) {
    std::vector<std::future<long>> futs;
    futs.reserve(nchunks);
    for (long ci = 0; ci < nchunks; ++ci)
      futs.push_back(std::async(std::launch::async, run_chunk, ci));
    for (auto& f : futs) hits += f.get();
  } else {
    for (long ci = 0; ci < nchunks; ++ci) hits += run_chunk(ci);
  }
  double p = static_cast<double>(hits) / static_cast<double>(cfg.samples);
  double se = std::sqrt(std::max(0.0, p * (1.0 - p) / static_cast<double>(cfg.samples)));
  return Estimate::measured(p, se, cfg.samples);
}

double vertex_angle_2d(const GeodesicSimplex& t, int vertex) {
  const HPoint& x = std::get<HPoint>(t.vertices[vertex]);
  std::vector<int> others;
  for (int i = 0; i <= t.dim(); ++i)
    if (i != vertex) others.push_back(i);
  TangentVector da = log_direction(x, t.vertices[others[0]]);
  TangentVector db = log_direction(x, t.vertices[others[1]]);
  double c = std::clamp(lorentz_dot(da.v, db.v), -1.0, 1.0);
  return std::acos(c);
}

}  // namespace

AngleEstimate interior_angle_at(const GeodesicSimplex& t, const Face& face, const HPoint& x,
                                const McConfig& cfg) {
  if (t.dim() != t.ambient_dim) fail(ErrorCode::bad_input, "interior_angle: need a top simplex");
  if (is_degenerate(t)) fail(ErrorCode::degenerate_simplex, "interior_angle: degenerate simplex");
  return mc_cone_fraction(x, tangent_cone_normals(t, face), cfg);
}

AngleEstimate interior_angle(const GeodesicSimplex& t, const Face& face, const McConfig& cfg) {
  int m = t.ambient_dim;
  if (t.dim() != m) fail(ErrorCode::bad_input, "interior_angle: need a top simplex");
  if (face.indices.back() > t.dim()) fail(ErrorCode::bad_input, "interior_angle: index range");

  // Angles at ideal apexes are zero by definition; this fires before any
  // degeneracy test so that maps with ideal cusp images stay exact.
  if (face.indices.size() == 1 && is_ideal(t.vertices[face.indices[0]]))
    return Estimate::exactly(0.0);

  if (is_degenerate(t)) fail(ErrorCode::degenerate_simplex, "interior_angle: degenerate simplex");

  int k = face.dim();
  if (!cfg.force_mc) {
    if (k == m) return Estimate::exactly(1.0);
    if (k == m - 1) return Estimate::exactly(0.5);  // single half-space
    if (m == 2 && k == 0)
      return Estimate::exactly(vertex_angle_2d(t, face.indices[0]) / (2.0 * M_PI));
  }
  return interior_angle_at(t, face, interior_basepoint(t, face), cfg);
}

Estimate generalized_angle_sum(const GeodesicSimplex& t, const McConfig& cfg) {
  if (t.dim() != t.ambient_dim)
    fail(ErrorCode::bad_input, "generalized_angle_sum: need a top simplex");
  Estimate total = Estimate::exactly(0.0);
  for (const Face& face : face_lattice(t)) {
    McConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, 0x66616365ULL, face.mask());
    AngleEstimate a = interior_angle(t, face, sub);
    double sign = (face.dim() % 2 == 0) ? 1.0 : -1.0;
    total = total + scale(a, sign);
  }
  return total;
}

double sphere_volume(int d) {
  if (d < 0) fail(ErrorCode::bad_input, "sphere_volume: negative dimension");
  return 2.0 * std::pow(M_PI, 0.5 * (d + 1)) / std::tgamma(0.5 * (d + 1));
}

Estimate volume_hopf(const GeodesicSimplex& t, const McConfig& cfg) {
  int m = t.ambient_dim;
  if (m % 2 != 0)
    fail(ErrorCode::odd_dimension, "volume_hopf: angle sum determines volume only in even dimension");
  Estimate w = generalized_angle_sum(t, cfg);
  double factor = ((m / 2) % 2 == 0 ? 1.0 : -1.0) * sphere_volume(m) / 2.0;
  return scale(w, factor);
}

Estimate volume_mc(const GeodesicSimplex& t, const McConfig& cfg) {
  int m = t.ambient_dim;
  if (t.dim() != m) fail(ErrorCode::bad_input, "volume_mc: need a top simplex");
  for (const Point& p : t.vertices)
    if (is_ideal(p))
      fail(ErrorCode::unsupported_by_oracle, "volume_mc: ideal vertex (unbounded density variance)");
  if (is_degenerate(t)) fail(ErrorCode::degenerate_simplex, "volume_mc: degenerate simplex");

  // Klein chart: v -> (v1..vm)/v0 maps geodesic simplices to Euclidean ones.
  std::vector<std::vector<double>> k(m + 1, std::vector<double>(m));
  for (int i = 0; i <= m; ++i) {
    const MinkowskiVector& v = rep(t.vertices[i]);
    for (int j = 0; j < m; ++j) k[i][j] = v[j + 1] / v[0];
  }
  Mat edges(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) edges.at(j, i) = k[i + 1][j] - k[0][j];
  double fact = 1.0;
  for (int i = 2; i <= m; ++i) fact *= i;
  double vol_e = std::fabs(det(edges)) / fact;

  const long chunk = 65536;
  long nchunks = (cfg.samples + chunk - 1) / chunk;
  auto run_chunk = [&](long ci) -> std::pair<double, double> {
    long n = std::min(chunk, cfg.samples - ci * chunk);
    RngStream rng(derive_seed(cfg.seed, 0x6b6c65696eULL, static_cast<std::uint64_t>(ci)));
    double bary[5];
    double sum = 0.0, sum2 = 0.0;
    for (long s = 0; s < n; ++s) {
      rng.simplex_barycentric(m + 1, bary);
      double r2 = 0.0;
      for (int j = 0; j < m; ++j) {
        double xj = 0.0;
        for (int i = 0; i <= m; ++i) xj += bary[i] * k[i][j];
        r2 += xj * xj;
      }
      double density = std::pow(1.0 - r2, -0.5 * (m + 1));
      sum += density;
      sum2 += density * density;
    }
    return {sum, sum2};
  };

  double sum = 0.0, sum2 = 0.0;
  if (cfg.threads > 1 && nchunks > 1) {
    std::vector<std::future<std::pair<double, double>>> futs;
    for (long ci = 0; ci < nchunks; ++ci)
      futs.push_back(std::async(std::launch::async, run_chunk, ci));
    for (auto& f : futs) {
      auto [a, b] = f.get();
      sum += a;
      sum2 += b;
    }
  } else {
    for (long ci = 0; ci < nchunks; ++ci) {
      auto [a, b] = run_chunk(ci);
      sum += a;
      sum2 += b;
    }
  }
  double n = static_cast<double>(cfg.samples);
  double mean = sum / n;
  double var = std::max(0.0, (sum2 / n - mean * mean) * n / std::max(1.0, n - 1.0));
  return Estimate::measured(vol_e * mean, vol_e * std::sqrt(var / n), cfg.samples);
}

double area_defect(const GeodesicSimplex& t) {
  if (t.ambient_dim != 2) fail(ErrorCode::bad_input, "area_defect: defined for m = 2 only");
  if (t.dim() != 2) fail(ErrorCode::bad_input, "area_defect: need a triangle");
  if (is_degenerate(t)) fail(ErrorCode::degenerate_simplex, "area_defect: degenerate triangle");
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    if (!is_ideal(t.vertices[i])) sum += vertex_angle_2d(t, i);
  return M_PI - sum;
}

}  // namespace hypvol
