#include "hypvol/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace hypvol {

namespace {

std::vector<double> coords_from_json(const ojson& j) {
  if (!j.is_array()) fail(ErrorCode::bad_input, "json: expected a coordinate array");
  std::vector<double> c;
  for (const auto& x : j) c.push_back(x.get<double>());
  return c;
}

ojson coords_to_json(const MinkowskiVector& v) {
  ojson a = ojson::array();
  for (double x : v.c) a.push_back(x);
  return a;
}

}  // namespace

ojson point_to_json(const Point& p) {
  ojson j;
  j["kind"] = is_ideal(p) ? "ideal" : "finite";
  j["coords"] = coords_to_json(rep(p));
  return j;
}

Point point_from_json(const ojson& j) {
  std::string kind = j.at("kind").get<std::string>();
  MinkowskiVector v(coords_from_json(j.at("coords")));
  if (kind == "finite") return Point(HPoint(std::move(v)));
  if (kind == "ideal") return Point(IdealPoint(std::move(v)));
  fail(ErrorCode::bad_input, "json: point kind must be finite or ideal");
}

ojson simplex_to_json(const GeodesicSimplex& t) {
  ojson j;
  j["ambient_dim"] = t.ambient_dim;
  ojson verts = ojson::array();
  for (const Point& p : t.vertices) verts.push_back(point_to_json(p));
  j["vertices"] = std::move(verts);
  return j;
}

GeodesicSimplex simplex_from_json(const ojson& j) {
  int m = j.at("ambient_dim").get<int>();
  std::vector<Point> verts;
  for (const auto& v : j.at("vertices")) verts.push_back(point_from_json(v));
  return GeodesicSimplex(m, std::move(verts));
}

ojson complex_to_json(const Complex& k) {
  ojson j;
  j["dim"] = k.dim();
  j["ends"] = k.ends();
  ojson verts = ojson::array();
  for (const VertexRecord& vr : k.vertices()) {
    ojson v;
    v["id"] = vr.id;
    v["kind"] = vr.kind == VertexKind::cusp ? "cusp" : "interior";
    if (vr.kind == VertexKind::cusp) v["end"] = vr.end;
    verts.push_back(std::move(v));
  }
  j["vertices"] = std::move(verts);
  ojson tops = ojson::array();
  for (const TopSimplex& s : k.top()) {
    ojson t;
    t["verts"] = s.verts;
    t["or"] = s.orient;
    tops.push_back(std::move(t));
  }
  j["top"] = std::move(tops);
  ojson pairings = ojson::array();
  for (const FacePairing& p : k.pairings()) {
    ojson q;
    q["a"] = {{"simplex", p.a.simplex}, {"opposite", p.a.opposite}};
    q["b"] = {{"simplex", p.b.simplex}, {"opposite", p.b.opposite}};
    q["map"] = p.map;
    q["word"] = p.word;
    pairings.push_back(std::move(q));
  }
  j["pairings"] = std::move(pairings);
  return j;
}

Complex complex_from_json(const ojson& j) {
  int dim = j.at("dim").get<int>();
  int ends = j.at("ends").get<int>();
  std::vector<VertexRecord> verts;
  for (const auto& v : j.at("vertices")) {
    VertexRecord vr;
    vr.id = v.at("id").get<int>();
    std::string kind = v.at("kind").get<std::string>();
    if (kind == "cusp") {
      vr.kind = VertexKind::cusp;
      vr.end = v.at("end").get<int>();
    } else if (kind == "interior") {
      vr.kind = VertexKind::interior;
    } else {
      fail(ErrorCode::bad_input, "json: vertex kind must be interior or cusp");
    }
    verts.push_back(vr);
  }
  std::vector<TopSimplex> tops;
  for (const auto& t : j.at("top")) {
    TopSimplex s;
    s.verts = t.at("verts").get<std::vector<int>>();
    s.orient = t.at("or").get<int>();
    tops.push_back(std::move(s));
  }
  std::vector<FacePairing> pairings;
  if (j.contains("pairings")) {
    for (const auto& q : j.at("pairings")) {
      FacePairing p;
      p.a = {q.at("a").at("simplex").get<int>(), q.at("a").at("opposite").get<int>()};
      p.b = {q.at("b").at("simplex").get<int>(), q.at("b").at("opposite").get<int>()};
      p.map = q.at("map").get<std::vector<int>>();
      p.word = q.at("word").get<std::vector<int>>();
      pairings.push_back(std::move(p));
    }
  }
  return Complex(dim, ends, std::move(verts), std::move(tops), std::move(pairings));
}

ojson map_to_json(const EquivariantMap& f,
                  const std::vector<std::pair<int, std::vector<int>>>& peripheral) {
  ojson j;
  j["dim"] = f.rep.dim();
  ojson gens = ojson::array();
  for (int g = 0; g < f.rep.num_generators(); ++g) {
    const Mat& m = f.rep.generator(g).matrix();
    ojson rows = ojson::array();
    for (int r = 0; r < m.rows; ++r) {
      ojson row = ojson::array();
      for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  j["generators"] = std::move(gens);
  ojson images = ojson::object();
  for (const auto& [id, p] : f.images.at) images[std::to_string(id)] = point_to_json(p);
  j["images"] = std::move(images);
  if (!peripheral.empty()) {
    ojson per = ojson::array();
    for (const auto& [end, word] : peripheral) per.push_back({{"end", end}, {"word", word}});
    j["peripheral"] = std::move(per);
  }
  return j;
}

MapFile map_from_json(const ojson& j, std::shared_ptr<const Complex> source) {
  int m = j.at("dim").get<int>();
  std::vector<Isometry> gens;
  for (const auto& g : j.at("generators")) {
    Mat mat(m + 1, m + 1);
    int r = 0;
    for (const auto& row : g) {
      int c = 0;
      for (const auto& x : row) mat.at(r, c++) = x.get<double>();
      ++r;
    }
    gens.emplace_back(std::move(mat));
  }
  MapFile out{EquivariantMap{Representation(m, std::move(gens)), {}, std::move(source)}, {}};
  for (const auto& [key, val] : j.at("images").items())
    out.map.images.at.emplace(std::stoi(key), point_from_json(val));
  if (j.contains("peripheral"))
    for (const auto& p : j.at("peripheral"))
      out.peripheral.push_back({p.at("end").get<int>(), p.at("word").get<std::vector<int>>()});
  return out;
}

ojson target_to_json(const ToricTarget& t) {
  ojson j;
  j["end"] = t.end;
  j["eta"] = point_to_json(t.eta);
  if (t.plane) {
    ojson p;
    p["base"] = point_to_json(Point(t.plane->base));
    p["t1"] = coords_to_json(t.plane->t1);
    p["t2"] = coords_to_json(t.plane->t2);
    j["plane"] = std::move(p);
  }
  return j;
}

ToricTarget target_from_json(const ojson& j) {
  Point eta = point_from_json(j.at("eta"));
  std::optional<PlaneH2> plane;
  if (j.contains("plane")) {
    const ojson& p = j.at("plane");
    Point base = point_from_json(p.at("base"));
    if (is_ideal(base)) fail(ErrorCode::bad_input, "json: plane base must be finite");
    plane = PlaneH2{std::get<HPoint>(base), MinkowskiVector(coords_from_json(p.at("t1"))),
                    MinkowskiVector(coords_from_json(p.at("t2")))};
  }
  ToricTarget t{j.at("end").get<int>(), std::move(eta), std::move(plane)};
  validate_toric_target(t);
  return t;
}

ojson experiment_to_json(const CuspExperiment& e) {
  ojson j;
  j["complex"] = complex_to_json(*e.complex);
  j["map"] = map_to_json(e.f0);
  ojson targets = ojson::array();
  for (const ToricTarget& t : e.targets) targets.push_back(target_to_json(t));
  j["targets"] = std::move(targets);
  j["delta"] = e.delta;
  j["seed"] = e.seed;
  return j;
}

CuspExperiment experiment_from_json(const ojson& j) {
  auto complex = std::make_shared<const Complex>(complex_from_json(j.at("complex")));
  MapFile mf = map_from_json(j.at("map"), complex);
  std::vector<ToricTarget> targets;
  for (const auto& t : j.at("targets")) targets.push_back(target_from_json(t));
  CuspExperiment e{complex, std::move(mf.map), std::move(targets), 0.0, 0};
  e.delta = j.contains("delta") ? j.at("delta").get<double>() : delta_threshold(e.f0);
  e.seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 0;
  return e;
}

ojson covering_to_json(const CoveringData& d) {
  ojson j;
  j["degree"] = d.degree;
  ojson tops = ojson::array();
  for (const SimplexCoverEntry& e : d.tops) {
    ojson t;
    t["cover"] = e.cover_simplex;
    t["base"] = e.base_simplex;
    ojson vmap = ojson::object();
    for (const auto& [cid, bid] : e.vmap) vmap[std::to_string(cid)] = bid;
    t["vmap"] = std::move(vmap);
    tops.push_back(std::move(t));
  }
  j["tops"] = std::move(tops);
  return j;
}

CoveringData covering_from_json(const ojson& j) {
  CoveringData d;
  d.degree = j.at("degree").get<int>();
  for (const auto& t : j.at("tops")) {
    SimplexCoverEntry e;
    e.cover_simplex = t.at("cover").get<int>();
    e.base_simplex = t.at("base").get<int>();
    for (const auto& [key, val] : t.at("vmap").items()) e.vmap[std::stoi(key)] = val.get<int>();
    d.tops.push_back(std::move(e));
  }
  return d;
}

ojson load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::bad_input, "cannot open " + path);
  ojson j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const ojson& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::bad_input, "cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace hypvol
