// Command-line front end: validation, censuses, volumes and the cusp
// experiments over JSON complexes and maps, with deterministic CSV output.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hypvol/census.hpp"
#include "hypvol/cusp_lab.hpp"
#include "hypvol/fixtures.hpp"
#include "hypvol/json_io.hpp"
#include "hypvol/volume_report.hpp"

namespace {

using namespace hypvol;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUncertified = 2;
constexpr int kExitUsage = 64;

std::vector<int> parse_ids(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

std::shared_ptr<const Complex> load_complex(const std::string& path) {
  return std::make_shared<const Complex>(complex_from_json(load_json_file(path)));
}

MapFile load_map(const std::string& path, std::shared_ptr<const Complex> k) {
  return map_from_json(load_json_file(path), std::move(k));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::bad_input, "cannot write " + path);
  out << text;
}

std::string census_csv(const Complex& k, const std::vector<CensusEntry>& entries) {
  std::ostringstream os;
  os << "face_id,dim,value,stderr,degree,certified\n";
  for (const CensusEntry& e : entries) {
    os << e.face_class << "," << e.dim << "," << format_double(e.value) << ","
       << format_double(e.stderr_) << ",";
    if (e.degree) os << *e.degree;
    os << "," << (e.certified ? 1 : 0) << "\n";
  }
  (void)k;
  return os.str();
}

struct SimplexCli {
  std::string in;
  std::string face;
  long samples = 200000;
  std::uint64_t seed = 0;
  int threads = 1;
  bool force_mc = false;
  std::string method = "hopf";
};

struct PairCli {
  std::string complex_path, map_path;
  long samples = 200000;
  std::uint64_t seed = 0;
  int threads = 1;
};

int emit_fixture(const std::string& name, const std::string& dir, int dim, std::uint64_t seed) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto path = [&](const std::string& f) { return (fs::path(dir) / f).string(); };
  auto put = [&](const std::string& f, const ojson& j) {
    save_json_file(path(f), j);
    std::cout << path(f) << "\n";
  };

  if (name == "genus2") {
    auto fx = fixtures::genus2();
    put("genus2.complex.json", complex_to_json(*fx.complex));
    put("genus2.map.json", map_to_json(fx.map));
    return kExitOk;
  }
  if (name == "punctured-torus") {
    auto fx = fixtures::punctured_torus();
    put("punctured_torus.complex.json", complex_to_json(*fx.complex));
    put("punctured_torus.map.json", map_to_json(fx.ideal_map));
    put("punctured_torus.control.map.json", map_to_json(fx.control_map));
    return kExitOk;
  }
  if (name == "cone4d") {
    auto fx = fixtures::cone4d();
    put("cone4d.complex.json", complex_to_json(*fx.complex));
    put("cone4d.f0.map.json", map_to_json(fx.f0));
    CuspExperiment e{fx.complex, fx.f0, fx.targets, fx.delta, 2024};
    put("cone4d.experiment.json", experiment_to_json(e));
    return kExitOk;
  }
  if (name == "cover2d" || name == "cover4d") {
    auto fx = name == "cover2d" ? fixtures::cover_pair_2d() : fixtures::cover_pair_4d();
    put(name + ".base.complex.json", complex_to_json(*fx.base_complex));
    put(name + ".base.map.json", map_to_json(fx.base_map));
    put(name + ".cover.complex.json", complex_to_json(*fx.cover_complex));
    put(name + ".cover.map.json", map_to_json(fx.cover_map));
    put(name + ".covering.json", covering_to_json(fx.covering));
    return kExitOk;
  }
  if (name == "winding2") {
    auto fx = fixtures::winding_star(2);
    put("winding2.complex.json", complex_to_json(*fx.complex));
    put("winding2.map.json", map_to_json(fx.map));
    return kExitOk;
  }
  if (name == "two-end") {
    auto fx = fixtures::two_end_surface();
    put("two_end.complex.json", complex_to_json(*fx.complex));
    put("two_end.map.json", map_to_json(fx.map));
    return kExitOk;
  }
  if (name == "random-simplex") {
    GeodesicSimplex t = fixtures::random_simplex(dim, seed);
    put("random_simplex.json", simplex_to_json(t));
    return kExitOk;
  }
  std::cerr << "unknown fixture: " << name << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"volumes of representations via generalized angle sums"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- simplex -------------------------------------------------------------
  auto simplex_cli = std::make_shared<SimplexCli>();
  CLI::App* simplex = app.add_subcommand("simplex", "operations on one geodesic simplex");
  simplex->require_subcommand(1);
  auto add_simplex_common = [&](CLI::App* cmd, bool with_seed = true) {
    cmd->add_option("--in", simplex_cli->in, "simplex JSON file")->required();
    cmd->add_option("--samples", simplex_cli->samples, "Monte Carlo samples per angle");
    if (with_seed) cmd->add_option("--seed", simplex_cli->seed, "RNG seed")->required();
    cmd->add_option("--threads", simplex_cli->threads, "sampling threads");
  };

  CLI::App* angles = simplex->add_subcommand("angles", "interior angle fractions per face");
  add_simplex_common(angles);
  angles->add_option("--face", simplex_cli->face, "vertex indices of one face, e.g. 0,2");
  angles->add_flag("--force-mc", simplex_cli->force_mc, "skip the exact shortcuts");
  angles->callback([&]() {
    action = [&]() {
      GeodesicSimplex t = simplex_from_json(load_json_file(simplex_cli->in));
      McConfig cfg{simplex_cli->samples, simplex_cli->seed, simplex_cli->force_mc,
                   simplex_cli->threads};
      std::cout << "face,dim,value,stderr,exact\n";
      auto print = [&](const Face& f) {
        McConfig sub = cfg;
        sub.seed = derive_seed(cfg.seed, 0x66616365ULL, f.mask());
        AngleEstimate a = interior_angle(t, f, sub);
        std::string label;
        for (size_t i = 0; i < f.indices.size(); ++i)
          label += (i ? "+" : "") + std::to_string(f.indices[i]);
        std::cout << label << "," << f.dim() << "," << format_double(a.value) << ","
                  << format_double(a.stderr_) << "," << (a.exact ? 1 : 0) << "\n";
      };
      if (!simplex_cli->face.empty()) {
        print(Face(parse_ids(simplex_cli->face)));
      } else {
        for (const Face& f : face_lattice(t)) print(f);
      }
      return kExitOk;
    };
  });

  CLI::App* volume_cmd = simplex->add_subcommand("volume", "simplex volume");
  add_simplex_common(volume_cmd);
  volume_cmd->add_option("--method", simplex_cli->method, "hopf or mc")
      ->check(CLI::IsMember({"hopf", "mc"}));
  volume_cmd->callback([&]() {
    action = [&]() {
      GeodesicSimplex t = simplex_from_json(load_json_file(simplex_cli->in));
      McConfig cfg{simplex_cli->samples, simplex_cli->seed, false, simplex_cli->threads};
      Estimate v = simplex_cli->method == "mc" ? volume_mc(t, cfg) : volume_hopf(t, cfg);
      std::cout << "method,value,stderr,exact\n"
                << simplex_cli->method << "," << format_double(v.value) << ","
                << format_double(v.stderr_) << "," << (v.exact ? 1 : 0) << "\n";
      return kExitOk;
    };
  });

  CLI::App* gram = simplex->add_subcommand("gram-euler", "generalized angle sum W(T)");
  add_simplex_common(gram);
  gram->callback([&]() {
    action = [&]() {
      GeodesicSimplex t = simplex_from_json(load_json_file(simplex_cli->in));
      McConfig cfg{simplex_cli->samples, simplex_cli->seed, false, simplex_cli->threads};
      Estimate w = generalized_angle_sum(t, cfg);
      std::cout << "value,stderr,exact\n"
                << format_double(w.value) << "," << format_double(w.stderr_) << ","
                << (w.exact ? 1 : 0) << "\n";
      return kExitOk;
    };
  });

  // ---- complex ---------------------------------------------------------------
  auto complex_in = std::make_shared<std::string>();
  auto face_ids = std::make_shared<std::string>();
  auto link_out = std::make_shared<std::string>();
  CLI::App* complex_cmd = app.add_subcommand("complex", "simplicial complex utilities");
  complex_cmd->require_subcommand(1);

  CLI::App* validate_cmd = complex_cmd->add_subcommand("validate", "check the complex invariants");
  validate_cmd->add_option("--in", *complex_in, "complex JSON file")->required();
  validate_cmd->callback([&]() {
    action = [&]() {
      auto k = load_complex(*complex_in);
      ValidationReport rep = validate(*k);
      for (const std::string& v : rep.violations) std::cout << "violation: " << v << "\n";
      std::cout << "boundary_facets: " << rep.boundary.size() << "\n";
      std::cout << "status: " << (rep.closed() ? "closed" : rep.ok_with_boundary() ? "has-boundary" : "invalid")
                << "\n";
      return rep.ok_with_boundary() ? kExitOk : kExitValidation;
    };
  });

  CLI::App* chi_cmd = complex_cmd->add_subcommand("chi", "Euler characteristic over face classes");
  chi_cmd->add_option("--in", *complex_in, "complex JSON file")->required();
  chi_cmd->callback([&]() {
    action = [&]() {
      auto k = load_complex(*complex_in);
      std::cout << euler_characteristic(*k) << "\n";
      return kExitOk;
    };
  });

  CLI::App* link_cmd = complex_cmd->add_subcommand("link", "link of a face class");
  link_cmd->add_option("--in", *complex_in, "complex JSON file")->required();
  link_cmd->add_option("--face", *face_ids, "vertex ids of the face, e.g. 0,3")->required();
  link_cmd->add_option("--out", *link_out, "write the link complex JSON here");
  link_cmd->callback([&]() {
    action = [&]() {
      auto k = load_complex(*complex_in);
      int cls = k->face_class_of(parse_ids(*face_ids));
      if (cls < 0) fail(ErrorCode::bad_input, "no face with those vertex ids");
      LinkComplex link = link_sphere(*k, cls);
      std::cout << "dim: " << link.complex.dim() << "\nchi: " << link.chi
                << "\nclosed: " << (link.closed ? 1 : 0)
                << "\nsphere_verified: " << (link.sphere_verified ? 1 : 0) << "\n";
      if (!link_out->empty()) save_json_file(*link_out, complex_to_json(link.complex));
      return kExitOk;
    };
  });

  // ---- map -------------------------------------------------------------------
  auto pair_cli = std::make_shared<PairCli>();
  auto radius = std::make_shared<double>(0.05);
  auto ends_csv = std::make_shared<std::string>();
  auto out_path = std::make_shared<std::string>();
  CLI::App* map_cmd = app.add_subcommand("map", "equivariant map utilities");
  map_cmd->require_subcommand(1);

  CLI::App* check_cmd = map_cmd->add_subcommand("check", "nondegeneracy and consistency");
  check_cmd->add_option("--complex", pair_cli->complex_path, "complex JSON")->required();
  check_cmd->add_option("--map", pair_cli->map_path, "map JSON")->required();
  check_cmd->callback([&]() {
    action = [&]() {
      auto k = load_complex(pair_cli->complex_path);
      MapFile mf = load_map(pair_cli->map_path, k);
      MapCheckReport rep = map_check(mf.map, mf.peripheral);
      std::cout << "degenerate_images: " << rep.nondeg.degenerate.size() << "\n";
      for (const std::string& s : rep.issues) std::cout << "issue: " << s << "\n";
      std::cout << "status: " << (rep.ok() ? "ok" : "failed") << "\n";
      return rep.ok() ? kExitOk : kExitValidation;
    };
  });

  CLI::App* perturb_cmd = map_cmd->add_subcommand("perturb", "random ball perturbation per class");
  perturb_cmd->add_option("--complex", pair_cli->complex_path, "complex JSON")->required();
  perturb_cmd->add_option("--map", pair_cli->map_path, "map JSON")->required();
  perturb_cmd->add_option("--radius", *radius, "ball radius")->required();
  perturb_cmd->add_option("--seed", pair_cli->seed, "RNG seed")->required();
  perturb_cmd->add_option("--ends", *ends_csv, "restrict to the sections of these ends");
  perturb_cmd->add_option("--out", *out_path, "output map JSON")->required();
  perturb_cmd->callback([&]() {
    action = [&]() {
      auto k = load_complex(pair_cli->complex_path);
      MapFile mf = load_map(pair_cli->map_path, k);
      std::vector<int> classes;
      if (!ends_csv->empty()) {
        std::set<int> reps;
        for (int end : parse_ids(*ends_csv))
          for (int id : end_section_ids(*k, end)) reps.insert(k->vertex_transport(id).rep_id);
        classes.assign(reps.begin(), reps.end());
      }
      EquivariantMap moved = perturb(mf.map, *radius, pair_cli->seed, classes);
      save_json_file(*out_path, map_to_json(moved, mf.peripheral));
      std::cout << *out_path << "\n";
      return kExitOk;
    };
  });

  // ---- census ------------------------------------------------------------------
  auto census_csv_out = std::make_shared<std::string>();
  auto allow_open = std::make_shared<bool>(false);
  auto no_degrees = std::make_shared<bool>(false);
  CLI::App* census_cmd = app.add_subcommand("census", "angle census per face class");
  census_cmd->add_option("--complex", pair_cli->complex_path, "complex JSON")->required();
  census_cmd->add_option("--map", pair_cli->map_path, "map JSON")->required();
  census_cmd->add_option("--samples", pair_cli->samples, "Monte Carlo samples per angle");
  census_cmd->add_option("--seed", pair_cli->seed, "RNG seed")->required();
  census_cmd->add_option("--threads", pair_cli->threads, "sampling threads");
  census_cmd->add_option("--face", *face_ids, "only the class of these vertex ids");
  census_cmd->add_option("--csv", *census_csv_out, "also write the table here");
  census_cmd->add_flag("--allow-open", *allow_open, "sum open stars (cone sections)");
  census_cmd->add_flag("--no-degrees", *no_degrees, "skip link degree attachment");
  auto degree_seed = std::make_shared<std::uint64_t>(1);
  census_cmd->add_option("--degree-seed", *degree_seed, "seed for the generic degree direction");
  census_cmd->callback([&]() {
    action = [&]() {
      auto k = load_complex(pair_cli->complex_path);
      MapFile mf = load_map(pair_cli->map_path, k);
      CensusConfig cfg;
      cfg.samples = pair_cli->samples;
      cfg.seed = pair_cli->seed;
      cfg.threads = pair_cli->threads;
      cfg.allow_open_star = *allow_open;
      cfg.attach_degrees = !*no_degrees;
      cfg.degree_seed = *degree_seed;
      std::vector<CensusEntry> entries;
      if (!face_ids->empty()) {
        int cls = k->face_class_of(parse_ids(*face_ids));
        if (cls < 0) fail(ErrorCode::bad_input, "no face with those vertex ids");
        entries.push_back(census(mf.map, cls, cfg));
      } else {
        entries = census_all(mf.map, cfg);
      }
      std::string table = census_csv(*k, entries);
      std::cout << table;
      if (cfg.attach_degrees)
        std::cout << "degree_seed: " << cfg.degree_seed << "\n";
      if (!census_csv_out->empty()) write_text(*census_csv_out, table);
      bool any_uncertified = false;
      for (const CensusEntry& e : entries) {
        if (!e.ok()) return kExitValidation;
        if (!e.certified) any_uncertified = true;
      }
      return any_uncertified ? kExitUncertified : kExitOk;
    };
  });

  // ---- volume ---------------------------------------------------------------
  auto method = std::make_shared<std::string>("both");
  auto report_path = std::make_shared<std::string>();
  auto denominator = std::make_shared<int>(1);
  CLI::App* vol_cmd = app.add_subcommand("volume", "volume of the representation");
  vol_cmd->add_option("--complex", pair_cli->complex_path, "complex JSON")->required();
  vol_cmd->add_option("--map", pair_cli->map_path, "map JSON")->required();
  vol_cmd->add_option("--method", *method, "census, simplices or both")
      ->check(CLI::IsMember({"census", "simplices", "both"}));
  vol_cmd->add_option("--samples", pair_cli->samples, "Monte Carlo samples per angle");
  vol_cmd->add_option("--seed", pair_cli->seed, "RNG seed")->required();
  vol_cmd->add_option("--threads", pair_cli->threads, "sampling threads");
  vol_cmd->add_option("--report", *report_path, "CSV report path");
  vol_cmd->add_option("--denominator", *denominator, "covering-degree denominator hint");
  vol_cmd->add_flag("--allow-open", *allow_open, "sum open stars (cone sections)");
  vol_cmd->callback([&]() {
    action = [&]() {
      auto k = load_complex(pair_cli->complex_path);
      MapFile mf = load_map(pair_cli->map_path, k);
      CensusConfig cfg;
      cfg.samples = pair_cli->samples;
      cfg.seed = pair_cli->seed;
      cfg.threads = pair_cli->threads;
      cfg.allow_open_star = *allow_open;
      std::ostringstream os;
      os << "route,value,stderr,exact\n";
      bool did_census = *method != "simplices";
      bool did_simplices = *method != "census";
      if (did_simplices) {
        Estimate v = rep_volume_simplices(mf.map, cfg);
        os << "simplices," << format_double(v.value) << "," << format_double(v.stderr_) << ","
           << (v.exact ? 1 : 0) << "\n";
      }
      IntegralityReport rep;
      if (did_census) {
        rep = integrality_report(mf.map, cfg, *denominator);
        os << "census," << format_double(rep.volume.value) << ","
           << format_double(rep.volume.stderr_) << "," << (rep.volume.exact ? 1 : 0) << "\n";
        os << "normalized," << format_double(rep.normalized) << "," << format_double(rep.stderr_)
           << "," << (rep.volume.exact ? 1 : 0) << "\n";
      }
      std::string table = os.str();
      std::cout << table;
      if (did_census) {
        std::cout << "verdict: " << rep.verdict;
        if (!rep.note.empty()) std::cout << " [" << rep.note << "]";
        std::cout << "\n";
      }
      if (!report_path->empty()) write_text(*report_path, table);
      if (did_census && rep.verdict == "uncertified") return kExitUncertified;
      return kExitOk;
    };
  });

  // ---- gauss-bonnet ------------------------------------------------------------
  CLI::App* gb_cmd = app.add_subcommand("gauss-bonnet", "geometric census bookkeeping");
  gb_cmd->add_option("--complex", pair_cli->complex_path, "complex JSON")->required();
  gb_cmd->add_option("--map", pair_cli->map_path, "geometric map JSON")->required();
  gb_cmd->add_option("--samples", pair_cli->samples, "Monte Carlo samples per angle");
  gb_cmd->add_option("--seed", pair_cli->seed, "RNG seed")->required();
  gb_cmd->add_option("--threads", pair_cli->threads, "sampling threads");
  gb_cmd->callback([&]() {
    action = [&]() {
      auto k = load_complex(pair_cli->complex_path);
      MapFile mf = load_map(pair_cli->map_path, k);
      CensusConfig cfg;
      cfg.samples = pair_cli->samples;
      cfg.seed = pair_cli->seed;
      cfg.threads = pair_cli->threads;
      GaussBonnetReport rep = gauss_bonnet_check(mf.map, cfg);
      std::cout << "entries_ok: " << (rep.entries_ok ? 1 : 0) << "\n";
      std::cout << "chi: " << rep.chi << "\n";
      std::cout << "volume: " << format_double(rep.volume.value) << "\n";
      if (rep.chi_formula_applicable)
        std::cout << "volume_from_chi: " << format_double(rep.volume_from_chi)
                  << " match: " << (rep.chi_formula_matches ? 1 : 0) << "\n";
      return rep.entries_ok ? kExitOk : kExitValidation;
    };
  });

  // ---- cusp-lab -----------------------------------------------------------------
  auto exp_path = std::make_shared<std::string>();
  auto kmax = std::make_shared<int>(16);
  auto with_totals = std::make_shared<bool>(false);
  auto gnuplot = std::make_shared<bool>(false);
  auto cover_paths = std::make_shared<std::array<std::string, 3>>();
  auto degree_opt = std::make_shared<int>(0);
  CLI::App* lab = app.add_subcommand("cusp-lab", "toric cusp experiments");
  lab->require_subcommand(1);

  CLI::App* limit_cmd = lab->add_subcommand("limit", "perturbation series toward the base map");
  limit_cmd->add_option("--experiment", *exp_path, "experiment JSON")->required();
  limit_cmd->add_option("--kmax", *kmax, "largest k of the doubling schedule");
  limit_cmd->add_option("--samples", pair_cli->samples, "Monte Carlo samples per angle");
  limit_cmd->add_option("--seed", pair_cli->seed, "RNG seed")->required();
  limit_cmd->add_option("--threads", pair_cli->threads, "sampling threads");
  limit_cmd->add_option("--out", *out_path, "series CSV path")->required();
  limit_cmd->add_flag("--totals", *with_totals, "also track the alternating census total");
  limit_cmd->add_flag("--gnuplot", *gnuplot, "emit a plain-text gnuplot script next to the CSV");
  limit_cmd->callback([&]() {
    action = [&]() {
      CuspExperiment e = experiment_from_json(load_json_file(*exp_path));
      e.seed = pair_cli->seed;
      std::vector<int> schedule;
      for (int k = 1; k <= *kmax; k *= 2) schedule.push_back(k);
      CensusConfig cfg;
      cfg.samples = pair_cli->samples;
      cfg.seed = pair_cli->seed;
      cfg.threads = pair_cli->threads;
      cfg.allow_open_star = true;
      cfg.attach_degrees = false;
      LimitSeries series = cusp_limit_experiment(e, schedule, cfg, *with_totals);
      std::ostringstream os;
      os << "k,radius,end,value,stderr,retries";
      if (*with_totals) os << ",total,total_stderr";
      os << "\n";
      for (const LimitPoint& p : series.points) {
        for (size_t i = 0; i < p.cusp_entries.size(); ++i) {
          os << p.k << "," << format_double(p.radius) << "," << i << ","
             << format_double(p.cusp_entries[i].value) << ","
             << format_double(p.cusp_entries[i].stderr_) << "," << p.retries;
          if (*with_totals)
            os << "," << format_double(p.total.value) << "," << format_double(p.total.stderr_);
          os << "\n";
        }
      }
      write_text(*out_path, os.str());
      std::cout << os.str();
      std::cout << "fitted_c: " << format_double(series.fitted_c) << "\n";
      if (*gnuplot) {
        std::string gp = "set datafile separator ','\nset logscale xy\n"
                         "plot '" + *out_path + "' every ::1 using 1:(abs($4)) with linespoints"
                         " title 'cusp census'\n";
        write_text(*out_path + ".gp", gp);
      }
      return kExitOk;
    };
  });

  CLI::App* cover_cmd = lab->add_subcommand("covering", "covering-degree census relation");
  cover_cmd->add_option("--base", pair_cli->complex_path, "base complex JSON")->required();
  cover_cmd->add_option("--base-map", pair_cli->map_path, "base map JSON")->required();
  cover_cmd->add_option("--cover", (*cover_paths)[0], "cover complex JSON")->required();
  cover_cmd->add_option("--cover-map", (*cover_paths)[1], "cover map JSON")->required();
  cover_cmd->add_option("--covering", (*cover_paths)[2], "covering data JSON")->required();
  cover_cmd->add_option("--deg", *degree_opt, "expected covering degree (cross-check)");
  cover_cmd->add_option("--samples", pair_cli->samples, "Monte Carlo samples per angle");
  cover_cmd->add_option("--seed", pair_cli->seed, "RNG seed")->required();
  cover_cmd->add_option("--threads", pair_cli->threads, "sampling threads");
  cover_cmd->callback([&]() {
    action = [&]() {
      auto kb = load_complex(pair_cli->complex_path);
      auto kc = load_complex((*cover_paths)[0]);
      MapFile fb = load_map(pair_cli->map_path, kb);
      MapFile fc = load_map((*cover_paths)[1], kc);
      CoveringData data = covering_from_json(load_json_file((*cover_paths)[2]));
      if (*degree_opt > 0 && *degree_opt != data.degree)
        fail(ErrorCode::bad_input, "--deg disagrees with the covering file");
      CensusConfig cfg;
      cfg.samples = pair_cli->samples;
      cfg.seed = pair_cli->seed;
      cfg.threads = pair_cli->threads;
      cfg.allow_open_star = true;
      CoveringReport rep = covering_relation_check(fb.map, fc.map, data, cfg);
      for (const std::string& s : rep.issues) std::cout << "issue: " << s << "\n";
      std::cout << "covering_valid: " << (rep.covering_valid ? 1 : 0) << "\n";
      std::cout << "end,base_value,base_stderr,cover_value,cover_stderr,holds\n";
      for (const auto& p : rep.pairs)
        std::cout << p.end << "," << format_double(p.base.value) << ","
                  << format_double(p.base.stderr_) << "," << format_double(p.cover.value) << ","
                  << format_double(p.cover.stderr_) << "," << (p.holds ? 1 : 0) << "\n";
      if (rep.has_volumes)
        std::cout << "normalized_base: " << format_double(rep.normalized_base)
                  << "\nnormalized_cover: " << format_double(rep.normalized_cover) << "\n"
                  << "note: " << rep.denominator_note << "\n";
      std::cout << "relation_holds: " << (rep.relation_holds ? 1 : 0) << "\n";
      return rep.covering_valid && rep.relation_holds ? kExitOk : kExitValidation;
    };
  });

  // ---- fixtures -------------------------------------------------------------------
  auto fixture_name = std::make_shared<std::string>();
  auto fixture_dir = std::make_shared<std::string>(".");
  auto fixture_dim = std::make_shared<int>(3);
  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "bundled example data");
  CLI::App* emit = fixtures_cmd->add_subcommand("emit", "write a fixture to disk");
  emit->add_option("name", *fixture_name,
                   "genus2 | punctured-torus | cone4d | cover2d | cover4d | winding2 | two-end | "
                   "random-simplex")
      ->required();
  emit->add_option("--out", *fixture_dir, "output directory");
  emit->add_option("--dim", *fixture_dim, "ambient dimension for random-simplex");
  emit->add_option("--seed", pair_cli->seed, "seed for random-simplex");
  emit->callback([&]() {
    action = [&]() {
      return emit_fixture(*fixture_name, *fixture_dir, *fixture_dim, pair_cli->seed);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
