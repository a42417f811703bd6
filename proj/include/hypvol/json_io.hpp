#ifndef HYPVOL_JSON_IO_HPP
#define HYPVOL_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hypvol/cusp_lab.hpp"
#include "hypvol/fixtures.hpp"

namespace hypvol {

using ojson = nlohmann::ordered_json;

ojson point_to_json(const Point& p);
Point point_from_json(const ojson& j);

ojson simplex_to_json(const GeodesicSimplex& t);
GeodesicSimplex simplex_from_json(const ojson& j);

ojson complex_to_json(const Complex& k);
Complex complex_from_json(const ojson& j);

// Map files carry the representation, the images and optional peripheral
// words used by `map check`.
struct MapFile {
  EquivariantMap map;
  std::vector<std::pair<int, std::vector<int>>> peripheral;
};

ojson map_to_json(const EquivariantMap& f,
                  const std::vector<std::pair<int, std::vector<int>>>& peripheral = {});
MapFile map_from_json(const ojson& j, std::shared_ptr<const Complex> source);

ojson target_to_json(const ToricTarget& t);
ToricTarget target_from_json(const ojson& j);

ojson experiment_to_json(const CuspExperiment& e);
CuspExperiment experiment_from_json(const ojson& j);

ojson covering_to_json(const CoveringData& d);
CoveringData covering_from_json(const ojson& j);

ojson load_json_file(const std::string& path);
void save_json_file(const std::string& path, const ojson& j);

// Deterministic double formatting for CSV output.
std::string format_double(double v);

}  // namespace hypvol

#endif
