#include <string>
#include <vector>

#include "cubecrys/crystallographic_group.hpp"
#include "cubecrys/error.hpp"
#include "cubecrys/json_io.hpp"

namespace cubecrys {

namespace {

// Wallpaper groups in lattice coordinates. Lattices: oblique, rectangular
// diag(1, 3/2), centered rectangular with primitive rhombic basis, square,
// and hexagonal with basis a = (1,0), b = (1/2, 13/15), a rational stand-in
// for the 60-degree basis (1/2, sqrt(3)/2). In that basis the 6-fold rotation
// is a -> b, b -> b - a.
constexpr const char *kCatalogJson = R"json([
{"format":"cubecrys-group/1","name":"p1","dimension":2,"point_group_order":1,
 "lattice_basis":[["1","1/3"],["0","5/4"]],
 "point_generators":[],"translation_parts":[]},
{"format":"cubecrys-group/1","name":"p2","dimension":2,"point_group_order":2,
 "lattice_basis":[["1","1/3"],["0","5/4"]],
 "point_generators":[[["-1","0"],["0","-1"]]],"translation_parts":[["0","0"]]},
{"format":"cubecrys-group/1","name":"pm","dimension":2,"point_group_order":2,
 "lattice_basis":[["1","0"],["0","3/2"]],
 "point_generators":[[["-1","0"],["0","1"]]],"translation_parts":[["0","0"]]},
{"format":"cubecrys-group/1","name":"pg","dimension":2,"point_group_order":2,
 "lattice_basis":[["1","0"],["0","3/2"]],
 "point_generators":[[["-1","0"],["0","1"]]],"translation_parts":[["0","1/2"]]},
{"format":"cubecrys-group/1","name":"cm","dimension":2,"point_group_order":2,
 "lattice_basis":[["1/2","1/2"],["-1","1"]],
 "point_generators":[[["0","1"],["1","0"]]],"translation_parts":[["0","0"]]},
{"format":"cubecrys-group/1","name":"pmm","dimension":2,"point_group_order":4,
 "lattice_basis":[["1","0"],["0","3/2"]],
 "point_generators":[[["-1","0"],["0","1"]],[["1","0"],["0","-1"]]],
 "translation_parts":[["0","0"],["0","0"]]},
{"format":"cubecrys-group/1","name":"pmg","dimension":2,"point_group_order":4,
 "lattice_basis":[["1","0"],["0","3/2"]],
 "point_generators":[[["-1","0"],["0","-1"]],[["-1","0"],["0","1"]]],
 "translation_parts":[["0","0"],["1/2","0"]]},
{"format":"cubecrys-group/1","name":"pgg","dimension":2,"point_group_order":4,
 "lattice_basis":[["1","0"],["0","3/2"]],
 "point_generators":[[["-1","0"],["0","-1"]],[["-1","0"],["0","1"]]],
 "translation_parts":[["0","0"],["1/2","1/2"]]},
{"format":"cubecrys-group/1","name":"cmm","dimension":2,"point_group_order":4,
 "lattice_basis":[["1/2","1/2"],["-1","1"]],
 "point_generators":[[["0","1"],["1","0"]],[["-1","0"],["0","-1"]]],
 "translation_parts":[["0","0"],["0","0"]]},
{"format":"cubecrys-group/1","name":"p4","dimension":2,"point_group_order":4,
 "lattice_basis":[["1","0"],["0","1"]],
 "point_generators":[[["0","-1"],["1","0"]]],"translation_parts":[["0","0"]]},
{"format":"cubecrys-group/1","name":"p4m","dimension":2,"point_group_order":8,
 "lattice_basis":[["1","0"],["0","1"]],
 "point_generators":[[["0","-1"],["1","0"]],[["1","0"],["0","-1"]]],
 "translation_parts":[["0","0"],["0","0"]]},
{"format":"cubecrys-group/1","name":"p4g","dimension":2,"point_group_order":8,
 "lattice_basis":[["1","0"],["0","1"]],
 "point_generators":[[["0","-1"],["1","0"]],[["-1","0"],["0","1"]]],
 "translation_parts":[["0","0"],["1/2","1/2"]]},
{"format":"cubecrys-group/1","name":"p3","dimension":2,"point_group_order":3,
 "lattice_basis":[["1","1/2"],["0","13/15"]],
 "point_generators":[[["-1","-1"],["1","0"]]],"translation_parts":[["0","0"]]},
{"format":"cubecrys-group/1","name":"p3m1","dimension":2,"point_group_order":6,
 "lattice_basis":[["1","1/2"],["0","13/15"]],
 "point_generators":[[["-1","-1"],["1","0"]],[["0","1"],["1","0"]]],
 "translation_parts":[["0","0"],["0","0"]]},
{"format":"cubecrys-group/1","name":"p31m","dimension":2,"point_group_order":6,
 "lattice_basis":[["1","1/2"],["0","13/15"]],
 "point_generators":[[["-1","-1"],["1","0"]],[["1","1"],["0","-1"]]],
 "translation_parts":[["0","0"],["0","0"]]},
{"format":"cubecrys-group/1","name":"p6","dimension":2,"point_group_order":6,
 "lattice_basis":[["1","1/2"],["0","13/15"]],
 "point_generators":[[["0","-1"],["1","1"]]],"translation_parts":[["0","0"]]},
{"format":"cubecrys-group/1","name":"p6m","dimension":2,"point_group_order":12,
 "lattice_basis":[["1","1/2"],["0","13/15"]],
 "point_generators":[[["0","-1"],["1","1"]],[["0","1"],["1","0"]]],
 "translation_parts":[["0","0"],["0","0"]]},
{"format":"cubecrys-group/1","name":"W","dimension":2,"point_group_order":6,
 "lattice_basis":[["1","1/2"],["0","13/15"]],
 "point_generators":[[["0","-1"],["1","1"]]],"translation_parts":[["0","0"]]},
{"format":"cubecrys-group/1","name":"Z_x_W","dimension":3,"point_group_order":6,
 "lattice_basis":[["1","1/2","0"],["0","13/15","0"],["0","0","1"]],
 "point_generators":[[["0","-1","0"],["1","1","0"],["0","0","1"]]],
 "translation_parts":[["0","0","0"]]},
{"format":"cubecrys-group/1","name":"Z_rtimes_W","dimension":3,"point_group_order":6,
 "lattice_basis":[["1","1/2","0"],["0","13/15","0"],["0","0","1"]],
 "point_generators":[[["0","-1","0"],["1","1","0"],["0","0","-1"]]],
 "translation_parts":[["0","0","0"]]}
])json";

} // namespace

std::vector<CrystGroup> load_catalog() {
  std::vector<CrystGroup> out;
  try {
    for (const auto &entry : Json::parse(kCatalogJson)) {
      CrystGroup g = group_from_json(entry);
      validate(g);
      out.push_back(std::move(g));
    }
  } catch (const CatalogIntegrityError &) {
    throw;
  } catch (const std::exception &e) {
    throw CatalogIntegrityError(std::string("embedded catalog is corrupt: ") + e.what());
  }
  return out;
}

CrystGroup catalog_entry(const std::string &name) {
  for (auto &g : load_catalog())
    if (g.name == name)
      return g;
  throw InputError("no catalog entry named '" + name + "'");
}

} // namespace cubecrys
