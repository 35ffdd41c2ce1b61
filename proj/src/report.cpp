#include "cubecrys/report.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "cubecrys/error.hpp"

namespace cubecrys {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 computation failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

namespace {

const Json &require(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

void require_format(const Json &j, std::string_view format) {
  const Json &f = require(j, "format");
  if (!f.is_string() || f.get<std::string>() != format)
    throw ParseError("expected format '" + std::string(format) + "'");
}

std::size_t size_from_json(const Json &j, const char *what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Json residuals_json(const std::vector<RatMatrix> &residuals) {
  Json out = Json::array();
  for (const auto &r : residuals)
    out.push_back(to_json(r));
  return out;
}

Json obstruction_json(const Obstruction &o) {
  Json characters = Json::array();
  for (auto [trace, det] : o.same_order_characters)
    characters.push_back({{"trace", trace}, {"determinant", det}});
  return Json{{"kind", to_string(o.kind)},
              {"element", o.element},
              {"matrix", to_json(o.matrix)},
              {"order", o.order},
              {"determinant", o.determinant},
              {"trace", to_json(o.trace)},
              {"available_orders", o.available_orders},
              {"same_order_characters", characters}};
}

} // namespace

Json wallspace_to_json(const FiniteWallspace &ws) {
  Json j{{"format", kWallsFormat}};
  if (ws.is_geometric()) {
    const auto &d = ws.geometric_data();
    Json window = Json::array();
    for (const auto &[lo, hi] : d.window)
      window.push_back({to_json(lo), to_json(hi)});
    Json walls = Json::array();
    for (const auto &w : d.walls)
      walls.push_back({{"normal", to_json(w.normal)}, {"offset", to_json(w.offset)}});
    j["dimension"] = d.dimension;
    j["window"] = window;
    j["walls"] = walls;
    j["base_point"] = to_json(d.base_point);
  } else {
    const auto &d = ws.partition_data();
    Json partitions = Json::array();
    for (const auto &sides : d.sides) {
      std::string s;
      for (bool b : sides)
        s += b ? '1' : '0';
      partitions.push_back(s);
    }
    j["point_count"] = d.point_count;
    j["partitions"] = partitions;
    j["base_point"] = d.base_point;
  }
  return j;
}

FiniteWallspace wallspace_from_json(const Json &j) {
  require_format(j, kWallsFormat);
  if (j.contains("partitions")) {
    PartitionWalls d;
    d.point_count = size_from_json(require(j, "point_count"), "point_count");
    d.base_point = size_from_json(require(j, "base_point"), "base_point");
    for (const auto &p : require(j, "partitions")) {
      if (!p.is_string())
        throw ParseError("partition must be a 0/1 string");
      std::vector<bool> sides;
      for (char c : p.get<std::string>()) {
        if (c != '0' && c != '1')
          throw ParseError("partition must be a 0/1 string");
        sides.push_back(c == '1');
      }
      d.sides.push_back(std::move(sides));
    }
    return FiniteWallspace::partition(std::move(d));
  }
  GeometricWalls d;
  d.dimension = size_from_json(require(j, "dimension"), "dimension");
  const Json &window = require(j, "window");
  if (!window.is_array())
    throw ParseError("window must be an array of [lo, hi] pairs");
  for (const auto &interval : window) {
    if (!interval.is_array() || interval.size() != 2)
      throw ParseError("window entry must be a [lo, hi] pair");
    d.window.emplace_back(rational_from_json(interval[0]), rational_from_json(interval[1]));
  }
  const Json &walls = require(j, "walls");
  if (!walls.is_array())
    throw ParseError("walls must be an array");
  for (const auto &w : walls)
    d.walls.push_back({vector_from_json(require(w, "normal")), rational_from_json(require(w, "offset"))});
  d.base_point = vector_from_json(require(j, "base_point"));
  return FiniteWallspace::geometric(std::move(d));
}

Json complex_to_json(const CubeComplex &c, const FiniteWallspace *walls) {
  Json zero_cubes = Json::array();
  for (auto o : c.zero_cubes())
    zero_cubes.push_back(o.str(c.wall_count()));
  Json edges = Json::array();
  for (const auto &e : c.edges())
    edges.push_back({e.a, e.b});
  Json j{{"format", kComplexFormat}, {"wall_count", c.wall_count()}};
  if (walls)
    j["walls"] = wallspace_to_json(*walls);
  j["zero_cubes"] = zero_cubes;
  j["edges"] = edges;
  return j;
}

CubeComplex complex_from_json(const Json &j) {
  require_format(j, kComplexFormat);
  std::size_t wall_count = size_from_json(require(j, "wall_count"), "wall_count");
  if (j.contains("walls") && wallspace_from_json(j.at("walls")).wall_count() != wall_count)
    throw ParseError("embedded walls disagree with wall_count");
  std::vector<Orientation> zero_cubes;
  for (const auto &z : require(j, "zero_cubes")) {
    if (!z.is_string() || z.get<std::string>().size() != wall_count)
      throw ParseError("each 0-cube must be a bitstring of length wall_count");
    zero_cubes.push_back(Orientation::parse(z.get<std::string>()));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto &e : require(j, "edges")) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("each edge must be a pair of vertex indices");
    edges.emplace_back(size_from_json(e[0], "edge endpoint"), size_from_json(e[1], "edge endpoint"));
  }
  return {wall_count, std::move(zero_cubes), std::move(edges)};
}

Json validation_to_json(const ValidationReport &r) {
  return Json{{"name", r.name},
              {"dimension", r.dimension},
              {"lattice_determinant", to_json(r.lattice_determinant)},
              {"point_group_order", r.point_group_order},
              {"generator_orders", r.generator_orders},
              {"element_orders", r.element_orders}};
}

Json verdict_to_json(const CrystGroup &g, const Verdict &v) {
  if (const auto *w = std::get_if<HyperoctahedralWitness>(&v)) {
    Json images = Json::array();
    for (const auto &s : w->generator_images)
      images.push_back(to_json(s));
    Json iota = Json::array();
    for (const auto &s : w->iota)
      iota.push_back(to_json(s));
    Json basis = Json::array();
    for (const auto &b : w->basis)
      basis.push_back(to_json(b));
    auto residuals = conjugation_residuals(g, *w);
    bool all_zero = std::all_of(residuals.begin(), residuals.end(),
                                [](const RatMatrix &m) { return m.is_zero(); });
    return Json{{"verdict", "accepted"},
                {"witness",
                 {{"generator_images", images},
                  {"iota", iota},
                  {"conjugator", to_json(w->conjugator)},
                  {"basis", basis},
                  {"seed_index", w->seed_index}}},
                {"residuals", residuals_json(residuals)},
                {"residuals_zero", all_zero}};
  }
  const auto &cert = std::get<RejectionCertificate>(v);
  Json c{{"reason", to_string(cert.reason)}, {"description", cert.describe()}};
  if (cert.obstruction)
    c["obstruction"] = obstruction_json(*cert.obstruction);
  c["assignments_examined"] = cert.assignments_examined;
  return Json{{"verdict", "rejected"}, {"certificate", c}};
}

Json wall_family_to_json(const WallFamily &fam) {
  Json basis = Json::array();
  for (const auto &b : fam.basis)
    basis.push_back(to_json(b));
  Json walls = Json::array();
  for (std::size_t i = 0; i < fam.base_walls.size(); ++i)
    walls.push_back({{"normal", to_json(fam.base_walls[i].normal)},
                     {"spacing", to_json(fam.base_spacing[i])},
                     {"class", fam.base_class[i]}});
  Json classes = Json::array();
  for (const auto &c : fam.classes)
    classes.push_back(
        {{"normal", to_json(c.normal)}, {"spacing", to_json(c.spacing)}, {"base_wall", c.base_wall}});
  return Json{{"basis", basis}, {"base_walls", walls}, {"classes", classes}};
}

Cubulation cubulate(const CrystGroup &g, bool use_witness_basis, std::uint64_t seed,
                    std::size_t samples) {
  std::vector<RatVector> basis;
  if (use_witness_basis) {
    Verdict v = is_hyperoctahedral(g);
    const auto *w = std::get_if<HyperoctahedralWitness>(&v);
    if (!w)
      throw InputError("group '" + g.name +
                       "' is not hyperoctahedral, so it has no witness basis");
    basis = hyperoctahedral_basis(g, *w);
  } else {
    for (std::size_t i = 0; i < g.dimension; ++i)
      basis.push_back(g.lattice_basis.column(i));
  }
  Cubulation out;
  out.family = direction_class_count(g, basis);
  const auto action = induced_action_on_RN(g, out.family);
  for (auto e : g.points().generator_elements)
    out.generator_action.push_back(action[e]);
  out.stabilized = stabilize(g, out.family);
  out.separation = check_linear_separation(g, out.family, sample_pairs(g.dimension, samples, seed));
  return out;
}

Json cubulation_to_json(const Cubulation &c) {
  Json action = Json::array();
  for (const auto &s : c.generator_action)
    action.push_back(to_json(s));
  return Json{{"N", c.family.class_count()},
              {"wall_family", wall_family_to_json(c.family)},
              {"generator_action", action},
              {"stabilized", group_to_json(c.stabilized)},
              {"linear_separation",
               {{"pairs_checked", c.separation.pairs_checked},
                {"max_norm_squared", to_json(c.separation.max_norm_squared)},
                {"worst_ratio", to_json(c.separation.worst_ratio)},
                {"min_lower_bound_slack", to_json(c.separation.min_lower_bound_slack)}}}};
}

Json complex_checks_to_json(const CubeComplex &c) {
  bool hamming = true;
  for (std::size_t v = 0; v < c.vertex_count() && hamming; ++v) {
    auto dist = c.graph_distances(v);
    for (std::size_t u = 0; u < c.vertex_count(); ++u)
      if (dist[u] != static_cast<std::size_t>(
                         std::popcount(c.zero_cubes()[u].bits ^ c.zero_cubes()[v].bits)))
        hamming = false;
  }
  return Json{{"vertex_count", c.vertex_count()},
              {"edge_count", c.edges().size()},
              {"hyperplanes", c.hyperplanes()},
              {"hamming_equals_graph_distance", hamming},
              {"is_median_graph", is_median_graph(c)},
              {"duality_check", duality_check(c)}};
}

std::vector<CatalogRow> classify_catalog() {
  auto groups = load_catalog();
  std::vector<std::future<CatalogRow>> pending;
  for (const auto &g : groups)
    pending.push_back(std::async(std::launch::async, [&g]() {
      CatalogRow row;
      row.name = g.name;
      row.dimension = g.dimension;
      row.point_group_order = g.points().order();
      Verdict v = is_hyperoctahedral(g);
      row.accepted = std::holds_alternative<HyperoctahedralWitness>(v);
      if (!row.accepted)
        row.reason = std::get<RejectionCertificate>(v).reason;
      CrystGroup stabilized = stabilize(g);
      row.wall_classes = stabilized.dimension;
      Verdict sv = is_hyperoctahedral(stabilized);
      if (const auto *w = std::get_if<HyperoctahedralWitness>(&sv)) {
        row.stabilized_accepted = true;
        row.stabilized_identity_conjugator =
            w->conjugator == RatMatrix::identity(stabilized.dimension);
      }
      return row;
    }));
  std::vector<CatalogRow> rows;
  for (auto &p : pending)
    rows.push_back(p.get());
  return rows;
}

Json catalog_to_json(const std::vector<CatalogRow> &rows) {
  Json out = Json::array();
  for (const auto &r : rows) {
    Json j{{"name", r.name},
           {"dimension", r.dimension},
           {"point_group_order", r.point_group_order},
           {"verdict", r.accepted ? "accepted" : "rejected"}};
    j["reason"] = r.reason ? Json(to_string(*r.reason)) : Json(nullptr);
    j["N"] = r.wall_classes;
    j["stabilized_accepted"] = r.stabilized_accepted;
    j["stabilized_identity_conjugator"] = r.stabilized_identity_conjugator;
    out.push_back(j);
  }
  return out;
}

namespace {

bool is_scalar_array(const Json &j) {
  return j.is_array() &&
         std::none_of(j.begin(), j.end(), [](const Json &x) { return x.is_structured(); });
}

bool is_flat_matrix(const Json &j) {
  return j.is_array() && !j.empty() &&
         std::all_of(j.begin(), j.end(), [](const Json &x) { return is_scalar_array(x); });
}

std::string scalar_text(const Json &j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string inline_text(const Json &j) {
  if (!j.is_array())
    return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i)
    s += (i ? " " : "") + inline_text(j[i]);
  return s + "]";
}

void render(std::ostream &out, const Json &j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto &[key, value] : j.items()) {
      if (!value.is_structured() || is_scalar_array(value) || is_flat_matrix(value)) {
        out << pad << key << ": " << inline_text(value) << '\n';
      } else {
        out << pad << key << ":\n";
        render(out, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto &x : j) {
      if (x.is_structured() && !is_scalar_array(x) && !is_flat_matrix(x)) {
        out << pad << "-\n";
        render(out, x, indent + 2);
      } else {
        out << pad << "- " << inline_text(x) << '\n';
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

} // namespace

std::string render_text(const Json &report) {
  std::ostringstream out;
  if (report.contains("catalog")) {
    out << std::left << std::setw(12) << "group" << std::setw(5) << "dim" << std::setw(6) << "|P|"
        << std::setw(10) << "verdict" << std::setw(20) << "reason" << std::setw(4) << "N"
        << "stabilized\n";
    for (const auto &row : report["catalog"]) {
      out << std::setw(12) << row["name"].get<std::string>() << std::setw(5)
          << row["dimension"].get<std::size_t>() << std::setw(6)
          << row["point_group_order"].get<std::size_t>() << std::setw(10)
          << row["verdict"].get<std::string>() << std::setw(20)
          << (row["reason"].is_null() ? "-" : row["reason"].get<std::string>()) << std::setw(4)
          << row["N"].get<std::size_t>()
          << (row["stabilized_accepted"].get<bool>() ? "accepted" : "rejected") << '\n';
    }
    out << "input_digest: " << report["input_digest"].get<std::string>() << '\n';
    return out.str();
  }
  render(out, report, 0);
  return out.str();
}

} // namespace cubecrys
