#include "cubecrys/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cubecrys/error.hpp"

namespace cubecrys {

Json to_json(const Rational &r) { return r.str(); }

Json to_json(const RatVector &v) {
  Json j = Json::array();
  for (const auto &x : v)
    j.push_back(to_json(x));
  return j;
}

Json to_json(const RatMatrix &m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    j.push_back(to_json(m.row(r)));
  return j;
}

Json to_json(const SignedPermutation &s) {
  Json perm = Json::array();
  for (auto p : s.perm())
    perm.push_back(p + 1);
  return Json{{"perm", perm}, {"signs", s.signs()}};
}

Json to_json(const SimplicialComplex &c) {
  Json edges = Json::array();
  for (auto [a, b] : c.edges())
    edges.push_back({a, b});
  return Json{{"vertices", c.labels()}, {"edges", edges}};
}

Rational rational_from_json(const Json &j) {
  if (j.is_string())
    return Rational::parse(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

RatVector vector_from_json(const Json &j) {
  if (!j.is_array())
    throw ParseError("expected an array of rationals, got " + j.dump());
  RatVector v;
  for (const auto &x : j)
    v.push_back(rational_from_json(x));
  return v;
}

RatMatrix matrix_from_json(const Json &j) {
  if (!j.is_array())
    throw ParseError("expected a row-major matrix, got " + j.dump());
  std::vector<RatVector> rows;
  for (const auto &r : j)
    rows.push_back(vector_from_json(r));
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw ParseError("ragged matrix: " + j.dump());
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

SignedPermutation signed_permutation_from_json(const Json &j) {
  try {
    std::vector<std::size_t> perm;
    for (const auto &p : j.at("perm")) {
      auto v = p.get<std::int64_t>();
      if (v < 1)
        throw ParseError("signed permutation images are 1-based");
      perm.push_back(static_cast<std::size_t>(v - 1));
    }
    return {perm, j.at("signs").get<std::vector<int>>()};
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("signed permutation: ") + e.what());
  }
}

SimplicialComplex simplicial_complex_from_json(const Json &j) {
  try {
    auto labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<SimplicialComplex::Edge> edges;
    for (const auto &e : j.at("edges"))
      edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return {std::move(labels), std::move(edges)};
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("simplicial complex: ") + e.what());
  }
}

Json group_to_json(const CrystGroup &g) {
  Json gens = Json::array();
  for (const auto &m : g.point_generators)
    gens.push_back(to_json(m));
  Json trans = Json::array();
  for (const auto &t : g.translation_parts)
    trans.push_back(to_json(t));
  Json j{{"format", kGroupFormat},
         {"name", g.name},
         {"dimension", g.dimension},
         {"lattice_basis", to_json(g.lattice_basis)},
         {"point_generators", gens},
         {"translation_parts", trans}};
  if (g.expected_point_group_order)
    j["point_group_order"] = *g.expected_point_group_order;
  return j;
}

CrystGroup group_from_json(const Json &j) {
  if (!j.is_object())
    throw ParseError("group file: expected a JSON object");
  if (!j.contains("format") || j["format"] != kGroupFormat)
    throw ParseError("group file: missing or unsupported format tag (want \"" +
                     std::string(kGroupFormat) + "\")");
  try {
    CrystGroup g;
    g.name = j.at("name").get<std::string>();
    g.dimension = j.at("dimension").get<std::size_t>();
    g.lattice_basis = matrix_from_json(j.at("lattice_basis"));
    for (const auto &m : j.at("point_generators"))
      g.point_generators.push_back(matrix_from_json(m));
    for (const auto &t : j.at("translation_parts"))
      g.translation_parts.push_back(vector_from_json(t));
    if (j.contains("point_group_order"))
      g.expected_point_group_order = j["point_group_order"].get<std::size_t>();
    return g;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("group file: ") + e.what());
  }
}

Json parse_json_text(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write '" + path + "'");
  out << contents;
}

} // namespace cubecrys
