#include "cubecrys/crystallographic_group.hpp"

#include <deque>

#include "cubecrys/error.hpp"

namespace cubecrys {

std::size_t PointGroup::index_of(const RatMatrix &m) const {
  auto it = index.find(m);
  if (it == index.end())
    throw InternalError("matrix is not a point-group element: " + m.str());
  return it->second;
}

std::size_t PointGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(elements[a] * elements[b]);
}

const PointGroup &CrystGroup::points() const {
  if (!point_group)
    throw InputError("group '" + name + "' has not been validated");
  return *point_group;
}

namespace {

PointGroup enumerate_point_group(const CrystGroup &g) {
  const std::size_t n = g.dimension;
  PointGroup pg;
  pg.elements.push_back(RatMatrix::identity(n));
  pg.index.emplace(pg.elements.back(), 0);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t e = frontier.front();
    frontier.pop_front();
    for (const auto &gen : g.point_generators) {
      RatMatrix prod = gen * pg.elements[e];
      if (pg.index.count(prod))
        continue;
      if (pg.elements.size() == kPointGroupCap)
        throw StructureError("group '" + g.name + "': point group closure exceeds " +
                             std::to_string(kPointGroupCap) +
                             " elements (a generator has infinite order)");
      pg.index.emplace(prod, pg.elements.size());
      pg.elements.push_back(std::move(prod));
      frontier.push_back(pg.elements.size() - 1);
    }
  }
  pg.left_mult.assign(g.point_generators.size(), std::vector<std::size_t>(pg.order()));
  for (std::size_t k = 0; k < g.point_generators.size(); ++k) {
    pg.generator_elements.push_back(pg.index_of(g.point_generators[k]));
    for (std::size_t e = 0; e < pg.order(); ++e)
      pg.left_mult[k][e] = pg.index_of(g.point_generators[k] * pg.elements[e]);
  }
  return pg;
}

} // namespace

ValidationReport validate(CrystGroup &g) {
  const std::size_t n = g.dimension;
  const std::string who = "group '" + g.name + "': ";
  if (n == 0)
    throw DimensionError(who + "dimension must be positive");
  if (g.lattice_basis.rows() != n || g.lattice_basis.cols() != n)
    throw DimensionError(who + "lattice basis is not " + std::to_string(n) + "x" +
                         std::to_string(n));
  Rational lattice_det = det(g.lattice_basis);
  if (lattice_det.is_zero())
    throw BasisError(who + "lattice basis is singular");
  if (g.translation_parts.size() != g.point_generators.size())
    throw DimensionError(who + "expected one translation part per point generator");
  for (std::size_t k = 0; k < g.point_generators.size(); ++k) {
    const RatMatrix &m = g.point_generators[k];
    if (m.rows() != n || m.cols() != n)
      throw DimensionError(who + "point generator " + std::to_string(k) + " has wrong shape");
    if (!m.is_integer())
      throw LatticeInvarianceError(who + "point generator " + std::to_string(k) +
                                   " has a non-integer entry: " + m.str());
    if (g.translation_parts[k].size() != n)
      throw DimensionError(who + "translation part " + std::to_string(k) + " has wrong length");
  }

  ValidationReport report;
  report.name = g.name;
  report.dimension = n;
  report.lattice_determinant = lattice_det;
  for (std::size_t k = 0; k < g.point_generators.size(); ++k) {
    auto ord = element_order(g.point_generators[k], kPointGroupCap);
    if (!ord)
      throw StructureError(who + "point generator " + std::to_string(k) +
                           " has infinite order: " + g.point_generators[k].str());
    report.generator_orders.push_back(*ord);
  }

  PointGroup pg = enumerate_point_group(g);
  if (g.expected_point_group_order && *g.expected_point_group_order != pg.order())
    throw StructureError(who + "point group has order " + std::to_string(pg.order()) +
                         ", metadata says " + std::to_string(*g.expected_point_group_order));
  report.point_group_order = pg.order();
  for (const auto &e : pg.elements)
    report.element_orders.push_back(*element_order(e, kPointGroupCap));
  g.point_group = std::move(pg);
  return report;
}

std::vector<RatMatrix> point_group_real(const CrystGroup &g) {
  const auto &pg = g.points();
  RatMatrix l_inv = inverse(g.lattice_basis);
  std::vector<RatMatrix> out;
  out.reserve(pg.order());
  for (const auto &m : pg.elements)
    out.push_back(g.lattice_basis * m * l_inv);
  return out;
}

CrystGroup semidirect_extend(const CrystGroup &g, std::size_t m,
                             const std::vector<RatMatrix> &action_in) {
  const auto &pg = g.points();
  std::vector<RatMatrix> action = action_in;
  if (m == 0 && action.empty())
    action.assign(g.point_generators.size(), RatMatrix(0, 0));
  if (action.size() != g.point_generators.size())
    throw ExtensionError("semidirect_extend: expected one action matrix per point generator");
  CrystGroup out;
  out.name = g.name;
  out.dimension = g.dimension + m;
  out.lattice_basis = RatMatrix::block_diagonal(g.lattice_basis, RatMatrix::identity(m));
  for (std::size_t k = 0; k < action.size(); ++k) {
    if (action[k].rows() != m || action[k].cols() != m || !action[k].is_integer())
      throw ExtensionError("semidirect_extend: action " + std::to_string(k) +
                           " is not an integer " + std::to_string(m) + "x" + std::to_string(m) +
                           " matrix");
    if (m > 0 && !element_order(action[k], kPointGroupCap))
      throw ExtensionError("semidirect_extend: action " + std::to_string(k) +
                           " has infinite order");
    out.point_generators.push_back(RatMatrix::block_diagonal(g.point_generators[k], action[k]));
    RatVector t = g.translation_parts[k];
    t.resize(out.dimension);
    out.translation_parts.push_back(std::move(t));
  }
  validate(out);
  // The action respects the relations iff projecting onto the first block
  // is injective, i.e. the closure is no larger than the original group.
  if (out.points().order() != pg.order())
    throw ExtensionError("semidirect_extend: action violates the point-group relations (closure "
                         "has " + std::to_string(out.points().order()) + " elements, expected " +
                         std::to_string(pg.order()) + ")");
  return out;
}

CrystGroup change_lattice_basis(const CrystGroup &g, const RatMatrix &unimodular) {
  if (!unimodular.is_integer() || det(unimodular).abs() != 1)
    throw InputError("change_lattice_basis: matrix is not unimodular");
  RatMatrix u_inv = inverse(unimodular);
  CrystGroup out;
  out.name = g.name;
  out.dimension = g.dimension;
  out.lattice_basis = g.lattice_basis * unimodular;
  for (const auto &m : g.point_generators)
    out.point_generators.push_back(u_inv * m * unimodular);
  for (const auto &t : g.translation_parts)
    out.translation_parts.push_back(u_inv * t);
  out.expected_point_group_order = g.expected_point_group_order;
  validate(out);
  return out;
}

} // namespace cubecrys
