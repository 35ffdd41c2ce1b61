#ifndef CUBECRYS_CRYSTALLOGRAPHIC_GROUP_HPP
#define CUBECRYS_CRYSTALLOGRAPHIC_GROUP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubecrys/matrix.hpp"

namespace cubecrys {

/// Largest point group validate will enumerate.
inline constexpr std::size_t kPointGroupCap = 200;

/// Finite point group in lattice coordinates, enumerated breadth-first from
/// the identity by left multiplication with the generators.
struct PointGroup {
  std::vector<RatMatrix> elements;             // elements[0] is the identity
  std::vector<std::size_t> generator_elements; // index of each generator
  /// left_mult[k][e] = index of generator_k * element_e.
  std::vector<std::vector<std::size_t>> left_mult;
  std::map<RatMatrix, std::size_t> index;

  std::size_t order() const { return elements.size(); }
  std::size_t index_of(const RatMatrix &m) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
};

/// An n-dimensional crystallographic group given by its lattice basis
/// (columns, real coordinates), integer point generators acting on lattice
/// coordinates, and one translation part per generator (lattice coordinates).
struct CrystGroup {
  std::string name;
  std::size_t dimension = 0;
  RatMatrix lattice_basis;
  std::vector<RatMatrix> point_generators;
  std::vector<RatVector> translation_parts;
  /// Optional metadata cross-checked by validate.
  std::optional<std::size_t> expected_point_group_order;

  /// Filled in by validate().
  std::optional<PointGroup> point_group;

  bool validated() const { return point_group.has_value(); }
  const PointGroup &points() const;
};

struct ValidationReport {
  std::string name;
  std::size_t dimension = 0;
  Rational lattice_determinant;
  std::size_t point_group_order = 0;
  std::vector<std::size_t> generator_orders;
  std::vector<std::size_t> element_orders;
};

/// Checks the structure data and caches the point group enumeration.
/// Throws StructureError, LatticeInvarianceError, BasisError or
/// DimensionError.
ValidationReport validate(CrystGroup &g);

/// The real form L * M_p * L^-1 of every point element, parallel to
/// points().elements.
std::vector<RatMatrix> point_group_real(const CrystGroup &g);

/// Z^m extended by g: block-diagonal generators diag(M_p, action_p),
/// lattice diag(L, I_m), translations padded with zeros. The result is
/// validated; throws ExtensionError if the action does not factor through
/// the point group.
CrystGroup semidirect_extend(const CrystGroup &g, std::size_t m,
                             const std::vector<RatMatrix> &action);

/// The 17 wallpaper groups followed by W, ZxW and Z:W. All validated.
std::vector<CrystGroup> load_catalog();

/// Catalog entry by name; throws InputError when absent.
CrystGroup catalog_entry(const std::string &name);

/// Real-coordinate transform of the lattice by an integer unimodular U:
/// lattice L*U, generators U^-1 M U, translations U^-1 t.
CrystGroup change_lattice_basis(const CrystGroup &g, const RatMatrix &unimodular);

} // namespace cubecrys

#endif
