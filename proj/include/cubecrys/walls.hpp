#ifndef CUBECRYS_WALLS_HPP
#define CUBECRYS_WALLS_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubecrys/crystallographic_group.hpp"
#include "cubecrys/signed_permutation.hpp"

namespace cubecrys {

/// Affine wall {x : <normal, x> = offset}. Canonical form: normal has
/// coprime integer coordinates with a positive leading nonzero entry.
struct GeometricWall {
  RatVector normal;
  Rational offset;

  friend bool operator==(const GeometricWall &, const GeometricWall &) = default;
};

/// Rescales a nonzero vector to coprime integers with positive leading
/// entry. Returns the canonical vector and the factor s with v = s * canon.
std::pair<RatVector, Rational> canonical_direction(const RatVector &v);

/// Canonical form of the wall <normal, x> = offset. Throws InputError for a
/// zero normal.
GeometricWall canonical_wall(const RatVector &normal, const Rational &offset);

/// A direction class of walls: all walls with this canonical normal, i.e.
/// the lattice translates of one P_G-image of a base wall.
struct WallClass {
  RatVector normal;
  /// Walls of the class sit at <normal, x> in spacing * Z.
  Rational spacing;
  /// Base wall whose orbit first reached this class.
  std::size_t base_wall = 0;
};

struct WallFamily {
  std::size_t dimension = 0;
  std::vector<RatVector> basis;
  /// dual[i] is the covector nu_i with nu_i(basis[j]) = delta_ij.
  std::vector<RatVector> dual;
  /// Translates of base wall i sit at nu_i in base_spacing[i] * Z
  /// (1 when the basis is the lattice basis).
  std::vector<Rational> base_spacing;
  std::vector<GeometricWall> base_walls;
  std::vector<WallClass> classes;
  std::vector<std::size_t> base_class;

  std::size_t class_count() const { return classes.size(); }
};

/// Walls X_i = span{basis_j : j != i}, one per basis vector. Throws RankError
/// if the basis is dependent.
std::vector<GeometricWall> standard_walls(const CrystGroup &g, const std::vector<RatVector> &basis);

/// Orbit of the base walls under the point group, counted as directions.
WallFamily direction_class_count(const CrystGroup &g, const std::vector<RatVector> &basis);

/// Number of lattice translates of base walls strictly separating p and q.
std::size_t separation_count(const RatVector &p, const RatVector &q, const WallFamily &fam);

struct SeparationReport {
  std::size_t pairs_checked = 0;
  /// max_i |t_i|^2 over the effective basis vectors.
  Rational max_norm_squared;
  /// Largest |p-q|^2 / (max_norm_squared * (#(p,q) + n)^2) observed.
  Rational worst_ratio;
  /// Smallest #(p,q) - (sum_i |nu_i| - n) observed; never negative.
  Rational min_lower_bound_slack;
};

/// Checks |p-q|^2 <= max_i |t_i|^2 (#(p,q) + n)^2 and
/// #(p,q) >= sum_i |nu_i(p-q)| - n on every pair. Throws
/// PropertyViolationError naming the first pair that fails.
SeparationReport check_linear_separation(const CrystGroup &g, const WallFamily &fam,
                                         const std::vector<std::pair<RatVector, RatVector>> &samples);

/// Deterministic rational sample pairs in the box [0, window]^dim.
std::vector<std::pair<RatVector, RatVector>> sample_pairs(std::size_t dim, std::size_t count,
                                                          std::uint64_t seed,
                                                          std::int64_t window = 10);

/// Signed permutation of the wall classes induced by every point element,
/// parallel to points().elements. The sign records whether the canonical
/// normal of the class is preserved or reversed.
std::vector<SignedPermutation> induced_action_on_RN(const CrystGroup &g, const WallFamily &fam);

/// The N-dimensional group acting on R_N through the standard cubulation
/// built from the lattice basis: generators are the induced signed
/// permutations, the lattice is Z^N, and translation parts are the images
/// of the original ones under x -> (<normal_k, x> / spacing_k)_k.
CrystGroup stabilize(const CrystGroup &g);

/// Same construction for an arbitrary wall family of g.
CrystGroup stabilize(const CrystGroup &g, const WallFamily &fam);

} // namespace cubecrys

#endif
