#ifndef CUBECRYS_DECIDE_HPP
#define CUBECRYS_DECIDE_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cubecrys/crystallographic_group.hpp"
#include "cubecrys/signed_permutation.hpp"

namespace cubecrys {

/// Largest dimension the embedding search handles.
inline constexpr std::size_t kDecideDimensionCap = 4;
/// Number of seed matrices tried when building the conjugator.
inline constexpr std::size_t kSeedCap = 1000;

/// A monomorphism iota: P_G -> O(n,Z) together with a conjugator A such
/// that A * iota(p) * A^-1 equals the real point action of p.
struct HyperoctahedralWitness {
  std::vector<SignedPermutation> generator_images;
  /// Parallel to the group's point elements.
  std::vector<SignedPermutation> iota;
  RatMatrix conjugator;
  /// Columns of the conjugator.
  std::vector<RatVector> basis;
  /// Position in the seed schedule that produced the conjugator.
  std::size_t seed_index = 0;
};

enum class RejectionReason { OrderObstruction, CharacterMismatch, NoEmbedding };

std::string to_string(RejectionReason r);

/// A point element whose (order, det, trace) is realized by no element of
/// O(n,Z).
struct Obstruction {
  RejectionReason kind = RejectionReason::OrderObstruction;
  std::size_t element = 0;
  RatMatrix matrix; // lattice coordinates
  std::size_t order = 1;
  int determinant = 1;
  Rational trace;
  /// Orders occurring in O(n,Z).
  std::vector<std::size_t> available_orders;
  /// (trace, det) of the O(n,Z) elements having the same order.
  std::vector<std::pair<int, int>> same_order_characters;

  std::string describe() const;
};

struct RejectionCertificate {
  RejectionReason reason = RejectionReason::NoEmbedding;
  /// Present for order and character obstructions.
  std::optional<Obstruction> obstruction;
  /// Generator assignments tried before concluding NoEmbedding.
  std::size_t assignments_examined = 0;

  std::string describe() const;
};

using Verdict = std::variant<HyperoctahedralWitness, RejectionCertificate>;

/// Element-wise pre-filter against the characters realized in O(n,Z).
/// Violations are reported once per maximal obstructed cyclic subgroup
/// (powers of a reported element are not repeated). Empty output is
/// necessary, not sufficient, for acceptance.
std::vector<Obstruction> quick_obstructions(const CrystGroup &g);

/// Decides hyperoctahedrality. Requires a validated group of dimension at
/// most 4. Throws InternalError if characters match but no seed yields an
/// invertible conjugator.
Verdict is_hyperoctahedral(const CrystGroup &g);

/// Columns t_i = A e_i, re-verified so that each point element maps t_i to
/// +-t_j as iota dictates. Throws WitnessCorruptionError otherwise.
std::vector<RatVector> hyperoctahedral_basis(const CrystGroup &g,
                                             const HyperoctahedralWitness &w);

/// theta(p) - A iota(p) A^-1 for every point element (all zero for a sound
/// witness).
std::vector<RatMatrix> conjugation_residuals(const CrystGroup &g,
                                             const HyperoctahedralWitness &w);

/// The k-th matrix of the deterministic seed schedule: the lattice basis,
/// the identity, then all {0,1} matrices and then all {-1,0,1} matrices in
/// counting order.
RatMatrix seed_matrix(std::size_t n, const RatMatrix &lattice_basis, std::size_t k);

} // namespace cubecrys

#endif
