#ifndef CUBECRYS_REPORT_HPP
#define CUBECRYS_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubecrys/cube_complex.hpp"
#include "cubecrys/decide.hpp"
#include "cubecrys/json_io.hpp"
#include "cubecrys/walls.hpp"

namespace cubecrys {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

// Walls files ("cubecrys-walls/1"). Geometric wallspaces carry a window,
// walls and base point; abstract ones carry "point_count", "partitions"
// (one 0/1 string per wall) and an integer base point.
Json wallspace_to_json(const FiniteWallspace &ws);
FiniteWallspace wallspace_from_json(const Json &j);

// Complex files ("cubecrys-complex/1"): wall count, 0-cubes as bitstrings
// (character w is wall w), edges as index pairs, and optionally the walls.
Json complex_to_json(const CubeComplex &c, const FiniteWallspace *walls = nullptr);
CubeComplex complex_from_json(const Json &j);

Json validation_to_json(const ValidationReport &r);
/// Witness (with conjugation residuals) or rejection certificate.
Json verdict_to_json(const CrystGroup &g, const Verdict &v);
Json wall_family_to_json(const WallFamily &fam);

struct Cubulation {
  WallFamily family;
  /// One per point generator.
  std::vector<SignedPermutation> generator_action;
  CrystGroup stabilized;
  SeparationReport separation;
};

/// Standard cubulation from the lattice basis, or from the basis of the
/// hyperoctahedral witness (InputError when g is rejected), with the linear
/// separation check run on `samples` seeded pairs.
Cubulation cubulate(const CrystGroup &g, bool use_witness_basis, std::uint64_t seed,
                    std::size_t samples = 100);
Json cubulation_to_json(const Cubulation &c);

/// Median, Hamming-distance and duality checks on a complex.
Json complex_checks_to_json(const CubeComplex &c);

struct CatalogRow {
  std::string name;
  std::size_t dimension = 0;
  std::size_t point_group_order = 0;
  bool accepted = false;
  std::optional<RejectionReason> reason;
  /// Wall-direction classes of the lattice-basis cubulation.
  std::size_t wall_classes = 0;
  bool stabilized_accepted = false;
  bool stabilized_identity_conjugator = false;
};

/// Classifies every catalog entry (concurrently); rows are in catalog order.
std::vector<CatalogRow> classify_catalog();
Json catalog_to_json(const std::vector<CatalogRow> &rows);

/// Human rendering of a report produced by the CLI.
std::string render_text(const Json &report);

} // namespace cubecrys

#endif
