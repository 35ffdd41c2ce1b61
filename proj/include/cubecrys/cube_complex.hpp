#ifndef CUBECRYS_CUBE_COMPLEX_HPP
#define CUBECRYS_CUBE_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "cubecrys/simplicial_complex.hpp"
#include "cubecrys/walls.hpp"

namespace cubecrys {

inline constexpr std::size_t kWallCap = 24;

/// One side per wall, bit w set when the orientation picks the positive
/// side of wall w.
struct Orientation {
  std::uint32_t bits = 0;

  bool side(std::size_t wall) const { return (bits >> wall) & 1U; }
  Orientation flipped(std::size_t wall) const { return {bits ^ (std::uint32_t{1} << wall)}; }
  std::string str(std::size_t wall_count) const;
  static Orientation parse(const std::string &bitstring);

  friend bool operator==(Orientation, Orientation) = default;
  friend auto operator<=>(Orientation, Orientation) = default;
};

/// Box [lo_i, hi_i] per coordinate.
using Window = std::vector<std::pair<Rational, Rational>>;

/// Affine walls cutting a rational box; the positive side of a wall is
/// <normal, x> > offset.
struct GeometricWalls {
  std::size_t dimension = 0;
  Window window;
  std::vector<GeometricWall> walls;
  RatVector base_point;
};

/// Walls given as two-sided partitions of a finite point set; sides[w][v]
/// is true when point v lies on the positive side of wall w.
struct PartitionWalls {
  std::size_t point_count = 0;
  std::vector<std::vector<bool>> sides;
  std::size_t base_point = 0;
};

/// A finite wallspace, either geometric or abstract. Both kinds answer the
/// same two questions: which side the base point is on, and whether two
/// chosen halfspaces meet.
class FiniteWallspace {
public:
  /// Canonicalizes walls and checks the invariants: every wall splits the
  /// window, walls are pairwise distinct, the base point lies inside the
  /// window and on no wall, at most 24 walls.
  static FiniteWallspace geometric(GeometricWalls data);
  static FiniteWallspace partition(PartitionWalls data);

  std::size_t wall_count() const;
  bool is_geometric() const { return std::holds_alternative<GeometricWalls>(data_); }
  const GeometricWalls &geometric_data() const { return std::get<GeometricWalls>(data_); }
  const PartitionWalls &partition_data() const { return std::get<PartitionWalls>(data_); }

  Orientation base_orientation() const;
  /// Whether the side_a halfspace of wall a meets the side_b halfspace of
  /// wall b.
  bool halfspaces_meet(std::size_t a, bool side_a, std::size_t b, bool side_b) const;

private:
  explicit FiniteWallspace(std::variant<GeometricWalls, PartitionWalls> d) : data_(std::move(d)) {}
  std::variant<GeometricWalls, PartitionWalls> data_;
};

/// Exact test: does {x in window : s_a <a,x> < s_a alpha, s_b <b,x> < s_b beta}
/// have a point? Exposed for testing.
bool open_halfspaces_meet_in_box(const Window &window, const RatVector &a, const Rational &alpha,
                                 bool a_positive, const RatVector &b, const Rational &beta,
                                 bool b_positive);

struct CubeEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t wall = 0;
};

/// CAT(0) cube complex given by its 1-skeleton: vertices are orientations,
/// edges join orientations differing on one wall. Higher cubes are implied.
class CubeComplex {
public:
  CubeComplex() = default;
  /// Hand-built complex. Every edge must join two listed orientations that
  /// differ on exactly one wall.
  CubeComplex(std::size_t wall_count, std::vector<Orientation> zero_cubes,
              std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t wall_count() const { return wall_count_; }
  std::size_t vertex_count() const { return zero_cubes_.size(); }
  const std::vector<Orientation> &zero_cubes() const { return zero_cubes_; }
  const std::vector<CubeEdge> &edges() const { return edges_; }
  const std::vector<std::size_t> &neighbors(std::size_t v) const { return adjacency_[v]; }

  bool contains(Orientation o) const { return index_.count(o.bits) > 0; }
  /// Throws MembershipError when o is not a 0-cube.
  std::size_t index_of(Orientation o) const;

  /// Walls dual to at least one edge, in increasing order.
  std::vector<std::size_t> hyperplanes() const;

  /// Breadth-first graph distances from v (SIZE_MAX when unreachable).
  std::vector<std::size_t> graph_distances(std::size_t v) const;

  /// Whether walls u and v cross: all four side combinations occur.
  bool walls_cross(std::size_t u, std::size_t v) const;

private:
  std::size_t wall_count_ = 0;
  std::vector<Orientation> zero_cubes_;
  std::vector<CubeEdge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

/// 0-cubes are the consistent orientations, found by flipping walls
/// breadth-first from the base point's orientation.
CubeComplex dual_complex(const FiniteWallspace &ws);

std::size_t distance(const CubeComplex &c, Orientation x, Orientation y);

/// Per-wall majority vote.
Orientation median(const CubeComplex &c, Orientation x, Orientation y, Orientation z);

/// Graph distance equals Hamming distance for every pair, and the 0-cubes
/// are closed under majority vote (so the vote is the unique median).
bool is_median_graph(const CubeComplex &c);

/// Abstract wallspace on the vertices of c, one wall per hyperplane.
FiniteWallspace hyperplane_wallspace(const CubeComplex &c);

/// dual_complex(hyperplane_wallspace(c)) is isomorphic to c, matching
/// vertices, edges and wall labels.
bool duality_check(const CubeComplex &c);

/// The orientation agreeing with y on walls separating x from y, with z on
/// walls separating x from z, and with x elsewhere. Throws
/// CrossingConditionError unless the two separator sets are disjoint and
/// pairwise crossing.
Orientation union_orientation(const CubeComplex &c, Orientation x, Orientation y, Orientation z);

/// Link of a 0-cube: one vertex per incident edge (labeled by its wall),
/// adjacent when the two walls bound a square at v.
SimplicialComplex link_of_vertex(const CubeComplex &c, Orientation v);

/// Random geometric wallspace: up to max_walls distinct walls through
/// random points of [0,10]^dim with small integer normals.
FiniteWallspace random_wallspace(std::uint64_t seed, std::size_t dim, std::size_t max_walls);

/// Walls x_i = 1..k_i in the box [0, max k_i + 1]^dim, one axis at a time.
FiniteWallspace grid_wallspace(const std::vector<std::size_t> &walls_per_axis);

} // namespace cubecrys

#endif
