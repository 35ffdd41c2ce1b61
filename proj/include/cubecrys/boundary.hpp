#ifndef CUBECRYS_BOUNDARY_HPP
#define CUBECRYS_BOUNDARY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cubecrys/simplicial_complex.hpp"

namespace cubecrys {

/// An atomic CAT(0) cube complex whose simplicial boundary is known.
struct FactorDescriptor {
  enum class Kind { Point, HalfLine, Line, RegularTree };

  Kind kind = Kind::Point;
  /// Only meaningful for RegularTree, where it must be at least 3.
  std::size_t valence = 0;

  static FactorDescriptor point() { return {Kind::Point, 0}; }
  static FactorDescriptor half_line() { return {Kind::HalfLine, 0}; }
  static FactorDescriptor line() { return {Kind::Line, 0}; }
  /// Throws InputError when valence < 3.
  static FactorDescriptor regular_tree(std::size_t valence);

  std::string str() const;
};

/// A finite flag complex joined with zero or more copies of the infinite
/// discrete boundary of a tree. The symbolic parts are kept apart and never
/// folded into the finite complex.
class BoundaryDescriptor {
public:
  BoundaryDescriptor() = default;
  explicit BoundaryDescriptor(SimplicialComplex finite_part, std::size_t infinite_discrete = 0)
      : finite_(std::move(finite_part)), infinite_discrete_(infinite_discrete) {}

  static constexpr const char *kInfiniteDiscrete = "infinite-discrete";

  bool is_finite() const { return infinite_discrete_ == 0; }
  /// Number of "infinite-discrete" join factors.
  std::size_t infinite_discrete_factors() const { return infinite_discrete_; }
  /// The finite join factor (the whole boundary when is_finite()).
  const SimplicialComplex &finite_part() const { return finite_; }
  /// Throws InputError when the boundary has a symbolic part.
  const SimplicialComplex &finite() const;

  /// "infinite-discrete", "infinite-discrete * <finite>", or a summary of
  /// the finite complex.
  std::string str() const;

private:
  SimplicialComplex finite_;
  std::size_t infinite_discrete_ = 0;
};

/// Point -> empty, HalfLine -> one vertex, Line -> Q_1,
/// RegularTree -> infinite-discrete.
BoundaryDescriptor atomic_boundary(const FactorDescriptor &f);

/// Boundary of the product: the join of the factor boundaries. Vertex labels
/// of factor k are prefixed "f<k>:". Throws InputError on an empty list.
BoundaryDescriptor product_boundary(const std::vector<FactorDescriptor> &factors);

/// Boundary of the standard tiling of R^n (1 <= n <= 8).
SimplicialComplex boundary_of_Rn(std::size_t n);

/// Parses "Line*Line*HalfLine", "RegularTree(3)", "Point", ... (case
/// sensitive, whitespace ignored). Throws ParseError.
std::vector<FactorDescriptor> parse_factor_expression(const std::string &expr);

} // namespace cubecrys

#endif
