#ifndef CUBECRYS_MATRIX_HPP
#define CUBECRYS_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubecrys/rational.hpp"

namespace cubecrys {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(std::span<const RatVector> columns);
  /// Block-diagonal matrix diag(a, b).
  static RatMatrix block_diagonal(const RatMatrix &a, const RatMatrix &b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector column(std::size_t c) const;
  RatVector row(std::size_t r) const;
  RatMatrix transpose() const;

  bool is_integer() const;
  bool is_zero() const;
  Rational trace() const;

  friend bool operator==(const RatMatrix &, const RatMatrix &) = default;
  friend auto operator<=>(const RatMatrix &a, const RatMatrix &b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0)
      return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0)
      return c;
    return a.data_ <=> b.data_;
  }

  RatMatrix &operator+=(const RatMatrix &rhs);
  RatMatrix &operator-=(const RatMatrix &rhs);
  RatMatrix &operator*=(const Rational &s);

  std::string str() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix &b);
RatMatrix operator-(RatMatrix a, const RatMatrix &b);
RatMatrix operator*(const RatMatrix &a, const RatMatrix &b);
RatMatrix operator*(RatMatrix a, const Rational &s);
RatVector operator*(const RatMatrix &a, const RatVector &v);

Rational dot(const RatVector &a, const RatVector &b);
RatVector operator+(const RatVector &a, const RatVector &b);
RatVector operator-(const RatVector &a, const RatVector &b);
RatVector operator*(const Rational &s, const RatVector &v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational det(const RatMatrix &m);

/// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrixError.
RatMatrix inverse(const RatMatrix &m);

/// Rank of an arbitrary matrix.
std::size_t rank(const RatMatrix &m);

RatMatrix power(const RatMatrix &m, std::size_t k);

/// Least k >= 1 with m^k = I, or nullopt when no such k <= cap exists.
std::optional<std::size_t> element_order(const RatMatrix &m, std::size_t cap = 48);

/// Returns the sum over the group of theta[p] * seed * iota[p]^-1. The lists
/// must enumerate the same finite group in matching order; the result A then
/// satisfies A * iota[q] = theta[q] * A for every q.
RatMatrix average_intertwiner(std::span<const RatMatrix> theta_images,
                              std::span<const RatMatrix> iota_images, const RatMatrix &seed);

} // namespace cubecrys

#endif
