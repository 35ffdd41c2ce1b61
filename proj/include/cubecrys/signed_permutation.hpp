#ifndef CUBECRYS_SIGNED_PERMUTATION_HPP
#define CUBECRYS_SIGNED_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "cubecrys/matrix.hpp"

namespace cubecrys {

/// Element of O(n,Z): sends e_i to signs[i] * e_{perm[i]} (0-based letters).
class SignedPermutation {
public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::size_t n);
  SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs);

  static SignedPermutation identity(std::size_t n) { return SignedPermutation(n); }
  /// Reads a signed-permutation matrix; throws InputError if m is not one.
  static SignedPermutation from_matrix(const RatMatrix &m);

  std::size_t degree() const { return perm_.size(); }
  const std::vector<std::size_t> &perm() const { return perm_; }
  const std::vector<int> &signs() const { return signs_; }

  std::size_t image(std::size_t i) const { return perm_[i]; }
  int sign(std::size_t i) const { return signs_[i]; }

  bool is_identity() const;
  SignedPermutation inverse() const;

  /// (s * t)(e_i) = s(t(e_i)); to_matrix is multiplicative for this product.
  friend SignedPermutation operator*(const SignedPermutation &s, const SignedPermutation &t);

  friend bool operator==(const SignedPermutation &, const SignedPermutation &) = default;
  friend auto operator<=>(const SignedPermutation &, const SignedPermutation &) = default;

  int trace() const;
  int determinant() const;

  std::string str() const;

private:
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
};

struct ElementClass {
  std::size_t order = 1;
  int determinant = 1;
};

/// All 2^n * n! elements of O(n,Z), in a fixed deterministic order
/// (permutations lexicographically, then sign patterns by binary count).
std::vector<SignedPermutation> enumerate_group(std::size_t n);

RatMatrix to_matrix(const SignedPermutation &s);

bool is_signed_permutation_matrix(const RatMatrix &m);

ElementClass classify_element(const SignedPermutation &s);

} // namespace cubecrys

#endif
