#include "cubecrys/signed_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cubecrys/error.hpp"

namespace cubecrys {

SignedPermutation::SignedPermutation(std::size_t n) : perm_(n), signs_(n, 1) {
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
}

SignedPermutation::SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size())
    throw InputError("signed permutation: perm and signs differ in length");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] >= perm_.size() || seen[perm_[i]])
      throw InputError("signed permutation: perm is not a bijection");
    seen[perm_[i]] = true;
    if (signs_[i] != 1 && signs_[i] != -1)
      throw InputError("signed permutation: signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::from_matrix(const RatMatrix &m) {
  if (!is_signed_permutation_matrix(m))
    throw InputError("not a signed permutation matrix: " + m.str());
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::vector<int> signs(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (!m(r, c).is_zero()) {
        perm[c] = r;
        signs[c] = m(r, c).sign();
      }
  return {std::move(perm), std::move(signs)};
}

bool SignedPermutation::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i || signs_[i] != 1)
      return false;
  return true;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    inv.perm_[perm_[i]] = i;
    inv.signs_[perm_[i]] = signs_[i];
  }
  return inv;
}

SignedPermutation operator*(const SignedPermutation &s, const SignedPermutation &t) {
  if (s.degree() != t.degree())
    throw DimensionError("product of signed permutations of different degree");
  SignedPermutation out(s.degree());
  for (std::size_t i = 0; i < s.degree(); ++i) {
    std::size_t j = t.perm_[i];
    out.perm_[i] = s.perm_[j];
    out.signs_[i] = t.signs_[i] * s.signs_[j];
  }
  return out;
}

int SignedPermutation::trace() const {
  int t = 0;
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] == i)
      t += signs_[i];
  return t;
}

int SignedPermutation::determinant() const {
  // sign(perm) via cycle decomposition, times the product of signs.
  int d = 1;
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    d *= signs_[i];
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0)
      d = -d;
  }
  return d;
}

std::string SignedPermutation::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < perm_.size(); ++i)
    os << (i ? " " : "") << (signs_[i] < 0 ? "-" : "+") << perm_[i] + 1;
  os << "]";
  return os.str();
}

std::vector<SignedPermutation> enumerate_group(std::size_t n) {
  if (n < 1 || n > 6)
    throw SizeError("enumerate_group: n = " + std::to_string(n) + " outside 1..6");
  std::vector<SignedPermutation> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> signs(n);
      for (std::size_t i = 0; i < n; ++i)
        signs[i] = (mask >> i) & 1U ? -1 : 1;
      out.emplace_back(perm, std::move(signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

RatMatrix to_matrix(const SignedPermutation &s) {
  RatMatrix m(s.degree(), s.degree());
  for (std::size_t i = 0; i < s.degree(); ++i)
    m(s.image(i), i) = s.sign(i);
  return m;
}

bool is_signed_permutation_matrix(const RatMatrix &m) {
  if (!m.is_square())
    throw DimensionError("is_signed_permutation_matrix: non-square input");
  const std::size_t n = m.rows();
  std::vector<int> row_count(n, 0), col_count(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational &x = m(r, c);
      if (x.is_zero())
        continue;
      if (x != 1 && x != -1)
        return false;
      ++row_count[r];
      ++col_count[c];
    }
  return std::all_of(row_count.begin(), row_count.end(), [](int k) { return k == 1; }) &&
         std::all_of(col_count.begin(), col_count.end(), [](int k) { return k == 1; });
}

ElementClass classify_element(const SignedPermutation &s) {
  ElementClass cls;
  cls.determinant = s.determinant();
  SignedPermutation p = s;
  while (!p.is_identity()) {
    p = p * s;
    ++cls.order;
  }
  return cls;
}

} // namespace cubecrys
