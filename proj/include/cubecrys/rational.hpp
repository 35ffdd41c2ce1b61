#ifndef CUBECRYS_RATIONAL_HPP
#define CUBECRYS_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubecrys {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator, so structural equality is value equality.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {} // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)) {} // NOLINT
  Rational(BigInt n, BigInt d);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  const BigInt &num() const { return num_; }
  const BigInt &den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  std::size_t hash() const;

private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// gcd on rationals: the largest d > 0 with a/d and b/d both integers.
/// gcd(0, 0) = 0.
Rational rational_gcd(const Rational &a, const Rational &b);

} // namespace cubecrys

template <>
struct std::hash<cubecrys::Rational> {
  std::size_t operator()(const cubecrys::Rational &r) const { return r.hash(); }
};

#endif
