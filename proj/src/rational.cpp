#include "cubecrys/rational.hpp"

#include <ostream>

#include "cubecrys/error.hpp"

namespace cubecrys {

using boost::multiprecision::gcd;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero())
    throw InputError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> BigInt {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
      ++i;
    if (i == s.size())
      throw ParseError("malformed rational '" + std::string(text) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9')
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt v(std::string(s[0] == '+' ? s.substr(1) : s));
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text));
  BigInt d = parse_int(text.substr(slash + 1));
  if (d.is_zero())
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), d);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational &Rational::operator+=(const Rational &rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) { return *this += -rhs; }

Rational &Rational::operator*=(const Rational &rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero())
    throw InputError("division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs)
    return std::strong_ordering::less;
  if (lhs > rhs)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_; // truncates toward zero
  if (num_.sign() < 0 && q * den_ != num_)
    q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  BigInt q = num_ / den_;
  if (num_.sign() > 0 && q * den_ != num_)
    q += 1;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1)
    return num_.str();
  return num_.str() + "/" + den_.str();
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(num_.str());
  return h ^ (std::hash<std::string>{}(den_.str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

Rational rational_gcd(const Rational &a, const Rational &b) {
  if (a.is_zero())
    return b.abs();
  if (b.is_zero())
    return a.abs();
  // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s), reduced by the constructor.
  BigInt n = gcd(BigInt(abs(a.num() * b.den())), BigInt(abs(b.num() * a.den())));
  return Rational(n, a.den() * b.den());
}

} // namespace cubecrys
