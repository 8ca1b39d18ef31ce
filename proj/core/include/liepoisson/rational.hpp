#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace liepoisson {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced with a positive denominator;
/// the canonical zero is 0/1. Serializes as "p/q", or just "p" when q = 1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}
  explicit Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }
  Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(-v_, Canonical{}); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Parses "p", "p/q", with optional leading '-' or '+'. Throws
  /// std::invalid_argument on malformed input or zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  struct Canonical {};
  using Backend = boost::multiprecision::cpp_rational;
  Rational(Backend v, Canonical) : v_(std::move(v)) {}
  explicit Rational(Backend v) : v_(std::move(v)) {}
  Backend v_;
};

Rational pow(const Rational& base, unsigned exponent);

/// True iff r = (p/q)^2 for some rational p/q >= 0; on success stores that
/// non-negative square root in *root.
bool rational_square_root(const Rational& r, Rational* root);

/// Fixed-point decimal rendering of r truncated toward zero to `digits`
/// fractional digits. Exact and deterministic (no floating point).
std::string decimal_string(const Rational& r, unsigned digits);

}  // namespace liepoisson
