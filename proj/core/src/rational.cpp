#include "liepoisson/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace liepoisson {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  // cpp_rational reduces but (in this Boost version) rejects a negative
  // denominator, so fix the sign first
  if (den < 0) {
    v_ = Backend(-num, -den);
  } else {
    v_ = Backend(num, den);
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::invalid_argument("Rational: division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw std::invalid_argument("Rational: reciprocal of zero");
  }
  return Rational(BigInt(denominator()), BigInt(numerator()));
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = (text[pos] == '-');
    ++pos;
  }
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_start) return fail();
  BigInt num(std::string(text.substr(digits_start, pos - digits_start)));
  BigInt den(1);
  if (pos < text.size()) {
    if (text[pos] != '/') return fail();
    ++pos;
    std::size_t den_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start || pos != text.size()) return fail();
    den = BigInt(std::string(text.substr(den_start, pos - den_start)));
    if (den.is_zero()) return fail();
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.numerator();
  if (!r.is_integer()) os << '/' << r.denominator();
  return os;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  unsigned e = exponent;
  while (e != 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

namespace {

bool integer_square_root(const BigInt& n, BigInt* root) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) {
    *root = r;
    return true;
  }
  return false;
}

}  // namespace

bool rational_square_root(const Rational& r, Rational* root) {
  if (r.sign() < 0) return false;
  BigInt num_root, den_root;
  if (!integer_square_root(r.numerator(), &num_root)) return false;
  if (!integer_square_root(r.denominator(), &den_root)) return false;
  if (root != nullptr) *root = Rational(num_root, den_root);
  return true;
}

std::string decimal_string(const Rational& r, unsigned digits) {
  BigInt num = r.numerator();
  BigInt den = r.denominator();
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::ostringstream os;
  if (negative && (whole != 0 || rem != 0)) os << '-';
  os << whole;
  if (digits > 0) {
    os << '.';
    for (unsigned i = 0; i < digits; ++i) {
      rem *= 10;
      os << char('0' + static_cast<int>(rem / den));
      rem %= den;
    }
  }
  return os.str();
}

}  // namespace liepoisson
