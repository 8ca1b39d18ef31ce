#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liepoisson/rational.hpp"

namespace liepoisson {

/// Univariate polynomial with exact rational coefficients, stored ascending
/// with trailing zeros trimmed. The zero polynomial has degree -1.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(unsigned power, const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational evaluate(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  /// p(-t)
  UniPoly negate_variable() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, UniPoly p);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns {quotient, remainder}.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

  std::string str(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic greatest common divisor (gcd of the zero polynomial and p is the
/// monic multiple of p).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Squarefree decomposition p = prod factor^multiplicity (Yun); constant
/// factors are dropped and the factors are monic and pairwise coprime.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p);

/// Canonical Sturm chain of p.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

unsigned sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x);
unsigned sign_variations_at_pos_inf(const std::vector<UniPoly>& chain);

/// Number of distinct real roots of the (squarefree) chain polynomial in the
/// half-open interval (a, b].
unsigned count_roots_in(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b);

/// All roots in an open interval (0, inf), each isolated in a rational
/// interval (lo, hi) with hi - lo <= max_width and p nonzero at both ends.
/// Precondition: p squarefree.
std::vector<std::pair<Rational, Rational>> isolate_positive_roots(const UniPoly& p,
                                                                  const Rational& max_width);

/// Strictly positive rational roots of a squarefree polynomial; the found
/// roots are divided out of *p. Root candidates come from integer divisor
/// enumeration; trial division is capped, so astronomically large
/// coefficients may leave a rational root undetected (it is then reported by
/// the interval path instead).
std::vector<Rational> extract_positive_rational_roots(UniPoly* p);

/// Upper bound on the absolute value of every real root.
Rational cauchy_root_bound(const UniPoly& p);

}  // namespace liepoisson
