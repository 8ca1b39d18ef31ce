#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liepoisson/matrix.hpp"
#include "liepoisson/rational.hpp"

namespace liepoisson {

/// Exponent vector of a monomial; length = number of variables.
using Monomial = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

/// Graded order: lower total degree first; within a degree, higher powers of
/// earlier variables first (so for 3 variables the degree-2 block reads
/// x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    std::uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;  // lexicographically larger exponent vector comes first
  }
};

/// Multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored; two polynomials are equal iff their term
/// maps are equal. degree() of the zero polynomial is -1 by convention.
class MultiPoly {
public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly zero(std::size_t nvars) { return MultiPoly(nvars); }
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(std::size_t nvars, Monomial exps, const Rational& coeff);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& exps, const Rational& coeff);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, MultiPoly p) { return p *= s; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly partial_derivative(std::size_t var) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Largest term under the canonical monomial order. Precondition: nonzero.
  std::pair<Monomial, Rational> max_term() const;

  std::string str(const std::string& var_prefix = "xi") const;

private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Exact quotient num / den in the polynomial ring; throws std::logic_error
/// if den does not divide num (callers rely on divisibility guarantees such
/// as the Bareiss identity).
MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den);

MultiPoly poly_partial_derivative(const MultiPoly& p, std::size_t var_index);
Rational poly_evaluate(const MultiPoly& p, const std::vector<Rational>& point);

/// All monomials in `nvars` variables of exact total degree `degree`, listed
/// in the canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree);

using PolyMatrix = Matrix<MultiPoly>;

}  // namespace liepoisson
