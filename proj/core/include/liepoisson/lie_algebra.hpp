#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "liepoisson/linalg.hpp"
#include "liepoisson/matrix.hpp"
#include "liepoisson/rational.hpp"

namespace liepoisson {

/// Linear subspace of basis-coordinate space, stored as the unique reduced
/// echelon basis (monic rows ordered by pivot column). Equality of subspaces
/// is equality of these canonical bases.
class Subspace {
public:
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  const std::vector<std::vector<Rational>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  /// Residual of v after eliminating all pivot coordinates; zero iff v lies
  /// in the subspace.
  std::vector<Rational> reduce(std::vector<Rational> v) const;
  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  /// Smallest subspace containing both.
  Subspace join(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  Subspace(std::size_t ambient) : ambient_(ambient) {}
  std::size_t ambient_ = 0;
  std::vector<std::vector<Rational>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Finite-dimensional Lie algebra given by rational structure constants on a
/// labelled basis. Constants are stored for i < j only, so antisymmetry is
/// structural; the Jacobi identity is verified at construction unless
/// explicitly deferred.
class LieAlgebra {
public:
  struct BracketEntry {
    std::size_t i;
    std::size_t j;
    std::vector<Rational> coeffs;  // length = dim, coefficient of e_k
  };

  struct DeferValidation {};  // test fixtures and violation reporting only

  LieAlgebra(std::size_t dim, std::vector<std::string> basis_labels,
             const std::vector<BracketEntry>& brackets);
  LieAlgebra(std::size_t dim, std::vector<std::string> basis_labels,
             const std::vector<BracketEntry>& brackets, DeferValidation);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  /// c_ij^k with the sign convention c_ji^k = -c_ij^k, c_ii^k = 0.
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// [e_i, e_j] as a coordinate vector.
  std::vector<Rational> bracket_basis(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the structure constants.
  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;

  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  RatMatrix ad_matrix(std::size_t i) const;

  /// All basis triples i < j < k violating the Jacobi identity.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> jacobi_violations() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> constants_;  // [pair_index(i,j)][k], i < j
};

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> jacobi_violations(
    const LieAlgebra& g);

Subspace derived_subalgebra(const LieAlgebra& g);
std::vector<Subspace> derived_series(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);

/// Span of [x, y] over x in S, y in T.
Subspace subspace_bracket(const LieAlgebra& g, const Subspace& s, const Subspace& t);

bool is_derivation(const LieAlgebra& g, const LinMap& d);

/// Extends g by one generator acting as the derivation d ([e_new, x] = d x);
/// the new generator is appended last. Throws std::invalid_argument if d is
/// not a derivation.
LieAlgebra semidirect_sum(const LieAlgebra& g, const LinMap& d, const std::string& label);

/// Same construction with no derivation/Jacobi checks; the result may fail
/// the Jacobi identity (useful for exhibiting violations).
LieAlgebra semidirect_sum_unchecked(const LieAlgebra& g, const LinMap& d,
                                    const std::string& label);

bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_abelian_subspace(const LieAlgebra& g, const Subspace& s);

struct QuotientResult {
  LieAlgebra algebra;
  RatMatrix projection;                  // (dim g - dim s) x dim g
  std::vector<std::size_t> complement;   // basis indices of g giving the quotient basis
};

/// Quotient by an ideal, on the complement basis obtained by echelon
/// completion (identity-preferred pivots). Throws std::invalid_argument if s
/// is not an ideal.
QuotientResult quotient(const LieAlgebra& g, const Subspace& s);

}  // namespace liepoisson
