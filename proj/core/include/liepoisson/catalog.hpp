#pragma once

#include <optional>
#include <string>
#include <utility>

#include "liepoisson/lie_algebra.hpp"
#include "liepoisson/matrix.hpp"
#include "liepoisson/rational.hpp"

namespace liepoisson {

/// How the theta parameter of the template matrix diag(J, theta*J) should be
/// interpreted. Exact rational data cannot encode irrationality, so a
/// symbolic tag carries it; `value` is then a generic rational placeholder
/// that stands in for theta in all rank/Casimir computations.
struct ThetaTag {
  bool symbolic = false;
  Rational value = Rational(1);
  std::string name;  // set when symbolic, e.g. "sqrt2"

  static ThetaTag rational(const Rational& v) { return ThetaTag{false, v, ""}; }
  static ThetaTag symbolic_irrational(std::string name);
};

/// Parameters of the Heisenberg extension family h_{2n+1} x| R*B, where B is
/// block-diagonal (c; A; c*I_n - A^T).
struct ExFParams {
  std::size_t n = 1;
  RatMatrix A;  // n x n
  Rational c = Rational(1);
  std::optional<ThetaTag> theta;  // present iff A is the 4x4 diag(J, theta*J) template
};

/// Heisenberg algebra h_{2n+1}: basis e0, e1, ..., e_{2n} with the only
/// nonzero brackets [e_j, e_{n+j}] = e0, j = 1..n. Throws for n = 0.
LieAlgebra heisenberg(std::size_t n);

/// Abelian algebra R^n with basis labels e1..en.
LieAlgebra abelian(std::size_t n);

/// dim 2, basis (e0, e1), single bracket [e1, e0] = e0 (Lie algebra of the
/// identity component of the real affine group).
LieAlgebra aff_real();

/// Realified Lie algebra of the complex affine group, dim 4, basis
/// (b1, b2, a1, a2) with [a1,b1]=b1, [a1,b2]=b2, [a2,b1]=b2, [a2,b2]=-b1.
LieAlgebra aff_complex();

/// The standard 2x2 rotation generator J = [[0,1],[-1,0]].
RatMatrix rotation_block_j();

/// The 4x4 template diag(J, theta*J).
RatMatrix paper_template_matrix(const Rational& theta);

/// Block-diagonal derivation (c; A; c*I_n - A^T) of h_{2n+1}, acting on
/// coordinate columns.
RatMatrix exF_derivation(const ExFParams& p);

/// h_{2n+1} extended by the derivation above; a Lie algebra for every (A, c).
LieAlgebra exF_algebra(const ExFParams& p);

/// The dim-10 instance with n = 4, A = diag(J, theta*J) and given c
/// (default 1), together with the parameters for spectral analysis.
std::pair<LieAlgebra, ExFParams> exF_paper_instance(const ThetaTag& theta,
                                                    const Rational& c = Rational(1));

/// R^n x|_A R: abelian R^n extended by the matrix A acting as a derivation;
/// the extending generator is labelled "t" and appended last.
LieAlgebra abelian_extension(const RatMatrix& a);

}  // namespace liepoisson
