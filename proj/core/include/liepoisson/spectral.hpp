#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liepoisson/catalog.hpp"
#include "liepoisson/matrix.hpp"
#include "liepoisson/unipoly.hpp"

namespace liepoisson {

/// Exact monic characteristic polynomial det(t*I - A) via the
/// Faddeev-LeVerrier recurrence.
UniPoly characteristic_polynomial(const RatMatrix& a);

/// A real algebraic number isolated in a rational interval (the polynomial
/// carrying it is squarefree and has no rational roots).
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// A value known only through a symbolic irrationality tag.
struct SymbolicValue {
  std::string name;
};

/// One value beta^2 where +-i*beta is a purely imaginary eigenvalue pair.
struct ImagSquare {
  std::variant<Rational, RootInterval, SymbolicValue> value;
  unsigned multiplicity = 1;
};

/// The squares of the imaginary parts of the purely imaginary eigenvalues of
/// a monic rational polynomial's companion spectrum. Route: the even part
/// e(t) = gcd(p(t), p(-t)) captures the +-paired spectrum; after stripping
/// t-powers (zero eigenvalues contribute nothing), the substitution t^2 = -s
/// yields h(s), whose positive roots are exactly the beta^2. Rational roots
/// are extracted exactly; irrational positive roots are isolated in rational
/// intervals by Sturm bisection.
std::vector<ImagSquare> purely_imaginary_part_squares(const UniPoly& p);

enum class Closedness { closed, not_closed, unknown };

struct Confidence {
  bool exact = true;
  Rational tolerance = Rational(0);  // max isolation width when not exact
};

/// Closedness of the additive subgroup of R generated by the beta values.
/// A finitely generated subgroup of (R,+) is closed iff all generator ratios
/// are rational, i.e. iff every s_i/s_j is the square of a rational. With at
/// most one generator the group is always closed. A symbolic_irrational
/// theta tag on the diag(J, theta*J) template decides not_closed exactly
/// (generators {1, theta} with theta irrational); otherwise any
/// interval-isolated square downgrades the verdict to unknown.
std::pair<Closedness, Confidence> sA_closedness(const std::vector<ImagSquare>& squares,
                                                const std::optional<ThetaTag>& theta);

struct SpectralReport {
  std::optional<UniPoly> char_poly;  // absent when theta is symbolic
  std::string char_poly_display;
  std::vector<ImagSquare> imag_part_squares;
  std::vector<std::string> sA_generators;  // positive square roots, symbolic strings
  Closedness closedness = Closedness::closed;
  Confidence confidence;
  bool type1_obstruction = false;
  std::string quotient_note;
};

/// Full spectral analysis of the matrix A of a Heisenberg-extension family
/// member; type1_obstruction is set iff S_A is not closed (the obstruction
/// lives on the quotient R^n x|_A R and lifts to the full group).
SpectralReport type_one_obstruction(const ExFParams& params);

/// Same analysis for a bare rational matrix (no symbolic tag available).
SpectralReport spectral_report_for_matrix(const RatMatrix& a);

std::string to_string(Closedness c);

}  // namespace liepoisson
