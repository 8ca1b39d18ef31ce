#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liepoisson/lie_algebra.hpp"
#include "liepoisson/multipoly.hpp"

namespace liepoisson {

/// Echelonized basis of polynomial Casimirs with zero constant term, up to
/// total degree `degree_bound`, in graded-lex order of leading monomials.
struct CasimirBasis {
  unsigned degree_bound = 0;
  std::vector<MultiPoly> basis;
};

/// Basis of {c : deg c <= d, c(0) = 0, Pi * grad(c) == 0 identically}. The
/// coefficient system is homogeneous-degree-graded, so it is assembled and
/// solved one degree block at a time; the concatenated blocks form the
/// graded-lex echelon basis. Requires d >= 1.
CasimirBasis polynomial_casimirs(const LieAlgebra& g, unsigned d);

/// Independent symbolic check that Pi * grad(c) is identically zero; uses
/// polynomial products, not the solver's coefficient-system assembly.
bool verify_casimir(const LieAlgebra& g, const MultiPoly& c);

struct CasimirVerdict {
  bool all_constant = false;
  unsigned degree_bound = 0;
  std::optional<MultiPoly> witness;  // first basis element when nonconstant Casimirs exist
};

/// all_constant iff the polynomial Casimir basis up to degree d is empty;
/// every basis element is re-checked through verify_casimir and seeded
/// numeric spot checks before the verdict is emitted.
CasimirVerdict casimirs_constant_verdict(const LieAlgebra& g, unsigned d, std::uint64_t seed);

}  // namespace liepoisson
