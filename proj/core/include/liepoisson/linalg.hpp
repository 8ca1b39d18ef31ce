#pragma once

#include <cstdint>
#include <vector>

#include "liepoisson/matrix.hpp"
#include "liepoisson/multipoly.hpp"
#include "liepoisson/rational.hpp"

namespace liepoisson {

/// Scales a rational vector so its entries are coprime integers and the
/// first nonzero entry is positive. The zero vector is left unchanged.
void normalize_primitive(std::vector<Rational>& v);

/// Exact rank via fraction-free (Bareiss) elimination over the integers
/// after clearing row denominators. Deterministic.
std::size_t rank(const RatMatrix& m);

/// Sparse rational row: (column, coefficient) pairs sorted by column, no
/// zero coefficients.
struct SparseVec {
  std::vector<std::pair<std::size_t, Rational>> terms;

  bool empty() const { return terms.empty(); }
  std::size_t lead() const { return terms.front().first; }
};

struct RrefResult {
  std::vector<SparseVec> rows;          // reduced rows, sorted by pivot column
  std::vector<std::size_t> pivot_cols;  // ascending, parallel to rows
};

/// Reduced row echelon form (unique). Rows are normalized monic.
RrefResult rref(std::vector<SparseVec> rows, std::size_t cols);

/// Basis of the right null space, one vector per free column. Each vector is
/// scaled to coprime integer entries with positive first nonzero entry, and
/// the list is the reduced echelon basis of the null space ordered by
/// leading index.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);
std::vector<std::vector<Rational>> kernel_basis_sparse(const std::vector<SparseVec>& rows,
                                                       std::size_t cols);

RatMatrix evaluate_poly_matrix(const PolyMatrix& m, const std::vector<Rational>& point);

/// Rank over the rational function field by fraction-free elimination with
/// polynomial entries.
std::size_t poly_matrix_rank_symbolic(const PolyMatrix& m);

/// Rank over the rational function field: maximum exact rank over 5 random
/// evaluation points with coordinates in [1, 2^20] drawn from `seed`;
/// cross-checked against (and returned from) the symbolic elimination route
/// whenever rows and cols are both <= 12. Deterministic for fixed seed.
std::size_t poly_matrix_rank_generic(const PolyMatrix& m, std::uint64_t seed);

}  // namespace liepoisson
