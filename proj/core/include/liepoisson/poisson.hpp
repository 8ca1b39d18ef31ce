#pragma once

#include <cstdint>
#include <vector>

#include "liepoisson/lie_algebra.hpp"
#include "liepoisson/linalg.hpp"
#include "liepoisson/multipoly.hpp"

namespace liepoisson {

/// Antisymmetric matrix of degree-1 polynomials Pi_ij(xi) = sum_k c_ij^k xi_k,
/// i.e. Pi_ij = xi([e_i, e_j]) in the coordinates xi_0..xi_{n-1} on the dual.
using PoissonMatrix = PolyMatrix;

PoissonMatrix poisson_matrix(const LieAlgebra& g);

/// Exact data of the coadjoint orbit through a rational point: the orbit
/// dimension rank Pi(xi) (always even) and the isotropy subalgebra
/// ker Pi(xi) (dimension n - rank).
struct OrbitSample {
  std::vector<Rational> point;
  std::size_t rank_at_point = 0;
  Subspace isotropy = Subspace::zero(0);

  bool orbit_is_open(std::size_t dim) const { return rank_at_point == dim; }
};

OrbitSample orbit_rank_at(const LieAlgebra& g, const std::vector<Rational>& xi);

/// Rank of Pi over the rational function field (deterministic for a fixed
/// seed, exact via symbolic confirmation for dim <= 12).
std::size_t generic_rank(const LieAlgebra& g, std::uint64_t seed);

/// dim g minus the generic rank of Pi; zero iff open coadjoint orbits exist.
std::size_t lie_index(const LieAlgebra& g, std::uint64_t seed);

bool has_open_orbits(const LieAlgebra& g, std::uint64_t seed);

/// True iff the isotropy subalgebra at xi is abelian.
bool isotropy_abelian_at(const LieAlgebra& g, const std::vector<Rational>& xi);

}  // namespace liepoisson
