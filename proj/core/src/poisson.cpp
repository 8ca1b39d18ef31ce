#include "liepoisson/poisson.hpp"

#include <stdexcept>

namespace liepoisson {

PoissonMatrix poisson_matrix(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  PoissonMatrix pi(n, n, MultiPoly(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      MultiPoly entry(n);
      for (std::size_t k = 0; k < n; ++k) {
        const Rational c = g.structure_constant(i, j, k);
        if (c.is_zero()) continue;
        Monomial m(n, 0);
        m[k] = 1;
        entry.add_term(m, c);
      }
      pi(i, j) = entry;
      pi(j, i) = -entry;
    }
  }
  return pi;
}

OrbitSample orbit_rank_at(const LieAlgebra& g, const std::vector<Rational>& xi) {
  const std::size_t n = g.dim();
  if (xi.size() != n) throw std::invalid_argument("orbit_rank_at: point length mismatch");
  RatMatrix at(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v(0);
      for (std::size_t k = 0; k < n; ++k) {
        const Rational c = g.structure_constant(i, j, k);
        if (!c.is_zero()) v += c * xi[k];
      }
      at(i, j) = v;
      at(j, i) = -v;
    }
  }
  OrbitSample sample;
  sample.point = xi;
  sample.rank_at_point = rank(at);
  sample.isotropy = Subspace::span(n, kernel_basis(at));
  return sample;
}

std::size_t generic_rank(const LieAlgebra& g, std::uint64_t seed) {
  return poly_matrix_rank_generic(poisson_matrix(g), seed);
}

std::size_t lie_index(const LieAlgebra& g, std::uint64_t seed) {
  return g.dim() - generic_rank(g, seed);
}

bool has_open_orbits(const LieAlgebra& g, std::uint64_t seed) {
  return lie_index(g, seed) == 0;
}

bool isotropy_abelian_at(const LieAlgebra& g, const std::vector<Rational>& xi) {
  return is_abelian_subspace(g, orbit_rank_at(g, xi).isotropy);
}

}  // namespace liepoisson
