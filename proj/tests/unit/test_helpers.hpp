#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "liepoisson/matrix.hpp"
#include "liepoisson/rational.hpp"
#include "liepoisson/unipoly.hpp"

namespace liepoisson::testing {

// Seeded generator for reproducible property tests.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long long max_num = 20, long long max_den = 6) {
    return Rational(int_in(-max_num, max_num), int_in(1, max_den));
  }

  std::vector<Rational> vector(std::size_t n, long long max_num = 20) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = rational(max_num);
    return v;
  }

  RatMatrix matrix(std::size_t rows, std::size_t cols, long long max_num = 10) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(max_num);
    return m;
  }

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

// Independent rank oracle: plain rational Gauss-Jordan elimination (no
// fraction-free tricks, no sparsity) on a dense copy.
inline std::size_t naive_rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    Rational inv = m(r, col).reciprocal();
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// Independent characteristic polynomial oracle: Laplace cofactor expansion
// of det(t*I - A) over univariate polynomials. Exponential; fine for n <= 6.
inline UniPoly charpoly_by_cofactors(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> c{-a(i, j)};
      if (i == j) c.push_back(Rational(1));
      m[i][j] = UniPoly(std::move(c));
    }
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  struct Det {
    const std::vector<std::vector<UniPoly>>& m;
    UniPoly run(std::size_t row, std::vector<std::size_t>& cols) {
      if (cols.empty()) return UniPoly::constant(Rational(1));
      UniPoly det;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        std::size_t col = cols[k];
        std::vector<std::size_t> rest;
        for (std::size_t l = 0; l < cols.size(); ++l)
          if (l != k) rest.push_back(cols[l]);
        UniPoly term = m[row][col] * run(row + 1, rest);
        if (k % 2 == 0)
          det += term;
        else
          det -= term;
      }
      return det;
    }
  };
  Det det{m};
  return det.run(0, cols);
}

}  // namespace liepoisson::testing
