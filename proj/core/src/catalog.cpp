#include "liepoisson/catalog.hpp"

#include <stdexcept>

namespace liepoisson {

ThetaTag ThetaTag::symbolic_irrational(std::string name) {
  ThetaTag t;
  t.symbolic = true;
  // generic rational placeholder; every rank/Casimir computation on the
  // template is theta-generic, and the closedness verdict reads the tag
  t.value = Rational(3, 2);
  t.name = std::move(name);
  return t;
}

LieAlgebra heisenberg(std::size_t n) {
  if (n == 0) throw std::invalid_argument("heisenberg: n must be >= 1");
  const std::size_t dim = 2 * n + 1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<LieAlgebra::BracketEntry> entries;
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<Rational> coeffs(dim, Rational(0));
    coeffs[0] = Rational(1);
    entries.push_back({j, n + j, std::move(coeffs)});
  }
  return LieAlgebra(dim, std::move(labels), entries);
}

LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return LieAlgebra(n, std::move(labels), {});
}

LieAlgebra aff_real() {
  std::vector<Rational> coeffs{Rational(-1), Rational(0)};  // [e0, e1] = -e0
  return LieAlgebra(2, {"e0", "e1"}, {{0, 1, coeffs}});
}

LieAlgebra aff_complex() {
  // basis (b1, b2, a1, a2); [a1,b1]=b1, [a1,b2]=b2, [a2,b1]=b2, [a2,b2]=-b1
  std::vector<LieAlgebra::BracketEntry> entries;
  entries.push_back({0, 2, {Rational(-1), Rational(0), Rational(0), Rational(0)}});  // [b1,a1]=-b1
  entries.push_back({0, 3, {Rational(0), Rational(-1), Rational(0), Rational(0)}});  // [b1,a2]=-b2
  entries.push_back({1, 2, {Rational(0), Rational(-1), Rational(0), Rational(0)}});  // [b2,a1]=-b2
  entries.push_back({1, 3, {Rational(1), Rational(0), Rational(0), Rational(0)}});   // [b2,a2]=b1
  return LieAlgebra(4, {"b1", "b2", "a1", "a2"}, entries);
}

RatMatrix rotation_block_j() {
  RatMatrix j(2, 2);
  j(0, 1) = Rational(1);
  j(1, 0) = Rational(-1);
  return j;
}

RatMatrix paper_template_matrix(const Rational& theta) {
  RatMatrix a(4, 4);
  RatMatrix j = rotation_block_j();
  a.set_block(0, 0, j);
  a.set_block(2, 2, theta * j);
  return a;
}

RatMatrix exF_derivation(const ExFParams& p) {
  const std::size_t n = p.n;
  if (p.A.rows() != n || p.A.cols() != n)
    throw std::invalid_argument("exF_derivation: A must be n x n");
  RatMatrix b(2 * n + 1, 2 * n + 1);
  b(0, 0) = p.c;
  b.set_block(1, 1, p.A);
  RatMatrix third = p.c * RatMatrix::identity(n) - p.A.transpose();
  b.set_block(1 + n, 1 + n, third);
  return b;
}

LieAlgebra exF_algebra(const ExFParams& p) {
  return semidirect_sum(heisenberg(p.n), exF_derivation(p), "B");
}

std::pair<LieAlgebra, ExFParams> exF_paper_instance(const ThetaTag& theta, const Rational& c) {
  ExFParams params;
  params.n = 4;
  params.A = paper_template_matrix(theta.value);
  params.c = c;
  params.theta = theta;
  return {exF_algebra(params), params};
}

LieAlgebra abelian_extension(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("abelian_extension: A must be square");
  return semidirect_sum(abelian(a.rows()), a, "t");
}

}  // namespace liepoisson
