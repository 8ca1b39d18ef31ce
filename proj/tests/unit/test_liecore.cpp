#include <doctest.h>

#include "liepoisson/catalog.hpp"
#include "liepoisson/lie_algebra.hpp"
#include "test_helpers.hpp"

using namespace liepoisson;
using liepoisson::testing::Rng;

namespace {

std::vector<Rational> rat_vec(std::initializer_list<long long> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.push_back(Rational(x));
  return v;
}

// [e0,e1]=e2, [e1,e2]=e0, [e2,e0]=e1 (so(3); not solvable)
LieAlgebra cyclic3() {
  std::vector<LieAlgebra::BracketEntry> entries;
  entries.push_back({0, 1, rat_vec({0, 0, 1})});
  entries.push_back({1, 2, rat_vec({1, 0, 0})});
  entries.push_back({0, 2, rat_vec({0, -1, 0})});
  return LieAlgebra(3, {"e1", "e2", "e3"}, entries);
}

ExFParams exf_small() {
  ExFParams p;
  p.n = 1;
  p.A = RatMatrix{{Rational(2)}};
  p.c = Rational(5);
  return p;
}

}  // namespace

TEST_CASE("bracket on pinned algebras") {
  LieAlgebra h3 = heisenberg(1);
  CHECK(h3.bracket(rat_vec({0, 1, 0}), rat_vec({0, 0, 1})) == rat_vec({1, 0, 0}));

  LieAlgebra aff = aff_real();
  CHECK(aff.bracket(rat_vec({0, 1}), rat_vec({1, 0})) == rat_vec({1, 0}));

  CHECK_THROWS_AS(h3.bracket(rat_vec({1, 0}), rat_vec({0, 0, 1})), std::invalid_argument);
}

TEST_CASE("bracket is antisymmetric and bilinear (randomized)") {
  Rng rng(41);
  LieAlgebra g = exF_algebra(exf_small());
  for (int i = 0; i < 200; ++i) {
    auto x = rng.vector(g.dim()), y = rng.vector(g.dim());
    auto xy = g.bracket(x, y);
    auto yx = g.bracket(y, x);
    for (std::size_t k = 0; k < g.dim(); ++k) CHECK(xy[k] == -yx[k]);
    for (const auto& c : g.bracket(x, x)) CHECK(c.is_zero());
  }
}

TEST_CASE("jacobi_violations") {
  CHECK(jacobi_violations(heisenberg(1)).empty());
  CHECK(jacobi_violations(exF_algebra(exf_small())).empty());

  // diag(5,2,7) is not a derivation of h_3; adjoining it breaks Jacobi at
  // the triple (e1, e2, B')
  RatMatrix bad(3, 3);
  bad(0, 0) = Rational(5);
  bad(1, 1) = Rational(2);
  bad(2, 2) = Rational(7);
  LieAlgebra broken = semidirect_sum_unchecked(heisenberg(1), bad, "B'");
  auto violations = jacobi_violations(broken);
  REQUIRE(!violations.empty());
  bool found = false;
  for (const auto& [i, j, k] : violations)
    if (i == 1 && j == 2 && k == 3) found = true;
  CHECK(found);
}

TEST_CASE("derived_subalgebra") {
  CHECK(derived_subalgebra(abelian(3)).is_zero());

  Subspace d = derived_subalgebra(heisenberg(1));
  CHECK(d == Subspace::span(3, {rat_vec({1, 0, 0})}));

  CHECK(derived_subalgebra(exF_algebra(exf_small())) ==
        Subspace::span(4, {rat_vec({1, 0, 0, 0}), rat_vec({0, 1, 0, 0}), rat_vec({0, 0, 1, 0})}));
}

TEST_CASE("derived_series and is_solvable") {
  auto series = derived_series(heisenberg(1));
  REQUIRE(series.size() == 3);
  CHECK(series[0].is_full());
  CHECK(series[1].dim() == 1);
  CHECK(series[2].is_zero());
  CHECK(is_solvable(heisenberg(1)));

  ThetaTag half = ThetaTag::rational(Rational(1, 2));
  CHECK(is_solvable(exF_paper_instance(half).first));

  auto cyclic_series = derived_series(cyclic3());
  CHECK(cyclic_series.back().is_full());
  CHECK_FALSE(is_solvable(cyclic3()));
}

TEST_CASE("lower_central_series and is_nilpotent") {
  CHECK(is_nilpotent(heisenberg(1)));
  CHECK(is_nilpotent(abelian(4)));
  CHECK_FALSE(is_nilpotent(aff_real()));
  auto series = lower_central_series(aff_real());
  CHECK(series.back().dim() == 1);  // stabilizes at span{e0}, nonzero
  CHECK(is_solvable(aff_real()));
}

TEST_CASE("center") {
  CHECK(center(heisenberg(1)) == Subspace::span(3, {rat_vec({1, 0, 0})}));
  CHECK(center(exF_algebra(exf_small())).is_zero());
  CHECK(center(abelian(2)).is_full());
}

TEST_CASE("center dimension + rank of stacked adjoint = dim (rank-nullity)") {
  for (const LieAlgebra& g :
       {heisenberg(2), aff_real(), aff_complex(), exF_algebra(exf_small()), abelian(3)}) {
    RatMatrix stacked(g.dim() * g.dim(), g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) stacked.set_block(i * g.dim(), 0, g.ad_matrix(i));
    CHECK(center(g).dim() + rank(stacked) == g.dim());
  }
}

TEST_CASE("is_derivation") {
  LieAlgebra h3 = heisenberg(1);
  RatMatrix good(3, 3), bad(3, 3);
  good(0, 0) = Rational(5);
  good(1, 1) = Rational(2);
  good(2, 2) = Rational(3);
  bad(0, 0) = Rational(5);
  bad(1, 1) = Rational(2);
  bad(2, 2) = Rational(7);
  CHECK(is_derivation(h3, good));
  CHECK_FALSE(is_derivation(h3, bad));
  CHECK(is_derivation(h3, RatMatrix(3, 3)));
  CHECK_THROWS_AS(is_derivation(h3, RatMatrix(2, 2)), std::invalid_argument);
}

TEST_CASE("semidirect_sum") {
  LieAlgebra h3 = heisenberg(1);
  RatMatrix d(3, 3);
  d(0, 0) = Rational(5);
  d(1, 1) = Rational(2);
  d(2, 2) = Rational(3);
  LieAlgebra g = semidirect_sum(h3, d, "B");
  CHECK(g.dim() == 4);
  CHECK(g.label(3) == "B");
  CHECK(g.bracket(rat_vec({0, 0, 0, 1}), rat_vec({1, 0, 0, 0})) == rat_vec({5, 0, 0, 0}));
  CHECK(g.bracket(rat_vec({0, 0, 0, 1}), rat_vec({0, 1, 0, 0})) == rat_vec({0, 2, 0, 0}));
  CHECK(g.bracket(rat_vec({0, 0, 0, 1}), rat_vec({0, 0, 1, 0})) == rat_vec({0, 0, 3, 0}));
  CHECK(g.bracket(rat_vec({0, 1, 0, 0}), rat_vec({0, 0, 1, 0})) == rat_vec({1, 0, 0, 0}));
  CHECK(jacobi_violations(g).empty());

  RatMatrix bad(3, 3);
  bad(1, 1) = Rational(1);
  CHECK_THROWS_AS(semidirect_sum(h3, bad, "X"), std::invalid_argument);

  // zero derivation appends a central direct factor
  LieAlgebra central = semidirect_sum(h3, RatMatrix(3, 3), "z");
  CHECK(center(central).dim() == 2);
}

TEST_CASE("is_ideal and is_abelian_subspace") {
  LieAlgebra g = exF_algebra(exf_small());  // basis e0, e1, e2, B
  Subspace p = Subspace::span(4, {rat_vec({1, 0, 0, 0}), rat_vec({0, 0, 1, 0})});
  CHECK(is_ideal(g, p));
  CHECK(is_abelian_subspace(g, p));

  LieAlgebra h3 = heisenberg(1);
  Subspace s = Subspace::span(3, {rat_vec({0, 1, 0})});
  CHECK_FALSE(is_ideal(h3, s));
  CHECK(is_ideal(h3, Subspace::full(3)));
  CHECK_FALSE(is_abelian_subspace(h3, Subspace::full(3)));
}

TEST_CASE("quotient") {
  LieAlgebra g = exF_algebra(exf_small());
  Subspace p = Subspace::span(4, {rat_vec({1, 0, 0, 0}), rat_vec({0, 0, 1, 0})});
  QuotientResult q = quotient(g, p);
  CHECK(q.algebra.dim() == 2);
  // induced basis (e1bar, Bbar): [Bbar, e1bar] = 2 e1bar
  CHECK(q.algebra.bracket(rat_vec({0, 1}), rat_vec({1, 0})) == rat_vec({2, 0}));
  CHECK(q.algebra == abelian_extension(RatMatrix{{Rational(2)}}));

  // quotient by the zero subspace is the algebra itself
  QuotientResult same = quotient(g, Subspace::zero(4));
  CHECK(same.algebra == g);

  // h_3 / span{e0} is abelian R^2
  QuotientResult ab = quotient(heisenberg(1), Subspace::span(3, {rat_vec({1, 0, 0})}));
  CHECK(ab.algebra.dim() == 2);
  CHECK(derived_subalgebra(ab.algebra).is_zero());

  CHECK_THROWS_AS(quotient(heisenberg(1), Subspace::span(3, {rat_vec({0, 1, 0})})),
                  std::invalid_argument);
}

TEST_CASE("quotient dimensions and projection") {
  Rng rng(59);
  LieAlgebra g = exF_algebra(exf_small());
  Subspace p = Subspace::span(4, {rat_vec({1, 0, 0, 0}), rat_vec({0, 0, 1, 0})});
  QuotientResult q = quotient(g, p);
  CHECK(q.algebra.dim() + p.dim() == g.dim());
  // projection intertwines brackets: proj([x, y]) = [proj x, proj y]
  for (int i = 0; i < 100; ++i) {
    auto x = rng.vector(4), y = rng.vector(4);
    CHECK(q.projection.apply(g.bracket(x, y)) ==
          q.algebra.bracket(q.projection.apply(x), q.projection.apply(y)));
  }
}

TEST_CASE("LieAlgebra construction rejects bad input") {
  CHECK_THROWS_AS(LieAlgebra(2, {"a", "b"}, {{1, 1, rat_vec({1, 0})}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(2, {"a", "b"}, {{0, 2, rat_vec({1, 0})}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(2, {"a"}, {}), std::invalid_argument);
  // Jacobi-violating constants rejected eagerly: perturbing the cyclic
  // algebra to [e1,e2] = e1 leaves [[e1,e2],e0] = -e2 uncancelled
  std::vector<LieAlgebra::BracketEntry> entries;
  entries.push_back({0, 1, rat_vec({0, 0, 1})});
  entries.push_back({1, 2, rat_vec({0, 1, 0})});
  entries.push_back({0, 2, rat_vec({0, -1, 0})});
  CHECK_THROWS_AS(LieAlgebra(3, {"x", "y", "z"}, entries), std::invalid_argument);
}

TEST_CASE("solvable agrees with terminal derived term; nilpotent implies solvable") {
  for (const LieAlgebra& g : {heisenberg(1), heisenberg(3), aff_real(), aff_complex(), abelian(2),
                              exF_algebra(exf_small()), cyclic3()}) {
    CHECK(is_solvable(g) == derived_series(g).back().is_zero());
    if (is_nilpotent(g)) CHECK(is_solvable(g));
  }
}
