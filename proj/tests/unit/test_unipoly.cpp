#include <doctest.h>

#include "liepoisson/unipoly.hpp"
#include "test_helpers.hpp"

using namespace liepoisson;
using liepoisson::testing::Rng;

namespace {

UniPoly from_ints(std::initializer_list<long long> ascending) {
  std::vector<Rational> c;
  for (auto x : ascending) c.push_back(Rational(x));
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("UniPoly basics") {
  CHECK(UniPoly().degree() == -1);
  CHECK(UniPoly::constant(Rational(3)).degree() == 0);
  UniPoly p = from_ints({-6, -1, 1});  // t^2 - t - 6 = (t-3)(t+2)
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(Rational(3)).is_zero());
  CHECK(p.evaluate(Rational(-2)).is_zero());
  CHECK(p.evaluate(Rational(0)) == Rational(-6));
  CHECK(p.derivative() == from_ints({-1, 2}));
  CHECK(p.negate_variable() == from_ints({-6, 1, 1}));
  CHECK(p.str() == "t^2 - t - 6");
}

TEST_CASE("divmod reconstructs") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> a(static_cast<std::size_t>(rng.int_in(1, 7)));
    std::vector<Rational> b(static_cast<std::size_t>(rng.int_in(1, 5)));
    for (auto& x : a) x = rng.rational(8);
    for (auto& x : b) x = rng.rational(8);
    UniPoly num(a), den(b);
    if (den.is_zero()) continue;
    auto [q, r] = UniPoly::divmod(num, den);
    CHECK(q * den + r == num);
    CHECK(r.degree() < den.degree());
  }
}

TEST_CASE("gcd of known factorizations") {
  UniPoly a = from_ints({-1, 0, 1});          // (t-1)(t+1)
  UniPoly b = from_ints({-1, 1}) * from_ints({3, 1});  // (t-1)(t+3)
  CHECK(gcd(a, b) == from_ints({-1, 1}));
  CHECK(gcd(a, UniPoly()) == a.monic());
  CHECK(gcd(from_ints({1}), a).degree() == 0);
}

TEST_CASE("squarefree decomposition") {
  UniPoly f = from_ints({-1, 1}) * from_ints({-1, 1}) * from_ints({-2, 1});  // (s-1)^2 (s-2)
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == from_ints({-2, 1}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == from_ints({-1, 1}));
  CHECK(parts[1].second == 2);
}

TEST_CASE("Sturm root counting") {
  UniPoly p = from_ints({-2, 1}) * from_ints({-1, 1}) * from_ints({5, 1});  // roots 2, 1, -5
  auto chain = sturm_sequence(p);
  CHECK(count_roots_in(chain, Rational(0), Rational(10)) == 2);
  CHECK(count_roots_in(chain, Rational(-10), Rational(0)) == 1);
  CHECK(count_roots_in(chain, Rational(1), Rational(2)) == 1);  // (1, 2] contains root 2 only
  CHECK(count_roots_in(chain, Rational(3), Rational(10)) == 0);
}

TEST_CASE("positive rational root extraction") {
  UniPoly p = from_ints({-2, 1}) * from_ints({3, 2}) * from_ints({-1, 3});  // roots 2, -3/2, 1/3
  UniPoly work = p;
  auto roots = extract_positive_rational_roots(&work);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(1, 3));
  CHECK(roots[1] == Rational(2));
  CHECK(work.degree() == 1);  // the (2t+3) factor remains
  CHECK(work.evaluate(Rational(-3, 2)).is_zero());
}

TEST_CASE("isolation of irrational positive roots") {
  // s^2 - 2: positive root sqrt(2)
  UniPoly p = from_ints({-2, 0, 1});
  UniPoly work = p;
  auto rational_roots = extract_positive_rational_roots(&work);
  CHECK(rational_roots.empty());
  auto intervals = isolate_positive_roots(work, Rational(1, 1 << 16));
  REQUIRE(intervals.size() == 1);
  auto [lo, hi] = intervals[0];
  CHECK(lo * lo < Rational(2));
  CHECK(hi * hi > Rational(2));
  CHECK(hi - lo <= Rational(1, 1 << 16));

  // (s^2 - 2)(s^2 - 3): two positive roots
  UniPoly q = from_ints({-2, 0, 1}) * from_ints({-3, 0, 1});
  auto both = isolate_positive_roots(q, Rational(1, 1024));
  REQUIRE(both.size() == 2);
  CHECK(both[0].second < both[1].first);  // disjoint, sorted
}

TEST_CASE("cauchy bound dominates roots") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(rng.int_in(2, 6)));
    for (auto& x : c) x = rng.rational(9);
    UniPoly p(c);
    if (p.degree() < 1) continue;
    Rational b = cauchy_root_bound(p);
    auto chain = sturm_sequence(p);
    CHECK(count_roots_in(chain, -b, b) ==
          count_roots_in(chain, -b * Rational(1000), b * Rational(1000)));
  }
}
