#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polarmac/zerodim.hpp"
#include "test_support.hpp"

using namespace polarmac;
using namespace polarmac::testing;

namespace {

/// Ideal of a finite set of rational points, by intersecting the maximal
/// ideals: the construction-side oracle for point counting.
template <class F>
Ideal<F> ideal_of_points(const RingPtr<F>& ring,
                         const std::vector<std::vector<long long>>& points) {
  Ideal<F> acc;
  bool first = true;
  for (const auto& pt : points) {
    std::vector<Polynomial<F>> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      gens.push_back(Polynomial<F>::variable(ring, i) -
                     Polynomial<F>::constant(ring, ring->field.from_long(pt[i])));
    Ideal<F> m(ring, std::move(gens));
    acc = first ? m : ideal_intersection(acc, m);
    first = false;
  }
  return acc;
}

}  // namespace

TEST_CASE("hilbert numerators of monomial ideals") {
  auto mono = [](std::vector<std::int32_t> e) { return Monomial(std::move(e)); };
  CHECK(hilbert_numerator({mono({2})}, 1) == std::vector<long long>{1, 0, -1});
  CHECK(hilbert_numerator({mono({1, 0}), mono({0, 1})}, 2) ==
        std::vector<long long>{1, -2, 1});
  CHECK(hilbert_numerator({mono({1, 1})}, 2) ==
        std::vector<long long>{1, 0, -1});
  CHECK(hilbert_numerator({}, 2) == std::vector<long long>{1});
  CHECK(hilbert_numerator({mono({0, 0})}, 2).empty());  // unit ideal
  // redundant generators do not change the numerator
  CHECK(hilbert_numerator({mono({1, 0}), mono({2, 1}), mono({0, 1})}, 2) ==
        std::vector<long long>{1, -2, 1});
}

TEST_CASE("dimension and degree") {
  auto q = rat_ring({"x", "y"});
  CHECK(dimension_and_degree(ideal(q, {"y - x^2"})) == DimensionDegree{1, 2});
  CHECK(dimension_and_degree(ideal(q, {"x", "y"})) == DimensionDegree{0, 1});
  CHECK(dimension_and_degree(ideal(q, {"x*y - 1"})) == DimensionDegree{1, 2});
  CHECK(dimension_and_degree(ideal(q, {"y^2 - x^3"})) == DimensionDegree{1, 3});
  // unit ideal: empty variety
  CHECK(dimension_and_degree(ideal(q, {"x", "x - 1"})).dimension == -1);
  CHECK(!dimension_and_degree(ideal(q, {"x", "x - 1"})).degree.has_value());
  // zero ideal: the whole plane
  CHECK(dimension_and_degree(Ideal<RationalField>(q, {})) ==
        DimensionDegree{2, 1});
}

TEST_CASE("dimension and degree ignore redundant generators") {
  auto g = gfp_ring({"x", "y", "z"});
  auto I = ideal(g, {"z - x*y"});
  auto J = ideal(g, {"z - x*y", "x*z - x^2*y", "(z - x*y)*(x + y + 1)"});
  CHECK(dimension_and_degree(I) == dimension_and_degree(J));
}

TEST_CASE("degree of a principal squarefree ideal is the total degree") {
  auto q = rat_ring({"x", "y"});
  for (const char* text : {"y^2 - x^3", "x*y - 1", "x + y", "x^2 - y^2 + 1"}) {
    auto f = poly(q, text);
    auto dd = dimension_and_degree(ideal(q, {text}));
    CHECK(dd.dimension == 1);
    CHECK(dd.degree == f.total_degree());
  }
}

TEST_CASE("quotient dimension counts standard monomials") {
  auto q1 = rat_ring({"x"});
  CHECK(quotient_dimension(ideal(q1, {"x^2"})) == 2);  // basis {1, x}
  auto q = rat_ring({"x", "y"});
  CHECK(quotient_dimension(ideal(q, {"x^2 - 1", "y - x"})) == 2);
  CHECK(quotient_dimension(ideal(q, {"x^2", "y^2", "x*y"})) == 3);  // {1, x, y}
  CHECK_THROWS_AS(quotient_dimension(ideal(q, {"y - x^2"})), ZeroDimError);
  // consistency with the hilbert-series degree in dimension zero
  auto I = ideal(q, {"x^3 - x", "y^2 - x"});
  CHECK(quotient_dimension(I) == *dimension_and_degree(I).degree);
}

TEST_CASE("variable minimal polynomials") {
  auto q = rat_ring({"x", "y"});
  auto I = ideal(q, {"x^2 - 1", "y - x"});
  auto mp = variable_minimal_polynomial(I, 0);
  // x^2 - 1, monic coefficient vector (-1, 0, 1)
  REQUIRE(mp.size() == 3);
  CHECK(mp[0] == mpq_class(-1));
  CHECK(mp[1] == mpq_class(0));
  CHECK(mp[2] == mpq_class(1));
  // y has the same eliminant through y = x
  CHECK(variable_minimal_polynomial(I, 1) == mp);
}

TEST_CASE("squarefree parts") {
  RationalField k;
  using V = mpq_class;
  // (x-1)^2 (x-2) = x^3 - 4x^2 + 5x - 2 -> (x-1)(x-2) = x^2 - 3x + 2
  std::vector<V> g = {-2, 5, -4, 1};
  CHECK(squarefree_part(k, g) == std::vector<V>{2, -3, 1});
  // already squarefree
  std::vector<V> h = {-1, 0, 1};
  CHECK(squarefree_part(k, h) == h);
}

TEST_CASE("bad primes are detected, not silently wrong") {
  // over GF(5), x^5 - x has derivative -1: fine; x^5 - 1 = (x-1)^5 has
  // derivative 0 and must be flagged
  GfpField k(5);
  std::vector<std::uint64_t> g = {4, 0, 0, 0, 0, 1};  // x^5 + 4 = x^5 - 1
  CHECK_THROWS_AS(squarefree_part(k, g), BadPrimeError);
}

TEST_CASE("distinct point counts") {
  auto q1 = rat_ring({"x"});
  CHECK(distinct_point_count(ideal(q1, {"x^3"})) == 1);
  CHECK(distinct_point_count(ideal(q1, {"x^2 - 1"})) == 2);
  auto q = rat_ring({"x", "y"});
  CHECK(distinct_point_count(ideal(q, {"x^3 - 4*x^2 + 5*x - 2", "y - x"})) == 2);
  CHECK_THROWS_AS(distinct_point_count(ideal(q, {"y - x^2"})), ZeroDimError);
  // conjugate (non-rational) points still count individually
  CHECK(distinct_point_count(ideal(q, {"x^2 + 1", "y"})) == 2);
}

TEST_CASE("synthetic point sets: construction oracle, both fields") {
  auto run = [](auto ring, std::uint64_t salt) {
    Rng rng(mix_seed({salt, 17}));
    for (int trial = 0; trial < 10; ++trial) {
      // distinct random coordinates in a small box
      std::vector<std::vector<long long>> pts;
      const std::size_t want = 1 + rng.below(4);
      while (pts.size() < want) {
        std::vector<long long> p = {static_cast<long long>(rng.below(50)),
                                    static_cast<long long>(rng.below(50))};
        bool dup = false;
        for (const auto& existing : pts) dup = dup || existing == p;
        if (!dup) pts.push_back(std::move(p));
      }
      auto I = ideal_of_points(ring, pts);
      CHECK(distinct_point_count(I) == static_cast<long long>(pts.size()));
      CHECK(quotient_dimension(I) >= static_cast<long long>(pts.size()));
      CHECK(distinct_point_count(I) <= quotient_dimension(I));
    }
  };
  run(rat_ring({"x", "y"}), 1);
  run(gfp_ring({"x", "y"}), 2);
}

TEST_CASE("distinct count never exceeds the multiplicity count") {
  auto q = rat_ring({"x", "y"});
  for (const char* gens : {"x^2;y", "x^2 - 1;y^3 - y", "x^3;y - x"}) {
    std::string s = gens;
    auto sep = s.find(';');
    auto I = ideal(q, {s.substr(0, sep), s.substr(sep + 1)});
    CHECK(distinct_point_count(I) <= quotient_dimension(I));
  }
}
