#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polarmac/polar.hpp"
#include "polarmac/zerodim.hpp"
#include "test_support.hpp"

using namespace polarmac;
using namespace polarmac::testing;

namespace {

template <class F>
GenericForm<F> form_of(const RingPtr<F>& ring, std::vector<long long> coeffs) {
  GenericForm<F> f;
  for (long long c : coeffs) f.coeffs.push_back(ring->field.from_long(c));
  f.constant = ring->field.zero();
  return f;
}

/// Polar point ideal of a rational parametrized curve: eliminate t from
/// (x - x(t), y - y(t), critical-equation(t)). An independent route to P_0.
Ideal<RationalField> parametrization_oracle(const RingPtr<RationalField>& plane,
                                            const std::string& xt,
                                            const std::string& yt,
                                            const std::string& crit) {
  auto big = rat_ring({"t", "x", "y"});
  auto I = ideal(big, {"x - (" + xt + ")", "y - (" + yt + ")", crit});
  auto E = eliminate(I, 1);
  std::vector<Polynomial<RationalField>> gens;
  for (const auto& g : E.generators())
    gens.push_back(Polynomial<RationalField>::collect(plane, g.terms()));
  return Ideal<RationalField>(plane, std::move(gens));
}

}  // namespace

TEST_CASE("jacobian matrices") {
  auto q = rat_ring({"x", "y"});
  auto J = jacobian_matrix<RationalField>({poly(q, "y^2 - x^3")});
  REQUIRE(J.rows == 1);
  REQUIRE(J.cols == 2);
  CHECK(J.at(0, 0) == poly(q, "-3*x^2"));
  CHECK(J.at(0, 1) == poly(q, "2*y"));

  auto q3 = rat_ring({"x", "y", "z"});
  auto J2 = jacobian_matrix<RationalField>({poly(q3, "z - x*y")});
  CHECK(J2.at(0, 0) == poly(q3, "-y"));
  CHECK(J2.at(0, 1) == poly(q3, "-x"));
  CHECK(J2.at(0, 2) == poly(q3, "1"));

  auto J3 = jacobian_matrix<RationalField>({poly(q3, "x^2 - z*y^2")});
  CHECK(J3.at(0, 0) == poly(q3, "2*x"));
  CHECK(J3.at(0, 1) == poly(q3, "-2*z*y"));
  CHECK(J3.at(0, 2) == poly(q3, "-y^2"));
}

TEST_CASE("minors ideals") {
  auto q = rat_ring({"x", "y"});
  PolyMatrix<RationalField> m;
  m.ring = q;
  m.rows = 2;
  m.cols = 2;
  m.entries = {poly(q, "-3*x^2"), poly(q, "2*y"), poly(q, "5"), poly(q, "7")};
  auto det = minors_ideal(m, 2);
  REQUIRE(det.generators().size() == 1);
  CHECK(ideals_equal(det, ideal(q, {"-21*x^2 - 10*y"})));

  auto all = minors_ideal(m, 1);
  CHECK(all.generators().size() == 4);  // ideal of all entries

  CHECK(!minors_ideal(m, 3).has_generators());  // vacuous rank condition
  CHECK_THROWS_AS(minors_ideal(m, 0), InputError);
}

TEST_CASE("minors of a 3x3 cross-check cofactor memoization") {
  auto q = rat_ring({"a", "b", "c"});
  PolyMatrix<RationalField> m;
  m.ring = q;
  m.rows = 3;
  m.cols = 3;
  m.entries = {poly(q, "a"), poly(q, "b"), poly(q, "c"),
               poly(q, "b"), poly(q, "c"), poly(q, "a"),
               poly(q, "c"), poly(q, "a"), poly(q, "b")};
  auto det = minors_ideal(m, 3);
  REQUIRE(det.generators().size() == 1);
  CHECK(det.generators()[0] ==
        poly(q, "3*a*b*c - a^3 - b^3 - c^3"));
}

TEST_CASE("singular locus ideals") {
  auto q = rat_ring({"x", "y"});
  // cusp: singular exactly at the origin
  auto S = singular_locus_ideal(ideal(q, {"y^2 - x^3"}), 1);
  CHECK(dimension_and_degree(S).dimension == 0);
  CHECK(distinct_point_count(S) == 1);
  CHECK(S.contains(poly(q, "y")));
  CHECK(S.contains(poly(q, "x^2")));

  // smooth hyperbola: empty singular locus
  CHECK(singular_locus_ideal(ideal(q, {"x*y - 1"}), 1).is_unit());

  // umbrella: singular along the z-axis
  auto q3 = rat_ring({"x", "y", "z"});
  auto U = singular_locus_ideal(ideal(q3, {"x^2 - z*y^2"}), 2);
  CHECK(dimension_and_degree(U).dimension == 1);
  CHECK(U.contains(poly(q3, "x")));
  CHECK(ideal(q3, {"x", "y"}).contains(poly(q3, "x^2 - z*y^2")));
}

TEST_CASE("critical locus: cusp with an explicit form") {
  auto q = rat_ring({"x", "y"});
  auto I = ideal(q, {"y^2 - x^3"});
  // omega = a x + b y with (a, b) = (5, 7); the stacked determinant is
  // -3 b x^2 - 2 a y up to sign
  auto C = critical_locus_ideal(I, {form_of(q, {5, 7})}, 1);
  CHECK(ideals_equal(C, ideal(q, {"y^2 - x^3", "21*x^2 + 10*y"})));

  // k = n leaves the ideal untouched
  auto full = critical_locus_ideal(I, {form_of(q, {5, 7}), form_of(q, {3, 11})}, 1);
  CHECK(ideals_equal(full, I));
  CHECK_THROWS_AS(
      critical_locus_ideal(I, {form_of(q, {1, 1}), form_of(q, {1, 2}),
                               form_of(q, {2, 1})}, 1),
      InputError);
}

TEST_CASE("critical locus: quadric surface determinant is linear") {
  auto q3 = rat_ring({"x", "y", "z"});
  auto I = ideal(q3, {"z - x*y"});
  auto C = critical_locus_ideal(
      I, {form_of(q3, {2, 3, 5}), form_of(q3, {7, 11, 13})}, 2);
  // det [[-y,-x,1],[2,3,5],[7,11,13]] = -y(3*13-5*11) + x(2*13-5*7) ... linear
  bool found_linear = false;
  for (const auto& g : C.generators())
    if (g.total_degree() == 1) found_linear = true;
  CHECK(found_linear);
}

TEST_CASE("polar variety of the cusp: the single Morse point") {
  auto q = rat_ring({"x", "y"});
  auto I = ideal(q, {"y^2 - x^3"});
  const long long a = 5, b = 7;
  auto P = polar_variety_ideal(I, {form_of(q, {a, b})}, 1);
  CHECK(P.purity == Purity::kPure);
  CHECK(P.dims.dimension == 0);
  CHECK(quotient_dimension(P.ideal) == 1);  // reduced single point

  // the parametrized critical point (4a^2/9b^2, -8a^3/27b^3)
  mpq_class px(static_cast<long>(4 * a * a), static_cast<long>(9 * b * b));
  mpq_class py(static_cast<long>(-8 * a * a * a),
               static_cast<long>(27 * b * b * b));
  px.canonicalize();
  py.canonicalize();
  auto X = Polynomial<RationalField>::variable(q, 0);
  auto Y = Polynomial<RationalField>::variable(q, 1);
  CHECK(P.ideal.contains(X - Polynomial<RationalField>::constant(q, px)));
  CHECK(P.ideal.contains(Y - Polynomial<RationalField>::constant(q, py)));

  // same ideal through the parametrization x = t^2, y = t^3
  auto oracle = parametrization_oracle(q, "t^2", "t^3", "2*5 + 3*7*t");
  CHECK(ideals_equal(P.ideal, oracle));
}

TEST_CASE("polar variety of the nodal cubic: two Morse points, node removed") {
  auto q = rat_ring({"x", "y"});
  auto I = ideal(q, {"y^2 - x^3 - x^2"});
  const long long a = 5, b = 7;
  auto P = polar_variety_ideal(I, {form_of(q, {a, b})}, 1);
  CHECK(P.purity == Purity::kPure);
  CHECK(quotient_dimension(P.ideal) == 2);
  CHECK(distinct_point_count(P.ideal) == 2);
  // the node (0,0) was saturated away: some generator has a constant term
  // or a unit value at the origin, so P is not contained in (x, y)
  bool origin_in_variety = true;
  auto origin = ideal(q, {"x", "y"});
  for (const auto& g : P.ideal.generators())
    if (!origin.contains(g)) origin_in_variety = false;
  CHECK(!origin_in_variety);

  // independent route: x = t^2 - 1, y = t^3 - t, critical equation
  // d/dt (a x(t) + b y(t)) = 2 a t + b (3 t^2 - 1)
  auto oracle =
      parametrization_oracle(q, "t^2 - 1", "t^3 - t", "2*5*t + 7*(3*t^2 - 1)");
  CHECK(ideals_equal(P.ideal, oracle));
}

TEST_CASE("polar variety of a smooth line is empty") {
  auto q = rat_ring({"x", "y"});
  auto P = polar_variety_ideal(ideal(q, {"y"}), {form_of(q, {5, 7})}, 1);
  CHECK(P.purity == Purity::kEmpty);
  CHECK(P.ideal.is_unit());
}

TEST_CASE("P_n(X) = X exactly") {
  auto q = rat_ring({"x", "y"});
  auto I = ideal(q, {"y^2 - x^3"});
  auto P = polar_variety_ideal(I, {form_of(q, {5, 7}), form_of(q, {3, 11})}, 1);
  CHECK(P.purity == Purity::kPure);
  CHECK(P.ideal.generators() == I.generators());
}

TEST_CASE("smooth input: saturation leaves the critical locus untouched") {
  auto q3 = gfp_ring({"x", "y", "z"});
  auto I = ideal(q3, {"z - x*y"});
  Rng rng(404);
  auto forms = sample_generic_forms(q3, 1, rng, false);
  auto C = critical_locus_ideal(I, forms, 2);
  auto P = polar_variety_ideal(I, forms, 2);
  CHECK(ideals_equal(C, P.ideal));
}

TEST_CASE("purity across independent draws (catalog inputs)") {
  auto q = gfp_ring({"x", "y"});
  auto q3 = gfp_ring({"x", "y", "z"});
  struct Case {
    Ideal<GfpField> ideal;
    int n;
  };
  std::vector<Case> cases = {{ideal(q, {"y^2 - x^3"}), 1},
                             {ideal(q, {"x*y - 1"}), 1},
                             {ideal(q3, {"x^2 - z*y^2"}), 2}};
  for (auto& c : cases) {
    for (int k = 0; k < c.n; ++k) {
      for (std::uint64_t draw = 0; draw < 3; ++draw) {
        Rng rng(mix_seed({777, draw, static_cast<std::uint64_t>(k)}));
        auto forms =
            sample_generic_forms(c.ideal.ring(), static_cast<std::size_t>(k) + 1,
                                 rng, false);
        auto P = polar_variety_ideal(c.ideal, forms, c.n);
        CHECK((P.purity == Purity::kPure || P.purity == Purity::kEmpty));
        if (P.purity == Purity::kPure) CHECK(P.dims.dimension == k);
      }
    }
  }
}

TEST_CASE("critical loci nest along a common form prefix") {
  // expanding a (c+k+1)-minor along the last form row writes it as a
  // combination of (c+k)-minors, so the higher critical ideal sits inside
  // the lower one generator by generator
  auto q = rat_ring({"x", "y"});
  auto I = ideal(q, {"y^2 - x^3"});
  auto f1 = form_of(q, {5, 7});
  auto f2 = form_of(q, {3, 11});
  auto C0 = critical_locus_ideal(I, {f1}, 1);        // rank <= 0 condition
  auto C1 = critical_locus_ideal(I, {f1, f2}, 1);    // rank <= 1 (vacuous: X)
  for (const auto& g : C1.generators()) CHECK(C0.contains(g));

  // nontrivial instance on the quadric surface: the 3x3 determinant for
  // (w1, w2) lies in the ideal of 2x2 minors for w1 alone
  auto q3 = rat_ring({"x", "y", "z"});
  auto S = ideal(q3, {"z - x*y"});
  auto w1 = form_of(q3, {2, 3, 5});
  auto w2 = form_of(q3, {7, 11, 13});
  auto D0 = critical_locus_ideal(S, {w1}, 2);
  auto D1 = critical_locus_ideal(S, {w1, w2}, 2);
  for (const auto& g : D1.generators()) CHECK(D0.contains(g));
}

TEST_CASE("monomial exponent overflow is a hard error") {
  Monomial big({2000000000, 0});
  CHECK_THROWS_AS(big.times(big), EngineError);
  CHECK_THROWS_AS(Monomial(std::vector<std::int32_t>{-1}), EngineError);
}
