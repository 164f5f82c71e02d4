#include <doctest.h>

#include "nilrep/errors.hpp"
#include "nilrep/polynomial.hpp"

using nilrep::Exponents;
using nilrep::PolyFun;
using nilrep::PolyMap;
using nilrep::Rational;
using nilrep::Vec;

namespace {

Vec point(std::vector<long> coords) {
  Vec v;
  for (long c : coords) v.push_back(Rational(c));
  return v;
}

}  // namespace

TEST_CASE("evaluation") {
  CHECK(PolyFun::constant(3, Rational(1)).evaluate(point({9, -2, 4})) == Rational(1));
  CHECK(PolyFun::variable(3, 2).evaluate(point({0, 0, 5})) == Rational(5));
  const PolyFun y1y2 = PolyFun::variable(3, 0) * PolyFun::variable(3, 1);
  CHECK(y1y2.evaluate(point({2, 3, 0})) == Rational(6));
}

TEST_CASE("degree and the zero sentinel") {
  CHECK(PolyFun(3).degree() == PolyFun::kZeroDegree);
  CHECK(PolyFun::constant(3, Rational(5)).degree() == 0);
  CHECK(PolyFun::variable(3, 0).degree() == 1);
  PolyFun p = PolyFun::variable(2, 0) * PolyFun::variable(2, 0) + PolyFun::variable(2, 1);
  CHECK(p.degree() == 2);
  p -= PolyFun::monomial(2, {2, 0}, Rational(1));
  CHECK(p.degree() == 1);
}

TEST_CASE("no zero coefficients are stored") {
  PolyFun p(2);
  p.add_term({1, 0}, Rational(1, 2));
  p.add_term({1, 0}, Rational(-1, 2));
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
}

TEST_CASE("composition") {
  const PolyFun phi =
      PolyFun::variable(2, 0) * PolyFun::variable(2, 1) + PolyFun::variable(2, 0);
  CHECK(compose(phi, PolyMap::identity(2)) == phi);

  // Degree arithmetic: deg(phi o f) <= deg(phi) * max deg(f).
  PolyMap f;
  f.components.push_back(PolyFun::variable(2, 0) * PolyFun::variable(2, 0));
  f.components.push_back(PolyFun::variable(2, 1) * PolyFun::variable(2, 0));
  const PolyFun composed = compose(phi, f);
  CHECK(composed.degree() <= phi.degree() * f.max_degree());
  CHECK(composed.evaluate(point({2, 3})) ==
        phi.evaluate(f.evaluate(point({2, 3}))));

  PolyMap wrong = PolyMap::identity(3);
  CHECK_THROWS_AS(compose(phi, wrong), nilrep::DimensionMismatch);
}

TEST_CASE("homogeneous components decompose uniquely") {
  const PolyFun one_plus_y1 =
      PolyFun::constant(2, Rational(1)) + PolyFun::variable(2, 0);
  const auto parts = one_plus_y1.homogeneous_components();
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == PolyFun::constant(2, Rational(1)));
  CHECK(parts[1] == PolyFun::variable(2, 0));

  const PolyFun homog = PolyFun::monomial(2, {1, 1}, Rational(3));
  const auto hparts = homog.homogeneous_components();
  REQUIRE(hparts.size() == 3);
  CHECK(hparts[0].is_zero());
  CHECK(hparts[1].is_zero());
  CHECK(hparts[2] == homog);

  CHECK(PolyFun(2).homogeneous_components().empty());

  PolyFun sum(2);
  for (const auto& part : hparts) sum += part;
  CHECK(sum == homog);
}

TEST_CASE("directional derivatives") {
  const PolyFun y1sq = PolyFun::monomial(3, {2, 0, 0}, Rational(1));
  CHECK(directional_derivative(y1sq, point({1, 0, 0})) ==
        PolyFun::monomial(3, {1, 0, 0}, Rational(2)));

  const PolyFun xi = PolyFun::variable(3, 1);
  CHECK(directional_derivative(xi, point({5, 7, -2})) ==
        PolyFun::constant(3, Rational(7)));

  const PolyFun y1y2 = PolyFun::variable(3, 0) * PolyFun::variable(3, 1);
  CHECK(directional_derivative(y1y2, point({0, 1, 0})) == PolyFun::variable(3, 0));
}

TEST_CASE("monomial enumeration matches the binomial count") {
  // C(m+n, n) monomials of degree <= m in n variables.
  CHECK(nilrep::monomials_up_to(3, 2).size() == 10);
  CHECK(nilrep::monomials_up_to(5, 4).size() == 126);
  CHECK(nilrep::monomials_up_to(2, 0).size() == 1);

  const auto basis = nilrep::monomials_up_to(2, 2);
  const std::vector<Exponents> expected = {{0, 0}, {1, 0}, {0, 1},
                                           {2, 0}, {1, 1}, {0, 2}};
  CHECK(basis == expected);
}

TEST_CASE("coordinate bridge round trip") {
  const auto monomials = nilrep::monomials_up_to(2, 3);
  std::map<Exponents, int, nilrep::GrlexLess> index;
  for (size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);

  PolyFun p(2);
  p.add_term({2, 1}, Rational(-7, 3));
  p.add_term({0, 0}, Rational(4));
  const Vec coords = poly_to_coords(p, index, static_cast<int>(monomials.size()));
  CHECK(coords_to_poly(coords, monomials, 2) == p);

  PolyFun too_big(2);
  too_big.add_term({4, 0}, Rational(1));
  CHECK_THROWS_AS(poly_to_coords(too_big, index, static_cast<int>(monomials.size())),
                  nilrep::BadParameter);
}

TEST_CASE("to_string uses graded-lexicographic order") {
  PolyFun p(2);
  p.add_term({0, 2}, Rational(1));
  p.add_term({2, 0}, Rational(1));
  p.add_term({0, 0}, Rational(-1, 2));
  CHECK(p.to_string() == "-1/2 + 1*y1^2 + 1*y2^2");
}
