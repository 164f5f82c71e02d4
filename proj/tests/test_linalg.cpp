#include <doctest.h>

#include "nilrep/errors.hpp"
#include "nilrep/linalg.hpp"
#include "nilrep/sampling.hpp"

using nilrep::EchelonBasis;
using nilrep::Rational;
using nilrep::RationalMatrix;
using nilrep::Vec;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Rational(rows[r][c]);
  return m;
}

RationalMatrix random_matrix(nilrep::Sampler& sampler, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = sampler.rational();
  return m;
}

}  // namespace

TEST_CASE("rref on the documented examples") {
  const auto id = rref(RationalMatrix::identity(2));
  CHECK(id.matrix == RationalMatrix::identity(2));
  CHECK(id.rank == 2);
  CHECK(id.pivot_columns == std::vector<int>{0, 1});

  const auto prop = rref(from_rows({{1, 2}, {2, 4}}));
  CHECK(prop.matrix == from_rows({{1, 2}, {0, 0}}));
  CHECK(prop.rank == 1);

  const auto perm = rref(from_rows({{0, 1}, {1, 0}}));
  CHECK(perm.matrix == RationalMatrix::identity(2));
  CHECK(perm.rank == 2);
}

TEST_CASE("rref is idempotent on random matrices") {
  nilrep::Sampler sampler(7);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix m = random_matrix(sampler, 4, 6);
    const auto once = rref(m);
    const auto twice = rref(once.matrix);
    CHECK(once.matrix == twice.matrix);
    CHECK(once.rank == twice.rank);
  }
}

TEST_CASE("kernel basis on the documented examples") {
  CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
  CHECK(kernel_basis(RationalMatrix(2, 2)).size() == 2);
  const auto k = kernel_basis(from_rows({{1, 1}}));
  REQUIRE(k.size() == 1);
  // (1,-1) up to scale
  CHECK(k[0][0] * Rational(-1) == k[0][1]);
}

TEST_CASE("kernel vectors are exactly annihilated") {
  nilrep::Sampler sampler(11);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix m = random_matrix(sampler, 3, 5);
    const auto kernel = kernel_basis(m);
    CHECK(static_cast<int>(kernel.size()) == 5 - rref(m).rank);
    for (const auto& v : kernel) CHECK(nilrep::is_zero_vec(m.apply(v)));
  }
}

TEST_CASE("matrix products associate exactly") {
  nilrep::Sampler sampler(13);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalMatrix a = random_matrix(sampler, 3, 4);
    const RationalMatrix b = random_matrix(sampler, 4, 2);
    const RationalMatrix c = random_matrix(sampler, 2, 3);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("extend_basis on the documented examples") {
  EchelonBasis current(2);
  current.insert(Vec{Rational(1), Rational(0)});
  auto [same, added0] = extend_basis(current, {Vec{Rational(2), Rational(0)}});
  CHECK(added0 == 0);
  CHECK(same.dim() == 1);

  EchelonBasis empty(2);
  auto [one, added1] =
      extend_basis(empty, {Vec{Rational(0), Rational(1)}, Vec{Rational(0), Rational(2)}});
  CHECK(added1 == 1);
  CHECK(one.dim() == 1);

  auto [full, added2] = extend_basis(current, {Vec{Rational(1), Rational(1)}});
  CHECK(added2 == 1);
  CHECK(full.dim() == 2);
  CHECK(full.contains(Vec{Rational(5), Rational(-7)}));
}

TEST_CASE("echelon coordinates reconstruct the vector") {
  EchelonBasis basis(3);
  basis.insert(Vec{Rational(1), Rational(2), Rational(0)});
  basis.insert(Vec{Rational(0), Rational(1), Rational(1)});
  const Vec v{Rational(2), Rational(7), Rational(3)};
  const auto coords = basis.coordinates(v);
  REQUIRE(coords.has_value());
  Vec rebuilt(3);
  for (size_t i = 0; i < coords->size(); ++i)
    nilrep::add_scaled(rebuilt, (*coords)[i], basis.row_vectors()[i]);
  CHECK(rebuilt == v);
  CHECK_FALSE(basis.coordinates(Vec{Rational(1), Rational(0), Rational(0)}).has_value());
}

TEST_CASE("echelon bases are canonical") {
  EchelonBasis a(3), b(3);
  a.insert(Vec{Rational(1), Rational(1), Rational(0)});
  a.insert(Vec{Rational(0), Rational(0), Rational(1)});
  b.insert(Vec{Rational(2), Rational(2), Rational(2)});
  b.insert(Vec{Rational(0), Rational(0), Rational(-5)});
  CHECK(a == b);
}

TEST_CASE("exp_nilpotent on the documented examples") {
  CHECK(exp_nilpotent(RationalMatrix(3, 3), 1) == RationalMatrix::identity(3));
  CHECK(exp_nilpotent(from_rows({{0, 1}, {0, 0}}), 2) == from_rows({{1, 1}, {0, 1}}));
  CHECK_THROWS_AS(exp_nilpotent(RationalMatrix::identity(2), 2), nilrep::NotNilpotent);
}

TEST_CASE("exp_nilpotent inverts at -m") {
  RationalMatrix m(4, 4);
  m.at(0, 1) = Rational(2);
  m.at(1, 2) = Rational(-3, 7);
  m.at(2, 3) = Rational(5);
  m.at(0, 2) = Rational(1, 2);
  RationalMatrix neg = m;
  neg *= Rational(-1);
  CHECK(exp_nilpotent(m, 4) * exp_nilpotent(neg, 4) == RationalMatrix::identity(4));
}
