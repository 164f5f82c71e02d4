#include <doctest.h>

#include "nilrep/corpus.hpp"
#include "nilrep/errors.hpp"

using nilrep::Family;
using nilrep::LieAlgebra;
using nilrep::Rational;

TEST_CASE("documented dimensions and degrees") {
  struct Row {
    nilrep::CorpusSpec spec;
    int dim;
    int N;
  };
  const std::vector<Row> table = {
      {{Family::Abelian, 1}, 1, 1},      {{Family::Abelian, 4}, 4, 1},
      {{Family::Heisenberg, 3}, 3, 2},   {{Family::Heisenberg, 5}, 5, 2},
      {{Family::StrictUpper, 3}, 3, 2},  {{Family::StrictUpper, 4}, 6, 3},
      {{Family::Filiform, 4}, 4, 3},     {{Family::Filiform, 5}, 5, 4},
      {{Family::FreeNilpotent23, 0}, 5, 3},
  };
  for (const auto& row : table) {
    const LieAlgebra g = nilrep::make(row.spec);
    CHECK(g.dim() == row.dim);
    CHECK(g.nilpotency_degree() == row.N);
  }
}

TEST_CASE("free nilpotent rank-2 class-3 table") {
  const LieAlgebra g = nilrep::make({Family::FreeNilpotent23, 0});
  const auto dims = [&] {
    std::vector<int> out;
    for (const auto& layer : g.lower_central_series()) out.push_back(layer.dim());
    return out;
  }();
  CHECK(dims == std::vector<int>{5, 3, 2, 0});
  // e3 = [e1,e2], e4 = [e1,e3], e5 = [e2,e3].
  CHECK(g.bracket(g.basis_element(0), g.basis_element(1)) == g.basis_element(2));
  CHECK(g.bracket(g.basis_element(0), g.basis_element(2)) == g.basis_element(3));
  CHECK(g.bracket(g.basis_element(1), g.basis_element(2)) == g.basis_element(4));
  CHECK(nilrep::is_zero_vec(g.bracket(g.basis_element(3), g.basis_element(4))));
}

TEST_CASE("filiform quotient steps are one-dimensional") {
  for (int n = 3; n <= 6; ++n) {
    const LieAlgebra g = nilrep::make({Family::Filiform, n});
    const auto& series = g.lower_central_series();
    CHECK(static_cast<int>(series.size()) == n);
    for (size_t j = 1; j + 1 < series.size(); ++j)
      CHECK(series[j].dim() - series[j + 1].dim() == 1);
  }
}

TEST_CASE("strict upper triangular basis labels") {
  const LieAlgebra g = nilrep::make({Family::StrictUpper, 4});
  const std::vector<std::string> expected = {"E12", "E13", "E14", "E23", "E24", "E34"};
  CHECK(g.basis_names() == expected);
}

TEST_CASE("bad parameters are rejected") {
  CHECK_THROWS_AS(nilrep::make({Family::Abelian, 0}), nilrep::BadParameter);
  CHECK_THROWS_AS(nilrep::make({Family::Heisenberg, 4}), nilrep::BadParameter);
  CHECK_THROWS_AS(nilrep::make({Family::Heisenberg, 1}), nilrep::BadParameter);
  CHECK_THROWS_AS(nilrep::make({Family::StrictUpper, 1}), nilrep::BadParameter);
  CHECK_THROWS_AS(nilrep::make({Family::Filiform, 2}), nilrep::BadParameter);
}

TEST_CASE("name lookup") {
  CHECK(nilrep::make_by_name("heisenberg", 3).name() == "heisenberg3");
  CHECK(nilrep::make_by_name("free_nilpotent_2_3", std::nullopt).dim() == 5);
  CHECK_THROWS_AS(nilrep::make_by_name("so3", 3), nilrep::BadParameter);
  CHECK_THROWS_AS(nilrep::make_by_name("heisenberg", std::nullopt),
                  nilrep::BadParameter);
  CHECK_THROWS_AS(nilrep::make_by_name("free_nilpotent_2_3", 5), nilrep::BadParameter);
}

TEST_CASE("every corpus algebra revalidates through its own constructor") {
  for (const auto& spec : nilrep::standard_corpus()) {
    const LieAlgebra g = nilrep::make(spec);
    // Rebuild from the raw pieces; validation reruns Jacobi and nilpotency.
    const LieAlgebra copy(g.dim(), g.basis_names(), g.structure(), g.name());
    CHECK(copy.nilpotency_degree() == g.nilpotency_degree());
  }
}
