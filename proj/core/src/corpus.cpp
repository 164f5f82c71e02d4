#include "nilrep/corpus.hpp"

#include <sstream>

namespace nilrep {

namespace {

LieAlgebra make_abelian(int n) {
  if (n < 1) throw BadParameter("abelian algebras need dimension >= 1");
  return LieAlgebra(n, {}, {}, "abelian" + std::to_string(n));
}

LieAlgebra make_heisenberg(int dim) {
  if (dim < 3 || dim % 2 == 0)
    throw BadParameter("heisenberg algebras have odd dimension 2k+1 >= 3");
  const int k = (dim - 1) / 2;
  LieAlgebra::StructureMap structure;
  for (int i = 0; i < k; ++i) {
    Vec c(dim);
    c[dim - 1] = Rational(1);
    structure[{2 * i, 2 * i + 1}] = std::move(c);
  }
  return LieAlgebra(dim, {}, std::move(structure), "heisenberg" + std::to_string(dim));
}

LieAlgebra make_strict_upper(int n) {
  if (n < 2) throw BadParameter("strict_upper needs matrix size >= 2");
  std::vector<std::pair<int, int>> positions;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) positions.push_back({i, j});
  const int dim = static_cast<int>(positions.size());
  const auto slot = [&](int i, int j) -> int {
    for (int s = 0; s < dim; ++s)
      if (positions[s] == std::make_pair(i, j)) return s;
    return -1;
  };
  std::vector<std::string> names;
  for (const auto& [i, j] : positions) {
    std::ostringstream os;
    os << "E" << (i + 1) << (j + 1);
    names.push_back(os.str());
  }
  // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
  LieAlgebra::StructureMap structure;
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      const auto [i, j] = positions[a];
      const auto [k, l] = positions[b];
      Vec c(dim);
      if (j == k) c[slot(i, l)] += Rational(1);
      if (l == i) c[slot(k, j)] -= Rational(1);
      if (!is_zero_vec(c)) structure[{a, b}] = std::move(c);
    }
  }
  return LieAlgebra(dim, std::move(names), std::move(structure),
                    "strict_upper" + std::to_string(n));
}

LieAlgebra make_filiform(int n) {
  if (n < 3) throw BadParameter("filiform algebras need dimension >= 3");
  LieAlgebra::StructureMap structure;
  for (int i = 1; i < n - 1; ++i) {
    Vec c(n);
    c[i + 1] = Rational(1);
    structure[{0, i}] = std::move(c);
  }
  return LieAlgebra(n, {}, std::move(structure), "filiform" + std::to_string(n));
}

LieAlgebra make_free_nilpotent_2_3() {
  // Generators e1, e2; e3 = [e1,e2], e4 = [e1,e3], e5 = [e2,e3].
  LieAlgebra::StructureMap structure;
  Vec c12(5), c13(5), c23(5);
  c12[2] = Rational(1);
  c13[3] = Rational(1);
  c23[4] = Rational(1);
  structure[{0, 1}] = std::move(c12);
  structure[{0, 2}] = std::move(c13);
  structure[{1, 2}] = std::move(c23);
  return LieAlgebra(5, {}, std::move(structure), "free_nilpotent_2_3");
}

}  // namespace

LieAlgebra make(const CorpusSpec& spec) {
  switch (spec.family) {
    case Family::Abelian:
      return make_abelian(spec.parameter);
    case Family::Heisenberg:
      return make_heisenberg(spec.parameter);
    case Family::StrictUpper:
      return make_strict_upper(spec.parameter);
    case Family::Filiform:
      return make_filiform(spec.parameter);
    case Family::FreeNilpotent23:
      return make_free_nilpotent_2_3();
  }
  throw BadParameter("unknown corpus family");
}

LieAlgebra make_by_name(const std::string& family, std::optional<int> parameter) {
  const auto need_param = [&]() -> int {
    if (!parameter) throw BadParameter("family '" + family + "' needs a size parameter");
    return *parameter;
  };
  if (family == "abelian") return make(CorpusSpec{Family::Abelian, need_param()});
  if (family == "heisenberg") return make(CorpusSpec{Family::Heisenberg, need_param()});
  if (family == "strict_upper")
    return make(CorpusSpec{Family::StrictUpper, need_param()});
  if (family == "filiform") return make(CorpusSpec{Family::Filiform, need_param()});
  if (family == "free_nilpotent_2_3") {
    if (parameter) throw BadParameter("free_nilpotent_2_3 takes no parameter");
    return make(CorpusSpec{Family::FreeNilpotent23, 0});
  }
  throw BadParameter("unknown corpus family '" + family + "'");
}

std::vector<std::string> family_names() {
  return {"abelian", "heisenberg", "strict_upper", "filiform", "free_nilpotent_2_3"};
}

std::vector<CorpusSpec> standard_corpus() {
  return {
      {Family::Abelian, 1},     {Family::Abelian, 2},
      {Family::Abelian, 3},     {Family::Abelian, 4},
      {Family::Heisenberg, 3},  {Family::Heisenberg, 5},
      {Family::StrictUpper, 3}, {Family::StrictUpper, 4},
      {Family::Filiform, 4},    {Family::Filiform, 5},
      {Family::FreeNilpotent23, 0},
  };
}

}  // namespace nilrep
