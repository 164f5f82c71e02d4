#ifndef NILREP_CORPUS_HPP
#define NILREP_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nilrep/lie_algebra.hpp"

namespace nilrep {

/// Generators for the standard nilpotent algebras used in tests and reports.
///
/// Conventions (basis e1..en unless stated):
///   abelian(n), n >= 1: all brackets zero, N = 1.
///   heisenberg(d), d = 2k+1 >= 3: [e_{2i-1}, e_{2i}] = e_d, N = 2.
///   strict_upper(n), n >= 2: strictly upper triangular n x n matrices,
///     basis E_ij for i < j in lexicographic order, dim n(n-1)/2, N = n-1.
///   filiform(n), n >= 3: [e1, e_i] = e_{i+1} for 2 <= i <= n-1, N = n-1.
///   free_nilpotent_2_3: rank 2, class 3; dim 5 with [e1,e2]=e3,
///     [e1,e3]=e4, [e2,e3]=e5, N = 3.
enum class Family {
  Abelian,
  Heisenberg,
  StrictUpper,
  Filiform,
  FreeNilpotent23,
};

struct CorpusSpec {
  Family family;
  int parameter = 0;  // ignored for FreeNilpotent23
};

LieAlgebra make(const CorpusSpec& spec);

/// Family by its CLI name ("abelian", "heisenberg", "strict_upper",
/// "filiform", "free_nilpotent_2_3"); throws BadParameter on unknown names
/// or out-of-range parameters.
LieAlgebra make_by_name(const std::string& family, std::optional<int> parameter);

std::vector<std::string> family_names();

/// The algebras every acceptance run covers.
std::vector<CorpusSpec> standard_corpus();

}  // namespace nilrep

#endif
